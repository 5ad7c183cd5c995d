use std::sync::Arc;

use super::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::exactalg::{derive_opt, ParamScalar};
use crate::linalg::{self, Matrix};
use crate::tensor::{Tensor, ONE_TWO};

/// New frame `e'_a = sum_i m[a][i] e_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameChange {
    matrix: Matrix,
    orthonormal: bool,
}

impl FrameChange {
    /// A change between orthonormal frames; orthogonality is checked on use.
    pub fn orthonormal(matrix: Matrix) -> Self {
        FrameChange { matrix, orthonormal: true }
    }

    /// A general invertible change; the result is still read as orthonormal.
    pub fn general(matrix: Matrix) -> Self {
        FrameChange { matrix, orthonormal: false }
    }

    pub fn identity(n: usize) -> Self {
        FrameChange::orthonormal(linalg::identity(n))
    }

    /// Swap `e_i` and `e_j`.
    pub fn swap(n: usize, i: usize, j: usize) -> Self {
        let mut m = linalg::identity(n);
        m.swap(i, j);
        FrameChange::orthonormal(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> Result<FrameChange> {
        Ok(FrameChange { matrix: linalg::inverse(&self.matrix)?, orthonormal: self.orthonormal })
    }

    pub fn is_orthogonal(&self) -> Result<bool> {
        let prod = linalg::mat_mul(&self.matrix, &linalg::transpose(&self.matrix))?;
        Ok(prod == linalg::identity(self.matrix.len()))
    }
}

impl MetricLieAlgebra {
    /// Structure constants in the new frame. When a derivation table is
    /// installed, frame coefficients are functions and their derivatives
    /// enter the bracket.
    pub fn change_frame(&self, f: &FrameChange) -> Result<MetricLieAlgebra> {
        let n = self.dim();
        if f.matrix.len() != n || f.matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: f.matrix.len() });
        }
        let det = linalg::det(&f.matrix)?;
        let finv = linalg::inverse(&f.matrix)?;
        if f.orthonormal && !f.is_orthogonal()? {
            return Err(Error::NonOrthogonalFrame);
        }
        let sign = det.unit_sign().ok_or_else(|| Error::NonUnitDeterminant(det.to_string()))?;
        let table = self.derivations();
        let fm = &f.matrix;
        let mut consts = Tensor::zeros(n, &ONE_TWO);
        for a in 0..n {
            for b in 0..n {
                // Bracket [e'_a, e'_b] in the old frame.
                let mut old = vec![ParamScalar::zero(); n];
                for i in 0..n {
                    for j in 0..n {
                        let w = fm[a][i].try_mul(&fm[b][j])?;
                        if w.is_zero() {
                            continue;
                        }
                        for (k, slot) in old.iter_mut().enumerate() {
                            *slot = slot.try_add(&w.try_mul(self.c(i, j, k))?)?;
                        }
                    }
                }
                if table.is_some() {
                    for (k, slot) in old.iter_mut().enumerate() {
                        for i in 0..n {
                            let t1 = fm[a][i].try_mul(&derive_opt(table, i, &fm[b][k])?)?;
                            let t2 = fm[b][i].try_mul(&derive_opt(table, i, &fm[a][k])?)?;
                            *slot = slot.try_add(&t1)?.try_sub(&t2)?;
                        }
                    }
                }
                for c in 0..n {
                    let mut acc = ParamScalar::zero();
                    for (k, o) in old.iter().enumerate() {
                        acc = acc.try_add(&o.try_mul(&finv[k][c])?)?;
                    }
                    consts.set(&[a, b, c], acc);
                }
            }
        }
        let mut out = MetricLieAlgebra::new_unchecked(self.name(), consts, self.orientation() * sign, self.context())?;
        if let Some(t) = table {
            out.derivations = Some(Arc::new(t.transform(fm)?));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse, parse_in, Context};
    use crate::liealg::catalog::{nonunimodular, sasakian_space_form};
    use proptest::prelude::*;

    #[test]
    fn identity_is_trivial() {
        let a = sasakian_space_form(&ParamScalar::c()).unwrap();
        assert_eq!(a.change_frame(&FrameChange::identity(3)).unwrap(), a);
    }

    #[test]
    fn swap_flips_orientation() {
        let a = sasakian_space_form(&ParamScalar::c()).unwrap();
        let b = a.change_frame(&FrameChange::swap(3, 0, 1)).unwrap();
        assert_eq!(b.c(0, 1, 2), &ParamScalar::int(-2));
        assert_eq!(b.orientation(), -1);
    }

    #[test]
    fn non_orthogonal_rejected() {
        let a = sasakian_space_form(&ParamScalar::c()).unwrap();
        let mut m = linalg::identity(3);
        m[0][0] = ParamScalar::int(2);
        assert_eq!(a.change_frame(&FrameChange::orthonormal(m.clone())), Err(Error::NonOrthogonalFrame));
        assert!(a.change_frame(&FrameChange::general(m)).is_ok());
        let mut s = linalg::identity(3);
        s[0] = s[1].clone();
        assert_eq!(a.change_frame(&FrameChange::general(s)), Err(Error::SingularFrameChange));
    }

    #[test]
    fn rotation_by_circle_point() {
        // Rows (s2, -s1, 0)/alpha, (s1, s2, 0)/alpha, (0, 0, 1).
        let p = |t: &str| parse_in(t, Context::Alpha).unwrap();
        let m = vec![
            vec![p("s2/alpha"), p("-s1/alpha"), p("0")],
            vec![p("s1/alpha"), p("s2/alpha"), p("0")],
            vec![p("0"), p("0"), p("1")],
        ];
        let f = FrameChange::orthonormal(m);
        assert!(f.is_orthogonal().unwrap());
        let a = nonunimodular(&ParamScalar::alpha()).unwrap();
        let back = a.change_frame(&f).unwrap().change_frame(&f.inverse().unwrap()).unwrap();
        assert_eq!(back.structure_constants(), a.structure_constants());
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        prop::collection::vec(-2i64..=2, 9).prop_filter_map("invertible", |v| {
            let m: Matrix = v.chunks(3).map(|r| r.iter().map(|&x| ParamScalar::int(x)).collect()).collect();
            let d = linalg::det(&m).ok()?;
            (!d.is_zero()).then_some(m)
        })
    }

    proptest! {
        #[test]
        fn change_frame_round_trips(m in arb_matrix()) {
            let a = sasakian_space_form(&parse("c").unwrap()).unwrap();
            let f = FrameChange::general(m);
            let b = a.change_frame(&f).unwrap();
            prop_assert!(b.jacobi_check().unwrap().is_empty());
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        prop_assert_eq!(b.c(i, j, k), &-b.c(j, i, k));
                    }
                }
            }
            let back = b.change_frame(&f.inverse().unwrap()).unwrap();
            prop_assert_eq!(back.structure_constants(), a.structure_constants());
            prop_assert_eq!(back.orientation(), a.orientation());
        }
    }
}
