use serde::Serialize;

use super::{AlgError, Context, Monomial, ParamScalar, Rational, Var};

/// The indeterminates that are functions on the manifold rather than constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FunctionVar {
    S1,
    S2,
}

impl FunctionVar {
    pub fn var(self) -> Var {
        match self {
            FunctionVar::S1 => Var::S1,
            FunctionVar::S2 => Var::S2,
        }
    }
}

/// Values `e_i(s1)`, `e_i(s2)` for each frame vector `e_i` (0-based).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivationTable {
    rows: Vec<[ParamScalar; 2]>,
}

impl DerivationTable {
    /// Rejects tables that do not annihilate `s1^2 + s2^2`.
    pub fn new(rows: Vec<[ParamScalar; 2]>) -> Result<Self, AlgError> {
        let ctx = rows.iter().flatten().find_map(ParamScalar::context).unwrap_or(Context::Alpha);
        let s1 = ctx.var(Var::S1)?;
        let s2 = ctx.var(Var::S2)?;
        for (i, [d1, d2]) in rows.iter().enumerate() {
            let rel = s1.try_mul(d1)?.try_add(&s2.try_mul(d2)?)?;
            if !rel.is_zero() {
                return Err(AlgError::InconsistentDerivation(i));
            }
        }
        Ok(DerivationTable { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, v: FunctionVar) -> &ParamScalar {
        &self.rows[i][v as usize]
    }

    pub fn rows(&self) -> &[[ParamScalar; 2]] {
        &self.rows
    }

    /// `e_i(f)`, extended from the table by linearity and the Leibniz rule.
    pub fn derive(&self, i: usize, f: &ParamScalar) -> Result<ParamScalar, AlgError> {
        let mut acc = ParamScalar::zero();
        for (m, coef) in f.terms() {
            for fv in [FunctionVar::S1, FunctionVar::S2] {
                let v = fv.var();
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let factor = coef * Rational::from_integer(e.into());
                let lowered = ParamScalar::monomial_in(f.context(), lower(m, v), factor);
                let piece = lowered.try_mul(self.get(i, fv))?;
                acc = acc.try_add(&piece)?;
            }
        }
        Ok(acc)
    }

    /// Evaluate every entry under an assignment.
    pub fn instantiate(&self, assignment: &super::Assignment) -> Result<Vec<[Rational; 2]>, AlgError> {
        self.rows.iter().map(|[a, b]| Ok([a.evaluate(assignment)?, b.evaluate(assignment)?])).collect()
    }

    /// Re-express the table for a new frame `e'_a = sum_i f[a][i] e_i`.
    pub fn transform(&self, f: &[Vec<ParamScalar>]) -> Result<DerivationTable, AlgError> {
        let mut rows = Vec::with_capacity(f.len());
        for row in f {
            let mut out = [ParamScalar::zero(), ParamScalar::zero()];
            for (k, slot) in out.iter_mut().enumerate() {
                for (i, fi) in row.iter().enumerate() {
                    *slot = slot.try_add(&fi.try_mul(&self.rows[i][k])?)?;
                }
            }
            rows.push(out);
        }
        Ok(DerivationTable { rows })
    }
}

fn lower(m: &Monomial, v: Var) -> Monomial {
    let mut out = Monomial::ONE;
    for w in Var::ALL {
        let e = m.exp(w) - i32::from(w == v);
        if e != 0 {
            out = out.times(Monomial::var(w, e));
        }
    }
    out
}

/// `e_i(f)` where a missing table is only acceptable for constants.
pub fn derive_opt(table: Option<&DerivationTable>, i: usize, f: &ParamScalar) -> Result<ParamScalar, AlgError> {
    if f.is_parameter_only() {
        return Ok(ParamScalar::zero());
    }
    match table {
        Some(t) => t.derive(i, f),
        None => Err(AlgError::MissingDerivationTable(f.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_in, Assignment};

    /// Table with `e3(s1) = k s2`, `e3(s2) = -k s1` for `k = (c+3)/2`.
    fn sigma_table() -> DerivationTable {
        let p = |t: &str| parse_in(t, Context::Alpha).unwrap();
        DerivationTable::new(vec![
            [p("s1*s2"), p("-s1^2")],
            [p("s2^2"), p("-s1*s2")],
            [p("(c+3)/2*s2"), p("-(c+3)/2*s1")],
        ])
        .unwrap()
    }

    #[test]
    fn frame_derivatives() {
        let t = sigma_table();
        let p = |s: &str| parse_in(s, Context::Alpha).unwrap();
        assert_eq!(t.derive(0, &p("s1")).unwrap(), p("s1*s2"));
        assert_eq!(derive_opt(Some(&t), 1, &p("c")).unwrap(), ParamScalar::zero());
        assert_eq!(t.derive(2, &p("s1*s2")).unwrap(), p("(c+3)/2*(s2^2 - s1^2)"));
        assert!(t.derive(2, &p("s1^2 + s2^2")).unwrap().is_zero());
    }

    #[test]
    fn missing_table() {
        assert!(matches!(derive_opt(None, 0, &ParamScalar::s1()), Err(AlgError::MissingDerivationTable(_))));
        assert!(derive_opt(None, 0, &ParamScalar::r()).unwrap().is_zero());
    }

    #[test]
    fn rejects_table_breaking_relation() {
        let rows = vec![[ParamScalar::s2(), ParamScalar::s1()]];
        assert_eq!(DerivationTable::new(rows), Err(AlgError::InconsistentDerivation(0)));
    }

    #[test]
    fn instantiates_entries() {
        let a = Assignment::new().with_int(Var::Alpha, 5).with_int(Var::S1, 3).with_int(Var::S2, 4);
        let vals = sigma_table().instantiate(&a).unwrap();
        assert_eq!(vals[0], [Rational::from_integer(12.into()), Rational::from_integer((-9).into())]);
    }
}
