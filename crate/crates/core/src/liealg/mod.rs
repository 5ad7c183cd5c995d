//! Metric Lie algebras in orthonormal frames.

pub mod catalog;
mod frame;

pub use catalog::{
    catalog, ga1, ga1_plus_r, heisenberg, nonunimodular, sasakian_space_form, su2_round, CatalogEntry, CatalogParams,
};
pub use frame::FrameChange;

use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{derive_opt, Context, DerivationTable, ParamScalar};
use crate::tensor::{index_label, Tensor, ONE_TWO};

/// A Lie algebra with structure constants `[e_i, e_j] = sum_k C[i][j][k] e_k`
/// in a frame that is orthonormal by declaration.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricLieAlgebra {
    name: String,
    consts: Tensor,
    orientation: i8,
    context: Context,
    derivations: Option<Arc<DerivationTable>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JacobiFailure {
    pub triple: [usize; 3],
    pub residual: Vec<String>,
}

impl MetricLieAlgebra {
    /// Validates dimension, antisymmetry and the Jacobi identity.
    pub fn new(name: impl Into<String>, consts: Tensor, orientation: i8, context: Context) -> Result<Self> {
        let a = Self::new_unchecked(name, consts, orientation, context)?;
        if let Some(idx) = a.antisymmetry_failure() {
            return Err(Error::InvalidStructureConstants(format!("antisymmetry at ({})", index_label(&idx))));
        }
        let failures = a.jacobi_check()?;
        if let Some(f) = failures.first() {
            return Err(Error::InvalidStructureConstants(format!(
                "the Jacobi identity at ({})",
                index_label(&f.triple)
            )));
        }
        Ok(a)
    }

    /// Skips the antisymmetry and Jacobi checks; shape is still validated.
    pub fn new_unchecked(name: impl Into<String>, consts: Tensor, orientation: i8, context: Context) -> Result<Self> {
        let n = consts.dim();
        if !(2..=4).contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        if consts.slots() != ONE_TWO {
            return Err(Error::Invalid("structure constants must have layout [down, down, up]".into()));
        }
        if orientation != 1 && orientation != -1 {
            return Err(Error::Invalid("orientation must be +1 or -1".into()));
        }
        Ok(MetricLieAlgebra { name: name.into(), consts, orientation, context, derivations: None })
    }

    /// Build from the brackets `[e_i, e_j]` for `i < j` (0-based).
    pub fn from_brackets(
        name: impl Into<String>,
        dim: usize,
        brackets: &[((usize, usize), Vec<ParamScalar>)],
        context: Context,
    ) -> Result<Self> {
        let mut consts = Tensor::zeros(dim, &ONE_TWO);
        for ((i, j), v) in brackets {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            for (k, c) in v.iter().enumerate() {
                consts.set(&[*i, *j, k], c.clone());
                consts.set(&[*j, *i, k], -c);
            }
        }
        Self::new(name, consts, 1, context)
    }

    /// Attach a derivation table for frame-dependent scalars.
    pub fn with_derivations(mut self, table: DerivationTable) -> Result<Self> {
        if table.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: table.dim() });
        }
        self.derivations = Some(Arc::new(table));
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.consts.dim()
    }

    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    pub fn context(&self) -> Context {
        self.context
    }

    pub fn derivations(&self) -> Option<&DerivationTable> {
        self.derivations.as_deref()
    }

    pub fn structure_constants(&self) -> &Tensor {
        &self.consts
    }

    /// `C[i][j][k]`, 0-based.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &ParamScalar {
        self.consts.get(&[i, j, k])
    }

    pub fn metric(&self) -> Tensor {
        Tensor::metric(self.dim())
    }

    /// Bracket of two frame-component vectors, pointwise.
    pub fn bracket(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        self.consts.apply2(x, y)
    }

    /// Bracket of vector fields given by frame components, including the
    /// derivative terms `X(Y^k) - Y(X^k)` when components are functions.
    pub fn field_bracket(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        let mut out = self.bracket(x, y)?;
        let n = self.dim();
        for k in 0..n {
            for a in 0..n {
                let xa = x.get(&[a]);
                let ya = y.get(&[a]);
                let t1 = xa.try_mul(&derive_opt(self.derivations(), a, y.get(&[k]))?)?;
                let t2 = ya.try_mul(&derive_opt(self.derivations(), a, x.get(&[k]))?)?;
                out.add_at(&[k], &t1.try_sub(&t2)?)?;
            }
        }
        Ok(out)
    }

    fn antisymmetry_failure(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = self.c(i, j, k).try_add(self.c(j, i, k));
                    if !matches!(s, Ok(ref v) if v.is_zero()) {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// Triples `i < j < k` where `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` is nonzero.
    pub fn jacobi_check(&self) -> Result<Vec<JacobiFailure>> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut residual = vec![ParamScalar::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for m in 0..n {
                            let cab = self.c(a, b, m);
                            if cab.is_zero() {
                                continue;
                            }
                            for (l, slot) in residual.iter_mut().enumerate() {
                                *slot = slot.try_add(&cab.try_mul(self.c(m, c, l))?)?;
                            }
                        }
                    }
                    if residual.iter().any(|r| !r.is_zero()) {
                        out.push(JacobiFailure {
                            triple: [i, j, k],
                            residual: residual.iter().map(ToString::to_string).collect(),
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// The trace functional `X -> tr ad(X)` in the coframe.
    pub fn trace_form(&self) -> Result<Vec<ParamScalar>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut acc = ParamScalar::zero();
                for k in 0..n {
                    acc = acc.try_add(self.c(i, k, k))?;
                }
                Ok(acc)
            })
            .collect()
    }

    /// Basis of `{X : tr ad(X) = 0}`; each vector is normalized when its
    /// pivot coefficient is a unit.
    pub fn unimodular_kernel(&self) -> Result<Vec<Tensor>> {
        let tau = self.trace_form()?;
        let n = self.dim();
        let Some(p) = tau.iter().position(|t| !t.is_zero()) else {
            return Ok((0..n).map(|i| Tensor::basis(n, i)).collect());
        };
        let pivot = &tau[p];
        let inv = pivot.inverse().ok();
        let mut basis = Vec::new();
        for j in (0..n).filter(|&j| j != p) {
            let mut v = vec![ParamScalar::zero(); n];
            v[j] = pivot.clone();
            v[p] = -&tau[j];
            if let Some(inv) = &inv {
                v = v.iter().map(|x| x.try_mul(inv)).collect::<std::result::Result<_, _>>()?;
            }
            basis.push(Tensor::vector(v));
        }
        Ok(basis)
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.trace_form()?.iter().all(ParamScalar::is_zero))
    }

    /// Nonzero brackets `[e_i, e_j]`, `i < j`, as rendered components.
    pub fn bracket_table(&self) -> Vec<((usize, usize), Vec<ParamScalar>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v: Vec<ParamScalar> = (0..n).map(|k| self.c(i, j, k).clone()).collect();
                if v.iter().any(|x| !x.is_zero()) {
                    out.push(((i, j), v));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let brackets: Vec<Value> = self
            .bracket_table()
            .into_iter()
            .map(|((i, j), v)| {
                json!({
                    "pair": [i + 1, j + 1],
                    "value": v.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut doc = json!({
            "name": self.name,
            "dimension": self.dim(),
            "context": self.context.name(),
            "orientation": self.orientation,
            "brackets": brackets,
        });
        if let Some(t) = self.derivations() {
            doc["derivations"] =
                Value::Array(t.rows().iter().map(|[a, b]| json!({"s1": a.to_string(), "s2": b.to_string()})).collect());
        }
        doc
    }

    /// Substitute values for indeterminates in the structure constants.
    pub fn instantiate(&self, assignment: &crate::exactalg::Assignment) -> Result<MetricLieAlgebra> {
        let consts = self.consts.instantiate_partial(assignment)?;
        let derivations = match self.derivations() {
            Some(t) => {
                let rows = t
                    .rows()
                    .iter()
                    .map(|[a, b]| Ok([a.instantiate_partial(assignment)?, b.instantiate_partial(assignment)?]))
                    .collect::<Result<Vec<_>>>()?;
                Some(Arc::new(DerivationTable::new(rows)?))
            }
            None => None,
        };
        Ok(MetricLieAlgebra {
            name: self.name.clone(),
            consts,
            orientation: self.orientation,
            context: self.context,
            derivations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse;

    #[test]
    fn rejects_jacobi_violation() {
        let one = ParamScalar::one();
        let z = ParamScalar::zero;
        let a = MetricLieAlgebra::from_brackets(
            "broken",
            3,
            &[
                ((0, 1), vec![one.clone(), z(), z()]),
                ((1, 2), vec![z(), one.clone(), z()]),
                ((0, 2), vec![z(), z(), -one.clone()]),
            ],
            Context::Generic,
        );
        assert!(matches!(a, Err(Error::InvalidStructureConstants(_))));
    }

    #[test]
    fn jacobi_report_for_broken_algebra() {
        let mut consts = Tensor::zeros(3, &ONE_TWO);
        let mut put = |i: usize, j: usize, k: usize| {
            consts.set(&[i, j, k], ParamScalar::one());
            consts.set(&[j, i, k], -ParamScalar::one());
        };
        put(0, 1, 0);
        put(1, 2, 1);
        put(2, 0, 2);
        let a = MetricLieAlgebra::new_unchecked("broken", consts, 1, Context::Generic).unwrap();
        assert!(!a.jacobi_check().unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_shape() {
        let t = Tensor::zeros(5, &ONE_TWO);
        assert_eq!(MetricLieAlgebra::new_unchecked("big", t, 1, Context::Generic), Err(Error::UnsupportedDimension(5)));
    }

    #[test]
    fn kernel_of_trace() {
        let a = MetricLieAlgebra::from_brackets(
            "t",
            3,
            &[((0, 1), vec![parse("0").unwrap(), parse("c").unwrap(), parse("0").unwrap()])],
            Context::Generic,
        )
        .unwrap();
        let k = a.unimodular_kernel().unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            let tau = a.trace_form().unwrap();
            assert!(Tensor::covector(tau)
                .components()
                .iter()
                .zip(v.components())
                .fold(ParamScalar::zero(), |acc, (x, y)| acc + x * y)
                .is_zero());
        }
    }
}
