use serde_json::{json, Value};

use super::{as_check, HomogStructure};
use crate::contact::AlmostContactStructure;
use crate::curv::curvature;
use crate::error::{Error, Result};
use crate::exactalg::{Assignment, Context, ParamScalar};
use crate::liealg::MetricLieAlgebra;
use crate::linalg::{coordinates, independent_subset};
use crate::tensor::{Tensor, ONE_TWO};

/// A basis triple `(i, j, k)` with the nonzero cyclic sum of its brackets.
pub type JacobiResidual = ((usize, usize, usize), Vec<ParamScalar>);

/// `l = h + m`: the first `holonomy_dim` basis vectors span the holonomy
/// algebra `h`, the remaining `base_dim` are the frame `e_i` of `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReconstructedAlgebra {
    pub holonomy_dim: usize,
    pub base_dim: usize,
    /// Holonomy generators as endomorphisms of `m` (layout `[up, down]`).
    pub holonomy_basis: Vec<Tensor>,
    /// `[b_i, b_j] = sum_k consts[i][j][k] b_k`.
    pub consts: Tensor,
    context: Context,
}

impl ReconstructedAlgebra {
    pub fn dim(&self) -> usize {
        self.holonomy_dim + self.base_dim
    }

    pub fn context(&self) -> Context {
        self.context
    }

    /// Index of `e_i` in `l`.
    pub fn base_index(&self, i: usize) -> usize {
        self.holonomy_dim + i
    }

    pub fn bracket(&self, i: usize, j: usize) -> Vec<ParamScalar> {
        (0..self.dim()).map(|k| self.consts.get(&[i, j, k]).clone()).collect()
    }

    /// Jacobi residuals for every triple `i < j < k`.
    pub fn jacobi_residuals(&self) -> Result<Vec<JacobiResidual>> {
        let n = self.dim();
        let c = |i: usize, j: usize, k: usize| self.consts.get(&[i, j, k]);
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut res = vec![ParamScalar::zero(); n];
                    for (a, b, d) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for m in 0..n {
                            if c(a, b, m).is_zero() {
                                continue;
                            }
                            for (t, slot) in res.iter_mut().enumerate() {
                                *slot = slot.try_add(&c(a, b, m).try_mul(c(m, d, t))?)?;
                            }
                        }
                    }
                    if res.iter().any(|v| !v.is_zero()) {
                        out.push(((i, j, k), res));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[h, m] ⊆ m`.
    pub fn is_reductive(&self) -> bool {
        let h = self.holonomy_dim;
        (0..h).all(|a| (h..self.dim()).all(|i| (0..h).all(|k| self.consts.get(&[a, i, k]).is_zero())))
    }

    pub fn instantiate(&self, assignment: &Assignment) -> Result<ReconstructedAlgebra> {
        Ok(ReconstructedAlgebra {
            holonomy_dim: self.holonomy_dim,
            base_dim: self.base_dim,
            holonomy_basis: self
                .holonomy_basis
                .iter()
                .map(|t| t.instantiate_partial(assignment))
                .collect::<Result<_>>()?,
            consts: self.consts.instantiate_partial(assignment)?,
            context: self.context,
        })
    }

    /// The algebra `l` with its basis read as orthonormal. Its dimension must
    /// be at most four.
    pub fn to_lie_algebra(&self, name: impl Into<String>) -> Result<MetricLieAlgebra> {
        MetricLieAlgebra::new(name, self.consts.clone(), 1, self.context)
    }

    pub fn to_json(&self) -> Value {
        let n = self.dim();
        let label = |i: usize| {
            if i < self.holonomy_dim {
                format!("h{}", i + 1)
            } else {
                format!("e{}", i - self.holonomy_dim + 1)
            }
        };
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket(i, j);
                if v.iter().all(ParamScalar::is_zero) {
                    continue;
                }
                let terms: Vec<Value> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| json!({"basis": label(k), "coefficient": x.to_string()}))
                    .collect();
                brackets.push(json!({"pair": [label(i), label(j)], "value": terms}));
            }
        }
        json!({
            "holonomy_dim": self.holonomy_dim,
            "dim": n,
            "holonomy_basis": self.holonomy_basis.iter().map(Tensor::to_json).collect::<Vec<_>>(),
            "brackets": brackets,
        })
    }
}

/// Divide `v` by its first nonzero entry when every entry is a rational
/// multiple of it.
fn normalize(v: Vec<ParamScalar>) -> Vec<ParamScalar> {
    let Some(p) = v.iter().find(|x| !x.is_zero()).cloned() else {
        return v;
    };
    let ratios: Option<Vec<ParamScalar>> =
        v.iter().map(|x| x.rational_multiple_of(&p).map(ParamScalar::from_rational)).collect();
    ratios.unwrap_or(v)
}

fn endo_from(n: usize, flat: &[ParamScalar]) -> Tensor {
    Tensor::from_fn(n, &crate::tensor::ENDO, |x| flat[x[0] * n + x[1]].clone())
}

fn commutator(n: usize, u: &[ParamScalar], v: &[ParamScalar]) -> Result<Vec<ParamScalar>> {
    let mut out = vec![ParamScalar::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = ParamScalar::zero();
            for m in 0..n {
                acc = acc.try_add(&u[i * n + m].try_mul(&v[m * n + j])?)?;
                acc = acc.try_sub(&v[i * n + m].try_mul(&u[m * n + j])?)?;
            }
            out[i * n + j] = acc;
        }
    }
    Ok(out)
}

/// Builds the transitive Lie algebra `h + m` from an Ambrose-Singer
/// connection `nabla + S`, with
/// `[U,V] = UV - VU`, `[U,X] = U(X)`, `[X,Y] = -R~(X,Y) - S(X)Y + S(Y)X`.
pub fn nomizu_reconstruct(s: &HomogStructure, acs: Option<&AlmostContactStructure>) -> Result<ReconstructedAlgebra> {
    let report = as_check(s, acs)?;
    if !report.passed() {
        let names: Vec<&str> = report.conditions.failures().iter().map(|c| c.name.as_str()).collect();
        return Err(Error::AsCheckFailed(names.join(", ")));
    }
    let n = s.dim();
    let r = curvature(&s.connection()?)?;
    let mut pairs = Vec::new();
    let mut ops: Vec<Vec<ParamScalar>> = Vec::new();
    for k in 0..n {
        for l in k + 1..n {
            pairs.push((k, l));
            ops.push(r.operator(k, l).components().to_vec());
        }
    }
    let basis: Vec<Vec<ParamScalar>> =
        independent_subset(&ops)?.into_iter().map(|i| normalize(ops[i].clone())).collect();
    let h = basis.len();
    let dim = h + n;
    let mut consts = Tensor::zeros(dim, &ONE_TWO);
    let mut put = |i: usize, j: usize, k: usize, v: ParamScalar| {
        consts.set(&[j, i, k], -&v);
        consts.set(&[i, j, k], v);
    };
    for a in 0..h {
        for b in a + 1..h {
            let comm = commutator(n, &basis[a], &basis[b])?;
            let coords = coordinates(&basis, &comm)?.ok_or(Error::HolonomyNotClosed)?;
            for (k, v) in coords.into_iter().enumerate() {
                put(a, b, k, v);
            }
        }
        for i in 0..n {
            for j in 0..n {
                put(a, h + i, h + j, basis[a][j * n + i].clone());
            }
        }
    }
    let st = s.tensor();
    for (p, &(i, j)) in pairs.iter().enumerate() {
        let coords = coordinates(&basis, &ops[p])?.ok_or(Error::HolonomyNotClosed)?;
        for (k, v) in coords.into_iter().enumerate() {
            put(h + i, h + j, k, -&v);
        }
        for k in 0..n {
            let v = st.get(&[j, i, k]).try_sub(st.get(&[i, j, k]))?;
            put(h + i, h + j, h + k, v);
        }
    }
    let out = ReconstructedAlgebra {
        holonomy_dim: h,
        base_dim: n,
        holonomy_basis: basis.iter().map(|b| endo_from(n, b)).collect(),
        consts,
        context: s.algebra().context(),
    };
    if !out.jacobi_residuals()?.is_empty() || !out.is_reductive() {
        return Err(Error::ReconstructionNotLie);
    }
    Ok(out)
}
