//! Linear connections on metric Lie algebras and covariant differentiation.

use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::contact::AlmostContactStructure;
use crate::error::{Error, Result};
use crate::exactalg::{derive_opt, q, ParamScalar};
use crate::liealg::MetricLieAlgebra;
use crate::tensor::{Slot, Tensor, ONE_TWO};

/// Coefficients `nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Connection {
    algebra: Arc<MetricLieAlgebra>,
    gamma: Tensor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CartanSchouten {
    Minus,
    Zero,
    Plus,
}

impl Connection {
    pub fn new(algebra: Arc<MetricLieAlgebra>, gamma: Tensor) -> Result<Self> {
        if gamma.dim() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: gamma.dim() });
        }
        if gamma.slots() != ONE_TWO {
            return Err(Error::Invalid("connection coefficients must have layout [down, down, up]".into()));
        }
        Ok(Connection { algebra, gamma })
    }

    pub fn algebra(&self) -> &MetricLieAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<MetricLieAlgebra> {
        &self.algebra
    }

    pub fn coefficients(&self) -> &Tensor {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    /// `gamma[i][j][k]`, 0-based.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &ParamScalar {
        self.gamma.get(&[i, j, k])
    }

    /// `nabla + s` for a `(1,2)` difference tensor.
    pub fn plus(&self, s: &Tensor) -> Result<Connection> {
        Connection::new(self.algebra.clone(), self.gamma.try_add(s)?)
    }

    /// Difference tensor `self - other`.
    pub fn minus(&self, other: &Connection) -> Result<Tensor> {
        self.gamma.try_sub(&other.gamma)
    }

    /// `nabla_X Y` for frame-component vectors.
    pub fn nabla(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        let d = self.covariant_derivative(y)?;
        let n = self.dim();
        let mut out = vec![ParamScalar::zero(); n];
        for (k, slot) in out.iter_mut().enumerate() {
            for i in 0..n {
                *slot = slot.try_add(&x.get(&[i]).try_mul(d.get(&[i, k]))?)?;
            }
        }
        Ok(Tensor::vector(out))
    }

    /// `T(e_i, e_j) = nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i, e_j]`.
    pub fn torsion(&self) -> Result<Tensor> {
        let a = &self.algebra;
        Tensor::try_from_fn(self.dim(), &ONE_TWO, |idx| {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            Ok(self.gamma(i, j, k).try_sub(self.gamma(j, i, k))?.try_sub(a.c(i, j, k))?)
        })
    }

    /// Components where `gamma[i][j][k] + gamma[i][k][j]` fails to vanish.
    pub fn metric_defects(&self) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        for idx in self.gamma.indices() {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            if j <= k && !self.gamma(i, j, k).try_add(self.gamma(i, k, j))?.is_zero() {
                out.push(idx);
            }
        }
        Ok(out)
    }

    /// `nabla T` with the new covariant slot first: `(nabla T)[i, ...] = (nabla_{e_i} T)[...]`.
    pub fn covariant_derivative(&self, t: &Tensor) -> Result<Tensor> {
        let n = self.dim();
        if t.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: t.dim() });
        }
        let mut slots = vec![Slot::Down];
        slots.extend_from_slice(t.slots());
        let table = self.algebra.derivations();
        let tslots = t.slots().to_vec();
        Tensor::try_from_fn(n, &slots, |idx| {
            let i = idx[0];
            let inner = &idx[1..];
            let mut acc = derive_opt(table, i, t.get(inner))?;
            let mut moved = inner.to_vec();
            for (a, slot) in tslots.iter().enumerate() {
                let orig = inner[a];
                for m in 0..n {
                    moved[a] = m;
                    let tv = t.get(&moved);
                    if tv.is_zero() {
                        continue;
                    }
                    let g = match slot {
                        Slot::Up => self.gamma(i, m, orig),
                        Slot::Down => self.gamma(i, orig, m),
                    };
                    if g.is_zero() {
                        continue;
                    }
                    let term = g.try_mul(tv)?;
                    acc = match slot {
                        Slot::Up => acc.try_add(&term)?,
                        Slot::Down => acc.try_sub(&term)?,
                    };
                }
                moved[a] = orig;
            }
            Ok(acc)
        })
    }

    pub fn to_json(&self) -> Result<Value> {
        Ok(json!({
            "algebra": self.algebra.name(),
            "gamma": self.gamma.to_json(),
            "torsion": self.torsion()?.to_json(),
        }))
    }
}

/// Torsion-free metric connection from the Koszul formula in an orthonormal
/// frame: `gamma[i][j][k] = (C_ij^k - C_jk^i + C_ki^j) / 2`.
pub fn levi_civita(a: &MetricLieAlgebra) -> Result<Connection> {
    let half = q(1, 2);
    let gamma = Tensor::try_from_fn(a.dim(), &ONE_TWO, |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let s = a.c(i, j, k).try_sub(a.c(j, k, i))?.try_add(a.c(k, i, j))?;
        Ok(s.scale(&half))
    })?;
    Connection::new(Arc::new(a.clone()), gamma)
}

/// The canonical connections of a Lie group: `0`, `[X,Y]/2`, `[X,Y]`.
pub fn cartan_schouten(a: &MetricLieAlgebra, variant: CartanSchouten) -> Result<Connection> {
    let factor = match variant {
        CartanSchouten::Minus => q(0, 1),
        CartanSchouten::Zero => q(1, 2),
        CartanSchouten::Plus => q(1, 1),
    };
    let gamma = a.structure_constants().map(|c| c.scale(&factor));
    Connection::new(Arc::new(a.clone()), gamma)
}

/// `A^r(X)Y = deta(X,Y) xi - r eta(X) phi Y + eta(Y) phi X`.
pub fn okumura_tensor(acs: &AlmostContactStructure, r: &ParamScalar) -> Result<Tensor> {
    sigma_tensor(acs, &acs.eta().scale(&-r)?)
}

/// `nabla^r = nabla + A^r` together with `A^r`.
pub fn okumura(acs: &AlmostContactStructure, r: &ParamScalar) -> Result<(Connection, Tensor)> {
    let a = okumura_tensor(acs, r)?;
    Ok((levi_civita(acs.algebra())?.plus(&a)?, a))
}

/// `deta(X,Y) xi + eta(Y) phi X + sigma(X) phi Y`.
pub fn sigma_tensor(acs: &AlmostContactStructure, sigma: &Tensor) -> Result<Tensor> {
    let n = acs.dim();
    let deta = acs.d_eta()?;
    let (phi, xi, eta) = (acs.phi(), acs.xi(), acs.eta());
    Tensor::try_from_fn(n, &ONE_TWO, |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let a = deta.get(&[i, j]).try_mul(xi.get(&[k]))?;
        let b = eta.get(&[j]).try_mul(phi.get(&[k, i]))?;
        let c = sigma.get(&[i]).try_mul(phi.get(&[k, j]))?;
        Ok(a.try_add(&b)?.try_add(&c)?)
    })
}

pub fn sigma_connection(acs: &AlmostContactStructure, sigma: &Tensor) -> Result<Connection> {
    levi_civita(acs.algebra())?.plus(&sigma_tensor(acs, sigma)?)
}

/// Tanno's connection
/// `nabla_X Y + eta(X) phi Y + ((nabla_X eta) Y) xi - eta(Y) nabla_X xi`.
pub fn generalized_tanaka_webster(acs: &AlmostContactStructure) -> Result<Connection> {
    let lc = levi_civita(acs.algebra())?;
    let d_eta = lc.covariant_derivative(acs.eta())?;
    let d_xi = lc.covariant_derivative(acs.xi())?;
    let (phi, xi, eta) = (acs.phi(), acs.xi(), acs.eta());
    let diff = Tensor::try_from_fn(acs.dim(), &ONE_TWO, |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let a = eta.get(&[i]).try_mul(phi.get(&[k, j]))?;
        let b = d_eta.get(&[i, j]).try_mul(xi.get(&[k]))?;
        let c = eta.get(&[j]).try_mul(d_xi.get(&[i, k]))?;
        Ok(a.try_add(&b)?.try_sub(&c)?)
    })?;
    lc.plus(&diff)
}

/// `nabla_X Y + eta(X) phi Y + eta(Y) phi(I+h) X - g(phi(I+h) X, Y) xi`.
pub fn tanaka_webster(acs: &AlmostContactStructure) -> Result<Connection> {
    let lc = levi_civita(acs.algebra())?;
    let h = acs.h_tensor()?;
    let n = acs.dim();
    let (phi, xi, eta) = (acs.phi(), acs.xi(), acs.eta());
    // P = phi (I + h)
    let p = Tensor::try_from_fn(n, &crate::tensor::ENDO, |idx| {
        let (k, i) = (idx[0], idx[1]);
        let mut acc = phi.get(&[k, i]).clone();
        for m in 0..n {
            acc = acc.try_add(&phi.get(&[k, m]).try_mul(h.get(&[m, i]))?)?;
        }
        Ok(acc)
    })?;
    let diff = Tensor::try_from_fn(n, &ONE_TWO, |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let a = eta.get(&[i]).try_mul(phi.get(&[k, j]))?;
        let b = eta.get(&[j]).try_mul(p.get(&[k, i]))?;
        let c = p.get(&[j, i]).try_mul(xi.get(&[k]))?;
        Ok(a.try_add(&b)?.try_sub(&c)?)
    })?;
    lc.plus(&diff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::standard_acs;
    use crate::exactalg::parse;
    use crate::liealg::{catalog, CatalogParams};

    fn space_form() -> MetricLieAlgebra {
        catalog("sasakian_space_form", &CatalogParams::symbolic()).unwrap()
    }

    #[test]
    fn levi_civita_is_torsion_free_and_metric() {
        for name in ["sasakian_space_form", "nonunimodular", "ga1", "ga1_plus_r"] {
            let a = catalog(name, &CatalogParams::symbolic()).unwrap();
            let lc = levi_civita(&a).unwrap();
            assert!(lc.torsion().unwrap().is_zero(), "{name}");
            assert!(lc.metric_defects().unwrap().is_empty(), "{name}");
            assert!(lc.covariant_derivative(&a.metric()).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn abelian_is_flat() {
        let a =
            MetricLieAlgebra::new("abelian", Tensor::zeros(3, &ONE_TWO), 1, crate::exactalg::Context::Generic).unwrap();
        assert!(levi_civita(&a).unwrap().coefficients().is_zero());
    }

    #[test]
    fn okumura_component() {
        let acs = standard_acs(&space_form()).unwrap();
        let r = ParamScalar::r();
        let (conn, a) = okumura(&acs, &r).unwrap();
        assert_eq!(a.get(&[2, 0, 1]), &-&r);
        assert_eq!(conn.gamma(2, 0, 1), &parse("(c+1)/2 - r").unwrap());
    }

    #[test]
    fn cartan_schouten_torsions() {
        let a = space_form();
        let minus = cartan_schouten(&a, CartanSchouten::Minus).unwrap();
        assert!(minus.coefficients().is_zero());
        assert_eq!(minus.torsion().unwrap(), a.structure_constants().neg());
        assert!(cartan_schouten(&a, CartanSchouten::Zero).unwrap().torsion().unwrap().is_zero());
        let plus = cartan_schouten(&a, CartanSchouten::Plus).unwrap();
        assert_eq!(plus.torsion().unwrap(), *a.structure_constants());
    }

    #[test]
    fn covariant_derivative_of_constant_vector() {
        let a = space_form();
        let lc = levi_civita(&a).unwrap();
        let xi = Tensor::basis(3, 2);
        let d = lc.covariant_derivative(&xi).unwrap();
        // nabla_{e1} xi = -phi e1 = -e2
        assert_eq!(d.get(&[0, 1]), &ParamScalar::int(-1));
    }

    #[test]
    fn missing_table_for_function_components() {
        let a = catalog("su2_round", &CatalogParams::symbolic()).unwrap();
        let lc = levi_civita(&a).unwrap();
        let v = Tensor::vector(vec![ParamScalar::zero(), ParamScalar::zero(), ParamScalar::s1()]);
        assert!(matches!(
            lc.covariant_derivative(&v),
            Err(Error::Alg(crate::exactalg::AlgError::MissingDerivationTable(_)))
        ));
    }
}
