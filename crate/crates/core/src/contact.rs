//! Almost contact metric structures, contact and Sasakian axioms, the cross
//! product and D-homothetic deformations.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::check::{Check, CheckReport};
use crate::connect::levi_civita;
use crate::error::{Error, Result};
use crate::exactalg::{derive_opt, q, Context, ParamScalar};
use crate::liealg::{CatalogEntry, MetricLieAlgebra};
use crate::tensor::{Slot, Tensor, BILINEAR, ENDO, ONE_TWO};

/// `(phi, xi, eta)` in frame components on a metric Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct AlmostContactStructure {
    algebra: Arc<MetricLieAlgebra>,
    phi: Tensor,
    xi: Tensor,
    eta: Tensor,
}

fn kron(i: usize, j: usize) -> ParamScalar {
    ParamScalar::int(i64::from(i == j))
}

impl AlmostContactStructure {
    pub fn new(algebra: &MetricLieAlgebra, phi: Tensor, xi: Tensor, eta: Tensor) -> Result<Self> {
        let n = algebra.dim();
        for (t, slots) in [(&phi, &ENDO[..]), (&xi, &[Slot::Up][..]), (&eta, &[Slot::Down][..])] {
            if t.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: t.dim() });
            }
            if t.slots() != slots {
                return Err(Error::Invalid(format!("expected slot layout {slots:?}")));
            }
        }
        Ok(AlmostContactStructure { algebra: Arc::new(algebra.clone()), phi, xi, eta })
    }

    /// `phi e1 = e2`, `phi e2 = -e1`, `phi e3 = 0`, `xi = e3`, `eta = theta^3`
    /// on any 3-dimensional algebra.
    pub fn standard(algebra: &MetricLieAlgebra) -> Result<Self> {
        if algebra.dim() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: algebra.dim() });
        }
        let phi = Tensor::from_fn(3, &ENDO, |i| match (i[0], i[1]) {
            (1, 0) => ParamScalar::one(),
            (0, 1) => -ParamScalar::one(),
            _ => ParamScalar::zero(),
        });
        let xi = Tensor::basis(3, 2);
        let eta = Tensor::covector(vec![ParamScalar::zero(), ParamScalar::zero(), ParamScalar::one()]);
        Self::new(algebra, phi, xi, eta)
    }

    pub fn algebra(&self) -> &MetricLieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn phi(&self) -> &Tensor {
        &self.phi
    }

    pub fn xi(&self) -> &Tensor {
        &self.xi
    }

    pub fn eta(&self) -> &Tensor {
        &self.eta
    }

    /// The same structure on a different algebra with the same frame.
    pub fn on_algebra(&self, algebra: &MetricLieAlgebra) -> Result<Self> {
        Self::new(algebra, self.phi.clone(), self.xi.clone(), self.eta.clone())
    }

    /// `deta(e_i, e_j) = (e_i(eta_j) - e_j(eta_i) - eta([e_i, e_j])) / 2`.
    pub fn d_eta(&self) -> Result<Tensor> {
        let a = &self.algebra;
        let n = self.dim();
        let table = a.derivations();
        Tensor::try_from_fn(n, &BILINEAR, |idx| {
            let (i, j) = (idx[0], idx[1]);
            let mut acc =
                derive_opt(table, i, self.eta.get(&[j]))?.try_sub(&derive_opt(table, j, self.eta.get(&[i]))?)?;
            for k in 0..n {
                acc = acc.try_sub(&a.c(i, j, k).try_mul(self.eta.get(&[k]))?)?;
            }
            Ok(acc.scale(&q(1, 2)))
        })
    }

    fn phi_vec(&self, v: &Tensor) -> Result<Tensor> {
        self.phi.apply(v)
    }

    /// `h = (Lie_xi phi) / 2`, with `(Lie_xi phi) Y = [xi, phi Y] - phi [xi, Y]`.
    pub fn h_tensor(&self) -> Result<Tensor> {
        let n = self.dim();
        let a = &self.algebra;
        let mut h = Tensor::zeros(n, &ENDO);
        for j in 0..n {
            let ej = Tensor::basis(n, j);
            let first = a.field_bracket(&self.xi, &self.phi_vec(&ej)?)?;
            let second = self.phi_vec(&a.field_bracket(&self.xi, &ej)?)?;
            let col = first.try_sub(&second)?;
            for k in 0..n {
                h.set(&[k, j], col.get(&[k]).scale(&q(1, 2)));
            }
        }
        Ok(h)
    }

    /// Tanno tensor; `t[i][j]` holds `Q(e_j, e_i)`, i.e. the slot order of
    /// `(nabla_{e_i} phi) e_j`.
    pub fn tanno_tensor(&self) -> Result<Tensor> {
        let n = self.dim();
        let lc = levi_civita(&self.algebra)?;
        let dphi = lc.covariant_derivative(&self.phi)?;
        let deta = lc.covariant_derivative(&self.eta)?;
        let dxi = lc.covariant_derivative(&self.xi)?;
        Tensor::try_from_fn(n, &ONE_TWO, |idx| {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let mut acc = dphi.get(&[i, k, j]).clone();
            for m in 0..n {
                let a = deta.get(&[i, m]).try_mul(self.phi.get(&[m, j]))?.try_mul(self.xi.get(&[k]))?;
                let b = self.eta.get(&[j]).try_mul(self.phi.get(&[k, m]))?.try_mul(dxi.get(&[i, m]))?;
                acc = acc.try_add(&a)?.try_add(&b)?;
            }
            Ok(acc)
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "phi": self.phi.to_json(),
            "xi": self.xi.to_json(),
            "eta": self.eta.to_json(),
        })
    }
}

/// The left-invariant structure on the Sasakian catalog entries.
pub fn standard_acs(algebra: &MetricLieAlgebra) -> Result<AlmostContactStructure> {
    match algebra.name().parse::<CatalogEntry>() {
        Ok(entry) if entry.is_sasakian() => AlmostContactStructure::standard(algebra),
        _ => Err(Error::UnknownCatalogEntry(algebra.name().to_string())),
    }
}

/// Almost contact, associated metric and contact metric conditions.
pub fn contact_check(acs: &AlmostContactStructure) -> Result<CheckReport> {
    let n = acs.dim();
    let (phi, xi, eta) = (acs.phi(), acs.xi(), acs.eta());
    let mut report = CheckReport::new();

    let phi2 = Tensor::try_from_fn(n, &ENDO, |idx| {
        let (k, j) = (idx[0], idx[1]);
        let mut acc = kron(k, j).try_sub(&xi.get(&[k]).try_mul(eta.get(&[j]))?)?;
        for m in 0..n {
            acc = acc.try_add(&phi.get(&[k, m]).try_mul(phi.get(&[m, j]))?)?;
        }
        Ok(acc)
    })?;
    report.push(Check::vanishing("phi^2 = -I + eta(x)xi", &phi2));
    report.push(Check::scalar("eta(xi) = 1", &eta.dot(xi)?.try_sub(&ParamScalar::one())?));

    let compat = Tensor::try_from_fn(n, &BILINEAR, |idx| {
        let (i, j) = (idx[0], idx[1]);
        let mut acc = eta.get(&[i]).try_mul(eta.get(&[j]))?.try_sub(&kron(i, j))?;
        for m in 0..n {
            acc = acc.try_add(&phi.get(&[m, i]).try_mul(phi.get(&[m, j]))?)?;
        }
        Ok(acc)
    })?;
    report.push(Check::vanishing("g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y)", &compat));
    let dual = Tensor::try_from_fn(n, &[Slot::Down], |idx| Ok(eta.get(idx).try_sub(xi.get(idx))?))?;
    report.push(Check::vanishing("eta = g(xi, .)", &dual));

    let deta = acs.d_eta()?;
    let contact = Tensor::try_from_fn(n, &BILINEAR, |idx| {
        let (i, j) = (idx[0], idx[1]);
        Ok(deta.get(&[i, j]).try_sub(phi.get(&[i, j]))?)
    })?;
    report.push(Check::vanishing("deta(X,Y) = g(X, phi Y)", &contact));
    Ok(report)
}

/// Contact conditions plus `nabla xi = -phi`, the Sasakian formula for
/// `nabla phi`, `h = 0` and the Killing equation for `xi`.
pub fn sasaki_check(acs: &AlmostContactStructure) -> Result<CheckReport> {
    let mut report = contact_check(acs)?;
    let n = acs.dim();
    let (phi, xi, eta) = (acs.phi(), acs.xi(), acs.eta());
    let lc = levi_civita(acs.algebra())?;
    let dxi = lc.covariant_derivative(xi)?;
    let nabla_xi = Tensor::try_from_fn(n, &BILINEAR, |idx| {
        let (i, k) = (idx[0], idx[1]);
        Ok(dxi.get(&[i, k]).try_add(phi.get(&[k, i]))?)
    })?;
    report.push(Check::vanishing("nabla xi = -phi", &nabla_xi));

    let dphi = lc.covariant_derivative(phi)?;
    let nabla_phi = Tensor::try_from_fn(n, &ONE_TWO, |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let expected = kron(i, j).try_mul(xi.get(&[k]))?.try_sub(&eta.get(&[j]).try_mul(&kron(i, k))?)?;
        Ok(dphi.get(&[i, k, j]).try_sub(&expected)?)
    })?;
    report.push(Check::vanishing("(nabla_X phi)Y = g(X,Y)xi - eta(Y)X", &nabla_phi));
    report.push(Check::vanishing("h = 0", &acs.h_tensor()?));

    let deta = lc.covariant_derivative(eta)?;
    let killing = Tensor::try_from_fn(n, &BILINEAR, |idx| {
        Ok(deta.get(&[idx[0], idx[1]]).try_add(deta.get(&[idx[1], idx[0]]))?)
    })?;
    report.push(Check::vanishing("xi is Killing", &killing));
    Ok(report)
}

/// The volume `(1,2)`-tensor `dV(e_i, e_j) = orientation * eps_ijk e_k`.
pub fn volume_tensor(algebra: &MetricLieAlgebra) -> Result<Tensor> {
    if algebra.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: algebra.dim() });
    }
    let o = i64::from(algebra.orientation());
    Ok(Tensor::from_fn(3, &ONE_TWO, |idx| ParamScalar::int(o * levi_civita_symbol(idx[0], idx[1], idx[2]))))
}

fn levi_civita_symbol(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

pub fn cross_product(algebra: &MetricLieAlgebra, x: &Tensor, y: &Tensor) -> Result<Tensor> {
    volume_tensor(algebra)?.apply2(x, y)
}

/// `X x Y = -deta(X,Y) xi + eta(X) phi Y - eta(Y) phi X` and `xi x X = phi X`
/// on frame vectors.
pub fn cross_product_check(acs: &AlmostContactStructure) -> Result<CheckReport> {
    let vol = volume_tensor(acs.algebra())?;
    let deta = acs.d_eta()?;
    let (phi, xi, eta) = (acs.phi(), acs.xi(), acs.eta());
    let expr = Tensor::try_from_fn(3, &ONE_TWO, |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let a = deta.get(&[i, j]).try_mul(xi.get(&[k]))?;
        let b = eta.get(&[i]).try_mul(phi.get(&[k, j]))?;
        let c = eta.get(&[j]).try_mul(phi.get(&[k, i]))?;
        Ok(b.try_sub(&a)?.try_sub(&c)?)
    })?;
    let mut report = CheckReport::new();
    report.push(Check::equal("X x Y = -deta(X,Y)xi + eta(X)phi Y - eta(Y)phi X", &vol, &expr));
    let mut xi_cross = Tensor::zeros(3, &ENDO);
    for j in 0..3 {
        let v = cross_product(acs.algebra(), xi, &Tensor::basis(3, j))?;
        for k in 0..3 {
            xi_cross.set(&[k, j], v.get(&[k]).try_sub(phi.get(&[k, j]))?);
        }
    }
    report.push(Check::vanishing("xi x X = phi X", &xi_cross));
    Ok(report)
}

/// Result of deforming the round structure to holomorphic sectional curvature `c`.
#[derive(Clone, Debug)]
pub struct Deformation {
    pub algebra: MetricLieAlgebra,
    pub acs: AlmostContactStructure,
    pub target: ParamScalar,
    pub checks: CheckReport,
}

/// Frame weights of the rescaled orthonormal frame `e1' = l e1`,
/// `e2' = l e2`, `e3' = l^2 e3` with `l^2 = (c+3)/4`.
const DEFORM_WEIGHTS: [i32; 3] = [1, 1, 2];

/// Apply `eta_c = (4/(c+3)) eta`, `xi_c = ((c+3)/4) xi`,
/// `g_c = (4/(c+3)) g - (4(c-1)/(c+3)^2) eta (x) eta` to the round
/// structure and re-orthonormalize. Every identity is checked after
/// clearing the denominators `c+3`, so `c` may stay symbolic.
pub fn d_homothetic_deform(acs: &AlmostContactStructure, target: &ParamScalar) -> Result<Deformation> {
    let round = crate::liealg::catalog::su2_round()?;
    if acs.algebra().structure_constants() != round.structure_constants()
        || acs != &AlmostContactStructure::standard(acs.algebra())?
    {
        return Err(Error::InvalidTarget("the source must be the round structure with c = 1".into()));
    }
    if target.context() == Some(Context::Alpha) {
        return Err(Error::InvalidTarget("c + 3 = -alpha^2 is negative".into()));
    }
    let c3 = target.try_add(&ParamScalar::int(3))?;
    match c3.rational_sign() {
        Some(s) if s <= 0 => {
            return Err(Error::InvalidTarget(format!("c + 3 = {c3} must be positive")));
        }
        _ => {}
    }
    if c3.is_zero() {
        return Err(Error::InvalidTarget("c = -3".into()));
    }
    let u = c3.scale(&q(1, 4));
    let n = 3;
    let mut consts = Tensor::zeros(n, &ONE_TWO);
    for idx in round.structure_constants().indices() {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let c = round.c(i, j, k);
        if c.is_zero() {
            continue;
        }
        let w = DEFORM_WEIGHTS[i] + DEFORM_WEIGHTS[j] - DEFORM_WEIGHTS[k];
        if w < 0 || w % 2 != 0 {
            return Err(Error::InvalidTarget(format!("bracket weight {w} leaves the ring")));
        }
        consts.set(&idx, c.try_mul(&u.pow((w / 2) as u32))?);
    }
    let algebra =
        MetricLieAlgebra::new(CatalogEntry::SasakianSpaceForm.name(), consts, round.orientation(), Context::Generic)?;
    let new_acs = AlmostContactStructure::standard(&algebra)?;

    let four = ParamScalar::int(4);
    let mut checks = CheckReport::new();
    // g_c(l e1, l e1) = u * 4/(c+3)
    checks.push(Check::scalar("g_c(e1', e1') = 1", &u.try_mul(&four)?.try_sub(&c3)?));
    // g_c(l^2 e3, l^2 e3) = u^2 (4/(c+3) - 4(c-1)/(c+3)^2)
    let g33_num =
        u.pow(2).try_mul(&four.try_mul(&c3)?.try_sub(&four.try_mul(&target.try_sub(&ParamScalar::one())?)?)?)?;
    checks.push(Check::scalar("g_c(e3', e3') = 1", &g33_num.try_sub(&c3.pow(2))?));
    // xi_c = u e3 = e3' and eta_c(xi_c) = (4/(c+3)) u
    checks.push(Check::scalar("eta_c(xi_c) = 1", &four.try_mul(&u)?.try_sub(&c3)?));
    checks.push(Check::equal("phi e1' = e2'", &new_acs.phi().apply(&Tensor::basis(3, 0))?, &Tensor::basis(3, 1)));
    Ok(Deformation { algebra, acs: new_acs, target: target.clone(), checks })
}
