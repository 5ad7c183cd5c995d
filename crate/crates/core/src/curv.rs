//! Curvature of linear connections, Ricci and sectional curvature, and the
//! moving-frame structure equations.

use serde_json::{json, Value};

use crate::check::{Check, CheckReport};
use crate::connect::{levi_civita, okumura, Connection};
use crate::contact::AlmostContactStructure;
use crate::error::{Error, Result};
use crate::exactalg::{derive_opt, q, ParamScalar};
use crate::linalg::exact_div;
use crate::tensor::{Slot, Tensor, BILINEAR, ENDO, ONE_TWO};

/// Layout of curvature components: `r[k][l][i][j]` is the `e_j` component of
/// `R(e_k, e_l) e_i`.
pub const CURVATURE: [Slot; 4] = [Slot::Down, Slot::Down, Slot::Down, Slot::Up];

#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureTensor {
    comps: Tensor,
}

impl CurvatureTensor {
    pub fn from_tensor(comps: Tensor) -> Result<Self> {
        if comps.slots() != CURVATURE {
            return Err(Error::Invalid("curvature must have layout [down, down, down, up]".into()));
        }
        Ok(CurvatureTensor { comps })
    }

    pub fn tensor(&self) -> &Tensor {
        &self.comps
    }

    pub fn dim(&self) -> usize {
        self.comps.dim()
    }

    /// `e_j` component of `R(e_k, e_l) e_i`.
    pub fn component(&self, k: usize, l: usize, i: usize, j: usize) -> &ParamScalar {
        self.comps.get(&[k, l, i, j])
    }

    /// `R_ijkl = g(R(e_i, e_j) e_l, e_k)`, so that `R_1212` is the sectional
    /// curvature of the `e1 e2` plane.
    pub fn lowered(&self, i: usize, j: usize, k: usize, l: usize) -> &ParamScalar {
        self.comps.get(&[i, j, l, k])
    }

    pub fn lowered_tensor(&self) -> Tensor {
        Tensor::from_fn(self.dim(), &[Slot::Down; 4], |x| self.lowered(x[0], x[1], x[2], x[3]).clone())
    }

    /// `R(e_k, e_l)` as an endomorphism (layout `[Up, Down]`).
    pub fn operator(&self, k: usize, l: usize) -> Tensor {
        Tensor::from_fn(self.dim(), &ENDO, |x| self.component(k, l, x[1], x[0]).clone())
    }

    /// `R(X, Y) Z`.
    pub fn apply(&self, x: &Tensor, y: &Tensor, z: &Tensor) -> Result<Tensor> {
        let n = self.dim();
        let mut out = vec![ParamScalar::zero(); n];
        for k in 0..n {
            for l in 0..n {
                let w = x.get(&[k]).try_mul(y.get(&[l]))?;
                if w.is_zero() {
                    continue;
                }
                for i in 0..n {
                    let wz = w.try_mul(z.get(&[i]))?;
                    if wz.is_zero() {
                        continue;
                    }
                    for (j, slot) in out.iter_mut().enumerate() {
                        *slot = slot.try_add(&wz.try_mul(self.component(k, l, i, j))?)?;
                    }
                }
            }
        }
        Ok(Tensor::vector(out))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_zero()
    }

    pub fn to_json(&self) -> Value {
        self.lowered_tensor().to_json()
    }
}

/// `R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]` in frame components.
pub fn curvature(conn: &Connection) -> Result<CurvatureTensor> {
    let a = conn.algebra();
    let n = conn.dim();
    let table = a.derivations();
    let g = |i: usize, j: usize, k: usize| conn.gamma(i, j, k);
    let comps = Tensor::try_from_fn(n, &CURVATURE, |idx| {
        let (k, l, i, j) = (idx[0], idx[1], idx[2], idx[3]);
        let mut acc = derive_opt(table, k, g(l, i, j))?.try_sub(&derive_opt(table, l, g(k, i, j))?)?;
        for m in 0..n {
            acc = acc.try_add(&g(l, i, m).try_mul(g(k, m, j))?)?;
            acc = acc.try_sub(&g(k, i, m).try_mul(g(l, m, j))?)?;
            acc = acc.try_sub(&a.c(k, l, m).try_mul(g(m, i, j))?)?;
        }
        Ok(acc)
    })?;
    CurvatureTensor::from_tensor(comps)
}

/// `Ric(X,Y) = tr(Z -> R(Z,Y)X)`.
pub fn ricci(r: &CurvatureTensor) -> Result<Tensor> {
    let n = r.dim();
    Tensor::try_from_fn(n, &BILINEAR, |idx| {
        let (a, b) = (idx[0], idx[1]);
        let mut acc = ParamScalar::zero();
        for z in 0..n {
            acc = acc.try_add(r.component(z, b, a, z))?;
        }
        Ok(acc)
    })
}

pub fn scalar_curvature(ric: &Tensor) -> Result<ParamScalar> {
    let mut acc = ParamScalar::zero();
    for i in 0..ric.dim() {
        acc = acc.try_add(ric.get(&[i, i]))?;
    }
    Ok(acc)
}

/// `K(X,Y) = g(R(X,Y)Y, X) / (|X|^2 |Y|^2 - g(X,Y)^2)`.
pub fn sectional(r: &CurvatureTensor, x: &Tensor, y: &Tensor) -> Result<ParamScalar> {
    let den = x.dot(x)?.try_mul(&y.dot(y)?)?.try_sub(&x.dot(y)?.pow(2))?;
    if den.is_zero() {
        return Err(Error::DegeneratePlane);
    }
    let num = r.apply(x, y, y)?.dot(x)?;
    exact_div(&num, &den)
}

/// Sectional curvature of the plane spanned by `X` and `phi X`, for a
/// nonzero horizontal `X`.
pub fn holomorphic_sectional(r: &CurvatureTensor, acs: &AlmostContactStructure, x: &Tensor) -> Result<ParamScalar> {
    if !acs.eta().dot(x)?.is_zero() || x.is_zero() {
        return Err(Error::NotHorizontal);
    }
    sectional(r, x, &acs.phi().apply(x)?)
}

/// Pair symmetry, antisymmetries and the first Bianchi identity.
pub fn symmetry_check(r: &CurvatureTensor) -> Result<CheckReport> {
    let n = r.dim();
    let low = r.lowered_tensor();
    let mk = |f: &dyn Fn(usize, usize, usize, usize) -> Result<ParamScalar>| {
        Tensor::try_from_fn(n, &[Slot::Down; 4], |x| f(x[0], x[1], x[2], x[3]))
    };
    let l = |i, j, k, m| low.get(&[i, j, k, m]).clone();
    let mut report = CheckReport::new();
    report.push(Check::vanishing("R_ijkl = -R_jikl", &mk(&|i, j, k, m| Ok(l(i, j, k, m).try_add(&l(j, i, k, m))?))?));
    report.push(Check::vanishing("R_ijkl = -R_ijlk", &mk(&|i, j, k, m| Ok(l(i, j, k, m).try_add(&l(i, j, m, k))?))?));
    report.push(Check::vanishing("R_ijkl = R_klij", &mk(&|i, j, k, m| Ok(l(i, j, k, m).try_sub(&l(k, m, i, j))?))?));
    let bianchi = Tensor::try_from_fn(n, &CURVATURE, |x| {
        let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
        Ok(r.component(a, b, c, d).try_add(r.component(b, c, a, d))?.try_add(r.component(c, a, b, d))?)
    })?;
    report.push(Check::vanishing("first Bianchi identity", &bianchi));
    Ok(report)
}

/// Identities of the curvature `R^r` of `nabla^r` on a Sasakian manifold.
pub fn okumura_curvature_identities(acs: &AlmostContactStructure, r: &ParamScalar) -> Result<CheckReport> {
    let n = acs.dim();
    let lc = levi_civita(acs.algebra())?;
    let rl = curvature(&lc)?;
    let (conn, _) = okumura(acs, r)?;
    let rr = curvature(&conn)?;
    let (phi, xi, eta) = (acs.phi(), acs.xi(), acs.eta());
    let deta = acs.d_eta()?;
    let kron = |i: usize, j: usize| ParamScalar::int(i64::from(i == j));
    let two_r = r.scale(&q(2, 1));

    // R^r(X,Y)Z with X = e_k, Y = e_l, Z = e_i, component j.
    let formula = Tensor::try_from_fn(n, &CURVATURE, |x| {
        let (k, l, i, j) = (x[0], x[1], x[2], x[3]);
        let mut v = rl.component(k, l, i, j).clone();
        let bracket = eta.get(&[l]).try_mul(&kron(i, k))?.try_sub(&eta.get(&[k]).try_mul(&kron(l, i))?)?;
        v = v.try_add(&bracket.try_mul(xi.get(&[j]))?)?;
        v = v.try_add(&eta.get(&[i]).try_mul(eta.get(&[k]))?.try_mul(&kron(l, j))?)?;
        v = v.try_sub(&eta.get(&[l]).try_mul(eta.get(&[i]))?.try_mul(&kron(k, j))?)?;
        v = v.try_sub(&deta.get(&[l, i]).try_mul(phi.get(&[j, k]))?)?;
        v = v.try_sub(&deta.get(&[i, k]).try_mul(phi.get(&[j, l]))?)?;
        v = v.try_sub(&two_r.try_mul(deta.get(&[k, l]))?.try_mul(phi.get(&[j, i]))?)?;
        Ok(v)
    })?;
    let mut report = CheckReport::new();
    report.push(Check::equal("R^r formula", rr.tensor(), &formula));

    let kill_xi = Tensor::try_from_fn(n, &ONE_TWO, |x| {
        rr.apply(&Tensor::basis(n, x[0]), &Tensor::basis(n, x[1]), xi).map(|v| v.get(&[x[2]]).clone())
    })?;
    report.push(Check::vanishing("R^r(X,Y)xi = 0", &kill_xi));
    let xi_first = Tensor::try_from_fn(n, &ONE_TWO, |x| {
        rr.apply(xi, &Tensor::basis(n, x[0]), &Tensor::basis(n, x[1])).map(|v| v.get(&[x[2]]).clone())
    })?;
    report.push(Check::vanishing("R^r(xi,X)Y = 0", &xi_first));
    let eta_r = Tensor::try_from_fn(n, &[Slot::Down; 3], |x| {
        let v = rr.apply(&Tensor::basis(n, x[0]), &Tensor::basis(n, x[1]), &Tensor::basis(n, x[2]))?;
        eta.dot(&v)
    })?;
    report.push(Check::vanishing("eta(R^r(X,Y)Z) = 0", &eta_r));
    let equiv = Tensor::try_from_fn(n, &CURVATURE, |x| {
        let e = |i| Tensor::basis(n, i);
        let lhs = rr.apply(&phi.apply(&e(x[0]))?, &phi.apply(&e(x[1]))?, &phi.apply(&e(x[2]))?)?;
        let rhs = phi.apply(&rr.apply(&e(x[0]), &e(x[1]), &e(x[2]))?)?;
        Ok(lhs.get(&[x[3]]).try_sub(rhs.get(&[x[3]]))?)
    })?;
    report.push(Check::vanishing("R^r(phi X, phi Y)phi Z = phi R^r(X,Y)Z", &equiv));
    report.push(Check::vanishing("nabla^r R = 0", &conn.covariant_derivative(rl.tensor())?));
    report.push(Check::vanishing("nabla^r R^r = 0", &conn.covariant_derivative(rr.tensor())?));
    Ok(report)
}

/// Connection and curvature forms of a connection together with the
/// residuals of both structure equations, using
/// `dtheta(X,Y) = -theta([X,Y])/2` and `(a ^ b)(X,Y) = (a(X)b(Y) - a(Y)b(X))/2`.
#[derive(Clone, Debug)]
pub struct StructureEquations {
    /// `omega[j][k][l] = omega_j^k(e_l)`, where `nabla_X e_j = sum_k omega_j^k(X) e_k`.
    pub omega: Tensor,
    /// `big_omega[j][i][k][l] = Omega_j^i(e_k, e_l)`.
    pub big_omega: Tensor,
    /// `dtheta^k + sum_j omega_j^k ^ theta^j`, evaluated on `(e_a, e_b)`.
    pub first_residual: Tensor,
    /// `Omega_j^i(e_k, e_l) - R(e_k, e_l)e_j|_i / 2`.
    pub second_residual: Tensor,
}

impl StructureEquations {
    /// Coefficients of `omega_j^k` on the coframe.
    pub fn connection_form(&self, j: usize, k: usize) -> Vec<ParamScalar> {
        (0..self.omega.dim()).map(|l| self.omega.get(&[j, k, l]).clone()).collect()
    }

    /// Coefficient of `theta^k ^ theta^l` (`k < l`) in `Omega_j^i`.
    pub fn curvature_form_coefficient(&self, j: usize, i: usize, k: usize, l: usize) -> ParamScalar {
        self.big_omega.get(&[j, i, k, l]).scale(&q(2, 1))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "omega": self.omega.to_json(),
            "Omega": self.big_omega.to_json(),
            "first_residual": self.first_residual.to_json(),
            "second_residual": self.second_residual.to_json(),
        })
    }
}

/// Evaluate `d` of a 1-form with coefficients `f` on `(e_k, e_l)`.
fn d_one_form(conn: &Connection, f: &[ParamScalar], k: usize, l: usize) -> Result<ParamScalar> {
    let a = conn.algebra();
    let table = a.derivations();
    let mut acc = derive_opt(table, k, &f[l])?.try_sub(&derive_opt(table, l, &f[k])?)?;
    for (p, fp) in f.iter().enumerate() {
        acc = acc.try_sub(&a.c(k, l, p).try_mul(fp)?)?;
    }
    Ok(acc.scale(&q(1, 2)))
}

fn wedge(a: &[ParamScalar], b: &[ParamScalar], k: usize, l: usize) -> Result<ParamScalar> {
    Ok(a[k].try_mul(&b[l])?.try_sub(&a[l].try_mul(&b[k])?)?.scale(&q(1, 2)))
}

pub fn structure_equations(conn: &Connection) -> Result<StructureEquations> {
    let n = conn.dim();
    let omega = Tensor::from_fn(n, &ONE_TWO, |x| conn.gamma(x[2], x[0], x[1]).clone());
    let form = |j: usize, k: usize| -> Vec<ParamScalar> { (0..n).map(|l| omega.get(&[j, k, l]).clone()).collect() };
    let theta = |k: usize| -> Vec<ParamScalar> { (0..n).map(|l| ParamScalar::int(i64::from(k == l))).collect() };

    let first_residual = Tensor::try_from_fn(n, &[Slot::Up, Slot::Down, Slot::Down], |x| {
        let (k, a, b) = (x[0], x[1], x[2]);
        let mut acc = d_one_form(conn, &theta(k), a, b)?;
        for j in 0..n {
            acc = acc.try_add(&wedge(&form(j, k), &theta(j), a, b)?)?;
        }
        Ok(acc)
    })?;

    let big_omega = Tensor::try_from_fn(n, &[Slot::Down, Slot::Up, Slot::Down, Slot::Down], |x| {
        let (j, i, k, l) = (x[0], x[1], x[2], x[3]);
        let mut acc = d_one_form(conn, &form(j, i), k, l)?;
        for m in 0..n {
            acc = acc.try_add(&wedge(&form(m, i), &form(j, m), k, l)?)?;
        }
        Ok(acc)
    })?;

    let r = curvature(conn)?;
    let second_residual = Tensor::try_from_fn(n, &[Slot::Down, Slot::Up, Slot::Down, Slot::Down], |x| {
        let (j, i, k, l) = (x[0], x[1], x[2], x[3]);
        Ok(big_omega.get(x).try_sub(&r.component(k, l, j, i).scale(&q(1, 2)))?)
    })?;
    Ok(StructureEquations { omega, big_omega, first_residual, second_residual })
}
