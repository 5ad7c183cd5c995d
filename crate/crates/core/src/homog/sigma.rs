use serde_json::{json, Value};

use super::{CMode, HomogStructure};
use crate::connect::{sigma_tensor, Connection};
use crate::contact::AlmostContactStructure;
use crate::error::{Error, Result};
use crate::exactalg::{derive_opt, q, AlgError, Context, DerivationTable, FunctionVar, Monomial, ParamScalar, Var};
use crate::liealg::{sasakian_space_form, FrameChange, MetricLieAlgebra};
use crate::tensor::{Tensor, ONE_TWO};

/// A family of solutions `(s1, s2)` of the sigma system.
#[derive(Clone, Debug, PartialEq)]
pub enum SigmaBranch {
    /// `s1 = s2 = 0`.
    Trivial,
    /// `s1^2 + s2^2 = radius_squared`, with `radius_squared > 0`.
    Circle { radius_squared: ParamScalar },
}

impl SigmaBranch {
    pub fn to_json(&self) -> Value {
        match self {
            SigmaBranch::Trivial => json!({"branch": "trivial", "equations": ["s1 = 0", "s2 = 0"]}),
            SigmaBranch::Circle { radius_squared } => json!({
                "branch": "circle",
                "equations": [format!("s1^2 + s2^2 = {radius_squared}")],
            }),
        }
    }
}

/// One integrability residual `([e_a, e_b] - sum_p C_ab^p e_p)(s_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaResidual {
    pub pair: (usize, usize),
    pub function: FunctionVar,
    pub value: ParamScalar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SigmaBranches {
    pub sigma3: ParamScalar,
    pub mode: CMode,
    /// Residuals with `s1`, `s2` unconstrained.
    pub residuals: Vec<SigmaResidual>,
    /// `-(c + 1 + 2 sigma3)`, the only possible value of `s1^2 + s2^2` off the trivial branch.
    pub radius_squared: ParamScalar,
    /// Whether the residuals vanish modulo `s1^2 + s2^2 = radius_squared`.
    pub circle_consistent: bool,
    pub branches: Vec<SigmaBranch>,
}

impl SigmaBranches {
    pub fn has_circle(&self) -> bool {
        self.branches.iter().any(|b| matches!(b, SigmaBranch::Circle { .. }))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "sigma3": self.sigma3.to_string(),
            "c_mode": self.mode.label(),
            "residuals": self.residuals.iter().map(|r| json!({
                "bracket": format!("[e{},e{}]", r.pair.0 + 1, r.pair.1 + 1),
                "function": match r.function { FunctionVar::S1 => "s1", FunctionVar::S2 => "s2" },
                "value": r.value.to_string(),
            })).collect::<Vec<_>>(),
            "radius_squared": self.radius_squared.to_string(),
            "circle_consistent": self.circle_consistent,
            "branches": self.branches.iter().map(SigmaBranch::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Derivations `e_k s1 = s2 w_k`, `e_k s2 = -s1 w_k` with
/// `w = (s1, s2, sigma3 + (c+1)/2)`, in the generic context.
fn system_table(sigma3: &ParamScalar, c: &ParamScalar) -> Result<DerivationTable> {
    let s1 = Context::Generic.var(Var::S1)?;
    let s2 = Context::Generic.var(Var::S2)?;
    let w3 = sigma3.try_add(&c.try_add(&ParamScalar::one())?.scale(&q(1, 2)))?;
    let w = [s1.clone(), s2.clone(), w3];
    let rows = w.iter().map(|wk| Ok([s2.try_mul(wk)?, -&s1.try_mul(wk)?])).collect::<Result<Vec<_>>>()?;
    Ok(DerivationTable::new(rows)?)
}

/// Rewrite `s2^2 = rho - s1^2` until `s2` has degree at most one.
fn reduce_on_circle(p: &ParamScalar, rho: &ParamScalar) -> Result<ParamScalar> {
    let s1 = Context::Generic.var(Var::S1)?;
    let s2_sq = rho.try_sub(&s1.pow(2))?;
    let mut acc = ParamScalar::zero();
    for (m, coef) in p.terms() {
        let e = m.exp(Var::S2);
        let mut base = Monomial::ONE;
        for v in Var::ALL {
            let k = if v == Var::S2 { e % 2 } else { m.exp(v) };
            if k != 0 {
                base = base.times(Monomial::var(v, k));
            }
        }
        let term = ParamScalar::monomial_in(p.context(), base, coef.clone()).try_mul(&s2_sq.pow((e / 2) as u32))?;
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

/// `Some(true)` when `rho > 0`, `Some(false)` when `rho <= 0`, `None` if undecided.
fn positive(rho: &ParamScalar, mode: &CMode) -> Option<bool> {
    if let Some(v) = rho.as_rational() {
        return Some(v > q(0, 1));
    }
    match mode {
        CMode::Alpha => {
            let a2 = ParamScalar::alpha().pow(2);
            rho.to_alpha().rational_multiple_of(&a2).map(|k| k > q(0, 1))
        }
        // symbolic c is taken to satisfy c >= -3
        CMode::Generic => {
            let shift = ParamScalar::c().try_add(&ParamScalar::int(3)).ok()?;
            rho.rational_multiple_of(&shift).and_then(|k| (k < q(0, 1)).then_some(false))
        }
        CMode::Rational(_) => None,
    }
}

/// Solves the integrability conditions of the sigma system for constant
/// `sigma3`.
pub fn sigma_branches(sigma3: &ParamScalar, mode: &CMode) -> Result<SigmaBranches> {
    if !sigma3.is_parameter_only() || sigma3.context() == Some(Context::Alpha) {
        return Err(Error::Alg(AlgError::ContextMismatch));
    }
    let c = match mode {
        CMode::Rational(v) => ParamScalar::from_rational(v.clone()),
        CMode::Generic | CMode::Alpha => ParamScalar::c(),
    };
    let algebra = sasakian_space_form(&c)?;
    let table = system_table(sigma3, &c)?;
    let n = 3;
    let mut residuals = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for fv in [FunctionVar::S1, FunctionVar::S2] {
                let f = Context::Generic.var(fv.var())?;
                let ab = table.derive(a, &table.derive(b, &f)?)?;
                let ba = table.derive(b, &table.derive(a, &f)?)?;
                let mut value = ab.try_sub(&ba)?;
                for p in 0..n {
                    let term = algebra.c(a, b, p).try_mul(&table.derive(p, &f)?)?;
                    value = value.try_sub(&term)?;
                }
                residuals.push(SigmaResidual { pair: (a, b), function: fv, value });
            }
        }
    }
    let mut radius_squared = c.try_add(&ParamScalar::one())?.try_add(&sigma3.scale(&q(2, 1)))?.scale(&q(-1, 1));
    let mut circle_consistent = true;
    for r in &residuals {
        if !reduce_on_circle(&r.value, &radius_squared)?.is_zero() {
            circle_consistent = false;
        }
    }
    if *mode == CMode::Alpha {
        radius_squared = radius_squared.to_alpha();
    }
    let trivial_ok = residuals.iter().all(|r| {
        r.value
            .substitute(Var::S1, &ParamScalar::zero())
            .and_then(|v| v.substitute(Var::S2, &ParamScalar::zero()))
            .map(|v| v.is_zero())
            .unwrap_or(false)
    });
    let mut branches = Vec::new();
    if trivial_ok {
        branches.push(SigmaBranch::Trivial);
    }
    if circle_consistent && positive(&radius_squared, mode) == Some(true) {
        branches.push(SigmaBranch::Circle { radius_squared: radius_squared.clone() });
    }
    Ok(SigmaBranches {
        sigma3: sigma3.clone(),
        mode: mode.clone(),
        residuals,
        radius_squared,
        circle_consistent,
        branches,
    })
}

/// Derivations of `s1`, `s2` on the circle branch `sigma3 = 1`.
pub fn sigma_derivations() -> Result<DerivationTable> {
    let (s1, s2) = (ParamScalar::s1(), ParamScalar::s2());
    let half_a2 = ParamScalar::alpha().pow(2).scale(&q(1, 2));
    let rows = vec![
        [s1.try_mul(&s2)?, -&s1.pow(2)],
        [s2.pow(2), -&s1.try_mul(&s2)?],
        [-&half_a2.try_mul(&s2)?, half_a2.try_mul(&s1)?],
    ];
    Ok(DerivationTable::new(rows)?)
}

/// The structure with `sigma = s1 theta^1 + s2 theta^2 + theta^3` on the
/// Sasakian space form in the alpha context, with the derivation table of
/// `s1`, `s2` installed on the returned algebra.
pub fn sigma_structure(a: &MetricLieAlgebra) -> Result<(HomogStructure, AlmostContactStructure)> {
    if a.context() != Context::Alpha {
        return Err(Error::Alg(AlgError::ContextMismatch));
    }
    let reference = sasakian_space_form(&ParamScalar::c_in_alpha())?;
    if a.structure_constants() != reference.structure_constants() {
        return Err(Error::Invalid(format!("{} is not the Sasakian space form with c = -3 - alpha^2", a.name())));
    }
    let algebra = a.clone().with_derivations(sigma_derivations()?)?;
    let acs = AlmostContactStructure::standard(&algebra)?;
    let sigma = Tensor::covector(vec![ParamScalar::s1(), ParamScalar::s2(), ParamScalar::one()]);
    let s = HomogStructure::new(&algebra, sigma_tensor(&acs, &sigma)?)?;
    Ok((s, acs))
}

/// Rows `(s2, -s1, 0)/alpha`, `(s1, s2, 0)/alpha`, `(0, 0, 1)`.
pub fn tilde_frame() -> Result<FrameChange> {
    let inv = ParamScalar::alpha().inverse()?;
    let (s1, s2) = (ParamScalar::s1(), ParamScalar::s2());
    let z = ParamScalar::zero;
    Ok(FrameChange::orthonormal(vec![
        vec![s2.try_mul(&inv)?, -&s1.try_mul(&inv)?, z()],
        vec![s1.try_mul(&inv)?, s2.try_mul(&inv)?, z()],
        vec![z(), z(), ParamScalar::one()],
    ]))
}

/// `nabla_{e'_i} e'_j` in components along the old frame, for a frame
/// `e'_a = sum_i f[a][i] e_i` whose coefficients may be functions.
pub fn frame_derivatives(conn: &Connection, f: &FrameChange) -> Result<Tensor> {
    let n = conn.dim();
    let m = f.matrix();
    let table = conn.algebra().derivations();
    Tensor::try_from_fn(n, &ONE_TWO, |x| {
        let (i, j, k) = (x[0], x[1], x[2]);
        let mut acc = ParamScalar::zero();
        for a in 0..n {
            if m[i][a].is_zero() {
                continue;
            }
            let mut inner = derive_opt(table, a, &m[j][k])?;
            for b in 0..n {
                inner = inner.try_add(&m[j][b].try_mul(conn.gamma(a, b, k))?)?;
            }
            acc = acc.try_add(&m[i][a].try_mul(&inner)?)?;
        }
        Ok(acc)
    })
}
