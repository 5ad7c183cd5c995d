use std::fmt;

use serde_json::{json, Value};

use super::{
    as_check, nomizu_reconstruct, sigma_branches, sigma_structure, tilde_frame, tv_classify, HomogStructure, TVClass,
};
use crate::check::{Check, CheckReport};
use crate::connect::{levi_civita, okumura_tensor, sigma_tensor};
use crate::contact::{standard_acs, AlmostContactStructure};
use crate::curv::curvature;
use crate::error::Result;
use crate::exactalg::{q, ParamScalar, Rational};
use crate::liealg::{heisenberg, nonunimodular, sasakian_space_form};
use crate::par::{self, Strategy};
use crate::tensor::Tensor;

/// How the curvature parameter `c` is treated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CMode {
    /// Symbolic `c`, read as `c >= -3`.
    Generic,
    Rational(Rational),
    /// `c = -3 - alpha^2`.
    Alpha,
}

impl CMode {
    pub fn label(&self) -> String {
        match self {
            CMode::Generic => "generic".into(),
            CMode::Rational(v) => format!("c={v}"),
            CMode::Alpha => "alpha".into(),
        }
    }

    pub fn c_value(&self) -> ParamScalar {
        match self {
            CMode::Generic => ParamScalar::c(),
            CMode::Rational(v) => ParamScalar::from_rational(v.clone()),
            CMode::Alpha => ParamScalar::c_in_alpha(),
        }
    }

    /// Whether `c + 3 < 0`.
    pub fn below_heisenberg(&self) -> bool {
        match self {
            CMode::Generic => false,
            CMode::Rational(v) => *v < q(-3, 1),
            CMode::Alpha => true,
        }
    }
}

impl fmt::Display for CMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `A^r` evaluated at one rational `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct RSample {
    pub r: Rational,
    pub ambrose_singer: bool,
    pub class: TVClass,
    pub holonomy_dim: usize,
}

impl RSample {
    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r.to_string(),
            "ambrose_singer": self.ambrose_singer,
            "tv_class": self.class.label(),
            "holonomy_dim": self.holonomy_dim,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuliReport {
    pub mode: CMode,
    pub c: ParamScalar,
    pub checks: CheckReport,
    pub samples: Vec<RSample>,
    /// Rows of the classification: each admissible family with its holonomy.
    pub cases: Vec<Value>,
    pub sigma: Value,
}

impl ModuliReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "c_mode": self.mode.label(),
            "c": self.c.to_string(),
            "cases": self.cases,
            "samples": self.samples.iter().map(RSample::to_json).collect::<Vec<_>>(),
            "sigma": self.sigma,
            "checks": self.checks.checks,
        })
    }
}

pub const DEFAULT_R_SAMPLES: [i64; 5] = [-2, -1, 0, 1, 2];

pub fn moduli_report(mode: &CMode) -> Result<ModuliReport> {
    let samples: Vec<Rational> = DEFAULT_R_SAMPLES.iter().map(|&r| q(r, 1)).collect();
    moduli_report_with(mode, &samples, Strategy::default())
}

fn okumura_structure(acs: &AlmostContactStructure, r: &ParamScalar) -> Result<HomogStructure> {
    HomogStructure::new(acs.algebra(), okumura_tensor(acs, r)?)
}

fn sample(acs: &AlmostContactStructure, r: &Rational) -> Result<RSample> {
    let s = okumura_structure(acs, &ParamScalar::from_rational(r.clone()))?;
    let ambrose_singer = as_check(&s, Some(acs))?.passed();
    let class = tv_classify(&s)?.class;
    let holonomy_dim = if ambrose_singer { nomizu_reconstruct(&s, Some(acs))?.holonomy_dim } else { 0 };
    Ok(RSample { r: r.clone(), ambrose_singer, class, holonomy_dim })
}

fn expected_class(r: &Rational) -> TVClass {
    if *r == q(-2, 1) {
        TVClass::T2
    } else if *r == q(1, 1) {
        TVClass::T3
    } else {
        TVClass::T2T3
    }
}

/// Assembles the classification of homogeneous contact Riemannian
/// structures on the Sasakian space form selected by `mode`.
pub fn moduli_report_with(mode: &CMode, r_samples: &[Rational], strategy: Strategy) -> Result<ModuliReport> {
    let c = mode.c_value();
    let algebra = sasakian_space_form(&c)?;
    let acs = standard_acs(&algebra)?;
    let mut checks = CheckReport::new();

    let family = okumura_structure(&acs, &ParamScalar::r())?;
    let fam_as = as_check(&family, Some(&acs))?;
    checks.push(Check::flag("A^r is Ambrose-Singer for symbolic r", fam_as.passed(), "condition failed"));
    let fam_class = tv_classify(&family)?;
    checks.push(Check::flag(
        "A^r has class T2+T3 for symbolic r",
        fam_class.class == TVClass::T2T3,
        fam_class.class.label(),
    ));
    let fam_l = nomizu_reconstruct(&family, Some(&acs))?;
    checks.push(Check::flag(
        "A^r holonomy dimension 1 for symbolic r",
        fam_l.holonomy_dim == 1,
        fam_l.holonomy_dim.to_string(),
    ));

    let r0 = c.try_add(&ParamScalar::one())?.scale(&q(1, 2));
    let coset = okumura_structure(&acs, &r0)?;
    let coset_l = nomizu_reconstruct(&coset, Some(&acs))?;
    checks.push(Check::flag(
        "A^r holonomy dimension 0 at r = (c+1)/2",
        coset_l.holonomy_dim == 0,
        coset_l.holonomy_dim.to_string(),
    ));
    checks.push(Check::vanishing("nabla + A^r = 0 at r = (c+1)/2", coset.connection()?.coefficients()));

    let mut r_list: Vec<Rational> = r_samples.to_vec();
    if let Some(v) = r0.as_rational() {
        if !r_list.contains(&v) {
            r_list.push(v);
        }
    }
    let samples = par::map(strategy, &r_list, |r| sample(&acs, r)).into_iter().collect::<Result<Vec<_>>>()?;
    let r0_rational = r0.as_rational();
    let bad: Vec<String> = samples
        .iter()
        .filter(|s| {
            let dim = if Some(&s.r) == r0_rational.as_ref() { 0 } else { 1 };
            !s.ambrose_singer || s.class != expected_class(&s.r) || s.holonomy_dim != dim
        })
        .map(|s| s.r.to_string())
        .collect();
    checks.push(Check::flag("rational r samples match the family", bad.is_empty(), bad.join(", ")));

    if *mode == CMode::Rational(q(-3, 1)) {
        checks.push(Check::equal(
            "c = -3 gives the Heisenberg algebra",
            algebra.structure_constants(),
            heisenberg()?.structure_constants(),
        ));
    }

    let off = sigma_branches(&ParamScalar::int(2), mode)?;
    checks.push(Check::flag(
        "sigma3 = 2 gives only the trivial branch",
        off.branches == vec![super::SigmaBranch::Trivial],
        format!("{} branches", off.branches.len()),
    ));
    let on = sigma_branches(&ParamScalar::one(), mode)?;
    checks.push(Check::flag(
        "sigma3 = 1 has a circle branch iff c < -3",
        on.has_circle() == mode.below_heisenberg(),
        format!("circle: {}", on.has_circle()),
    ));
    let mut sigma = json!({"sigma3=2": off.to_json(), "sigma3=1": on.to_json()});

    let mut cases = vec![json!({
        "family": "A^r",
        "parameter": "r",
        "holonomy_dim": 1,
        "exception": {"r": r0.to_string(), "holonomy_dim": 0, "connection": "Cartan-Schouten (-)"},
    })];

    if *mode == CMode::Alpha {
        let (s, sacs) = sigma_structure(&algebra)?;
        let report = as_check(&s, Some(&sacs))?;
        checks.push(Check::flag(
            "sigma structure is Ambrose-Singer with nabla~ phi = 0",
            report.passed(),
            report.conditions.failures().iter().map(|c| c.name.clone()).collect::<Vec<_>>().join(", "),
        ));
        let flat = curvature(&s.connection()?)?;
        checks.push(Check::vanishing("sigma structure is flat", flat.tensor()));
        let l = nomizu_reconstruct(&s, Some(&sacs))?;
        checks.push(Check::flag(
            "sigma structure holonomy dimension 0",
            l.holonomy_dim == 0,
            l.holonomy_dim.to_string(),
        ));
        let tilde = l.to_lie_algebra("reconstructed")?.change_frame(&tilde_frame()?)?;
        let target = nonunimodular(&ParamScalar::alpha())?;
        checks.push(Check::equal(
            "tilde frame brackets equal the non-unimodular algebra",
            tilde.structure_constants(),
            target.structure_constants(),
        ));
        let nacs = standard_acs(&target)?;
        let minus = levi_civita(&target)?.coefficients().neg();
        let via_sigma = sigma_tensor(
            &nacs,
            &Tensor::covector(vec![ParamScalar::zero(), ParamScalar::alpha(), ParamScalar::one()]),
        )?;
        checks.push(Check::equal(
            "(-)-connection difference = sigma tensor for alpha theta^2 + eta",
            &minus,
            &via_sigma,
        ));
        let minus_s = HomogStructure::new(&target, minus)?;
        let minus_class = tv_classify(&minus_s)?;
        checks.push(Check::flag(
            "(-)-connection structure has strict class T1+T2+T3",
            minus_class.class == TVClass::T1T2T3,
            minus_class.class.label(),
        ));
        sigma["reconstruction"] = l.to_json();
        cases.push(json!({
            "family": "Cartan-Schouten (-)-connection",
            "algebra": target.name(),
            "holonomy_dim": 0,
            "sigma": "s1 theta^1 + s2 theta^2 + theta^3, s1^2 + s2^2 = alpha^2",
        }));
    }

    Ok(ModuliReport { mode: mode.clone(), c, checks, samples, cases, sigma })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_mode() {
        let report = moduli_report(&CMode::Generic).unwrap();
        assert!(report.passed(), "{:?}", report.checks.failures());
        assert_eq!(report.cases.len(), 1);
    }

    #[test]
    fn heisenberg_mode() {
        let report = moduli_report(&CMode::Rational(q(-3, 1))).unwrap();
        assert!(report.passed(), "{:?}", report.checks.failures());
        assert!(report.samples.iter().any(|s| s.r == q(-1, 1) && s.holonomy_dim == 0));
    }

    #[test]
    fn alpha_mode() {
        let report = moduli_report(&CMode::Alpha).unwrap();
        assert!(report.passed(), "{:?}", report.checks.failures());
        assert_eq!(report.cases.len(), 2);
    }

    #[test]
    fn strategies_agree() {
        let rs: Vec<Rational> = (-3..=3).map(|r| q(r, 1)).collect();
        let a = moduli_report_with(&CMode::Rational(q(1, 1)), &rs, Strategy::Sequential).unwrap();
        let b = moduli_report_with(&CMode::Rational(q(1, 1)), &rs, Strategy::Parallel).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }
}
