//! Instantiated verification of the `A^r` family over a rational `(c, r)` grid.

use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::check::{Check, CheckReport};
use crate::connect::{levi_civita, okumura};
use crate::contact::{d_homothetic_deform, sasaki_check, standard_acs};
use crate::curv::{curvature, holomorphic_sectional, okumura_curvature_identities};
use crate::error::{Error, Result};
use crate::exactalg::{q, ParamScalar, Rational};
use crate::homog::{as_check, nomizu_reconstruct, tv_classify, HomogStructure, TVClass};
use crate::liealg::{sasakian_space_form, su2_round};
use crate::par::{self, Strategy};
use crate::tensor::Tensor;

/// Values `a, a+step, ...` up to and including `b`; empty when `a > b`.
/// A single rational is a one-point grid.
pub fn parse_grid(text: &str) -> Result<Vec<Rational>> {
    let bad = |what: &str| Error::Input(format!("grid `{text}`: {what}"));
    let parts: Vec<&str> = text.split(':').map(str::trim).collect();
    let num = |s: &str| Rational::from_str(s).map_err(|_| bad(&format!("`{s}` is not a rational")));
    match parts.as_slice() {
        [one] if !one.is_empty() => Ok(vec![num(one)?]),
        [a, b] | [a, b, _] => {
            let (a, b) = (num(a)?, num(b)?);
            let step = if parts.len() == 3 { num(parts[2])? } else { q(1, 1) };
            if step <= q(0, 1) {
                return Err(bad("step must be positive"));
            }
            let mut out = Vec::new();
            let mut x = a;
            while x <= b {
                out.push(x.clone());
                x += &step;
            }
            Ok(out)
        }
        _ => Err(bad("expected a:b:step")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PointStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepPoint {
    pub index: usize,
    pub c: String,
    pub r: String,
    pub status: PointStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tv_class: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holonomy_dim: Option<usize>,
    pub checks: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub c_grid: Vec<Rational>,
    pub r_grid: Vec<Rational>,
    pub alpha: Option<Rational>,
    pub points: Vec<SweepPoint>,
}

impl SweepReport {
    pub fn count(&self, status: PointStatus) -> usize {
        self.points.iter().filter(|p| p.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(PointStatus::Fail) == 0
    }

    /// Every skipped check or point with its reason.
    pub fn skip_list(&self) -> Vec<Value> {
        self.points
            .iter()
            .flat_map(|p| p.skipped.iter().map(move |why| json!({"c": p.c, "r": p.r, "reason": why})))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let grid = |g: &[Rational]| g.iter().map(Rational::to_string).collect::<Vec<_>>();
        json!({
            "c_grid": grid(&self.c_grid),
            "r_grid": grid(&self.r_grid),
            "alpha": self.alpha.as_ref().map(Rational::to_string),
            "total": self.points.len(),
            "passed": self.count(PointStatus::Pass),
            "failed": self.count(PointStatus::Fail),
            "skipped": self.count(PointStatus::Skip),
            "skip_list": self.skip_list(),
            "points": self.points,
        })
    }
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

/// Checks the `A^r` structure at one rational point.
pub fn evaluate_point(index: usize, c: &Rational, r: &Rational, alpha: Option<&Rational>) -> Result<SweepPoint> {
    let mut point = SweepPoint {
        index,
        c: c.to_string(),
        r: r.to_string(),
        status: PointStatus::Pass,
        tv_class: None,
        holonomy_dim: None,
        checks: 0,
        failures: Vec::new(),
        skipped: Vec::new(),
    };
    if let Some(a) = alpha {
        let tied = q(-3, 1) - a * a;
        if *c != tied {
            point.status = PointStatus::Skip;
            point.skipped.push(format!("c != -3 - alpha^2 = {tied}"));
            return Ok(point);
        }
    }
    let cs = ParamScalar::from_rational(c.clone());
    let rs = ParamScalar::from_rational(r.clone());
    let algebra = sasakian_space_form(&cs)?;
    let acs = standard_acs(&algebra)?;
    let mut report = CheckReport::new();

    let (conn, a) = okumura(&acs, &rs)?;
    for (name, t) in
        [("g", algebra.metric()), ("phi", acs.phi().clone()), ("eta", acs.eta().clone()), ("xi", acs.xi().clone())]
    {
        report.push(Check::vanishing(format!("nabla^r {name} = 0"), &conn.covariant_derivative(&t)?));
    }
    report.push(Check::vanishing("nabla^r A^r = 0", &conn.covariant_derivative(&a)?));
    report.extend(okumura_curvature_identities(&acs, &rs)?);

    let s = HomogStructure::new(&algebra, a)?;
    let as_report = as_check(&s, Some(&acs))?;
    report.push(Check::flag("A^r is Ambrose-Singer", as_report.passed(), "condition failed"));
    let class = tv_classify(&s)?.class;
    report.push(Check::flag("class", class == expected_class(r), class.label()));
    point.tv_class = Some(class.label());
    if as_report.passed() {
        let dim = nomizu_reconstruct(&s, Some(&acs))?.holonomy_dim;
        let expected = if *r == (c + q(1, 1)) / q(2, 1) { 0 } else { 1 };
        report.push(Check::flag("holonomy dimension", dim == expected, dim.to_string()));
        point.holonomy_dim = Some(dim);
    }

    if *c > q(-3, 1) {
        let d = d_homothetic_deform(&standard_acs(&su2_round()?)?, &cs)?;
        report.extend(d.checks);
        report.extend(sasaki_check(&d.acs)?);
        let rd = curvature(&levi_civita(&d.algebra)?)?;
        let h = holomorphic_sectional(&rd, &d.acs, &Tensor::basis(3, 0))?;
        report.push(Check::scalar("deformed H(e1) = c", &h.try_sub(&cs)?));
    } else {
        point.skipped.push("deformation needs c > -3".into());
    }

    point.checks = report.checks.len();
    point.failures = report.failures().into_iter().cloned().collect();
    if !point.failures.is_empty() {
        point.status = PointStatus::Fail;
    }
    Ok(point)
}

/// Evaluates every `(c, r)` point independently; points are numbered
/// `c`-major and reported in that order.
pub fn sweep(
    c_grid: &[Rational],
    r_grid: &[Rational],
    alpha: Option<&Rational>,
    strategy: Strategy,
) -> Result<SweepReport> {
    let grid: Vec<(usize, &Rational, &Rational)> = c_grid
        .iter()
        .flat_map(|c| r_grid.iter().map(move |r| (c, r)))
        .enumerate()
        .map(|(i, (c, r))| (i, c, r))
        .collect();
    let points = par::map(strategy, &grid, |(i, c, r)| evaluate_point(*i, c, r, alpha))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { c_grid: c_grid.to_vec(), r_grid: r_grid.to_vec(), alpha: alpha.cloned(), points })
}
