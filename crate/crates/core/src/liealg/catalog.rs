use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::exactalg::{Context, ParamScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogEntry {
    SasakianSpaceForm,
    Nonunimodular,
    Heisenberg,
    Su2Round,
    Ga1,
    Ga1PlusR,
}

impl CatalogEntry {
    pub const ALL: [CatalogEntry; 6] = [
        CatalogEntry::SasakianSpaceForm,
        CatalogEntry::Nonunimodular,
        CatalogEntry::Heisenberg,
        CatalogEntry::Su2Round,
        CatalogEntry::Ga1,
        CatalogEntry::Ga1PlusR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogEntry::SasakianSpaceForm => "sasakian_space_form",
            CatalogEntry::Nonunimodular => "nonunimodular",
            CatalogEntry::Heisenberg => "heisenberg",
            CatalogEntry::Su2Round => "su2_round",
            CatalogEntry::Ga1 => "ga1",
            CatalogEntry::Ga1PlusR => "ga1_plus_r",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CatalogEntry::SasakianSpaceForm => "Sasakian space form of holomorphic sectional curvature c",
            CatalogEntry::Nonunimodular => "non-unimodular Sasakian algebra with c = -3 - alpha^2",
            CatalogEntry::Heisenberg => "Heisenberg algebra, c = -3",
            CatalogEntry::Su2Round => "su(2) with the round metric, c = 1",
            CatalogEntry::Ga1 => "2-dimensional affine algebra, hyperbolic plane of curvature -alpha^2",
            CatalogEntry::Ga1PlusR => "direct sum of the affine algebra with a central line",
        }
    }

    /// Parameters the entry accepts.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            CatalogEntry::SasakianSpaceForm => &["c", "alpha"],
            CatalogEntry::Nonunimodular | CatalogEntry::Ga1 | CatalogEntry::Ga1PlusR => &["alpha"],
            CatalogEntry::Heisenberg | CatalogEntry::Su2Round => &[],
        }
    }

    /// The entries carrying a left-invariant Sasakian structure.
    pub fn is_sasakian(self) -> bool {
        matches!(
            self,
            CatalogEntry::SasakianSpaceForm
                | CatalogEntry::Nonunimodular
                | CatalogEntry::Heisenberg
                | CatalogEntry::Su2Round
        )
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogEntry::ALL.into_iter().find(|e| e.name() == s).ok_or_else(|| Error::UnknownCatalogEntry(s.to_string()))
    }
}

/// Optional parameter values; anything left unset stays symbolic.
#[derive(Clone, Debug, Default)]
pub struct CatalogParams {
    pub c: Option<ParamScalar>,
    pub alpha: Option<ParamScalar>,
}

impl CatalogParams {
    pub fn symbolic() -> Self {
        Self::default()
    }

    pub fn c(c: ParamScalar) -> Self {
        CatalogParams { c: Some(c), alpha: None }
    }

    pub fn alpha(alpha: ParamScalar) -> Self {
        CatalogParams { c: None, alpha: Some(alpha) }
    }
}

/// Look up a catalog entry by name.
pub fn catalog(name: &str, params: &CatalogParams) -> Result<MetricLieAlgebra> {
    let entry: CatalogEntry = name.parse()?;
    let alpha = || params.alpha.clone().unwrap_or_else(ParamScalar::alpha);
    let reject_c = || match params.c {
        Some(_) => Err(Error::Invalid(format!("`{name}` does not take the parameter c"))),
        None => Ok(()),
    };
    match entry {
        CatalogEntry::SasakianSpaceForm => {
            let c = match (&params.c, &params.alpha) {
                (Some(_), Some(_)) => {
                    return Err(Error::Invalid("give either c or alpha, not both".into()));
                }
                (Some(c), None) => c.clone(),
                (None, Some(a)) => alpha_context_c(a)?,
                (None, None) => ParamScalar::c(),
            };
            sasakian_space_form(&c)
        }
        CatalogEntry::Nonunimodular => {
            reject_c()?;
            nonunimodular(&alpha())
        }
        CatalogEntry::Heisenberg => {
            reject_c()?;
            heisenberg()
        }
        CatalogEntry::Su2Round => {
            reject_c()?;
            su2_round()
        }
        CatalogEntry::Ga1 => {
            reject_c()?;
            ga1(&alpha())
        }
        CatalogEntry::Ga1PlusR => {
            reject_c()?;
            ga1_plus_r(&alpha())
        }
    }
}

fn alpha_context_c(alpha: &ParamScalar) -> Result<ParamScalar> {
    check_alpha(alpha)?;
    Ok(ParamScalar::c_in_alpha().substitute(crate::exactalg::Var::Alpha, alpha)?)
}

fn check_alpha(alpha: &ParamScalar) -> Result<()> {
    if !alpha.is_unit() {
        return Err(Error::Invalid(format!("alpha must be a nonzero unit, got `{alpha}`")));
    }
    Ok(())
}

fn vec3(a: ParamScalar, b: ParamScalar, c: ParamScalar) -> Vec<ParamScalar> {
    vec![a, b, c]
}

fn context_of(values: &[&ParamScalar]) -> Context {
    if values.iter().any(|v| v.context() == Some(Context::Alpha)) {
        Context::Alpha
    } else {
        Context::Generic
    }
}

/// `[e1,e2] = 2 e3`, `[e2,e3] = ((c+3)/2) e1`, `[e3,e1] = ((c+3)/2) e2`.
pub fn sasakian_space_form(c: &ParamScalar) -> Result<MetricLieAlgebra> {
    let k = c.try_add(&ParamScalar::int(3))?.scale(&crate::exactalg::q(1, 2));
    let z = ParamScalar::zero;
    let ctx = context_of(&[c]);
    MetricLieAlgebra::from_brackets(
        CatalogEntry::SasakianSpaceForm.name(),
        3,
        &[
            ((0, 1), vec3(z(), z(), ParamScalar::int(2))),
            ((1, 2), vec3(k.clone(), z(), z())),
            ((0, 2), vec3(z(), -&k, z())),
        ],
        ctx,
    )
}

/// `[e1,e2] = alpha e2 + 2 e3`, `[e2,e3] = [e3,e1] = 0`.
pub fn nonunimodular(alpha: &ParamScalar) -> Result<MetricLieAlgebra> {
    check_alpha(alpha)?;
    let z = ParamScalar::zero;
    MetricLieAlgebra::from_brackets(
        CatalogEntry::Nonunimodular.name(),
        3,
        &[((0, 1), vec3(z(), alpha.clone(), ParamScalar::int(2)))],
        Context::Alpha,
    )
}

pub fn heisenberg() -> Result<MetricLieAlgebra> {
    Ok(sasakian_space_form(&ParamScalar::int(-3))?.with_name(CatalogEntry::Heisenberg.name()))
}

pub fn su2_round() -> Result<MetricLieAlgebra> {
    Ok(sasakian_space_form(&ParamScalar::int(1))?.with_name(CatalogEntry::Su2Round.name()))
}

/// `[e1,e2] = -alpha e1`, read off from the matrix basis
/// `e1 = [[0, alpha], [0, 0]]`, `e2 = [[alpha, 0], [0, 0]]`.
pub fn ga1(alpha: &ParamScalar) -> Result<MetricLieAlgebra> {
    check_alpha(alpha)?;
    MetricLieAlgebra::from_brackets(
        CatalogEntry::Ga1.name(),
        2,
        &[((0, 1), vec![-alpha, ParamScalar::zero()])],
        Context::Alpha,
    )
}

/// `ga1` with a central third direction.
pub fn ga1_plus_r(alpha: &ParamScalar) -> Result<MetricLieAlgebra> {
    check_alpha(alpha)?;
    let z = ParamScalar::zero;
    MetricLieAlgebra::from_brackets(
        CatalogEntry::Ga1PlusR.name(),
        3,
        &[((0, 1), vec3(-alpha, z(), z()))],
        Context::Alpha,
    )
}
