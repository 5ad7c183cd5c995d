//! Golden tables and structure files.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactalg::{parse_in, Context, ParamScalar};
use crate::homog::HomogStructure;
use crate::liealg::{catalog, CatalogParams, MetricLieAlgebra};
use crate::tensor::{Tensor, ONE_TWO};

/// Environment variable naming a directory that replaces the built-in fixtures.
pub const FIXTURES_ENV: &str = "HOMOG_FIXTURES";

const EMBEDDED: [(&str, &str); 4] = [
    ("space_form.json", include_str!("../../../fixtures/space_form.json")),
    ("nonunimodular.json", include_str!("../../../fixtures/nonunimodular.json")),
    ("sigma_structure.json", include_str!("../../../fixtures/sigma_structure.json")),
    ("minus_connection.json", include_str!("../../../fixtures/minus_connection.json")),
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixtureSource {
    dir: Option<PathBuf>,
}

impl FixtureSource {
    pub fn embedded() -> Self {
        FixtureSource { dir: None }
    }

    pub fn dir(path: impl Into<PathBuf>) -> Self {
        FixtureSource { dir: Some(path.into()) }
    }

    pub fn from_env() -> Self {
        match std::env::var_os(FIXTURES_ENV) {
            Some(p) if !p.is_empty() => FixtureSource::dir(p),
            _ => FixtureSource::embedded(),
        }
    }

    pub fn read(&self, name: &str) -> Result<String> {
        match &self.dir {
            Some(dir) => {
                let path = dir.join(name);
                std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
            }
            None => EMBEDDED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, text)| text.to_string())
                .ok_or_else(|| Error::Io(format!("no embedded fixture `{name}`"))),
        }
    }

    pub fn golden(&self, name: &str) -> Result<GoldenTable> {
        serde_json::from_str(&self.read(name)?).map_err(|e| Error::Input(format!("{name}: {e}")))
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Expected {
    Scalar(String),
    Vector(Vec<String>),
}

impl Expected {
    pub fn parse(&self, ctx: Context) -> Result<Vec<ParamScalar>> {
        let texts: Vec<&String> = match self {
            Expected::Scalar(s) => vec![s],
            Expected::Vector(v) => v.iter().collect(),
        };
        texts.into_iter().map(|t| Ok(parse_in(t, ctx)?)).collect()
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct GoldenEntry {
    pub anchor: String,
    pub quantity: String,
    /// 1-based frame indices.
    pub index: Vec<usize>,
    pub expected: Expected,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct GoldenTable {
    pub algebra: String,
    #[serde(default)]
    pub context: Option<Context>,
    pub entries: Vec<GoldenEntry>,
}

/// A `(1,2)` tensor on a catalog algebra:
/// `S[i][j][k]` is the `e_k` component of `S(e_i) e_j`.
#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct StructureFile {
    pub algebra: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<Vec<String>>>,
}

impl StructureFile {
    pub fn from_json(text: &str) -> Result<StructureFile> {
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
    }

    pub fn algebra(&self) -> Result<MetricLieAlgebra> {
        let mut params = CatalogParams::symbolic();
        for (k, v) in &self.params {
            let value = if v == "sym" { None } else { Some(crate::exactalg::parse(v)?) };
            match k.as_str() {
                "c" => params.c = value,
                "alpha" => params.alpha = value,
                other => return Err(Error::Input(format!("unknown parameter `{other}`"))),
            }
        }
        catalog(&self.algebra, &params)
    }

    pub fn structure(&self) -> Result<HomogStructure> {
        let algebra = self.algebra()?;
        let n = algebra.dim();
        let shape_ok = self.s.len() == n && self.s.iter().all(|row| row.len() == n && row.iter().all(|v| v.len() == n));
        if !shape_ok {
            return Err(Error::Input(format!("S must be a {n}x{n}x{n} array")));
        }
        let ctx = algebra.context();
        let t = Tensor::try_from_fn(n, &ONE_TWO, |x| Ok(parse_in(&self.s[x[0]][x[1]][x[2]], ctx)?))?;
        HomogStructure::new(&algebra, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse() {
        let src = FixtureSource::embedded();
        for name in ["space_form.json", "nonunimodular.json", "sigma_structure.json"] {
            assert!(!src.golden(name).unwrap().entries.is_empty());
        }
        let s = StructureFile::from_json(&src.read("minus_connection.json").unwrap()).unwrap();
        assert_eq!(s.structure().unwrap().dim(), 3);
    }

    #[test]
    fn missing_directory_is_io_error() {
        let src = FixtureSource::dir("/nonexistent/fixtures");
        assert!(matches!(src.read("space_form.json"), Err(Error::Io(_))));
    }
}
