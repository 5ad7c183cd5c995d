//! Parameter assignments given as `name=value` pairs, where a value is a
//! rational or the token `sym`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{Assignment, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Sym,
    Value(Rational),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Sym => f.write_str("sym"),
            ParamValue::Value(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for ParamValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "sym" {
            return Ok(ParamValue::Sym);
        }
        Rational::from_str(s)
            .map(ParamValue::Value)
            .map_err(|_| Error::Input(format!("`{s}` is neither `sym` nor a rational")))
    }
}

/// Indeterminates tied together by a relation; their values must be all
/// symbolic or all rational.
pub const RELATION_GROUPS: [&[Var]; 2] = [&[Var::Alpha, Var::S1, Var::S2], &[Var::C, Var::Alpha]];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    values: BTreeMap<Var, ParamValue>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parse `alpha=5,s1=3,s2=4`; repeated names keep the last value.
    pub fn parse(text: &str) -> Result<Params> {
        let mut p = Params::new();
        p.extend_from(text)?;
        Ok(p)
    }

    pub fn extend_from(&mut self, text: &str) -> Result<()> {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) =
                item.split_once('=').ok_or_else(|| Error::Input(format!("expected name=value, got `{item}`")))?;
            let var = Var::from_name(name.trim()).ok_or_else(|| Error::Input(format!("unknown parameter `{name}`")))?;
            self.values.insert(var, value.parse()?);
        }
        Ok(())
    }

    pub fn set(&mut self, var: Var, value: ParamValue) {
        self.values.insert(var, value);
    }

    pub fn get(&self, var: Var) -> Option<&Rational> {
        match self.values.get(&var) {
            Some(ParamValue::Value(v)) => Some(v),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Rational values as an assignment, after rejecting mixed relation
    /// groups and relation violations.
    pub fn assignment(&self) -> Result<Assignment> {
        for group in RELATION_GROUPS {
            let sym = group.iter().any(|v| self.values.get(v) == Some(&ParamValue::Sym));
            let rational = group.iter().any(|v| self.get(*v).is_some());
            if sym && rational {
                let names: Vec<&str> = group.iter().map(|v| v.name()).collect();
                return Err(Error::MixedParameters(format!("{{{}}}", names.join(", "))));
            }
        }
        let mut a = Assignment::new();
        for (v, value) in &self.values {
            if let ParamValue::Value(q) = value {
                a.insert(*v, q.clone());
            }
        }
        a.check_relations()?;
        Ok(a)
    }

    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> =
            self.values.iter().map(|(k, v)| (k.name().to_string(), json!(v.to_string()))).collect();
        Value::Object(map)
    }
}
