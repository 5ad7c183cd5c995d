//! Pass/fail records for identity checks.

use serde::Serialize;

use crate::exactalg::ParamScalar;
use crate::tensor::{index_label, Tensor};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Offending {
    pub index: String,
    pub value: String,
}

/// One identity that must hold; `offending` lists nonzero residual components.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub offending: Vec<Offending>,
}

/// At most this many offending components are recorded per check.
pub const MAX_OFFENDING: usize = 8;

impl Check {
    /// Passes iff every component of `residual` is zero.
    pub fn vanishing(name: impl Into<String>, residual: &Tensor) -> Check {
        let offending: Vec<Offending> = residual
            .nonzero()
            .into_iter()
            .take(MAX_OFFENDING)
            .map(|(idx, v)| Offending { index: index_label(&idx), value: v.to_string() })
            .collect();
        Check { name: name.into(), passed: offending.is_empty(), offending }
    }

    pub fn scalar(name: impl Into<String>, residual: &ParamScalar) -> Check {
        let offending = if residual.is_zero() {
            Vec::new()
        } else {
            vec![Offending { index: String::new(), value: residual.to_string() }]
        };
        Check { name: name.into(), passed: offending.is_empty(), offending }
    }

    /// Compare two tensors componentwise.
    pub fn equal(name: impl Into<String>, actual: &Tensor, expected: &Tensor) -> Check {
        match actual.try_sub(expected) {
            Ok(d) => Check::vanishing(name, &d),
            Err(e) => Check::failed(name, e.to_string()),
        }
    }

    pub fn flag(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        let offending =
            if passed { Vec::new() } else { vec![Offending { index: String::new(), value: detail.into() }] };
        Check { name: name.into(), passed, offending }
    }

    pub fn failed(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check::flag(name, false, detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}
