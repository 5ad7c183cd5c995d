//! Homogeneous (contact) Riemannian structures: Ambrose-Singer conditions,
//! Tricerri-Vanhecke classes, the sigma system, Nomizu reconstruction and
//! reduction along the Reeb fibration.

mod classify;
mod moduli;
mod nomizu;
mod reduce;
mod sigma;

pub use classify::{tv_classify, TVClass, TVClassification};
pub use moduli::{moduli_report, moduli_report_with, CMode, ModuliReport, RSample, DEFAULT_R_SAMPLES};
pub use nomizu::{nomizu_reconstruct, ReconstructedAlgebra};
pub use reduce::{boothby_wang_reduce, h2_structures, h2_t1_structure};
pub use sigma::{
    frame_derivatives, sigma_branches, sigma_derivations, sigma_structure, tilde_frame, SigmaBranch, SigmaBranches,
    SigmaResidual,
};

use std::sync::Arc;

use serde_json::{json, Value};

use crate::check::{Check, CheckReport};
use crate::connect::{levi_civita, Connection};
use crate::contact::AlmostContactStructure;
use crate::curv::{curvature, ricci};
use crate::error::{Error, Result};
use crate::liealg::MetricLieAlgebra;
use crate::tensor::{Slot, Tensor, ONE_TWO};

/// A `(1,2)` tensor `S` with `S_flat(X,Y,Z) = g(S(X)Y, Z)` skew in `(Y,Z)`.
/// Layout: `s[i][j][k]` is the `e_k` component of `S(e_i) e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogStructure {
    algebra: Arc<MetricLieAlgebra>,
    s: Tensor,
    flat: Tensor,
}

impl HomogStructure {
    pub fn new(algebra: &MetricLieAlgebra, s: Tensor) -> Result<Self> {
        let n = algebra.dim();
        if s.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: s.dim() });
        }
        if s.slots() != ONE_TWO {
            return Err(Error::Invalid("S must have layout [down, down, up]".into()));
        }
        for idx in s.indices() {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            if j <= k && !s.get(&[i, j, k]).try_add(s.get(&[i, k, j]))?.is_zero() {
                return Err(Error::SkewViolation(idx));
            }
        }
        let flat = Tensor::from_fn(n, &[Slot::Down; 3], |x| s.get(x).clone());
        Ok(HomogStructure { algebra: Arc::new(algebra.clone()), s, flat })
    }

    pub fn zero(algebra: &MetricLieAlgebra) -> Self {
        Self::new(algebra, Tensor::zeros(algebra.dim(), &ONE_TWO)).expect("zero is skew")
    }

    pub fn algebra(&self) -> &MetricLieAlgebra {
        &self.algebra
    }

    pub fn tensor(&self) -> &Tensor {
        &self.s
    }

    /// `S_flat(e_i, e_j, e_k)`.
    pub fn flat(&self) -> &Tensor {
        &self.flat
    }

    pub fn dim(&self) -> usize {
        self.s.dim()
    }

    /// `nabla + S`, the candidate Ambrose-Singer connection.
    pub fn connection(&self) -> Result<Connection> {
        levi_civita(&self.algebra)?.plus(&self.s)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.algebra.name(),
            "S": self.s.to_json(),
        })
    }
}

/// Outcome of the Ambrose-Singer test for `nabla~ = nabla + S`.
#[derive(Clone, Debug, PartialEq)]
pub struct AsReport {
    pub conditions: CheckReport,
}

impl AsReport {
    pub fn passed(&self) -> bool {
        self.conditions.passed()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(&self.conditions.checks).expect("checks serialize")
    }
}

/// Checks `nabla~ g = nabla~ R = nabla~ S = 0` (with `nabla~ Ric = 0` as a
/// cross-check), and with a contact structure also `nabla~ phi`,
/// `nabla~ xi`, `nabla~ eta`.
pub fn as_check(s: &HomogStructure, acs: Option<&AlmostContactStructure>) -> Result<AsReport> {
    let lc = levi_civita(s.algebra())?;
    let tilde = lc.plus(s.tensor())?;
    let r = curvature(&lc)?;
    let ric = ricci(&r)?;
    let mut conditions = CheckReport::new();
    conditions.push(Check::vanishing("nabla~ g = 0", &tilde.covariant_derivative(&s.algebra().metric())?));
    conditions.push(Check::vanishing("nabla~ R = 0", &tilde.covariant_derivative(r.tensor())?));
    conditions.push(Check::vanishing("nabla~ Ric = 0", &tilde.covariant_derivative(&ric)?));
    conditions.push(Check::vanishing("nabla~ S = 0", &tilde.covariant_derivative(s.tensor())?));
    if let Some(acs) = acs {
        conditions.push(Check::vanishing("nabla~ phi = 0", &tilde.covariant_derivative(acs.phi())?));
        conditions.push(Check::vanishing("nabla~ xi = 0", &tilde.covariant_derivative(acs.xi())?));
        conditions.push(Check::vanishing("nabla~ eta = 0", &tilde.covariant_derivative(acs.eta())?));
    }
    Ok(AsReport { conditions })
}
