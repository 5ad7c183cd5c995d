use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use super::HomogStructure;
use crate::error::Result;
use crate::exactalg::{q, ParamScalar};
use crate::tensor::{Slot, Tensor};

/// The eight Tricerri-Vanhecke classes, ordered so that every class appears
/// after all of its subclasses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TVClass {
    Symmetric,
    T1,
    T2,
    T3,
    T1T2,
    T1T3,
    T2T3,
    T1T2T3,
}

impl TVClass {
    pub const ALL: [TVClass; 8] = [
        TVClass::Symmetric,
        TVClass::T1,
        TVClass::T2,
        TVClass::T3,
        TVClass::T1T2,
        TVClass::T1T3,
        TVClass::T2T3,
        TVClass::T1T2T3,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TVClass::Symmetric => "symmetric",
            TVClass::T1 => "T1",
            TVClass::T2 => "T2",
            TVClass::T3 => "T3",
            TVClass::T1T2 => "T1+T2",
            TVClass::T1T3 => "T1+T3",
            TVClass::T2T3 => "T2+T3",
            TVClass::T1T2T3 => "T1+T2+T3",
        }
    }

    pub fn needs_witness(self) -> bool {
        matches!(self, TVClass::T1 | TVClass::T1T3)
    }
}

impl fmt::Display for TVClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TVClassification {
    pub class: TVClass,
    /// `omega = c12(S_flat) / (n - 1)`, reported when the class needs it.
    pub witness: Option<Vec<ParamScalar>>,
    /// Cyclic sum of `S_flat` over its three arguments.
    pub cyclic_sum: Tensor,
    pub c12: Vec<ParamScalar>,
    /// Which defining conditions hold, in [`TVClass::ALL`] order.
    pub satisfied: Vec<(TVClass, bool)>,
}

impl TVClassification {
    pub fn holds(&self, class: TVClass) -> bool {
        self.satisfied.iter().any(|(c, ok)| *c == class && *ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "class": self.class.label(),
            "witness": self.witness.as_ref().map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>()),
            "c12": self.c12.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "conditions": self.satisfied.iter().map(|(c, ok)| json!({"class": c.label(), "holds": ok})).collect::<Vec<_>>(),
        })
    }
}

/// Tests the eight defining conditions with `omega = c12(S_flat)/(n-1)` and
/// returns the smallest class that holds.
pub fn tv_classify(s: &HomogStructure) -> Result<TVClassification> {
    let n = s.dim();
    let f = s.flat();
    let sf = |i: usize, j: usize, k: usize| f.get(&[i, j, k]);
    let kron = |i: usize, j: usize| ParamScalar::int(i64::from(i == j));

    let c12: Vec<ParamScalar> = (0..n)
        .map(|z| (0..n).try_fold(ParamScalar::zero(), |acc, i| acc.try_add(sf(i, i, z))))
        .collect::<std::result::Result<_, _>>()?;
    let omega: Vec<ParamScalar> = c12.iter().map(|v| v.scale(&q(1, n as i64 - 1))).collect();

    let cyclic = Tensor::try_from_fn(n, &[Slot::Down; 3], |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        Ok(sf(a, b, c).try_add(sf(b, c, a))?.try_add(sf(c, a, b))?)
    })?;
    let t1 = Tensor::try_from_fn(n, &[Slot::Down; 3], |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        let expected = kron(a, b).try_mul(&omega[c])?.try_sub(&kron(c, a).try_mul(&omega[b])?)?;
        Ok(sf(a, b, c).try_sub(&expected)?)
    })?;
    let t3 = Tensor::try_from_fn(n, &[Slot::Down; 3], |x| Ok(sf(x[0], x[1], x[2]).try_add(sf(x[1], x[0], x[2]))?))?;
    let t13 = Tensor::try_from_fn(n, &[Slot::Down; 3], |x| {
        let (a, b, c) = (x[0], x[1], x[2]);
        let rhs = kron(a, b)
            .try_mul(&omega[c])?
            .scale(&q(2, 1))
            .try_sub(&kron(c, a).try_mul(&omega[b])?)?
            .try_sub(&kron(b, c).try_mul(&omega[a])?)?;
        Ok(sf(a, b, c).try_add(sf(b, a, c))?.try_sub(&rhs)?)
    })?;
    let trace_free = c12.iter().all(ParamScalar::is_zero);
    let cyclic_free = cyclic.is_zero();

    let satisfied: Vec<(TVClass, bool)> = TVClass::ALL
        .iter()
        .map(|&class| {
            let ok = match class {
                TVClass::Symmetric => s.tensor().is_zero(),
                TVClass::T1 => t1.is_zero(),
                TVClass::T2 => cyclic_free && trace_free,
                TVClass::T3 => t3.is_zero(),
                TVClass::T1T2 => cyclic_free,
                TVClass::T1T3 => t13.is_zero(),
                TVClass::T2T3 => trace_free,
                TVClass::T1T2T3 => true,
            };
            (class, ok)
        })
        .collect();
    let class = satisfied.iter().find(|(_, ok)| *ok).map(|(c, _)| *c).expect("the full class always holds");
    let witness = class.needs_witness().then(|| omega.clone());
    Ok(TVClassification { class, witness, cyclic_sum: cyclic, c12, satisfied })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connect::okumura_tensor;
    use crate::contact::{standard_acs, volume_tensor};
    use crate::liealg::{catalog, CatalogParams};

    fn okumura_class(r: ParamScalar) -> TVClassification {
        let a = catalog("sasakian_space_form", &CatalogParams::symbolic()).unwrap();
        let acs = standard_acs(&a).unwrap();
        tv_classify(&HomogStructure::new(&a, okumura_tensor(&acs, &r).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn okumura_classes() {
        assert_eq!(okumura_class(ParamScalar::r()).class, TVClass::T2T3);
        assert_eq!(okumura_class(ParamScalar::int(-2)).class, TVClass::T2);
        assert_eq!(okumura_class(ParamScalar::int(1)).class, TVClass::T3);
        assert_eq!(okumura_class(ParamScalar::int(0)).class, TVClass::T2T3);
        assert!(okumura_class(ParamScalar::r()).c12.iter().all(ParamScalar::is_zero));
    }

    #[test]
    fn volume_form_is_t3() {
        let a = catalog("su2_round", &CatalogParams::symbolic()).unwrap();
        let s = HomogStructure::new(&a, volume_tensor(&a).unwrap()).unwrap();
        assert_eq!(tv_classify(&s).unwrap().class, TVClass::T3);
        assert_eq!(tv_classify(&HomogStructure::zero(&a)).unwrap().class, TVClass::Symmetric);
    }
}
