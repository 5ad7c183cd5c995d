use super::{as_check, tv_classify, HomogStructure, TVClass};
use crate::check::{Check, CheckReport};
use crate::connect::levi_civita;
use crate::contact::AlmostContactStructure;
use crate::curv::{curvature, sectional};
use crate::error::{Error, Result};
use crate::exactalg::ParamScalar;
use crate::liealg::ga1;
use crate::tensor::{Tensor, ONE_TWO};

/// Horizontal part of `S(X)Y` for horizontal `X`, `Y`, on the base frame
/// `(e1, e2)`. Requires `xi = e3`.
pub fn boothby_wang_reduce(acs: &AlmostContactStructure, s: &HomogStructure) -> Result<Tensor> {
    if acs.dim() != 3 || s.dim() != 3 {
        return Err(Error::UnsupportedDimension(s.dim()));
    }
    if *acs.xi() != Tensor::basis(3, 2) {
        return Err(Error::NotHorizontal);
    }
    let t = s.tensor();
    Ok(Tensor::from_fn(2, &ONE_TWO, |x| t.get(x).clone()))
}

/// `S(X)Y = alpha (-g(X,Y) e2 + g(e2,Y) X)` on `ga1(alpha)`.
pub fn h2_t1_structure(alpha: &ParamScalar) -> Result<HomogStructure> {
    let a = ga1(alpha)?;
    let t = Tensor::from_fn(2, &ONE_TWO, |x| {
        let (i, j, k) = (x[0], x[1], x[2]);
        let v = -i64::from(i == j && k == 1) + i64::from(j == 1 && i == k);
        alpha.scale(&crate::exactalg::q(v, 1))
    });
    HomogStructure::new(&a, t)
}

/// The two homogeneous structures of the hyperbolic plane of curvature
/// `-alpha^2`: the symmetric one and the `T1` one.
pub fn h2_structures(alpha: &ParamScalar) -> Result<CheckReport> {
    let a = ga1(alpha)?;
    let mut report = CheckReport::new();

    let zero = HomogStructure::zero(&a);
    let r = curvature(&levi_civita(&a)?)?;
    let k = sectional(&r, &Tensor::basis(2, 0), &Tensor::basis(2, 1))?;
    report.push(Check::scalar("H2: K(e1,e2) = -alpha^2", &k.try_add(&alpha.pow(2))?));
    let sym = as_check(&zero, None)?;
    report.push(Check::flag("H2: S = 0 is Ambrose-Singer", sym.passed(), "nabla R != 0"));

    let s = h2_t1_structure(alpha)?;
    let as_report = as_check(&s, None)?;
    report.push(Check::flag(
        "H2: T1 structure is Ambrose-Singer",
        as_report.passed(),
        as_report.conditions.failures().iter().map(|c| c.name.clone()).collect::<Vec<_>>().join(", "),
    ));
    let class = tv_classify(&s)?;
    report.push(Check::flag("H2: T1 structure has class T1", class.class == TVClass::T1, class.class.label()));
    let expected = Tensor::covector(vec![ParamScalar::zero(), -alpha]);
    match &class.witness {
        Some(w) => {
            report.push(Check::equal("H2: T1 witness = -alpha theta^2", &Tensor::covector(w.clone()), &expected))
        }
        None => report.push(Check::failed("H2: T1 witness = -alpha theta^2", "no witness")),
    }
    report.push(Check::vanishing("H2: nabla + S = 0", s.connection()?.coefficients()));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connect::okumura_tensor;
    use crate::contact::standard_acs;
    use crate::liealg::{catalog, CatalogParams};

    #[test]
    fn okumura_reduces_to_zero() {
        let a = catalog("sasakian_space_form", &CatalogParams::symbolic()).unwrap();
        let acs = standard_acs(&a).unwrap();
        let s = HomogStructure::new(&a, okumura_tensor(&acs, &ParamScalar::r()).unwrap()).unwrap();
        assert!(boothby_wang_reduce(&acs, &s).unwrap().is_zero());
    }

    #[test]
    fn h2_branches_pass() {
        let report = h2_structures(&ParamScalar::alpha()).unwrap();
        assert!(report.passed(), "{:?}", report.failures());
        assert!(h2_structures(&ParamScalar::int(3)).unwrap().passed());
    }
}
