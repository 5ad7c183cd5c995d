//! Named verification suites: golden-table comparisons, identity checks and
//! mutated inputs that must be rejected.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::check::{Check, CheckReport, Offending};
use crate::connect::{
    cartan_schouten, generalized_tanaka_webster, levi_civita, okumura, okumura_tensor, sigma_connection, sigma_tensor,
    tanaka_webster, CartanSchouten, Connection,
};
use crate::contact::{
    contact_check, cross_product_check, d_homothetic_deform, sasaki_check, standard_acs, volume_tensor,
    AlmostContactStructure,
};
use crate::curv::{
    curvature, holomorphic_sectional, okumura_curvature_identities, ricci, scalar_curvature, sectional,
    structure_equations, symmetry_check, CurvatureTensor, StructureEquations,
};
use crate::error::{Error, Result};
use crate::exactalg::{q, AlgError, Assignment, Context, FunctionVar, ParamScalar, Rational, Var};
use crate::fixture::{Expected, FixtureSource, GoldenTable, StructureFile};
use crate::homog::{
    as_check, boothby_wang_reduce, frame_derivatives, h2_structures, h2_t1_structure, moduli_report,
    nomizu_reconstruct, sigma_branches, sigma_structure, tilde_frame, tv_classify, CMode, HomogStructure, TVClass,
};
use crate::liealg::{
    catalog, heisenberg, nonunimodular, sasakian_space_form, su2_round, CatalogEntry, CatalogParams, FrameChange,
    MetricLieAlgebra,
};
use crate::params::Params;
use crate::tensor::{Tensor, ONE_TWO};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Paper,
    Contact,
    Okumura,
    Sigma,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 4] = [Suite::Paper, Suite::Contact, Suite::Okumura, Suite::Sigma];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Paper => "paper",
            Suite::Contact => "contact",
            Suite::Okumura => "okumura",
            Suite::Sigma => "sigma",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Suite::Paper),
            "contact" => Ok(Suite::Contact),
            "okumura" => Ok(Suite::Okumura),
            "sigma" => Ok(Suite::Sigma),
            "all" => Ok(Suite::All),
            other => Err(Error::Input(format!("unknown suite `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteCheck {
    pub suite: Suite,
    pub anchor: String,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub offending: Vec<Offending>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&SuiteCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "total": self.checks.len(),
            "failed": self.failures().len(),
            "checks": self.checks,
        })
    }
}

struct Builder {
    suite: Suite,
    checks: Vec<SuiteCheck>,
}

impl Builder {
    fn new(suite: Suite) -> Self {
        Builder { suite, checks: Vec::new() }
    }

    fn push(&mut self, anchor: &str, check: Check) {
        self.checks.push(SuiteCheck {
            suite: self.suite,
            anchor: anchor.to_string(),
            name: check.name,
            passed: check.passed,
            offending: check.offending,
        });
    }

    fn report(&mut self, anchor: &str, report: CheckReport) {
        for c in report.checks {
            self.push(anchor, c);
        }
    }

    fn prefixed(&mut self, anchor: &str, prefix: &str, report: CheckReport) {
        for mut c in report.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.push(anchor, c);
        }
    }

    /// Records whether `result` failed with an error accepted by `expected`.
    fn rejects<T>(&mut self, anchor: &str, name: &str, result: Result<T>, expected: fn(&Error) -> bool) {
        let check = match result {
            Err(e) if expected(&e) => Check::flag(name, true, ""),
            Err(e) => Check::failed(name, format!("wrong error: {e}")),
            Ok(_) => Check::failed(name, "accepted"),
        };
        self.push(anchor, check);
    }
}

/// Runs `suite` with the parameter values in `params`; symbolic or absent
/// parameters stay symbolic.
pub fn run_suite(suite: Suite, params: &Params, fixtures: &FixtureSource) -> Result<SuiteReport> {
    let asg = params.assignment()?;
    let parts: Vec<Suite> = if suite == Suite::All { Suite::PARTS.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    for part in parts {
        let mut b = Builder::new(part);
        match part {
            Suite::Paper => paper(&mut b, &asg, fixtures)?,
            Suite::Contact => contact(&mut b, &asg)?,
            Suite::Okumura => okumura_suite(&mut b, &asg)?,
            Suite::Sigma => sigma(&mut b, &asg, fixtures)?,
            Suite::All => unreachable!(),
        }
        checks.extend(b.checks);
    }
    Ok(SuiteReport { suite, checks })
}

/// Every quantity a golden table may name, computed for one algebra.
struct Subject {
    algebra: MetricLieAlgebra,
    lc: Connection,
    curv: CurvatureTensor,
    ric: Tensor,
    forms: StructureEquations,
    tw: Option<Connection>,
    sigma: Option<HomogStructure>,
}

impl Subject {
    fn new(table: &GoldenTable) -> Result<Subject> {
        let (algebra, sigma) = if table.context == Some(Context::Alpha) {
            let (s, _) = sigma_structure(&sasakian_space_form(&ParamScalar::c_in_alpha())?)?;
            (s.algebra().clone(), Some(s))
        } else {
            (catalog(&table.algebra, &CatalogParams::symbolic())?, None)
        };
        let lc = levi_civita(&algebra)?;
        let curv = curvature(&lc)?;
        let ric = ricci(&curv)?;
        let forms = structure_equations(&lc)?;
        let tw = match standard_acs(&algebra) {
            Ok(acs) => Some(tanaka_webster(&acs)?),
            Err(_) => None,
        };
        Ok(Subject { algebra, lc, curv, ric, forms, tw, sigma })
    }

    fn quantity(&self, name: &str, index: &[usize]) -> Result<Vec<ParamScalar>> {
        let n = self.algebra.dim();
        if index.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::Input(format!("index {index:?} out of range 1..={n}")));
        }
        let ix: Vec<usize> = index.iter().map(|i| i - 1).collect();
        let arity = |k: usize| -> Result<()> {
            if ix.len() == k {
                Ok(())
            } else {
                Err(Error::Input(format!("`{name}` takes {k} indices")))
            }
        };
        let column = |t: &Tensor, i: usize, j: usize| (0..n).map(|k| t.get(&[i, j, k]).clone()).collect();
        match name {
            "levi_civita" => {
                arity(2)?;
                Ok(column(self.lc.coefficients(), ix[0], ix[1]))
            }
            "tanaka_webster" => {
                arity(2)?;
                let tw = self.tw.as_ref().ok_or_else(|| Error::Input("no contact structure".into()))?;
                Ok(column(tw.coefficients(), ix[0], ix[1]))
            }
            "structure" | "ambrose_singer" => {
                arity(2)?;
                let s = self.sigma.as_ref().ok_or_else(|| Error::Input(format!("`{name}` needs a structure")))?;
                if name == "structure" {
                    Ok(column(s.tensor(), ix[0], ix[1]))
                } else {
                    Ok(column(s.connection()?.coefficients(), ix[0], ix[1]))
                }
            }
            "derivation" => {
                arity(2)?;
                let table = self.algebra.derivations().ok_or_else(|| Error::Input("no derivation table".into()))?;
                let f = match ix[1] {
                    0 => FunctionVar::S1,
                    1 => FunctionVar::S2,
                    _ => return Err(Error::Input("derivation function index must be 1 or 2".into())),
                };
                Ok(vec![table.get(ix[0], f).clone()])
            }
            "curvature" => {
                arity(3)?;
                Ok((0..n).map(|j| self.curv.component(ix[0], ix[1], ix[2], j).clone()).collect())
            }
            "lowered_curvature" => {
                arity(4)?;
                Ok(vec![self.curv.lowered(ix[0], ix[1], ix[2], ix[3]).clone()])
            }
            "sectional" => {
                arity(2)?;
                Ok(vec![sectional(&self.curv, &Tensor::basis(n, ix[0]), &Tensor::basis(n, ix[1]))?])
            }
            "ricci" => {
                arity(2)?;
                Ok(vec![self.ric.get(&ix).clone()])
            }
            "scalar_curvature" => {
                arity(0)?;
                Ok(vec![scalar_curvature(&self.ric)?])
            }
            "connection_form" => {
                arity(2)?;
                Ok(self.forms.connection_form(ix[0], ix[1]))
            }
            other => Err(Error::Input(format!("unknown quantity `{other}`"))),
        }
    }
}

fn instantiate(v: &[ParamScalar], asg: &Assignment) -> Result<Tensor> {
    let comps = v.iter().map(|x| x.instantiate_partial(asg)).collect::<Result<Vec<_>, AlgError>>()?;
    Ok(Tensor::vector(comps))
}

fn entry_name(quantity: &str, index: &[usize]) -> String {
    let idx: Vec<String> = index.iter().map(usize::to_string).collect();
    format!("{quantity}({})", idx.join(","))
}

/// Compares every entry of `table` against the computed value.
fn golden(b: &mut Builder, table: &GoldenTable, asg: &Assignment) -> Result<bool> {
    let subject = Subject::new(table)?;
    let ctx = subject.algebra.context();
    let mut all = true;
    for e in &table.entries {
        let actual = instantiate(&subject.quantity(&e.quantity, &e.index)?, asg)?;
        let expected = instantiate(&e.expected.parse(ctx)?, asg)?;
        let check = Check::equal(entry_name(&e.quantity, &e.index), &actual, &expected);
        all &= check.passed;
        b.push(&e.anchor, check);
    }
    Ok(all)
}

fn value_or_sym(asg: &Assignment, v: Var) -> ParamScalar {
    match asg.get(v) {
        Some(x) => ParamScalar::from_rational(x.clone()),
        None => match v {
            Var::C => ParamScalar::c(),
            Var::R => ParamScalar::r(),
            Var::Alpha => ParamScalar::alpha(),
            Var::S1 => ParamScalar::s1(),
            Var::S2 => ParamScalar::s2(),
        },
    }
}

fn failure_names(report: &CheckReport) -> String {
    report.failures().iter().map(|c| c.name.clone()).collect::<Vec<_>>().join(", ")
}

fn paper(b: &mut Builder, asg: &Assignment, fixtures: &FixtureSource) -> Result<()> {
    let space_form = fixtures.golden("space_form.json")?;
    golden(b, &space_form, asg)?;
    golden(b, &fixtures.golden("nonunimodular.json")?, asg)?;

    let families = [sasakian_space_form(&ParamScalar::c())?, nonunimodular(&ParamScalar::alpha())?];
    for a in &families {
        let lc = levi_civita(a)?;
        let r = curvature(&lc)?;
        b.prefixed("curvature.symmetries", a.name(), symmetry_check(&r)?);
        let se = structure_equations(&lc)?;
        b.push(
            "structure-equations",
            Check::vanishing(format!("{}: first structure equation", a.name()), &se.first_residual),
        );
        b.push(
            "structure-equations",
            Check::vanishing(format!("{}: second structure equation", a.name()), &se.second_residual),
        );
        let minus = cartan_schouten(a, CartanSchouten::Minus)?;
        b.push("cartan-schouten", Check::vanishing(format!("{}: nabla^- e_j = 0", a.name()), minus.coefficients()));
        let zero = cartan_schouten(a, CartanSchouten::Zero)?;
        b.push("cartan-schouten", Check::vanishing(format!("{}: nabla^0 is torsion free", a.name()), &zero.torsion()?));
        let plus = cartan_schouten(a, CartanSchouten::Plus)?;
        b.push(
            "cartan-schouten",
            Check::equal(format!("{}: T^+ = [X,Y]", a.name()), &plus.torsion()?, a.structure_constants()),
        );
    }
    for entry in CatalogEntry::ALL {
        let a = catalog(entry.name(), &CatalogParams::symbolic())?;
        let expected = !matches!(entry, CatalogEntry::Nonunimodular | CatalogEntry::Ga1 | CatalogEntry::Ga1PlusR);
        let got = a.is_unimodular()?;
        b.push(
            "unimodular",
            Check::flag(format!("{}: unimodular = {expected}", a.name()), got == expected, got.to_string()),
        );
    }

    b.report("hyperbolic-plane", h2_structures(&ParamScalar::alpha())?);

    let sf = sasakian_space_form(&ParamScalar::c())?;
    let acs = standard_acs(&sf)?;
    let ar = HomogStructure::new(&sf, okumura_tensor(&acs, &ParamScalar::r())?)?;
    b.push("reduction", Check::vanishing("A^r reduces to S = 0", &boothby_wang_reduce(&acs, &ar)?));
    let nu = nonunimodular(&ParamScalar::alpha())?;
    let nacs = standard_acs(&nu)?;
    let minus = HomogStructure::new(&nu, levi_civita(&nu)?.coefficients().neg())?;
    let reduced = boothby_wang_reduce(&nacs, &minus)?;
    let swapped = Tensor::from_fn(2, &ONE_TWO, |x| reduced.get(&[1 - x[0], 1 - x[1], 1 - x[2]]).clone());
    let t1 = h2_t1_structure(&ParamScalar::alpha())?;
    b.push("reduction", Check::equal("(-)-connection reduces to the T1 structure of H2", &swapped, t1.tensor()));

    let mut modes = vec![CMode::Generic, CMode::Alpha];
    if let Some(c) = asg.get(Var::C) {
        modes.push(CMode::Rational(c.clone()));
    }
    for mode in modes {
        let report = moduli_report(&mode)?;
        b.prefixed("classification", &mode.label(), report.checks);
    }

    let mut mutated = space_form.clone();
    let target = mutated
        .entries
        .iter_mut()
        .find(|e| matches!(e.expected, Expected::Scalar(_)))
        .ok_or_else(|| Error::Input("space_form.json has no scalar entry".into()))?;
    if let Expected::Scalar(s) = &mut target.expected {
        *s = format!("-({s})+1");
    }
    let mut scratch = Builder::new(b.suite);
    let detected = !golden(&mut scratch, &mutated, asg)?;
    b.push(
        "negative",
        Check::flag("mutated golden value is reported as a mismatch", detected, "mutation not detected"),
    );
    Ok(())
}

fn contact(b: &mut Builder, asg: &Assignment) -> Result<()> {
    for entry in CatalogEntry::ALL.into_iter().filter(|e| e.is_sasakian()) {
        let a = catalog(entry.name(), &CatalogParams::symbolic())?;
        let acs = standard_acs(&a)?;
        let name = a.name().to_string();
        b.prefixed("contact.axioms", &name, contact_check(&acs)?);
        b.prefixed("contact.sasaki", &name, sasaki_check(&acs)?);
        b.push("contact.sasaki", Check::vanishing(format!("{name}: h = 0"), &acs.h_tensor()?));
        b.push("contact.sasaki", Check::vanishing(format!("{name}: Tanno tensor Q = 0"), &acs.tanno_tensor()?));
        b.prefixed("contact.cross-product", &name, cross_product_check(&acs)?);

        let tw = tanaka_webster(&acs)?;
        let gtw = generalized_tanaka_webster(&acs)?;
        let (ok, _) = okumura(&acs, &ParamScalar::int(-1))?;
        b.push(
            "tanaka-webster",
            Check::equal(format!("{name}: Tanaka-Webster = generalized"), tw.coefficients(), gtw.coefficients()),
        );
        b.push(
            "tanaka-webster",
            Check::equal(format!("{name}: Tanaka-Webster = nabla^(-1)"), tw.coefficients(), ok.coefficients()),
        );
        for (label, t) in
            [("g", a.metric()), ("phi", acs.phi().clone()), ("xi", acs.xi().clone()), ("eta", acs.eta().clone())]
        {
            b.push(
                "tanaka-webster",
                Check::vanishing(format!("{name}: Tanaka-Webster {label} parallel"), &tw.covariant_derivative(&t)?),
            );
        }
    }

    let round = standard_acs(&su2_round()?)?;
    let mut targets = vec![ParamScalar::c()];
    if let Some(c) = asg.get(Var::C) {
        if *c > q(-3, 1) {
            targets.push(ParamScalar::from_rational(c.clone()));
        }
    }
    for target in targets {
        let d = d_homothetic_deform(&round, &target)?;
        let label = format!("deformation to c = {target}");
        b.prefixed("deformation", &label, d.checks.clone());
        b.prefixed("deformation", &label, sasaki_check(&d.acs)?);
        let r = curvature(&levi_civita(&d.algebra)?)?;
        let h = holomorphic_sectional(&r, &d.acs, &Tensor::basis(3, 0))?;
        b.push("deformation", Check::scalar(format!("{label}: H(e1) = c"), &h.try_sub(&target)?));
        b.push(
            "deformation",
            Check::equal(
                format!("{label}: brackets of the space form"),
                d.algebra.structure_constants(),
                sasakian_space_form(&target)?.structure_constants(),
            ),
        );
    }

    let h = heisenberg()?;
    let phi = Tensor::from_fn(3, &crate::tensor::ENDO, |i| match (i[0], i[1]) {
        (2, 1) => ParamScalar::one(),
        (1, 2) => -ParamScalar::one(),
        _ => ParamScalar::zero(),
    });
    let eta = Tensor::covector(vec![ParamScalar::one(), ParamScalar::zero(), ParamScalar::zero()]);
    let wrong = AlmostContactStructure::new(&h, phi, Tensor::basis(3, 0), eta)?;
    let report = contact_check(&wrong)?;
    b.push(
        "negative",
        Check::flag(
            "mutated: xi = e1 on the Heisenberg algebra fails the contact condition",
            !report.passed(),
            "accepted",
        ),
    );
    b.rejects(
        "negative",
        "mutated: deformation to c = -3 is rejected as an invalid target",
        d_homothetic_deform(&round, &ParamScalar::int(-3)),
        |e| matches!(e, Error::InvalidTarget(_)),
    );
    Ok(())
}

/// `2 deta(X,Y) xi - (r+1)(eta(X) phi Y - eta(Y) phi X)` on `(e_i, e_j)`.
fn okumura_torsion(acs: &AlmostContactStructure, r: &ParamScalar) -> Result<Tensor> {
    let deta = acs.d_eta()?;
    let (phi, xi, eta) = (acs.phi(), acs.xi(), acs.eta());
    let r1 = r.try_add(&ParamScalar::one())?;
    Tensor::try_from_fn(acs.dim(), &ONE_TWO, |x| {
        let (i, j, k) = (x[0], x[1], x[2]);
        let a = deta.get(&[i, j]).try_mul(xi.get(&[k]))?.scale(&q(2, 1));
        let b = eta.get(&[i]).try_mul(phi.get(&[k, j]))?.try_sub(&eta.get(&[j]).try_mul(phi.get(&[k, i]))?)?;
        Ok(a.try_sub(&r1.try_mul(&b)?)?)
    })
}

fn okumura_checks(b: &mut Builder, acs: &AlmostContactStructure, r: &ParamScalar, label: &str) -> Result<()> {
    let (conn, a) = okumura(acs, r)?;
    let tensors = [
        ("g", acs.algebra().metric()),
        ("phi", acs.phi().clone()),
        ("eta", acs.eta().clone()),
        ("xi", acs.xi().clone()),
        ("A^r", a.clone()),
    ];
    for (name, t) in tensors {
        b.push(
            "okumura.parallel",
            Check::vanishing(format!("{label}: nabla^r {name} = 0"), &conn.covariant_derivative(&t)?),
        );
    }
    b.push(
        "okumura.torsion",
        Check::equal(format!("{label}: torsion formula"), &conn.torsion()?, &okumura_torsion(acs, r)?),
    );
    b.prefixed("okumura.curvature", label, okumura_curvature_identities(acs, r)?);
    let s = HomogStructure::new(acs.algebra(), a)?;
    let report = as_check(&s, Some(acs))?;
    b.push(
        "okumura.ambrose-singer",
        Check::flag(format!("{label}: A^r is Ambrose-Singer"), report.passed(), failure_names(&report.conditions)),
    );
    let sc = sigma_connection(acs, &acs.eta().scale(&-r)?)?;
    b.push(
        "okumura.ambrose-singer",
        Check::equal(format!("{label}: sigma = -r eta gives nabla^r"), sc.coefficients(), conn.coefficients()),
    );
    Ok(())
}

fn okumura_suite(b: &mut Builder, asg: &Assignment) -> Result<()> {
    let c = ParamScalar::c();
    let r = ParamScalar::r();
    let sf = sasakian_space_form(&c)?;
    let acs = standard_acs(&sf)?;
    okumura_checks(b, &acs, &r, "symbolic")?;
    if asg.get(Var::C).is_some() || asg.get(Var::R).is_some() {
        let (ci, ri) = (value_or_sym(asg, Var::C), value_or_sym(asg, Var::R));
        let at = standard_acs(&sasakian_space_form(&ci)?)?;
        okumura_checks(b, &at, &ri, &format!("c = {ci}, r = {ri}"))?;
    }

    let family = HomogStructure::new(&sf, okumura_tensor(&acs, &r)?)?;
    let class = tv_classify(&family)?;
    b.push("okumura.class", Check::flag("A^r has class T2+T3", class.class == TVClass::T2T3, class.class.label()));
    for (value, expected) in [(-2, TVClass::T2), (1, TVClass::T3)] {
        let s = HomogStructure::new(&sf, okumura_tensor(&acs, &ParamScalar::int(value))?)?;
        let got = tv_classify(&s)?.class;
        b.push(
            "okumura.class",
            Check::flag(format!("A^r at r = {value} has class {}", expected.label()), got == expected, got.label()),
        );
    }
    b.push("okumura.class", Check::vanishing("c12(A^r) = 0", &Tensor::covector(class.c12.clone())));
    let eps = volume_tensor(&sf)?;
    let factor = -&r.try_add(&ParamScalar::int(2))?;
    let cyclic_expected =
        Tensor::try_from_fn(3, &[crate::tensor::Slot::Down; 3], |x| Ok(eps.get(x).try_mul(&factor)?))?;
    b.push(
        "okumura.class",
        Check::equal("cyclic sum of g(A^r_X Y, Z) = -(r+2) dV", &class.cyclic_sum, &cyclic_expected),
    );
    b.push("okumura.class", Check::equal("A^1 = -dV", &okumura_tensor(&acs, &ParamScalar::one())?, &eps.neg()));

    let hol = nomizu_reconstruct(&family, Some(&acs))?;
    b.push(
        "okumura.holonomy",
        Check::flag("holonomy dimension 1", hol.holonomy_dim == 1, hol.holonomy_dim.to_string()),
    );
    let r0 = c.try_add(&ParamScalar::one())?.scale(&q(1, 2));
    let coset = HomogStructure::new(&sf, okumura_tensor(&acs, &r0)?)?;
    let hol0 = nomizu_reconstruct(&coset, Some(&acs))?;
    b.push(
        "okumura.holonomy",
        Check::flag("holonomy dimension 0 at r = (c+1)/2", hol0.holonomy_dim == 0, hol0.holonomy_dim.to_string()),
    );
    b.push("okumura.holonomy", Check::vanishing("nabla~ = 0 at r = (c+1)/2", coset.connection()?.coefficients()));

    let heis = heisenberg()?;
    b.push(
        "okumura.heisenberg",
        Check::equal(
            "c = -3 gives the Heisenberg algebra",
            sasakian_space_form(&ParamScalar::int(-3))?.structure_constants(),
            heis.structure_constants(),
        ),
    );
    let hacs = standard_acs(&heis)?;
    let hs = HomogStructure::new(&heis, okumura_tensor(&hacs, &r)?)?;
    b.push(
        "okumura.heisenberg",
        Check::flag("Heisenberg: A^r is Ambrose-Singer", as_check(&hs, Some(&hacs))?.passed(), ""),
    );
    let h1 =
        nomizu_reconstruct(&HomogStructure::new(&heis, okumura_tensor(&hacs, &ParamScalar::int(-1))?)?, Some(&hacs))?;
    b.push(
        "okumura.heisenberg",
        Check::flag("Heisenberg: holonomy dimension 0 at r = -1", h1.holonomy_dim == 0, h1.holonomy_dim.to_string()),
    );

    let su2 = su2_round()?;
    let sacs = standard_acs(&su2)?;
    let dv = HomogStructure::new(&su2, volume_tensor(&su2)?.scale(&-&r)?)?;
    b.push("okumura.su2", Check::flag("su(2): -r dV is Ambrose-Singer", as_check(&dv, None)?.passed(), ""));
    let dv_class = tv_classify(&dv)?.class;
    b.push("okumura.su2", Check::flag("su(2): -r dV has class T3", dv_class == TVClass::T3, dv_class.label()));
    let sar = HomogStructure::new(&su2, okumura_tensor(&sacs, &r)?)?;
    b.push("okumura.su2", Check::flag("su(2): A^r is Ambrose-Singer", as_check(&sar, Some(&sacs))?.passed(), ""));

    let deta = acs.d_eta()?;
    let twice = Tensor::try_from_fn(3, &ONE_TWO, |x| {
        Ok(deta.get(&[x[0], x[1]]).try_mul(acs.xi().get(&[x[2]]))?.scale(&q(2, 1)))
    })?;
    let flipped = okumura_tensor(&acs, &r)?.try_sub(&twice)?;
    b.rejects(
        "negative",
        "mutated: A^r with the deta term of the wrong sign is rejected as non-skew",
        HomogStructure::new(&sf, flipped),
        |e| matches!(e, Error::SkewViolation(_)),
    );
    Ok(())
}

fn sigma(b: &mut Builder, asg: &Assignment, fixtures: &FixtureSource) -> Result<()> {
    golden(b, &fixtures.golden("sigma_structure.json")?, asg)?;

    let off = sigma_branches(&ParamScalar::int(2), &CMode::Alpha)?;
    b.push(
        "sigma.branches",
        Check::flag("sigma3 != 1 gives only the trivial branch", off.branches.len() == 1 && !off.has_circle(), ""),
    );
    let on = sigma_branches(&ParamScalar::one(), &CMode::Alpha)?;
    b.push("sigma.branches", Check::flag("sigma3 = 1 gives the circle branch for c < -3", on.has_circle(), ""));
    let generic = sigma_branches(&ParamScalar::one(), &CMode::Generic)?;
    b.push("sigma.branches", Check::flag("sigma3 = 1 gives no circle for c >= -3", !generic.has_circle(), ""));

    let (s, acs) = sigma_structure(&sasakian_space_form(&ParamScalar::c_in_alpha())?)?;
    let report = as_check(&s, Some(&acs))?;
    b.report("sigma.ambrose-singer", report.conditions);
    let conn = s.connection()?;
    b.push("sigma.flat", Check::vanishing("curvature of nabla~ = 0", curvature(&conn)?.tensor()));
    let frame = tilde_frame()?;
    b.push("sigma.flat", Check::vanishing("tilde frame is nabla~-parallel", &frame_derivatives(&conn, &frame)?));

    let l = nomizu_reconstruct(&s, Some(&acs))?;
    b.push(
        "sigma.reconstruction",
        Check::flag("holonomy dimension 0", l.holonomy_dim == 0, l.holonomy_dim.to_string()),
    );
    let tilde = l.to_lie_algebra("reconstructed")?.change_frame(&frame)?;
    let target = nonunimodular(&ParamScalar::alpha())?;
    b.push(
        "sigma.reconstruction",
        Check::equal(
            "tilde frame brackets: [e1,e2] = alpha e2 + 2 e3",
            tilde.structure_constants(),
            target.structure_constants(),
        ),
    );

    let point = match (asg.get(Var::Alpha), asg.get(Var::S1), asg.get(Var::S2)) {
        (Some(a), Some(s1), Some(s2)) => {
            Assignment::new().with(Var::Alpha, a.clone()).with(Var::S1, s1.clone()).with(Var::S2, s2.clone())
        }
        _ => Assignment::new().with_int(Var::Alpha, 5).with_int(Var::S1, 3).with_int(Var::S2, 4),
    };
    point_checks(b, &l, &point)?;

    let file = StructureFile::from_json(&fixtures.read("minus_connection.json")?)?;
    let minus = file.structure()?;
    let class = tv_classify(&minus)?;
    b.push(
        "sigma.minus",
        Check::flag(
            "(-)-connection structure has strict class T1+T2+T3",
            class.class == TVClass::T1T2T3,
            class.class.label(),
        ),
    );
    let nacs = standard_acs(minus.algebra())?;
    let form = Tensor::covector(vec![ParamScalar::zero(), ParamScalar::alpha(), ParamScalar::one()]);
    b.push(
        "sigma.minus",
        Check::equal("S = sigma tensor of alpha theta^2 + eta", minus.tensor(), &sigma_tensor(&nacs, &form)?),
    );
    b.push(
        "sigma.minus",
        Check::equal(
            "S = minus the Levi-Civita coefficients",
            minus.tensor(),
            &levi_civita(minus.algebra())?.coefficients().neg(),
        ),
    );

    let bad = Params::parse("alpha=5,s1=3,s2=5")?;
    b.rejects("negative", "mutated: (alpha, s1, s2) = (5, 3, 5) violates the circle relation", bad.assignment(), |e| {
        matches!(e, Error::Alg(AlgError::RelationViolation(_)))
    });
    let mut skew = s.tensor().clone();
    let v = skew.get(&[0, 1, 2]).try_add(&ParamScalar::one())?;
    skew.set(&[0, 1, 2], v);
    b.rejects(
        "negative",
        "mutated: sigma structure with one entry shifted is rejected as non-skew",
        HomogStructure::new(s.algebra(), skew),
        |e| matches!(e, Error::SkewViolation(_)),
    );
    Ok(())
}

fn point_checks(b: &mut Builder, l: &crate::homog::ReconstructedAlgebra, point: &Assignment) -> Result<()> {
    let label = |v: Var| point.get(v).map(Rational::to_string).unwrap_or_default();
    let at_label = format!("(alpha, s1, s2) = ({}, {}, {})", label(Var::Alpha), label(Var::S1), label(Var::S2));
    let at = l.instantiate(point)?;
    b.push(
        "sigma.point",
        Check::flag(format!("{at_label}: holonomy dimension 0"), at.holonomy_dim == 0, at.holonomy_dim.to_string()),
    );
    let m: Vec<Vec<ParamScalar>> = tilde_frame()?
        .matrix()
        .iter()
        .map(|row| row.iter().map(|x| x.instantiate_partial(point)).collect::<Result<Vec<_>, AlgError>>())
        .collect::<Result<_, _>>()?;
    let tilde = at.to_lie_algebra("reconstructed")?.change_frame(&FrameChange::orthonormal(m))?;
    let alpha = ParamScalar::from_rational(point.get(Var::Alpha).cloned().unwrap_or_else(|| q(5, 1)));
    b.push(
        "sigma.point",
        Check::equal(
            format!("{at_label}: [e1,e2] = alpha e2 + 2 e3, [e2,e3] = [e3,e1] = 0"),
            tilde.structure_constants(),
            nonunimodular(&alpha)?.structure_constants(),
        ),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(suite: Suite, params: &str) -> SuiteReport {
        run_suite(suite, &Params::parse(params).unwrap(), &FixtureSource::embedded()).unwrap()
    }

    fn assert_passes(report: &SuiteReport) {
        let bad: Vec<String> =
            report.failures().iter().map(|c| format!("[{}] {} {:?}", c.anchor, c.name, c.offending)).collect();
        assert!(bad.is_empty(), "{}", bad.join("\n"));
    }

    #[test]
    fn paper_suite_passes() {
        assert_passes(&run(Suite::Paper, ""));
    }

    #[test]
    fn contact_suite_passes() {
        assert_passes(&run(Suite::Contact, "c=2"));
    }

    #[test]
    fn okumura_suite_passes() {
        assert_passes(&run(Suite::Okumura, "c=-3,r=1/2"));
    }

    #[test]
    fn sigma_suite_passes() {
        assert_passes(&run(Suite::Sigma, "alpha=5,s1=3,s2=4"));
        assert_passes(&run(Suite::Sigma, ""));
    }

    #[test]
    fn relation_violation_is_an_error() {
        let p = Params::parse("alpha=5,s1=3,s2=5").unwrap();
        let err = run_suite(Suite::Sigma, &p, &FixtureSource::embedded()).unwrap_err();
        assert!(matches!(err, Error::Alg(AlgError::RelationViolation(_))));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Paper, Suite::Contact, Suite::Okumura, Suite::Sigma, Suite::All] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
