//! The twelve acceptance criteria, one line each.

use std::process::ExitCode;

use homog_core::check::CheckReport;
use homog_core::connect::{
    generalized_tanaka_webster, levi_civita, okumura, okumura_tensor, tanaka_webster, Connection,
};
use homog_core::contact::{d_homothetic_deform, sasaki_check, standard_acs, volume_tensor, AlmostContactStructure};
use homog_core::curv::{
    curvature, holomorphic_sectional, okumura_curvature_identities, ricci, scalar_curvature, sectional,
    structure_equations,
};
use homog_core::exactalg::{parse, parse_in, q, Assignment, Context, ParamScalar, Var};
use homog_core::fixture::{FixtureSource, GoldenTable};
use homog_core::homog::{
    as_check, boothby_wang_reduce, h2_structures, moduli_report, nomizu_reconstruct, sigma_branches, sigma_structure,
    tilde_frame, tv_classify, CMode, HomogStructure, TVClass,
};
use homog_core::liealg::{
    catalog, heisenberg, nonunimodular, sasakian_space_form, su2_round, CatalogEntry, CatalogParams, FrameChange,
};
use homog_core::params::Params;
use homog_core::suite::{run_suite, Suite};
use homog_core::tensor::{Tensor, ONE_TWO};
use homog_core::{Error, Result};

type Failures = Vec<String>;
type Criterion = (&'static str, fn() -> Result<Failures>);

fn p(s: &str) -> ParamScalar {
    parse(s).unwrap()
}

fn expect(out: &mut Failures, what: impl Into<String>, ok: bool) {
    if !ok {
        out.push(what.into());
    }
}

fn expect_report(out: &mut Failures, prefix: &str, report: &CheckReport) {
    for c in report.failures() {
        out.push(format!("{prefix}: {}", c.name));
    }
}

fn e(i: usize) -> Tensor {
    Tensor::basis(3, i)
}

fn space_form() -> Result<AlmostContactStructure> {
    standard_acs(&sasakian_space_form(&ParamScalar::c())?)
}

fn golden_columns(out: &mut Failures, table: &GoldenTable, quantity: &str, conn: &Connection) -> Result<usize> {
    let mut n = 0;
    for entry in table.entries.iter().filter(|e| e.quantity == quantity) {
        let (i, j) = (entry.index[0] - 1, entry.index[1] - 1);
        let expected = entry.expected.parse(conn.algebra().context())?;
        let actual: Vec<ParamScalar> = (0..3).map(|k| conn.gamma(i, j, k).clone()).collect();
        expect(out, format!("{quantity}{:?}: {actual:?}", entry.index), actual == expected);
        n += 1;
    }
    Ok(n)
}

fn levi_civita_tables() -> Result<Failures> {
    let mut out = Vec::new();
    let src = FixtureSource::embedded();
    let sf = levi_civita(&sasakian_space_form(&ParamScalar::c())?)?;
    let n1 = golden_columns(&mut out, &src.golden("space_form.json")?, "levi_civita", &sf)?;
    let nu = levi_civita(&nonunimodular(&ParamScalar::alpha())?)?;
    let n2 = golden_columns(&mut out, &src.golden("nonunimodular.json")?, "levi_civita", &nu)?;
    expect(&mut out, "both tables have all nine columns", n1 == 9 && n2 == 9);
    expect(&mut out, "nabla_{e3} e1 = ((c+1)/2) e2", sf.gamma(2, 0, 1) == &p("(c+1)/2"));
    expect(
        &mut out,
        "nabla_{e2} e1 = -alpha e2 - e3",
        nu.gamma(1, 0, 1) == &p("-alpha") && nu.gamma(1, 0, 2) == &p("-1"),
    );
    Ok(out)
}

fn ricci_expected(n: usize, a: &ParamScalar, b: &ParamScalar) -> Tensor {
    Tensor::from_fn(n, &[homog_core::tensor::Slot::Down; 2], |x| {
        let mut v = if x[0] == x[1] { a.clone() } else { ParamScalar::zero() };
        if x[0] == 2 && x[1] == 2 {
            v = v.try_add(b).unwrap();
        }
        v
    })
}

fn curvature_values() -> Result<Failures> {
    let mut out = Vec::new();
    let r = curvature(&levi_civita(&sasakian_space_form(&ParamScalar::c())?)?)?;
    expect(&mut out, "R_1212 = c", r.lowered(0, 1, 0, 1) == &p("c"));
    expect(&mut out, "R_1313 = 1", r.lowered(0, 2, 0, 2) == &p("1"));
    expect(&mut out, "R_2323 = 1", r.lowered(1, 2, 1, 2) == &p("1"));
    let ric = ricci(&r)?;
    expect(&mut out, "Ric = (c+1)g + (1-c) eta eta", ric == ricci_expected(3, &p("c+1"), &p("1-c")));
    expect(&mut out, "scalar = 2(c+2)", scalar_curvature(&ric)? == p("2*(c+2)"));

    let alpha = ParamScalar::alpha();
    let r = curvature(&levi_civita(&nonunimodular(&alpha)?)?)?;
    let k12 = sectional(&r, &e(0), &e(1))?;
    expect(&mut out, "K_12 = -3 - alpha^2", k12 == parse_in("-3-alpha^2", Context::Alpha)?);
    let ric = ricci(&r)?;
    let want = ricci_expected(3, &parse_in("-(2+alpha^2)", Context::Alpha)?, &parse_in("4+alpha^2", Context::Alpha)?);
    expect(&mut out, "Ric = -(2+alpha^2)g + (4+alpha^2) eta eta", ric == want);
    Ok(out)
}

fn okumura_suite() -> Result<Failures> {
    let mut out = Vec::new();
    let acs = space_form()?;
    let r = ParamScalar::r();
    let (conn, a) = okumura(&acs, &r)?;
    for (name, t) in [
        ("g", acs.algebra().metric()),
        ("phi", acs.phi().clone()),
        ("eta", acs.eta().clone()),
        ("xi", acs.xi().clone()),
        ("A^r", a.clone()),
    ] {
        expect(&mut out, format!("nabla^r {name} = 0"), conn.covariant_derivative(&t)?.is_zero());
    }
    // T^r(X,Y) = 2 deta(X,Y) xi - (r+1)(eta(X) phi Y - eta(Y) phi X), with deta(X,Y) = g(X, phi Y).
    let phi = acs.phi();
    let torsion = Tensor::from_fn(3, &ONE_TWO, |x| {
        let (i, j, k) = (x[0], x[1], x[2]);
        let deta = phi.get(&[i, j]).clone();
        let mut v = if k == 2 { deta.scale(&q(2, 1)) } else { ParamScalar::zero() };
        let eta = |m: usize| i64::from(m == 2);
        let b = phi.get(&[k, j]).scale(&q(eta(i), 1)).try_sub(&phi.get(&[k, i]).scale(&q(eta(j), 1))).unwrap();
        v = v.try_sub(&b.try_mul(&p("r+1")).unwrap()).unwrap();
        v
    });
    expect(&mut out, "torsion formula", conn.torsion()? == torsion);
    expect_report(&mut out, "curvature", &okumura_curvature_identities(&acs, &r)?);
    Ok(out)
}

fn tanaka_webster_check() -> Result<Failures> {
    let mut out = Vec::new();
    for entry in CatalogEntry::ALL.into_iter().filter(|e| e.is_sasakian()) {
        let acs = standard_acs(&catalog(entry.name(), &CatalogParams::symbolic())?)?;
        let tw = tanaka_webster(&acs)?;
        let gtw = generalized_tanaka_webster(&acs)?;
        let (minus_one, _) = okumura(&acs, &ParamScalar::int(-1))?;
        expect(&mut out, format!("{}: TW = generalized TW", entry.name()), tw.coefficients() == gtw.coefficients());
        expect(&mut out, format!("{}: TW = nabla^(-1)", entry.name()), tw.coefficients() == minus_one.coefficients());
    }
    let acs = standard_acs(&nonunimodular(&ParamScalar::alpha())?)?;
    let tw = tanaka_webster(&acs)?;
    let table = FixtureSource::embedded().golden("nonunimodular.json")?;
    let n = golden_columns(&mut out, &table, "tanaka_webster", &tw)?;
    expect(&mut out, "full tanaka-webster table", n == 9);
    let e2e1: Vec<ParamScalar> = (0..3).map(|k| tw.gamma(1, 0, k).clone()).collect();
    expect(
        &mut out,
        "nabla^_{e2} e1 = -alpha e2",
        e2e1 == vec![ParamScalar::zero(), -ParamScalar::alpha(), ParamScalar::zero()],
    );
    Ok(out)
}

fn classification() -> Result<Failures> {
    let mut out = Vec::new();
    let acs = space_form()?;
    let a = acs.algebra();
    let class_at = |r: &ParamScalar| -> Result<_> { tv_classify(&HomogStructure::new(a, okumura_tensor(&acs, r)?)?) };
    let family = class_at(&ParamScalar::r())?;
    expect(&mut out, "symbolic r: T2+T3", family.class == TVClass::T2T3);
    expect(&mut out, "c12(A^r) = 0", family.c12.iter().all(ParamScalar::is_zero));
    for r in -6..=6 {
        let got = class_at(&ParamScalar::ratio(r, 2))?.class;
        let want = match r {
            -4 => TVClass::T2,
            2 => TVClass::T3,
            _ => TVClass::T2T3,
        };
        expect(&mut out, format!("r = {r}/2: {}", got.label()), got == want);
    }
    expect(&mut out, "A^1 = -dV", okumura_tensor(&acs, &ParamScalar::one())? == volume_tensor(a)?.neg());
    Ok(out)
}

fn main_theorem_c_at_least_minus_3() -> Result<Failures> {
    let mut out = Vec::new();
    let acs = space_form()?;
    let a = acs.algebra();
    let s = HomogStructure::new(a, okumura_tensor(&acs, &ParamScalar::r())?)?;
    expect_report(&mut out, "as_check", &as_check(&s, Some(&acs))?.conditions);
    expect(&mut out, "holonomy 1 for symbolic r", nomizu_reconstruct(&s, Some(&acs))?.holonomy_dim == 1);
    let r0 = p("(c+1)/2");
    let s0 = HomogStructure::new(a, okumura_tensor(&acs, &r0)?)?;
    expect(&mut out, "holonomy 0 at r = (c+1)/2", nomizu_reconstruct(&s0, Some(&acs))?.holonomy_dim == 0);
    expect(&mut out, "Gamma(nabla~) = 0 at r = (c+1)/2", s0.connection()?.coefficients().is_zero());
    for c in [-3, -2, 0, 1, 5] {
        let ac = standard_acs(&sasakian_space_form(&ParamScalar::int(c))?)?;
        for r2 in -6..=6 {
            let r = ParamScalar::ratio(r2, 2);
            let s = HomogStructure::new(ac.algebra(), okumura_tensor(&ac, &r)?)?;
            let dim = nomizu_reconstruct(&s, Some(&ac))?.holonomy_dim;
            let want = if r2 == c + 1 { 0 } else { 1 };
            expect(&mut out, format!("c = {c}, r = {r2}/2: holonomy {dim}"), dim == want);
        }
    }
    Ok(out)
}

fn main_theorem_c_below_minus_3() -> Result<Failures> {
    let mut out = Vec::new();
    for s3 in ["0", "2", "-1", "1/2", "-5"] {
        let b = sigma_branches(&p(s3), &CMode::Alpha)?;
        expect(&mut out, format!("sigma3 = {s3}: trivial only"), !b.has_circle() && b.branches.len() == 1);
    }
    expect(&mut out, "sigma3 = 1: circle", sigma_branches(&ParamScalar::one(), &CMode::Alpha)?.has_circle());
    let (s, acs) = sigma_structure(&sasakian_space_form(&ParamScalar::c_in_alpha())?)?;
    let report = as_check(&s, Some(&acs))?;
    expect_report(&mut out, "as_check", &report.conditions);
    expect(&mut out, "as_check includes nabla~ phi", report.conditions.get("nabla~ phi = 0").is_some());
    expect(&mut out, "curvature(nabla~) = 0", curvature(&s.connection()?)?.is_zero());

    let l = nomizu_reconstruct(&s, Some(&acs))?;
    let point = Assignment::new().with_int(Var::Alpha, 5).with_int(Var::S1, 3).with_int(Var::S2, 4);
    let at = l.instantiate(&point)?;
    expect(&mut out, "dim h = 0 at (5, 3, 4)", at.holonomy_dim == 0);
    let m: Vec<Vec<ParamScalar>> = tilde_frame()?
        .matrix()
        .iter()
        .map(|row| row.iter().map(|x| x.instantiate_partial(&point).unwrap()).collect())
        .collect();
    let tilde = at.to_lie_algebra("tilde")?.change_frame(&FrameChange::orthonormal(m))?;
    let br = |i: usize, j: usize| -> Vec<ParamScalar> { (0..3).map(|k| tilde.c(i, j, k).clone()).collect() };
    let int = ParamScalar::int;
    expect(&mut out, "[e1,e2] = 5 e2 + 2 e3", br(0, 1) == vec![int(0), int(5), int(2)]);
    expect(&mut out, "[e2,e3] = 0", br(1, 2).iter().all(ParamScalar::is_zero));
    expect(&mut out, "[e3,e1] = 0", br(2, 0).iter().all(ParamScalar::is_zero));

    let nu = nonunimodular(&ParamScalar::alpha())?;
    let minus = HomogStructure::new(&nu, levi_civita(&nu)?.coefficients().neg())?;
    let class = tv_classify(&minus)?;
    expect(&mut out, "minus structure is T1+T2+T3", class.class == TVClass::T1T2T3);
    let strict = class.satisfied.iter().all(|(c, held)| *held == (*c == TVClass::T1T2T3));
    expect(&mut out, "no proper subclass holds", strict);
    Ok(out)
}

fn specializations() -> Result<Failures> {
    let mut out = Vec::new();
    expect(
        &mut out,
        "c = -3 is the Heisenberg algebra",
        sasakian_space_form(&ParamScalar::int(-3))?.structure_constants() == heisenberg()?.structure_constants(),
    );
    expect_report(&mut out, "c = -3", &moduli_report(&CMode::Rational(q(-3, 1)))?.checks);
    let su2 = su2_round()?;
    let acs = standard_acs(&su2)?;
    let dv = HomogStructure::new(&su2, volume_tensor(&su2)?.scale(&-ParamScalar::r())?)?;
    expect_report(&mut out, "-r dV", &as_check(&dv, None)?.conditions);
    expect(&mut out, "-r dV is T3", tv_classify(&dv)?.class == TVClass::T3);
    let ar = HomogStructure::new(&su2, okumura_tensor(&acs, &ParamScalar::r())?)?;
    expect_report(&mut out, "su2 A^r", &as_check(&ar, Some(&acs))?.conditions);
    Ok(out)
}

fn deformation() -> Result<Failures> {
    let mut out = Vec::new();
    let round = standard_acs(&su2_round()?)?;
    let c = ParamScalar::c();
    let d = d_homothetic_deform(&round, &c)?;
    expect_report(&mut out, "deformation", &d.checks);
    expect_report(&mut out, "sasaki", &sasaki_check(&d.acs)?);
    let r = curvature(&levi_civita(&d.algebra)?)?;
    for i in 0..2 {
        expect(&mut out, format!("H(e{}) = c", i + 1), holomorphic_sectional(&r, &d.acs, &e(i))? == c);
    }
    Ok(out)
}

fn structure_equation_check() -> Result<Failures> {
    let mut out = Vec::new();
    for a in [sasakian_space_form(&ParamScalar::c())?, nonunimodular(&ParamScalar::alpha())?] {
        let se = structure_equations(&levi_civita(&a)?)?;
        expect(&mut out, format!("{}: first structure equation", a.name()), se.first_residual.is_zero());
        expect(&mut out, format!("{}: second structure equation", a.name()), se.second_residual.is_zero());
    }
    let se = structure_equations(&levi_civita(&sasakian_space_form(&ParamScalar::c())?)?)?;
    let z = ParamScalar::zero;
    expect(&mut out, "omega_2^1 = -((c+1)/2) theta^3", se.connection_form(1, 0) == vec![z(), z(), p("-(c+1)/2")]);
    expect(&mut out, "omega_3^1 = theta^2", se.connection_form(2, 0) == vec![z(), ParamScalar::one(), z()]);
    expect(&mut out, "omega_3^2 = -theta^1", se.connection_form(2, 1) == vec![-ParamScalar::one(), z(), z()]);
    Ok(out)
}

fn reduction() -> Result<Failures> {
    let mut out = Vec::new();
    let acs = space_form()?;
    let s = HomogStructure::new(acs.algebra(), okumura_tensor(&acs, &ParamScalar::r())?)?;
    expect(&mut out, "A^r reduces to 0", boothby_wang_reduce(&acs, &s)?.is_zero());
    let report = h2_structures(&ParamScalar::alpha())?;
    expect_report(&mut out, "H2", &report);
    expect(&mut out, "nabla + S = 0 is checked", report.get("H2: nabla + S = 0").is_some());
    Ok(out)
}

fn negative_tests() -> Result<Failures> {
    let mut out = Vec::new();
    let src = FixtureSource::embedded();
    for suite in Suite::PARTS {
        let report = run_suite(suite, &Params::new(), &src)?;
        let negatives: Vec<_> = report.checks.iter().filter(|c| c.anchor == "negative").collect();
        expect(&mut out, format!("{suite}: has a mutated input"), !negatives.is_empty());
        for c in negatives.iter().filter(|c| !c.passed) {
            out.push(format!("{suite}: {}", c.name));
        }
    }
    let bad = Params::parse("alpha=5,s1=3,s2=5")?;
    match run_suite(Suite::Sigma, &bad, &src) {
        Err(e) => {
            expect(&mut out, "relation violation exits with 2", e.kind() == "RelationViolation" && e.exit_code() == 2)
        }
        Ok(_) => out.push("relation violation accepted".into()),
    }
    let a = sasakian_space_form(&ParamScalar::c())?;
    let mut t = Tensor::zeros(3, &ONE_TWO);
    t.set(&[0, 0, 1], ParamScalar::one());
    match HomogStructure::new(&a, t) {
        Err(e @ Error::SkewViolation(_)) => expect(&mut out, "skew violation exits with 2", e.exit_code() == 2),
        other => out.push(format!("skew violation not reported: {other:?}")),
    }
    Ok(out)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("Levi-Civita golden tables", levi_civita_tables),
        ("curvature golden values", curvature_values),
        ("Okumura connection identities", okumura_suite),
        ("Tanaka-Webster connection", tanaka_webster_check),
        ("Tricerri-Vanhecke classes of A^r", classification),
        ("classification for c >= -3", main_theorem_c_at_least_minus_3),
        ("classification for c < -3", main_theorem_c_below_minus_3),
        ("Heisenberg and su(2) specializations", specializations),
        ("D-homothetic deformation", deformation),
        ("structure equations", structure_equation_check),
        ("reduction to the hyperbolic plane", reduction),
        ("negative tests", negative_tests),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let failures = match f() {
            Ok(v) => v,
            Err(e) => vec![format!("error: {e}")],
        };
        let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict}: {name}", n + 1);
        for msg in &failures {
            println!("    {msg}");
        }
        if !failures.is_empty() {
            failed += 1;
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
