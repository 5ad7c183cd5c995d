use homog_core::exactalg::AlgError;
use homog_core::fixture::FixtureSource;
use homog_core::params::Params;
use homog_core::suite::{run_suite, Suite};
use homog_core::Error;

fn run(suite: Suite, params: &str) -> homog_core::suite::SuiteReport {
    run_suite(suite, &Params::parse(params).unwrap(), &FixtureSource::embedded()).unwrap()
}

#[test]
fn all_suites_pass_symbolically() {
    let report = run(Suite::All, "");
    let failures: Vec<String> = report.failures().iter().map(|c| format!("[{}] {}", c.anchor, c.name)).collect();
    assert!(failures.is_empty(), "{failures:?}");
    for part in Suite::PARTS {
        assert!(report.checks.iter().any(|c| c.suite == part && c.anchor == "negative"), "{part}");
    }
}

#[test]
fn suites_pass_at_rational_points() {
    for (suite, params) in [
        (Suite::Paper, "c=2"),
        (Suite::Paper, "c=-5"),
        (Suite::Paper, "alpha=2"),
        (Suite::Contact, "c=1/3"),
        (Suite::Okumura, "c=-3,r=-1"),
        (Suite::Okumura, "r=-2"),
        (Suite::Sigma, "alpha=13,s1=-5,s2=12"),
    ] {
        let report = run(suite, params);
        assert!(report.passed(), "{suite} {params}: {:?}", report.failures());
    }
}

#[test]
fn sigma_point_appears_in_names() {
    let report = run(Suite::Sigma, "alpha=13,s1=5,s2=12");
    assert!(report.checks.iter().any(|c| c.name.starts_with("(alpha, s1, s2) = (13, 5, 12)")));
}

#[test]
fn invalid_parameters_are_errors() {
    let src = FixtureSource::embedded();
    let err = run_suite(Suite::Sigma, &Params::parse("alpha=5,s1=3,s2=5").unwrap(), &src).unwrap_err();
    assert!(matches!(err, Error::Alg(AlgError::RelationViolation(_))));
    let err = run_suite(Suite::Paper, &Params::parse("c=sym,alpha=1").unwrap(), &src).unwrap_err();
    assert!(matches!(err, Error::MixedParameters(_)));
    let err = run_suite(Suite::Paper, &Params::new(), &FixtureSource::dir("/no/such/dir")).unwrap_err();
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn report_json_counts() {
    let report = run(Suite::Okumura, "");
    let doc = report.to_json();
    assert_eq!(doc["total"], report.checks.len());
    assert_eq!(doc["failed"], 0);
    assert_eq!(doc["suite"], "okumura");
}
