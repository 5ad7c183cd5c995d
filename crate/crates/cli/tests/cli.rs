use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_homog");

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run_env(args: &[&str], env: &[(&str, &Path)]) -> (i32, Value, Output) {
    let mut cmd = Command::new(BIN);
    cmd.args(args).current_dir(root()).env_remove("HOMOG_FIXTURES");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), doc, out)
}

fn run(args: &[&str]) -> (i32, Value) {
    let (code, doc, _) = run_env(args, &[]);
    assert_valid(&doc);
    (code, doc)
}

fn assert_valid(doc: &Value) {
    let text = std::fs::read_to_string(root().join("schema/report.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{doc:#}");
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("homog-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn catalog_list_has_six_entries() {
    let (code, doc) = run(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["entries"].as_array().unwrap().len(), 6);
}

#[test]
fn catalog_show_symbolic_and_rational() {
    let (code, doc) = run(&["catalog", "show", "sasakian_space_form"]);
    assert_eq!(code, 0);
    let brackets = doc["result"]["algebra"]["brackets"].to_string();
    assert!(brackets.contains("c"), "{brackets}");
    let (code, doc) = run(&["catalog", "show", "nonunimodular", "--param", "alpha=5"]);
    assert_eq!(code, 0);
    let first = &doc["result"]["algebra"]["brackets"][0];
    assert_eq!(first["pair"], serde_json::json!([1, 2]));
    assert_eq!(first["value"], serde_json::json!(["0", "5", "2"]));
}

#[test]
fn catalog_unknown_entry_exits_2() {
    let (code, doc) = run(&["catalog", "show", "so3"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "UnknownCatalogEntry");
}

#[test]
fn verify_paper_passes() {
    let (code, doc) = run(&["verify", "--suite", "paper"]);
    assert_eq!(code, 0, "{doc:#}");
    let checks = doc["result"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["anchor"].as_str().is_some_and(|a| !a.is_empty())));
    assert!(checks.iter().any(|c| c["name"] == "lowered_curvature(1,2,1,2)"));
}

#[test]
fn verify_sigma_at_a_point() {
    let (code, doc) = run(&["verify", "--suite", "sigma", "--param", "alpha=5,s1=3,s2=4"]);
    assert_eq!(code, 0, "{doc:#}");
    let names: Vec<&str> =
        doc["result"]["checks"].as_array().unwrap().iter().filter_map(|c| c["name"].as_str()).collect();
    assert!(names.contains(&"curvature of nabla~ = 0"));
    assert!(names.iter().any(|n| n.starts_with("(alpha, s1, s2) = (5, 3, 4)")));
}

#[test]
fn verify_relation_violation_exits_2() {
    let (code, doc) = run(&["verify", "--suite", "sigma", "--param", "alpha=5,s1=3,s2=5"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "RelationViolation");
    let (code, doc) = run(&["verify", "--suite", "sigma", "--param", "alpha=5,s1=sym"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "MixedParameters");
}

#[test]
fn mutated_fixture_fails_with_1() {
    let dir = scratch("mutated");
    for entry in std::fs::read_dir(root().join("fixtures")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let text = if path.ends_with("space_form.json") {
            text.replacen("\"expected\": \"c\"", "\"expected\": \"-c\"", 1)
        } else {
            text
        };
        std::fs::write(dir.join(path.file_name().unwrap()), text).unwrap();
    }
    let (code, doc, _) = run_env(&["verify", "--suite", "paper"], &[("HOMOG_FIXTURES", &dir)]);
    assert_valid(&doc);
    assert_eq!(code, 1);
    let failed: Vec<&str> = doc["result"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .filter_map(|c| c["name"].as_str())
        .collect();
    assert_eq!(failed, vec!["lowered_curvature(1,2,1,2)"]);
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn missing_fixture_dir_exits_3() {
    let dir = root().join("no-such-fixture-dir");
    let (code, doc, _) = run_env(&["verify", "--suite", "paper"], &[("HOMOG_FIXTURES", &dir)]);
    assert_valid(&doc);
    assert_eq!(code, 3);
}

#[test]
fn classify_okumura() {
    for (r, class) in [("-2", "T2"), ("1", "T3"), ("sym", "T2+T3"), ("1/2", "T2+T3")] {
        let (code, doc) = run(&["classify", "--structure", "okumura", "--r", r]);
        assert_eq!(code, 0);
        assert_eq!(doc["result"]["tv_class"], class, "r = {r}");
        assert_eq!(doc["result"]["ambrose_singer"], true);
    }
}

#[test]
fn classify_file() {
    let (code, doc) = run(&["classify", "--structure", "file:fixtures/minus_connection.json"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["tv_class"], "T1+T2+T3");

    let dir = scratch("classify");
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"algebra":"heisenberg","S":[[["0","1","0"],["0","0","0"],["0","0","0"]],[["0","0","0"],["0","0","0"],["0","0","0"]],[["0","0","0"],["0","0","0"],["0","0","0"]]]}"#,
    )
    .unwrap();
    let arg = format!("file:{}", bad.display());
    let (code, doc) = run(&["classify", "--structure", &arg]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "SkewViolation");
    let (code, _) = run(&["classify", "--structure", "file:/no/such/file.json"]);
    assert_eq!(code, 3);
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn structure_fixture_matches_schema() {
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(root().join("schema/structure.schema.json")).unwrap()).unwrap();
    let doc: Value =
        serde_json::from_str(&std::fs::read_to_string(root().join("fixtures/minus_connection.json")).unwrap()).unwrap();
    assert!(jsonschema::validator_for(&schema).unwrap().is_valid(&doc));
}

#[test]
fn sweep_heisenberg_row() {
    let dir = scratch("sweep");
    let out = dir.join("sweep.json");
    let out_s = out.display().to_string();
    let (code, doc) = run(&["sweep", "--r-grid", "-3:3:1", "--c-grid", "-3", "--out", &out_s]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["passed"], 7);
    assert_eq!(doc["result"]["total"], 7);
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(file["points"].as_array().unwrap().len(), 7);

    let (code, doc) = run(&["sweep", "--r-grid", "1:0:1", "--c-grid", "0", "--out", &out_s]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["total"], 0);

    let (code, doc) = run(&["sweep", "--r-grid", "0", "--c-grid", "-10:0:1", "--out", &out_s, "--sequential"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["passed"], 11);
    assert_eq!(doc["result"]["skip_list"].as_array().unwrap().len(), 8);
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn sweep_io_error_exits_3() {
    let (code, doc) = run(&["sweep", "--r-grid", "0", "--c-grid", "0", "--out", "/no/such/dir/out.json"]);
    assert_eq!(code, 3);
    assert_eq!(doc["error"]["kind"], "IoError");
    let (code, _) = run(&["sweep", "--r-grid", "0:1:0", "--c-grid", "0", "--out", "/tmp/x.json"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "okumura", "--param", "c=-3"];
    let (_, _, a) = run_env(&args, &[]);
    let (_, _, b) = run_env(&args, &[]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_format_lists_checks() {
    let out = Command::new(BIN).args(["verify", "--suite", "contact", "--format", "text"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(text.contains("PASS [deformation]"), "{text}");
    assert!(text.ends_with("status: pass (exit 0)\n"));
}

#[test]
fn schema_rejects_inconsistent_documents() {
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(root().join("schema/report.schema.json")).unwrap()).unwrap();
    let v = jsonschema::validator_for(&schema).unwrap();
    let (_, good) = run(&["catalog", "list"]);
    assert!(v.is_valid(&good));
    let mut bad = good.clone();
    bad["exit_code"] = 1.into();
    assert!(!v.is_valid(&bad));
    let mut bad = good;
    bad["status"] = "error".into();
    assert!(!v.is_valid(&bad));
}
