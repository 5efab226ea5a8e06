//! End-to-end tests of the installed binary: output shapes, exit codes,
//! configuration handling and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn solomon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solomon"))
        .args(args)
        .env_remove("SOLOMON_THREADS")
        .output()
        .expect("binary runs")
}

fn solomon_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solomon"))
        .args(args)
        .env("SOLOMON_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exits normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn compute_grid_matches_the_brute_force_values() {
    let out = solomon(&["compute", "a", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["flavor"], "a");
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 8);
    let value = |i: Value, j: Value, k: Value| {
        entries
            .iter()
            .find(|e| e["I"] == i && e["J"] == j && e["K"] == k)
            .unwrap()["value"]
            .as_i64()
            .unwrap()
    };
    use serde_json::json;
    assert_eq!(value(json!([]), json!([]), json!([])), 1);
    assert_eq!(value(json!([1]), json!([1]), json!([])), 1);
    assert_eq!(value(json!([]), json!([1]), json!([1])), 1);
    assert_eq!(value(json!([1]), json!([]), json!([1])), 1);
    assert_eq!(value(json!([1]), json!([1]), json!([1])), 0);

    let sparse = solomon(&["compute", "a", "--n", "2", "--nonzero-only"]);
    assert_eq!(json(&sparse)["entries"].as_array().unwrap().len(), 4);

    let signed = solomon(&["compute", "c", "--n", "1"]);
    let doc = json(&signed);
    assert_eq!(doc["flavor"], "c");
    let hit = doc["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["I"] == json!([0]) && e["J"] == json!([0]) && e["K"] == json!([]))
        .unwrap();
    assert_eq!(hit["value"], 1);

    let counts = solomon(&["compute", "d", "--n", "2"]);
    let doc = json(&counts);
    assert_eq!(
        doc["entries"],
        json!([
            {"shape": [2], "I": [], "value": 1},
            {"shape": [1, 1], "I": [1], "value": 1},
        ])
    );
}

#[test]
fn compute_writes_csv_and_files() {
    let out = solomon(&["compute", "a", "--n", "2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.starts_with("I,J,K,value\n"));
    assert_eq!(text.lines().count(), 5);

    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("a2.csv");
    let path_str = path.to_str().unwrap();
    let filed = solomon(&["compute", "a", "--n", "2", "--format", "csv", "--out", path_str]);
    assert_eq!(code(&filed), 0);
    assert!(filed.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
}

#[test]
fn compute_rejects_bad_usage() {
    for args in [
        &["compute", "z", "--n", "2"][..],
        &["compute", "a", "--n", "9"][..],
        &["compute", "a", "--n", "0"][..],
    ] {
        let out = solomon(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_emits_reports_with_exit_codes() {
    let out = solomon(&["verify", "eq2-carter", "--n", "4"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["schema"], "verify-report/1");
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["counterexample"], Value::Null);
    assert!(doc["millis"].is_u64());

    let stripped = solomon(&["verify", "eq2-carter", "--n", "4", "--no-timing"]);
    assert!(json(&stripped).get("millis").is_none());

    assert_eq!(code(&solomon(&["verify", "nothing", "--n", "1"])), 2);
    assert_eq!(code(&solomon(&["verify", "eq2-carter", "--n", "99"])), 2);
}

#[test]
fn verify_all_honors_the_config() {
    let config = tmp_file("suite-small.json", r#"{"thm3-cdd":2,"eq2-carter":3}"#);
    let out = solomon(&["verify-all", "--config", config.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["schema"], "verify-suite/1");
    assert_eq!(doc["status"], "pass");
    assert!(doc["errors"].as_array().unwrap().is_empty());
    let ran: Vec<(String, u64)> = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["identity"].as_str().unwrap().to_string(), r["n"].as_u64().unwrap()))
        .collect();
    let expect: Vec<(String, u64)> = [("eq2-carter", 1), ("eq2-carter", 2), ("eq2-carter", 3), ("thm3-cdd", 1), ("thm3-cdd", 2)]
        .iter()
        .map(|(id, n)| (id.to_string(), *n))
        .collect();
    assert_eq!(ran, expect);

    let empty = tmp_file("suite-empty.json", "{}");
    let out = solomon(&["verify-all", "--config", empty.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["status"], "pass");
    assert!(doc["reports"].as_array().unwrap().is_empty());

    let partial = tmp_file("suite-partial.json", r#"{"eq2-carter":99,"thm3-cdd":1}"#);
    let out = solomon(&["verify-all", "--config", partial.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let doc = json(&out);
    assert_eq!(doc["status"], "error");
    let errors = doc["errors"].as_array().unwrap();
    assert_eq!(errors.len(), 1);
    assert_eq!(errors[0]["identity"], "eq2-carter");
    assert_eq!(errors[0]["requested"], 99);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["identity"], "thm3-cdd");

    let broken = tmp_file("suite-broken.json", "not json");
    assert_eq!(code(&solomon(&["verify-all", "--config", broken.to_str().unwrap()])), 2);
}

#[test]
fn reports_validate_against_the_published_schema() {
    let schema_path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/report-schema.json");
    let schema: Value = serde_json::from_slice(&std::fs::read(schema_path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();

    let single = solomon(&["verify", "eq6-gessel", "--n", "3"]);
    assert!(validator.is_valid(&json(&single)));

    let config = tmp_file("suite-schema.json", r#"{"eq1-ab":2,"bogus":1}"#);
    let suite = solomon(&["verify-all", "--config", config.to_str().unwrap()]);
    assert_eq!(code(&suite), 2);
    assert!(validator.is_valid(&json(&suite)));

    // No identity fails at desk scale, so the failure shape is validated
    // from a hand-built report.
    let failing = serde_json::json!({
        "schema": "verify-report/1",
        "identity": "eq2-carter",
        "n": 3,
        "status": "fail",
        "counterexample": {"key": "I={1}, J={2}", "lhs": "2", "rhs": "3"},
        "millis": 12
    });
    assert!(validator.is_valid(&failing));

    let wrong_tag = serde_json::json!({
        "schema": "verify-report/2",
        "identity": "eq2-carter",
        "n": 3,
        "status": "pass",
        "counterexample": null
    });
    assert!(!validator.is_valid(&wrong_tag));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let config = tmp_file("suite-repeat.json", r#"{"eq6-gessel":3,"thm4-typeB-kronecker":2}"#);
    let path = config.to_str().unwrap();
    let args = ["verify-all", "--config", path, "--no-timing"];
    let first = solomon(&args);
    let second = solomon(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let capped = solomon_threads(&args, "1");
    assert_eq!(first.stdout, capped.stdout);

    let bad = solomon_threads(&["verify", "eq2-carter", "--n", "2"], "zero");
    assert_eq!(code(&bad), 2);

    let table_args = ["compute", "gB", "--n", "2", "--format", "csv"];
    assert_eq!(solomon(&table_args).stdout, solomon(&table_args).stdout);
}
