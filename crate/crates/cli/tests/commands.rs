use std::process::{Command, Output};

use serde_json::Value;

fn nilrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilrep")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn degrees(table: &Value) -> Vec<i64> {
    table["characters"].as_array().unwrap().iter().map(|c| c["degree"].as_i64().unwrap()).collect()
}

#[test]
fn catalog_listing() {
    let out = nilrep(&["catalog"]);
    assert!(out.status.success());
    let rows = json(&out);
    let find = |name: &str| rows.as_array().unwrap().iter().find(|r| r["name"] == name).unwrap().clone();
    assert_eq!(rows.as_array().unwrap().len(), 6);
    assert_eq!(find("ul(3,2)")["order"], 8);
    assert_eq!(find("ul(4,2)")["dim"], 6);
    assert_eq!(find("ul(4,2)")["class"], 4);
    assert_eq!(find("free(2,2,3)")["dim"], 6);
}

#[test]
fn catalog_takes_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heis.json");
    std::fs::write(&path, nilrep(&["show", "ul(3,2)"]).stdout).unwrap();
    let rows = json(&nilrep(&["catalog", path.to_str().unwrap()]));
    let last = rows.as_array().unwrap().last().unwrap();
    assert_eq!(last["name"], "heis");
    assert_eq!(last["order"], 8);
}

#[test]
fn show_is_stable() {
    let a = nilrep(&["show", "free(2,2,3)"]);
    let b = nilrep(&["show", "free(2,2,3)"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn chartables() {
    let mut d = degrees(&json(&nilrep(&["chartable", "ul(3,2)"])));
    d.sort();
    assert_eq!(d, vec![1, 1, 1, 1, 2]);
    let mut d = degrees(&json(&nilrep(&["chartable", "ul(3,3)"])));
    d.sort();
    assert_eq!(d, [vec![1; 9], vec![3; 2]].concat());
}

#[test]
fn chartable_writes_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = nilrep(&["chartable", "ul(3,2)", "--out", dir.path().to_str().unwrap(), "--format", "csv"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("character,degree"));
    assert!(dir.path().join("ul_3_2.table.json").exists());
    assert!(dir.path().join("ul_3_2.table.csv").exists());
}

#[test]
fn abelian_file_has_linear_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square_zero.json");
    // x^2 = y in dimension 2: commutative, so every character is linear.
    let text = r#"{"ring": {"kind": "finite-field", "p": 2, "k": 1, "modulus": [0, 1]}, "dim": 2, "sc": [[0, 0, 1, "1"]]}"#;
    std::fs::write(&path, text).unwrap();
    let out = nilrep(&["chartable", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(degrees(&json(&out)), vec![1; 4]);
}

#[test]
fn verify_all_passes_on_heisenberg() {
    let out = nilrep(&["verify", "ul(3,2)", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["passed"], true);
    assert!(report["checks"].as_array().unwrap().len() > 5);
}

#[test]
fn verify_gutkin_on_ul4() {
    let out = nilrep(&["verify", "ul(4,2)", "--suite", "gutkin"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let degrees = report["checks"][0]["detail"]["degrees"].as_array().unwrap().clone();
    assert!(degrees.iter().all(|d| [1, 2, 4].contains(&d.as_i64().unwrap())));
}

#[test]
fn non_nilpotent_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("idempotent.json");
    std::fs::write(&path, r#"{"ring": {"kind": "finite-field", "p": 2, "k": 1, "modulus": [0, 1]}, "dim": 1, "sc": [[0, 0, 0, "1"]]}"#).unwrap();
    let out = nilrep(&["verify", path.to_str().unwrap(), "--suite", "all"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert_eq!(out.status.code(), Some(2), "{err}");
    assert!(err.contains("nilpotent"), "{err}");
}

#[test]
fn unknown_target_and_cap_are_usage_errors() {
    assert_eq!(nilrep(&["chartable", "nonsense"]).status.code(), Some(2));
    assert_eq!(nilrep(&["chartable", "ul(4,2)", "--cap", "32"]).status.code(), Some(2));
}

#[test]
fn reports_are_reproducible() {
    let a = nilrep(&["verify", "ul(3,3)", "--suite", "all", "--seed", "7"]);
    let b = nilrep(&["verify", "ul(3,3)", "--suite", "all", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn decompose_one_character() {
    let out = nilrep(&["decompose", "ul(3,2)", "--character", "4"]);
    assert!(out.status.success());
    let datum = json(&out);
    assert_eq!(datum["degree"], 2);
    assert_eq!(datum["dim_b"], 2);
    assert_eq!(nilrep(&["decompose", "ul(3,2)", "--character", "9"]).status.code(), Some(2));
}

#[test]
fn no_gutkin_keeps_tables_only() {
    assert!(nilrep(&["--no-gutkin", "chartable", "ul(3,4)"]).status.success());
    assert_eq!(nilrep(&["--no-gutkin", "verify", "ul(3,2)", "--suite", "gutkin"]).status.code(), Some(2));
    let out = nilrep(&["--no-gutkin", "verify", "ul(3,2)", "--suite", "all"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["skipped"], serde_json::json!(["gutkin", "polarize"]));
}

#[test]
fn halasi_explore_reports() {
    let out = nilrep(&["halasi-explore", "--q", "2", "--gens", "2", "--class", "3", "--k", "2"]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["contains"], true);
    assert!(r["lhs_order"].as_u64().unwrap() >= r["rhs_order"].as_u64().unwrap());
}
