use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unimodal")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn column(doc: &Value, key: &str) -> Vec<Value> {
    doc["results"]["rows"].as_array().unwrap().iter().map(|r| r[key].clone()).collect()
}

#[test]
fn c_values() {
    let doc = json_of(&["c-values", "--max", "6"]);
    assert_eq!(doc["command"], "c-values");
    assert_eq!(doc["params"], json!({"max": 6}));
    assert_eq!(column(&doc, "c"), ["1", "1", "1", "2", "3", "5"].map(|s| json!(s)));
    assert_eq!(column(&json_of(&["c-values", "--max", "1"]), "c"), [json!("1")]);
}

#[test]
fn c_values_range_is_a_usage_error() {
    assert_eq!(run(&["c-values", "--max", "0"]).status.code(), Some(2));
    assert_eq!(run(&["c-values", "--max", "65"]).status.code(), Some(2));
}

#[test]
fn table_rows_in_canonical_order() {
    let doc = json_of(&["table", "--n", "3"]);
    assert_eq!(column(&doc, "cycle_type"), [json!([3]), json!([2, 1]), json!([1, 1, 1])]);
    assert_eq!(column(&doc, "count"), [json!(1), json!(2), json!(1)]);
}

#[test]
fn table_with_q_and_check() {
    let doc = json_of(&["table", "--n", "4", "--q", "--check"]);
    let rows = doc["results"]["rows"].as_array().unwrap();
    let row = rows.iter().find(|r| r["cycle_type"] == json!([2, 2])).unwrap();
    assert_eq!(row["q_coefficients"], json!([["0", "1"], ["0", "1"], ["0", "1"], ["1", "1"]]));
    assert!(rows.iter().all(|r| r["check"] == "pass"));
    assert_eq!(doc["results"]["total"], json!(8));
    assert_eq!(doc["results"]["status"], "pass");
}

#[test]
fn theorem1_series_degree_two() {
    let doc = json_of(&["series", "--kind", "theorem1", "--degree", "2"]);
    let terms: Vec<(Value, Value)> = doc["results"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["partition"].clone(), r["coefficient"].clone()))
        .collect();
    let two = json!(["2", "1"]);
    assert_eq!(
        terms,
        vec![
            (json!([]), json!(["1", "1"])),
            (json!([1]), two.clone()),
            (json!([2]), two.clone()),
            (json!([1, 1]), two),
        ]
    );
    let text = String::from_utf8(run(&["series", "--kind", "theorem1", "--degree", "2"]).stdout).unwrap();
    assert!(text.contains("1 + 2*p(1) + 2*p(2) + 2*p(1,1)"));
}

#[test]
fn sequence_series() {
    let doc = json_of(&["series", "--kind", "no-k-cycle", "--k", "1", "--degree", "6"]);
    assert_eq!(column(&doc, "coefficient"), ["0", "1", "1", "3", "5", "11"].map(|s| json!(s)));
    let doc = json_of(&["series", "--kind", "order", "--m", "2", "--degree", "4"]);
    assert_eq!(column(&doc, "coefficient"), ["1", "2", "3", "4"].map(|s| json!(s)));
}

#[test]
fn theoremq_coefficients_are_polynomials() {
    let doc = json_of(&["series", "--kind", "theoremq", "--degree", "4"]);
    let rows = doc["results"]["rows"].as_array().unwrap();
    let row = rows.iter().find(|r| r["partition"] == json!([2, 2])).unwrap();
    assert_eq!(row["coefficient"], json!([["0", "1"], ["0", "1"], ["0", "1"], ["-1", "1"], ["1", "1"]]));
}

#[test]
fn series_argument_errors() {
    assert_eq!(run(&["series", "--kind", "order", "--degree", "4"]).status.code(), Some(2));
    assert_eq!(run(&["series", "--kind", "theorem1", "--degree", "4", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["series", "--kind", "theorem1", "--degree", "17"]).status.code(), Some(2));
    assert_eq!(run(&["series", "--kind", "bogus", "--degree", "4"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass_with_notes() {
    for suite in ["oracle", "st", "bl"] {
        let doc = json_of(&["verify", "--n-max", "8", "--suite", suite]);
        assert_eq!(doc["results"]["status"], "pass");
        assert_eq!(doc["params"]["suites"], json!([suite]));
        assert!(column(&doc, "status").iter().all(|s| s == "pass"));
    }
    let doc = json_of(&["verify", "--n-max", "8", "--suite", "bl"]);
    let notes: Vec<String> = column(&doc, "note").iter().filter_map(|n| n.as_str().map(String::from)).collect();
    assert!(notes.iter().any(|n| n.contains("mu(d)")));
}

#[test]
fn verify_orders_and_dedups_suites() {
    let doc = json_of(&["verify", "--n-max", "4", "--suite", "st", "oracle", "st"]);
    assert_eq!(doc["params"]["suites"], json!(["oracle", "st"]));
    assert_eq!(run(&["verify", "--n-max", "4", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n-max", "17"]).status.code(), Some(2));
}

#[test]
fn csv_output() {
    let out = run(&["table", "--n", "3", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "cycle_type,count\n(3),1\n\"(2,1)\",2\n\"(1,1,1)\",1\n");
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let args = ["table", "--n", "5", "--q", "--format", "json"];
    let to_file = run(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), run(&args).stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}
