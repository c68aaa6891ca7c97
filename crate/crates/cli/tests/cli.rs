use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_f1points"))
        .args(args)
        .env_remove("F1POINTS_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Header-checked CSV rows as string maps.
fn csv_rows(text: &str, formula: &str) -> Vec<std::collections::HashMap<String, String>> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(format!("# formula: {formula}").as_str()));
    let body: Vec<&str> = lines.filter(|l| !l.starts_with('#')).collect();
    let body = body.join("\n");
    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    rdr.records()
        .map(|r| headers.iter().map(String::from).zip(r.unwrap().iter().map(String::from)).collect())
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn projective_census_matches_binomial_oracle() {
    let rows = csv_rows(&stdout(&["count", "--gadget", "pd", "--d", "3", "--n", "2", "--format", "csv"]), "binomial");
    let expected: Vec<String> = (0..4).map(|k| (binomial(4, k + 1) * 2u64.pow(k as u32)).to_string()).collect();
    assert_eq!(rows[0]["census"], expected.join(";"));
    assert_eq!(rows[0]["census"], "4;12;16;8");
    assert_eq!(rows[0]["points"], "40");
    assert_eq!(rows[0]["match"], "true");
}

#[test]
fn sl2_f3_has_24_points() {
    let rows = csv_rows(&stdout(&["count", "--gadget", "chevalley", "--type", "A1", "--n", "2", "--format", "csv"]), "chevgroup");
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["points"], "24");
    assert_eq!(rows[0]["brute_force"], "24");
    assert_eq!(rows[0]["q"], "3");
    assert_eq!(rows[0]["match"], "true");
}

#[test]
fn a2_range_against_closed_form() {
    let rows = csv_rows(&stdout(&["count", "--type", "A2", "--n", "1..3", "--format", "csv"]), "chevgroup");
    assert_eq!(rows.len(), 3);
    for (row, n) in rows.iter().zip(1u64..) {
        let q = n + 1;
        let total = n * n * q.pow(3) * (1 + 2 * q + 2 * q * q + q.pow(3));
        assert_eq!(row["points"], total.to_string());
        assert_eq!(row["polynomial"], total.to_string());
        assert_eq!(row["match"], "true");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["count", "--type", "B2", "--n", "1..2", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["tits", "A2", "--group", "Z/4:eps=2", "--table"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["roots", "--type", "Q7"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--gadget", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--type", "A1", "--n", "3", "--eps", "half"]).status.code(), Some(2));
    assert_eq!(run(&["tits", "A1", "--group", "Z/4:eps=1"]).status.code(), Some(2));
    let out = run(&["count", "--gadget", "pd", "--d", "5", "--n", "6", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn budget_env_var_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_f1points"))
        .args(["count", "--gadget", "affine", "--d", "3", "--n", "3"])
        .env("F1POINTS_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn weyl_json_and_rows() {
    let v: Value = serde_json::from_str(&stdout(&["weyl", "A2", "--json"])).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for r in rows {
        let len = r["length"].as_u64().unwrap() as usize;
        assert_eq!(r["word"].as_array().unwrap().len(), len);
        assert_eq!(r["inversions"].as_array().unwrap().len(), len);
    }
    let rows = csv_rows(&stdout(&["weyl", "A1", "--format", "csv"]), "poincare");
    assert_eq!(rows.len(), 2);
}

#[test]
fn tits_digest() {
    let v: Value = serde_json::from_str(&stdout(&["tits", "A2", "--group", "Z/4:eps=2", "--table"])).unwrap();
    assert_eq!(v["order"], 96);
    assert_eq!(v["torus_order"], 16);
    let counted: u64 = v["element_orders"].as_object().unwrap().values().map(|c| c.as_u64().unwrap()).sum();
    assert_eq!(counted, 96);
    let laws = stdout(&["tits", "B2", "--group", "Z/2:eps=1", "--laws", "--format", "csv"]);
    assert!(laws.contains("# failures: 0"));
}

#[test]
fn bruhat_census_sl3_f3() {
    let rows = csv_rows(&stdout(&["bruhat", "--type", "A2", "--q", "3", "--census", "--format", "csv"]), "brute-force");
    assert_eq!(rows.len(), 6);
    let total: u64 = rows.iter().map(|r| r["cell"].parse::<u64>().unwrap()).sum();
    assert_eq!(total, 5616);
    assert!(rows.iter().all(|r| r["match"] == "true"));
}

#[test]
fn eval_dumps_group_ring_matrices() {
    let v: Value = serde_json::from_str(&stdout(&["eval", "--type", "A1", "--group", "Z/2:eps=1", "--char", "0"])).unwrap();
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 24);
    for p in points {
        let m = p["matrix"].as_array().unwrap();
        assert_eq!(m.len(), 2);
        assert!(m[0][0]["support"].is_array());
    }
}

#[test]
fn verify_passes() {
    let rows = csv_rows(&stdout(&["verify", "--format", "csv"]), "invariant-suite");
    assert!(rows.len() >= 10);
    assert!(rows.iter().all(|r| r["status"] == "PASS"), "{rows:?}");
}

#[test]
fn monoid_count_over_f4() {
    let rows = csv_rows(&stdout(&["count", "--type", "A1", "--monoid", "F4", "--format", "csv"]), "chevgroup");
    assert_eq!(rows[0]["points"], "60");
    assert_eq!(rows[0]["match"], "true");
}
