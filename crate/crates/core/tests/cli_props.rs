use std::process::{Command, Output};

use serde_json::Value;

fn ratvec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratvec")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = ratvec(args);
    (out.status.code().unwrap_or(-1), serde_json::from_slice(&out.stdout).unwrap_or(Value::Null))
}

fn rows(csv: &[u8]) -> Vec<Vec<String>> {
    let text = String::from_utf8(csv.to_vec()).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap().split(',').count(), 15);
    lines.map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

fn num(v: &Value) -> f64 {
    v.as_f64().or_else(|| v.as_str().and_then(|s| s.parse().ok())).unwrap_or(f64::NAN)
}

#[test]
fn sample_is_deterministic() {
    let a = ratvec(&["sample", "--count", "200", "--seed", "31"]);
    let b = ratvec(&["sample", "--count", "200", "--seed", "31"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = ratvec(&["sample", "--count", "200", "--seed", "32"]);
    assert_ne!(a.stdout, c.stdout);
    let prefix = ratvec(&["sample", "--count", "50", "--seed", "31"]);
    assert_eq!(rows(&prefix.stdout), rows(&a.stdout)[..50].to_vec());
}

#[test]
fn sampled_rows_recheck_through_cli() {
    let out = ratvec(&["sample", "--count", "25", "--seed", "5"]);
    for row in rows(&out.stdout) {
        let uvw = format!("{},{},{}", row[4], row[5], row[6]);
        let (code, check) = json(&["check", "--uvw", &uvw]);
        assert_eq!(code, 0, "{uvw}: {check}");
        assert_eq!(check["verdict"], "member");
        assert_eq!(check["region"], row[8].as_str());

        let (code, rec) = json(&["reconstruct", "--uvw", &uvw]);
        assert_eq!(code, 0);
        let (r, s) = (num(&rec["values"]["r"]), num(&rec["values"]["s"]));
        let (want_r, want_s) = (row[12].parse::<f64>().unwrap(), row[13].parse::<f64>().unwrap());
        assert!((r - want_r).abs() <= 1e-12 * want_r.abs(), "{r} vs {want_r}");
        assert!((s - want_s).abs() <= 1e-12 * want_s.abs(), "{s} vs {want_s}");
    }
}

#[test]
fn fixed_roots_reproduce_example_one() {
    let out = ratvec(&["sample", "--count", "1", "--seed", "0", "--fixed", "1,3/2,13/8,7/4"]);
    let row = &rows(&out.stdout)[0];
    let f = |i: usize| row[i].parse::<f64>().unwrap();
    for (i, want) in [(4, 0.3013), (5, 0.4481), (6, 0.5968)] {
        assert!((f(i) - want).abs() < 5e-4);
    }
    assert_eq!(row[8], "Z1");
    assert_eq!((f(10), f(11)), (0.25, 0.5));
    assert!((f(12) - 0.25).abs() < 1e-12 && (f(13) - 0.5).abs() < 1e-12);
}

#[test]
fn sample_to_file_writes_csv_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let (code, summary) = json(&["sample", "--count", "40", "--seed", "8", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(summary["values"]["rows"], 40);
    assert_eq!(summary["values"]["violations"], Value::Array(Vec::new()));
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, ratvec(&["sample", "--count", "40", "--seed", "8"]).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(json(&["check", "--uvw", "9/32,4/9,7/10"]).0, 1);
    assert_eq!(ratvec(&["check", "--uvw", "1/2,1/2"]).status.code(), Some(2));
    assert_eq!(ratvec(&["forward", "--roots", "1,2,3,4", "--tol", "0"]).status.code(), Some(2));
    assert_eq!(ratvec(&["sample", "--count", "0", "--seed", "1"]).status.code(), Some(2));
}
