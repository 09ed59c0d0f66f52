use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn nilpair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilpair")).args(args).env_remove("NILPAIR_SEED").output().expect("binary runs")
}

fn read_report(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn single_line_selection_yields_one_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = nilpair(&["verify", "--case", "Table1-line3", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = read_report(&path);
    assert_eq!(r["schema"], "nilpair-report/1");
    assert_eq!(r["pass"], true);
    let cases = r["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 1);
    assert_eq!(cases[0]["case"], "T1-L3");
    assert!(String::from_utf8_lossy(&out.stdout).contains("1 cases"));
}

#[test]
fn same_seed_gives_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for (i, jobs) in ["1", "3"].iter().enumerate() {
        let path = dir.path().join(format!("r{i}.json"));
        let out = nilpair(&["verify", "--case", "T1-L4,A2", "--seed", "7", "--jobs", jobs, "--report", path.to_str().unwrap(), "-q"]);
        assert_eq!(out.status.code(), Some(0));
        let mut v = read_report(&path);
        strip_timing(&mut v);
        reports.push(serde_json::to_string(&v).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
}

#[test]
fn environment_seed_overrides_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = Command::new(env!("CARGO_BIN_EXE_nilpair"))
        .args(["verify", "--case", "T1-L1", "--checks", "group", "--seed", "1", "--report", path.to_str().unwrap(), "-q"])
        .env("NILPAIR_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(read_report(&path)["seed"], 99);
    let bad = Command::new(env!("CARGO_BIN_EXE_nilpair")).args(["verify", "--case", "T1-L1"]).env("NILPAIR_SEED", "seven").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn zero_tolerance_fails_with_every_residual_listed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = nilpair(&["verify", "--case", "T1-L2,T1-L5", "--checks", "group,infinitesimal", "--tol-group", "0", "--tol-inf", "0", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r = read_report(&path);
    assert_eq!(r["pass"], false);
    let failures: Vec<&str> = r["failures"].as_array().unwrap().iter().map(|f| f.as_str().unwrap()).collect();
    for c in r["cases"].as_array().unwrap() {
        for key in ["group", "infinitesimal"] {
            if c["residuals"][key].as_f64().unwrap() > 0.0 {
                let id = c["case"].as_str().unwrap();
                assert!(failures.iter().any(|f| f.starts_with(id) && f.contains(key)), "{id} {key} missing from {failures:?}");
            }
        }
    }
}

#[test]
fn config_errors_exit_with_two() {
    assert_eq!(nilpair(&["verify", "--case", "A99"]).status.code(), Some(2));
    assert_eq!(nilpair(&["verify", "--case", "A1-SO[n=1]"]).status.code(), Some(2));
    assert_eq!(nilpair(&["verify", "--checks", "nonsense"]).status.code(), Some(2));
    assert_eq!(nilpair(&["verify", "--exact", "--numeric"]).status.code(), Some(2));
    assert_eq!(nilpair(&["verify", "--samples", "0"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"cases": ["T1-L1"], "bogus": 1}"#).unwrap();
    assert_eq!(nilpair(&["verify", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(nilpair(&["verify", "--config", "/nonexistent/c.json"]).status.code(), Some(2));
}

#[test]
fn config_file_is_honoured_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    let path = dir.path().join("r.json");
    std::fs::write(&cfg, r#"{"cases": ["T1-L1", "T1-L2"], "samples": 10, "checks": ["group", "orbit"]}"#).unwrap();
    let out = nilpair(&["verify", "--config", cfg.to_str().unwrap(), "--samples", "20", "--report", path.to_str().unwrap(), "-q"]);
    assert_eq!(out.status.code(), Some(0));
    let r = read_report(&path);
    assert_eq!(r["samples"], 20);
    assert_eq!(r["cases"].as_array().unwrap().len(), 2);
    assert_eq!(r["checks"], serde_json::json!(["group", "orbit"]));
}

#[test]
fn exact_and_numeric_partition_the_checks() {
    let dir = tempfile::tempdir().unwrap();
    let mut seen = Vec::new();
    for flag in ["--exact", "--numeric"] {
        let path = dir.path().join("r.json");
        let out = nilpair(&["verify", "--case", "T1-L1", flag, "--report", path.to_str().unwrap(), "-q"]);
        assert_eq!(out.status.code(), Some(0));
        let checks = read_report(&path)["checks"].as_array().unwrap().clone();
        seen.push(checks);
    }
    assert_eq!(seen[0], vec![Value::from("exact")]);
    assert!(!seen[1].contains(&Value::from("exact")));
    assert_eq!(seen[0].len() + seen[1].len(), 12);
}

#[test]
fn catalog_row_counts() {
    let out = nilpair(&["catalog", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let c: Value = serde_json::from_slice(&out.stdout).unwrap();
    let distinct = |key: &str| {
        let mut v: Vec<u64> = c["cases"].as_array().unwrap().iter().filter_map(|r| r[key].as_u64()).collect();
        v.dedup();
        v
    };
    assert_eq!(distinct("line"), (1..=12).collect::<Vec<_>>());
    assert_eq!(distinct("appendix"), (1..=12).collect::<Vec<_>>());
    assert_eq!(c["quotients"].as_array().unwrap().len(), 12);

    let text = nilpair(&["catalog"]);
    let s = String::from_utf8(text.stdout).unwrap();
    assert_eq!(s.lines().filter(|l| l.starts_with("line ")).count(), 12);
    assert!(s.contains("12 table lines, 12 appendix cases, 12 quotients"));
}

#[test]
fn radon_demo_matches_closed_form() {
    let out = nilpair(&["radon-demo"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.trim_end().ends_with("PASS"), "{s}");
    assert_eq!(nilpair(&["radon-demo", "--line", "13"]).status.code(), Some(2));
    assert_eq!(nilpair(&["radon-demo", "--line", "8", "--order", "0"]).status.code(), Some(2));
}
