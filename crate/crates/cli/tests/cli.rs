//! End-to-end tests of the `ptchain` binary: exit-code contract, file
//! formats, determinism, config overrides.

use std::path::Path;
use std::process::{Command, Output};

fn ptchain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptchain"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    assert_eq!(ptchain(&["check", "-N", "2", "-g", "0.5"]).status.code(), Some(0));
    assert_eq!(ptchain(&["check", "-N", "2", "-g", "2.0"]).status.code(), Some(1));
    // exact EEP squares → boundary
    let out = ptchain(&["check", "-N", "6", "--exact", "5,8,9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("boundary"));
}

#[test]
fn exact_flag_beats_decimals() {
    // spec phrasing: decimals for humans, exact squares for the verdict
    let out = ptchain(&[
        "check",
        "-N",
        "6",
        "-g",
        "2.2360679,2.8284271,3",
        "--exact",
        "5,8,9",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("squares given exactly"));
}

#[test]
fn unsupported_dimension_is_a_data_error() {
    let out = ptchain(&["check", "-N", "12", "-g", "1,1,1,1,1,1"]);
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn malformed_usage_exits_64() {
    assert_eq!(ptchain(&["check", "-N", "2"]).status.code(), Some(64));
    assert_eq!(ptchain(&["check", "--bogus-flag"]).status.code(), Some(64));
    assert_eq!(ptchain(&["--help"]).status.code(), Some(0));
}

#[test]
fn check_json_report_is_parseable() {
    let out = ptchain(&["check", "-N", "2", "-g", "0.5", "--format", "json", "--spectrum"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "inside");
    assert_eq!(v["criteria"]["verdict"]["margin"], 0.75);
    assert!(v["spectrum"]["energies"].is_array());
}

#[test]
fn scan_reproduces_the_n2_interval() {
    let out = ptchain(&["scan", "-N", "2", "--grid", "-1.5:1.5:7", "--mode", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "index,g1,verdict,witness,margin,oracle_verdict,mismatch,min_s_gap,min_s_root"
    );
    let verdicts: Vec<&str> =
        lines.map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(
        verdicts,
        ["outside", "boundary", "inside", "inside", "inside", "boundary", "outside"]
    );
}

#[test]
fn scan_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{ "n": 4, "grid": [{"min": 0.0, "max": 2.5, "steps": 5}],
             "mode": "both", "epsilon": 1e-9, "format": "csv", "seed": 3,
             "spectrum": true }"#,
    )
    .unwrap();
    let run = |path: &Path| {
        let out = ptchain(&[
            "scan",
            "--config",
            cfg.to_str().unwrap(),
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        std::fs::read(path).unwrap()
    };
    let a = run(&dir.path().join("a.csv"));
    let b = run(&dir.path().join("b.csv"));
    assert!(!a.is_empty());
    assert_eq!(a, b, "identical config + seed must give byte-identical output");
}

#[test]
fn scan_flags_override_config_values() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{ "n": 2, "grid": [{"min": 0.0, "max": 1.5, "steps": 3}],
             "mode": "criteria", "epsilon": 1e-9, "format": "csv", "seed": 0 }"#,
    )
    .unwrap();
    // override format to json on the command line
    let out = ptchain(&["scan", "--config", cfg.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 3);
    assert_eq!(records[0]["verdict"], "inside");
    assert_eq!(records[2]["verdict"], "outside");
}

#[test]
fn scan_rejects_bad_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{ "n": 4, "grid": [{"min": 2.0, "max": 1.0, "steps": 3}],
             "mode": "criteria", "epsilon": 1e-9 }"#,
    )
    .unwrap();
    assert_eq!(
        ptchain(&["scan", "--config", cfg.to_str().unwrap()]).status.code(),
        Some(65)
    );
}

#[test]
fn boundary_traces_the_n3_endpoint() {
    let out = ptchain(&["boundary", "-N", "3", "--ray", "1", "--tol", "1e-11"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    let radius: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
    assert!((radius - 2.0_f64.sqrt()).abs() < 1e-10, "radius {radius}");
}

#[test]
fn boundary_handles_multiple_rays() {
    // along (0, 1) the N = 4 matrix decouples and the middle 2×2 block
    // loses reality at exactly g₂ = 1
    let out = ptchain(&["boundary", "-N", "4", "--ray", "0,1", "--ray", "1,1", "--tol", "1e-11"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    // columns: ray,d1,d2,g1,g2,radius,...
    let first = text.lines().nth(1).unwrap();
    let radius: f64 = first.split(',').nth(5).unwrap().parse().unwrap();
    assert!((radius - 1.0).abs() < 1e-10, "radius {radius}");
}

#[test]
fn random_rays_are_seed_deterministic() {
    let run = || stdout(&ptchain(&["boundary", "-N", "4", "--rays", "6", "--seed", "9"]));
    let a = run();
    assert_eq!(a, run());
    assert_eq!(a.lines().count(), 7);
}

#[test]
fn eep_table_covers_all_dimensions() {
    let out = ptchain(&["eep", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 11); // header + N = 2..11
    assert!(text.lines().any(|l| l.starts_with("6,3,") && l.contains("5 8 9")));
}

#[test]
fn dep_sweep_finds_valid_points() {
    let out = ptchain(&["dep", "--c-range", "4:8:25", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let valid: Vec<&serde_json::Value> =
        v.as_array().unwrap().iter().filter(|r| r["valid"] == true).collect();
    assert!(!valid.is_empty());
    for r in valid {
        let z = r["z"].as_f64().unwrap();
        assert!(z > 0.0 && z < 1.0);
        assert!(r["unequal_margin"].as_f64().unwrap() >= 0.0);
    }
}

#[test]
fn spectrum_command_reports_the_diagonal_levels() {
    let out = ptchain(&["spectrum", "-N", "6", "-g", "0,0,0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["classification"], "all-real-simple");
    let energies = v["energies"].as_array().unwrap();
    assert_eq!(energies.len(), 6);
    assert_eq!(energies[0][0], -5.0);
}

#[test]
fn verify_agrees_on_a_seeded_sample() {
    let out = ptchain(&["verify", "-N", "6", "--points", "400", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 mismatches"));
}
