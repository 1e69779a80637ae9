use std::process::{Command, Output};

fn landau(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_landau")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_rows(s: &str) -> Vec<Vec<String>> {
    s.lines().skip(1).filter(|l| !l.starts_with('#')).map(|l| l.split(',').map(String::from).collect()).collect()
}

#[test]
fn hyperbolic_levels_table() {
    let o = landau(&["levels", "hyper", "--B", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("n,energy\n"));
    let rows = data_rows(&s);
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4], ["4", "0"]);
    assert_eq!(rows[0], ["0", "-20"]);
    assert!(s.contains("# B=5"));
}

#[test]
fn euclidean_levels_table() {
    let o = landau(&["levels", "euclid", "--B", "3.14159", "--nmax", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = data_rows(&stdout(&o));
    assert_eq!(rows.len(), 1);
    let e: f64 = rows[0][1].parse().unwrap();
    assert!((e - 1.570795).abs() < 1e-12);
}

#[test]
fn weak_field_has_no_bound_states() {
    let o = landau(&["levels", "hyper", "--B", "0.3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no bound states"));
}

#[test]
fn gabor_scan_rows_and_classes() {
    let o = landau(&["gabor", "scan", "--n", "0", "--omega2", "0.5:1.5:11"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = data_rows(&stdout(&o));
    assert_eq!(rows.len(), 11);
    for r in &rows {
        let w: f64 = r[0].parse().unwrap();
        if w <= 0.9 + 1e-9 {
            assert_eq!(r[6], "frame_like", "{r:?}");
        }
    }
    assert_eq!(rows[10][6], "deficient");
    let o = landau(&["gabor", "scan", "--n", "1", "--omega2", "0.45:0.45:1"]);
    assert_eq!(data_rows(&stdout(&o))[0][6], "frame_like");
}

#[test]
fn gabor_scan_usage_errors() {
    assert_eq!(landau(&["gabor", "scan", "--n", "0", "--omega2", "0.5:1.5:0"]).status.code(), Some(64));
    assert_eq!(landau(&["gabor", "scan", "--n", "0", "--omega2", "0.5:1.5:3", "--interior", "40"]).status.code(), Some(64));
    assert_eq!(landau(&["gabor", "scan", "--n", "0", "--omega2", "nonsense"]).status.code(), Some(64));
}

#[test]
fn expansion_check_exit_codes() {
    for (b, n) in [("3", "1"), ("3", "0"), ("5", "2")] {
        let o = landau(&["hyper", "prop1", "--B", b, "--n", n, "--grid", "default"]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(data_rows(&stdout(&o)).len(), 9);
    }
    assert_eq!(landau(&["hyper", "prop1", "--B", "3", "--n", "3"]).status.code(), Some(64));
    let o = landau(&["hyper", "prop1", "--B", "3", "--n", "1", "--grid", "-0.5:0.5:2,0.4:0.8:2", "--function", "2,0.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(data_rows(&stdout(&o)).len(), 4);
}

#[test]
fn impossible_tolerance_fails_the_check() {
    let dir = std::env::temp_dir().join(format!("landau-cli-tol-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("cfg.json");
    std::fs::write(&cfg, r#"{"tolerances": {"prop1": 1e-300}}"#).unwrap();
    let o = landau(&["--config", cfg.to_str().unwrap(), "hyper", "prop1", "--B", "3", "--n", "1"]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::write(&cfg, r#"{"tolerances": {"prop1": -1}}"#).unwrap();
    let o = landau(&["--config", cfg.to_str().unwrap(), "levels", "hyper", "--B", "5"]);
    assert_eq!(o.status.code(), Some(65));
    std::fs::write(&cfg, "{not json").unwrap();
    let o = landau(&["--config", cfg.to_str().unwrap(), "levels", "hyper", "--B", "5"]);
    assert_eq!(o.status.code(), Some(65));
}

#[test]
fn modular_formulas() {
    let o = landau(&["fuchsian", "area", "--signature", "0,3,2,3,inf"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(data_rows(&stdout(&o))[0][0], "pi/3");
    let o = landau(&["fuchsian", "dim", "--signature", "0,3,2,3,inf", "--m", "6"]);
    assert_eq!(data_rows(&stdout(&o))[0], ["6", "2"]);
    let o = landau(&["fuchsian", "zeros", "--signature", "0,3,2,3,inf", "--m", "12"]);
    assert_eq!(data_rows(&stdout(&o))[0], ["12", "2"]);
    assert_eq!(landau(&["fuchsian", "area", "--signature", "0,2,2,3"]).status.code(), Some(65));
    assert_eq!(landau(&["fuchsian", "area", "--signature", "0,3,2,3"]).status.code(), Some(65));
}

#[test]
fn json_output_keeps_pi_multiples_exact() {
    let o = landau(&["--format", "json", "fuchsian", "area", "--signature", "0,3,2,3,7"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"][0]["area"], "pi/21");
    assert!((v["rows"][0]["value"].as_f64().unwrap() - std::f64::consts::PI / 21.0).abs() < 1e-15);
}

#[test]
fn orbit_csv() {
    let o = landau(&["fuchsian", "orbit", "--group", "modular", "--seed", "0,2", "--words", "1"]);
    let s = stdout(&o);
    assert!(s.starts_with("x,y,word\n"));
    let rows = data_rows(&s);
    let words: Vec<&str> = rows.iter().map(|r| r[2].as_str()).collect();
    assert_eq!(words, ["I", "S", "T", "Ti"]);
    assert_eq!(rows[1][..2], ["0", "0.5"]);
    let o = landau(&["fuchsian", "orbit", "--group", "gamma:2", "--seed", "i", "--words", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(landau(&["fuchsian", "orbit", "--group", "klein", "--seed", "i"]).status.code(), Some(64));
}

#[test]
fn bound_reports() {
    let o = landau(&["fuchsian", "bounds", "--B", "30", "--n", "1", "--m0", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "necessarily_incomplete");
    assert_eq!(v["threshold"], 7.25);
    let o = landau(&["fuchsian", "bounds", "--B", "5", "--n", "0", "--signature", "0,3,2,3,inf"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "condition_met");
    let o = landau(&["fuchsian", "bounds", "--B", "40", "--n", "0"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "necessarily_incomplete");
    assert!(v["note"].as_str().unwrap().contains("1/6"));
}

#[test]
fn witness_success_and_refusal() {
    let o = landau(&["fuchsian", "witness", "--B", "10", "--n", "0", "--form", "E4", "--zeta0", "rho"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["epsilon"], 16.0);
    assert!(v["max_scaled_orbit_residual"].as_f64().unwrap() < 1e-8);
    assert_eq!(landau(&["fuchsian", "witness", "--B", "3", "--n", "0", "--form", "E4"]).status.code(), Some(3));
    assert_eq!(landau(&["fuchsian", "witness", "--B", "20", "--n", "0", "--form", "Delta"]).status.code(), Some(65));
    let o = landau(&["fuchsian", "witness", "--B", "10", "--n", "0", "--form", "E6", "--zeta0", "i", "--words", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn output_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("landau-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("levels.csv");
    let o = landau(&["levels", "hyper", "--B", "7.5", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, landau(&["levels", "hyper", "--B", "7.5"]).stdout);
    let a = landau(&["fuchsian", "orbit", "--seed", "rho", "--words", "3"]).stdout;
    let b = landau(&["fuchsian", "orbit", "--seed", "rho", "--words", "3"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(landau(&["--help"]).status.code(), Some(0));
    assert_eq!(landau(&["fuchsian", "--help"]).status.code(), Some(0));
    assert_eq!(landau(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(landau(&["levels", "hyper"]).status.code(), Some(64));
    assert_eq!(landau(&["--nodes", "8", "levels", "hyper", "--B", "5"]).status.code(), Some(64));
}
