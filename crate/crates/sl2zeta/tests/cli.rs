//! End-to-end tests of the `sl2zeta` binary: flag parsing, CSV/JSON output
//! contracts, config-file override, exit codes and byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2zeta"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary spawns")
}

fn run(args: &[&str]) -> Output {
    let dir = std::env::temp_dir();
    run_in(&dir, args)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

/// Parses CSV text into (header, rows of cells).
fn csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines
        .next()
        .expect("header row")
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    (header, rows)
}

#[test]
fn zeta_eval_grid_matches_contract() {
    let out = run(&[
        "zeta", "eval", "--n", "0", "--s", "0.5+1i", "--t", "0:0.1:2", "--route", "auto",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let (header, rows) = csv(&stdout(&out));
    assert_eq!(
        header,
        ["n", "s", "t", "route", "value_re", "value_im", "discrepancy", "config"]
    );
    assert_eq!(rows.len(), 21);
    // t = 0 row reports exactly 1
    assert_eq!(rows[0][4].parse::<f64>().unwrap(), 1.0);
    assert_eq!(rows[0][5].parse::<f64>().unwrap(), 0.0);
    for row in &rows {
        let disc: f64 = row[6].parse().unwrap();
        assert!(disc <= 1e-8, "t = {}: discrepancy {disc}", row[2]);
        assert_eq!(row[7].len(), 16, "config hash is 16 hex digits");
        assert_eq!(row[7], rows[0][7], "hash constant across rows");
    }
}

#[test]
fn zeta_identity_rows_are_exactly_one() {
    for (n, s) in [("0", "0.5+1i"), ("3/2", "0.3+2i"), ("2", "2")] {
        let out = run(&["zeta", "eval", "--n", n, "--s", s, "--t", "0"]);
        assert!(out.status.success());
        let (_, rows) = csv(&stdout(&out));
        assert_eq!(rows[0][4].parse::<f64>().unwrap(), 1.0, "n={n} s={s}");
    }
}

#[test]
fn forced_hyper_route_fails_beyond_its_radius() {
    let out = run(&[
        "zeta", "eval", "--n", "0", "--s", "0.5+1i", "--t", "4", "--route", "hyper",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(
        stderr(&out).contains("converge"),
        "wants a non-convergence message, got: {}",
        stderr(&out)
    );
}

#[test]
fn malformed_requests_exit_two() {
    // bad flag value
    let out = run(&["zeta", "eval", "--s", "notacomplex", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown route
    let out = run(&["zeta", "eval", "--route", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand (clap usage error)
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // domain violation: the global expansion needs t >= 1/2
    let out = run(&["expand", "--regime", "global", "--t", "0.2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expand_tables_stay_within_their_attached_tails() {
    for args in [
        ["expand", "--regime", "global", "--n", "1/2", "--lambda", "2", "--t", "2:0.5:6"],
        ["expand", "--regime", "local", "--n", "1", "--lambda", "3", "--t", "0.05:0.05:0.5"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{}", stderr(&out));
        let (header, rows) = csv(&stdout(&out));
        assert_eq!(header[5], "abs_error");
        assert_eq!(header[6], "attached_tail");
        for row in &rows {
            let err: f64 = row[5].parse().unwrap();
            let tail: f64 = row[6].parse().unwrap();
            assert!(err <= tail, "t = {}: {err} > {tail}", row[0]);
        }
    }
}

#[test]
fn transform_roundtrip_meets_tolerance_in_json_envelope() {
    let out = run(&[
        "transform", "--mode", "roundtrip", "--profile", "bump", "--n", "0", "--format", "json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let env: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["config", "results", "margins", "version"] {
        assert!(env.get(key).is_some(), "envelope key {key}");
    }
    let sup = env["margins"]["sup-error"].as_f64().unwrap();
    assert!(sup <= 1e-3, "sup error {sup}");
    assert_eq!(env["config"]["profile"], "bump");
}

#[test]
fn transform_plancherel_gap_is_small() {
    let out = run(&["transform", "--mode", "plancherel", "--profile", "gausspoly", "--n", "1/2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let (_, rows) = csv(&stdout(&out));
    let gap: f64 = rows[0][2].parse().unwrap();
    assert!(gap <= 1e-3, "relative gap {gap}");
}

#[test]
fn kernel_writes_table_and_report_with_finite_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["kernel", "--m", "heat:tau=0.5", "--n", "0", "--p", "4/3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let table = std::fs::read_to_string(dir.path().join("kernel.csv")).unwrap();
    let (header, rows) = csv(&table);
    assert_eq!(header, ["grid", "re", "im", "component", "config"]);
    for tag in ["cont", "disc", "loc", "glo"] {
        assert!(rows.iter().any(|r| r[3] == tag), "component {tag}");
    }
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("kernel.json")).unwrap())
            .unwrap();
    for key in ["mh_norm", "discrete_sum", "herz_integral"] {
        let v = report["results"][key].as_f64().unwrap();
        assert!(v.is_finite(), "{key} = {v}");
    }
    assert_eq!(report["results"]["multiplier"], "heat:tau=0.5");
}

#[test]
fn kernel_zero_multiplier_emits_all_zero_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["kernel", "--m", "const:value=0", "--n", "2", "--p", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let (_, rows) = csv(&std::fs::read_to_string(dir.path().join("kernel.csv")).unwrap());
    for row in &rows {
        assert_eq!(row[1].parse::<f64>().unwrap(), 0.0);
        assert_eq!(row[2].parse::<f64>().unwrap(), 0.0);
    }
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("kernel.json")).unwrap())
            .unwrap();
    assert_eq!(report["results"]["herz_integral"].as_f64().unwrap(), 0.0);
}

#[test]
fn kernel_rejects_interior_pole_before_writing_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["kernel", "--m", "resolvent:z0=0.24+0i", "--n", "0", "--p", "4/3", "--epsilon", "0.1"],
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("strip too narrow"), "{}", stderr(&out));
    assert!(!dir.path().join("kernel.csv").exists());
    assert!(!dir.path().join("kernel.json").exists());
}

#[test]
fn spectrum_emits_ray_and_parabola_boundaries() {
    // central exponent: ray from 1/4 + n^2 plus the two discrete points
    let out = run(&["spectrum", "--n", "2", "--p", "2", "--count", "5"]);
    assert!(out.status.success());
    let (_, rows) = csv(&stdout(&out));
    assert_eq!(rows[0][0].parse::<f64>().unwrap(), 4.25);
    assert_eq!(rows[0][2], "ray");
    let discrete: Vec<f64> = rows
        .iter()
        .filter(|r| r[2] == "discrete")
        .map(|r| r[0].parse().unwrap())
        .collect();
    assert_eq!(discrete, [4.0, 2.0]);

    // away from the center: points satisfy the parabola equation exactly,
    // shifted by n^2
    let out = run(&["spectrum", "--n", "1", "--p", "4/3", "--count", "101"]);
    let (_, rows) = csv(&stdout(&out));
    let delta: f64 = 0.25;
    for row in rows.iter().filter(|r| r[2] == "parabola") {
        let re: f64 = row[0].parse().unwrap();
        let im: f64 = row[1].parse().unwrap();
        let floor = 1.0 + im * im / (4.0 * delta * delta) + 0.25 - delta * delta;
        assert!((re - floor).abs() <= 1e-14 * (1.0 + re.abs()), "({re}, {im})");
    }
}

#[test]
fn config_file_supplies_defaults_and_flags_take_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"n": "2", "s": "0.5+0.5i", "t": "1", "route": "theta"}"#).unwrap();
    let from_config = run(&["zeta", "--config", cfg.to_str().unwrap()]);
    assert!(from_config.status.success(), "{}", stderr(&from_config));
    let direct = run(&["zeta", "--n", "2", "--s", "0.5+0.5i", "--t", "1", "--route", "theta"]);
    assert_eq!(stdout(&from_config), stdout(&direct));

    // an explicit flag wins over the config value
    let overridden = run(&["zeta", "--config", cfg.to_str().unwrap(), "--t", "2"]);
    let direct2 = run(&["zeta", "--n", "2", "--s", "0.5+0.5i", "--t", "2", "--route", "theta"]);
    assert_eq!(stdout(&overridden), stdout(&direct2));

    // unknown keys are rejected as malformed requests
    std::fs::write(&cfg, r#"{"nn": "2"}"#).unwrap();
    let bad = run(&["zeta", "--config", cfg.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn json_envelope_feeds_back_as_config() {
    let dir = tempfile::tempdir().unwrap();
    let env_path = dir.path().join("run.json");
    let first = run(&[
        "transform", "--mode", "plancherel", "--n", "1", "--format", "json",
        "--out", env_path.to_str().unwrap(),
    ]);
    assert!(first.status.success(), "{}", stderr(&first));
    let replay = run(&["transform", "--config", env_path.to_str().unwrap()]);
    assert!(replay.status.success(), "{}", stderr(&replay));
    let direct = run(&["transform", "--mode", "plancherel", "--n", "1"]);
    assert_eq!(stdout(&replay), stdout(&direct));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["zeta", "eval", "--n", "3/2", "--s", "0.5+5i", "--t", "0:0.5:6"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let args = ["check", "--filter", "region-"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_reports_margins_and_filters() {
    let out = run(&["check", "--filter", "mh-"]);
    assert_eq!(out.status.code(), Some(0));
    let (header, rows) = csv(&stdout(&out));
    assert_eq!(
        header,
        ["name", "status", "measured", "tolerance", "margin", "detail", "config"]
    );
    assert_eq!(rows.len(), 4);
    for row in &rows {
        assert_eq!(row[1], "pass", "{}", row[0]);
        let margin: f64 = row[4].parse().unwrap();
        assert!(margin >= 0.0, "{}: margin {margin}", row[0]);
    }
}
