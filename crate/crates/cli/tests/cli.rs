use std::path::Path;
use std::process::{Command, Output};

fn giantqed(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_giantqed"))
        .args(args)
        .current_dir(cwd)
        .output()
        .unwrap()
}

const SMALL: &str = r#"
name = "small"
model = "pair"
observables = ["rr", "g2"]

[params]
phi = "41pi"

[integrator]
mode = "fixed"
dt = 0.01
t_end = 1.0
samples = 2

[sweep]
parameter = "gamma"
values = [0.0, 0.001]
"#;

#[test]
fn run_writes_data_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("small.toml"), SMALL).unwrap();
    let out = giantqed(&["run", "small.toml", "--set", "output.path=\"res\""], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(dir.path().join("res/small_01.csv")).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.starts_with("t_us,rr,g2\n"));
    assert!(dir.path().join("res/small.manifest.json").exists());
}

#[test]
fn config_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.toml"), SMALL.replace("\"g2\"", "\"g3\"")).unwrap();
    let out = giantqed(&["run", "bad.toml"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("g3"));
    assert_eq!(giantqed(&["run", "missing.toml"], dir.path()).status.code(), Some(2));
    assert_eq!(giantqed(&["preset", "fig9"], dir.path()).status.code(), Some(2));
}

#[test]
fn numerical_failures_exit_3_after_writing_siblings() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("small.toml"), SMALL).unwrap();
    let args = [
        "run",
        "small.toml",
        "--set",
        "integrator.mode=\"adaptive\"",
        "--set",
        "integrator.max_steps=500",
        "--set",
        "sweep.parameter=\"big_gamma\"",
        "--set",
        "sweep.values=[1, 1e6]",
    ];
    let out = giantqed(&args, dir.path());
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.path().join("out/small_00.csv").exists());
    assert!(!dir.path().join("out/small_01.csv").exists());
}

#[test]
fn rates_and_geometry_print_tables() {
    let dir = tempfile::tempdir().unwrap();
    let out = giantqed(&["rates", "--phi", "41pi", "--theta", "5pi/2", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["upsilon_continuous"][0].as_f64().unwrap(), 0.0);
    assert!(v["quadrature_relative_deviation"].as_f64().unwrap() < 1e-6);
    let out = giantqed(&["geometry", "--angle", "0.09pi"], dir.path());
    assert!(String::from_utf8_lossy(&out.stdout).contains("d     = 2.97"));
}

#[test]
fn selftest_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = giantqed(&["selftest"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
