use std::io::Write;
use std::process::Command;

use braidnorm::cli::{run, EXIT_BUDGET, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["braidnorm"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = call(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn info_on_four_crossing_torus_link() {
    let v = json(&["info", "-n", "2", "s1^4"]);
    assert_eq!(v["components"], 2);
    assert_eq!(v["bennequin"], 2);
    assert_eq!(v["relative_bennequin"], serde_json::json!([1, 1]));
    assert_eq!(v["crossing_matrix"], serde_json::json!([[0, 4], [4, 0]]));
    assert_eq!(v["linking_matrix"], serde_json::json!([[0, 2], [2, 0]]));
}

#[test]
fn info_on_identity_and_band_word() {
    let v = json(&["info", "-n", "3", ""]);
    assert_eq!(
        (v["components"].clone(), v["bennequin"].clone()),
        (3.into(), (-3).into())
    );
    let v = json(&["info", "-n", "5", "a4,5^2 a2,4^2 a1,3 a3,4 a2,4 a1,3^2"]);
    assert_eq!(v["euler"]["band_seifert"]["chi_minus"], 4);
}

#[test]
fn bounds_commands() {
    let v = json(&["bounds", "-n", "2", "s1^4", "--class", "2,1"]);
    assert_eq!(v["bracket"]["lower"], 3);
    assert_eq!(v["bracket"]["upper"], 3);
    assert_eq!(v["bracket"]["determined"], true);
    let v = json(&["bounds", "-n", "2", "s1^4", "--class", "0,0"]);
    assert_eq!(
        (v["bracket"]["lower"].clone(), v["bracket"]["upper"].clone()),
        (0.into(), 0.into())
    );

    let (code, _, err) = call(&["bounds", "-n", "2", "s1^4", "--class", "1,-1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("reorient"));
}

#[test]
fn bounds_with_alexander_polynomial() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# two variables\n2 0 0\n-3 1 0\n2 2 0").unwrap();
    let path = f.path().to_str().unwrap();
    let v = json(&[
        "bounds",
        "-n",
        "5",
        "a4,5^2 a2,4^2 a1,3 a3,4 a2,4 a1,3^2",
        "--class",
        "1,1",
        "--poly",
        path,
    ]);
    assert_eq!(v["mcmullen"]["alexander_norm"], 2);
    assert_eq!(v["mcmullen"]["gap"], 2);
    let v = json(&["alexnorm", "--poly", path, "--class", "1,1"]);
    assert_eq!(v["alexander_norm"], 2);
}

#[test]
fn homfly_commands() {
    let v = json(&["homfly", "-n", "1", ""]);
    assert_eq!(v["homfly"]["H"], serde_json::json!([[1, 0, 0]]));
    let v = json(&["homfly", "-n", "3", "a1,3^-1"]);
    assert_eq!(
        v["homfly"]["P"],
        serde_json::json!([[1, 6, -2], [-2, 4, -2], [1, 2, -2]])
    );
    let v = json(&["homfly", "-n", "2", "s1^3"]);
    assert_eq!(
        v["homfly"]["conway"],
        serde_json::json!([[1, 0, 0], [1, 0, 2]])
    );
    assert_eq!(v["homfly"]["e"], 2);
    let o = json(&["homfly", "-n", "2", "s1^3", "--oracle"]);
    assert_eq!(o["homfly"], v["homfly"]);
}

#[test]
fn oracle_budget_exit_code() {
    let (code, _, err) = call(&[
        "homfly",
        "-n",
        "3",
        "s1^-3 s2^-3 s1^-2 s2 s1",
        "--oracle",
        "--budget",
        "3",
    ]);
    assert_eq!(code, EXIT_BUDGET);
    assert!(err.contains("budget"));
}

#[test]
fn cable_command() {
    let v = json(&["cable", "-n", "2", "s1^4", "--class", "2,1"]);
    assert_eq!(v["relative_bennequin"], 3);
    assert_eq!(v["n"], 3);
}

#[test]
fn parse_errors_are_usage_errors() {
    assert_eq!(call(&["info", "-n", "3", "s3"]).0, EXIT_USAGE);
    assert_eq!(call(&["info", "-n", "3", "x1"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "mfw", "--max-strands", "3", "--max-len", "6"][..],
        &["verify", "linearity", "--seed", "7", "--samples", "200"],
        &["verify", "kanda", "--k", "5", "--max-l", "6"],
        &["verify", "skein", "--max-strands", "3", "--max-len", "5"],
        &[
            "verify",
            "relations",
            "--samples",
            "30",
            "--max-strands",
            "5",
        ],
        &["verify", "homogeneous", "--max-len", "6"],
        &["verify", "morton3", "--max-len", "4"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_OK, "{args:?}: {out}{err}");
        assert!(out.contains("0 failures"), "{out}");
    }
}

#[test]
fn verify_refuses_oversized_sweeps() {
    let (code, _, err) = call(&["verify", "mfw", "--max-strands", "5"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("ceiling"));
    assert_eq!(call(&["verify", "morton3", "--max-len", "9"]).0, EXIT_USAGE);
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "--json",
        "verify",
        "linearity",
        "--seed",
        "9",
        "--samples",
        "40",
    ];
    assert_eq!(call(&args).1, call(&args).1);
    let args = ["--json", "homfly", "-n", "4", "s1 s2^-1 s3 s1^2"];
    assert_eq!(call(&args).1, call(&args).1);
}

#[test]
fn bench_families() {
    let (code, out, _) = call(&["bench", "power", "--max-k", "10"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 11);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));
    let (code, out, _) = call(&["bench", "twist", "--max-k", "6"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));
    let (_, out, _) = call(&["bench", "empty"]);
    assert_eq!(out.lines().count(), 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_braidnorm");
    let ok = Command::new(bin)
        .args(["info", "-n", "2", "s1^4"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("bennequin: 2"));
    let bad = Command::new(bin)
        .args(["info", "-n", "2", "s2"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let usage = Command::new(bin).args(["info"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}
