use std::process::Command;

use braidkl_cli::{run, EXIT_FAILED, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("braidkl").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = call(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn poly_values() {
    assert_eq!(json(&["poly", "P", "5"])["coeffs"], serde_json::json!(["1", "5"]));
    assert_eq!(json(&["poly", "Q", "3"])["coeffs"], serde_json::json!(["2"]));
    assert_eq!(json(&["poly", "p", "4"])["poly"], "1 + t");
}

#[test]
fn poly_markdown_and_csv() {
    let (code, out, _) = call(&["poly", "P", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "| degree | coeff |\n|---|---|\n| 0 | 1 |\n| 1 | 5 |\n");
    let (_, out, _) = call(&["--format", "csv", "poly", "P", "5"]);
    assert_eq!(out, "degree,coeff\n0,1\n1,5\n");
}

#[test]
fn enum_counts() {
    let s = json(&["enum", "s", "--n", "4", "--k", "3"]);
    assert_eq!((s["count"].as_str(), s["closed_form"].as_str()), (Some("5"), Some("5")));
    assert_eq!(json(&["enum", "cacti", "--vertices", "5"])["count"], "15");
    assert_eq!(json(&["enum", "cacti", "--vertices", "4"])["count"], "0");
    let r = json(&["enum", "rdeserts", "--n", "4", "--m", "2"]);
    assert_eq!((r["count"].as_str(), r["closed_form"].as_str()), (Some("60"), Some("60")));
    assert_eq!(json(&["enum", "deserts", "--n", "4", "--m", "1"])["closed_form"], "100");
    assert_eq!(json(&["enum", "husimi", "--p", "5", "--type", "(2,1)"])["count"], "150");
    assert_eq!(json(&["enum", "husimi", "--p", "5", "--type", "1,1"])["count"], "0");
}

#[test]
fn enum_list() {
    let v = json(&["enum", "cacti", "--vertices", "3", "--list"]);
    assert_eq!(v["items"].as_array().unwrap().len(), 1);
    let (code, out, _) = call(&["--format", "csv", "enum", "deserts", "--n", "3", "--m", "1", "--list"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn verify_passes() {
    let (code, out, err) = call(&["--format", "csv", "verify", "thm1.1", "--max-n", "6"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("suite,parameter,lhs,rhs,pass"));
    assert!(lines.clone().count() > 0);
    assert!(lines.all(|l| l.ends_with(",true")));
    let v = json(&["verify", "cor1.5", "--mode", "closed-form"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["poly", "R", "3"],
        &["poly", "P", "0"],
        &["enum", "s", "--n", "4"],
        &["enum", "husimi", "--p", "4"],
        &["verify", "thm9.9"],
        &["cache", "list"],
        &["oracle", "nope", "3"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn resource_caps_exit_3() {
    for args in
        [&["verify", "thm1.1", "--max-n", "99"][..], &["poly", "P", "1000"], &["enum", "s", "--n", "20", "--k", "3"]]
    {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_RESOURCE, "{args:?}: {err}");
    }
}

#[test]
fn help_exits_0() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
    assert!(!out.contains("oracle"));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "verify", "all", "--mode", "closed-form"];
    let a = call(&args);
    let b = call(&args);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a, b);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out, _) = call(&["--cache-dir", d, "--format", "csv", "cache", "list"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "action,entry\n"));

    let warm = json(&["--cache-dir", d, "cache", "warm", "--max-n", "6"]);
    assert_eq!(warm["count"], 12);
    let fresh = json(&["poly", "P", "6"]);
    assert_eq!(json(&["--cache-dir", d, "poly", "P", "6"]), fresh);

    // a corrupted entry is reported and recomputed
    std::fs::write(dir.path().join("P-6.json"), r#"{"kind":"P","n":6,"coeffs":["1","99","1"],"version":"0"}"#).unwrap();
    let (code, out, err) = call(&["--cache-dir", d, "--format", "json", "poly", "P", "6"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("warning"), "{err}");
    assert_eq!(serde_json::from_str::<serde_json::Value>(&out).unwrap(), fresh);

    let cleared = json(&["--cache-dir", d, "cache", "clear"]);
    assert_eq!(cleared["count"], 12);
    assert_eq!(json(&["--cache-dir", d, "cache", "list"])["count"], 0);
}

#[test]
fn cache_dir_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_braidkl"))
        .args(["--format", "json", "poly", "Q", "5"])
        .env(braidkl_cli::CACHE_ENV, dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("Q-5.json").exists());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_braidkl");
    let code =
        |args: &[&str]| Command::new(bin).args(args).env_remove(braidkl_cli::CACHE_ENV).output().unwrap().status.code();
    assert_eq!(code(&["poly", "P", "5"]), Some(EXIT_OK));
    assert_eq!(code(&["nonsense"]), Some(EXIT_USAGE));
    assert_eq!(code(&["verify", "lem2.4", "--max-n", "50"]), Some(EXIT_RESOURCE));
}

#[test]
fn wrong_cached_value_fails_verification() {
    // plausible enough to pass the cache's own checks, wrong in t^3
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("P-8.json"), r#"{"kind":"P","n":8,"coeffs":["1","99","1225","736"],"version":"0"}"#)
        .unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, _, err) = call(&["--cache-dir", d, "--format", "csv", "verify", "thm1.1", "--max-n", "8"]);
    assert_eq!(code, EXIT_FAILED, "{err}");
    assert!(err.contains("verification failed"));
    assert!(err.contains("736"), "{err}");
}
