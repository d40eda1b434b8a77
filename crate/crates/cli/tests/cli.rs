use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diracem")).args(args).env_remove("DIRACEM_FORMAT").output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares stdout with `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str], expected_code: i32) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(expected_code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}; run with UPDATE_GOLDEN=1", path.display()));
    assert!(expected == out.stdout, "{name} differs from golden output:\n{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn golden_algebra() {
    golden("algebra_verify.txt", &["algebra", "verify"], 0);
    golden("algebra_verify.json", &["--format", "json", "algebra", "verify"], 0);
    golden("algebra_basis.txt", &["algebra", "basis"], 0);
}

#[test]
fn golden_poynting() {
    golden("poynting.txt", &["poynting"], 0);
    golden("poynting.json", &["poynting", "--format", "json"], 0);
}

#[test]
fn golden_derive() {
    golden("derive_2.10_x_cw.txt", &["derive", "--form", "2.10", "--axis", "x", "--orientation", "cw"], 0);
    golden("derive_2.10_y_cw.txt", &["derive", "--form", "2.10", "--axis", "y", "--orientation", "cw"], 0);
    golden(
        "derive_2.10_z_cw.json",
        &["--format", "json", "derive", "--form", "2.10", "--axis", "z", "--orientation", "cw"],
        0,
    );
}

#[test]
fn golden_compare() {
    golden("compare_all.txt", &["compare-paper", "all"], 0);
    golden("compare_all.json", &["--format", "json", "compare-paper", "all"], 0);
    golden("compare_3.7.txt", &["compare-paper", "3.7"], 0);
}

#[test]
fn golden_planewave() {
    golden("planewave_dispersion.txt", &["planewave", "dispersion", "--m", "1", "--p", "1"], 0);
    golden(
        "planewave_residual.json",
        &["--format", "json", "planewave", "residual", "--axis", "x", "--k", "1", "--m", "1"],
        0,
    );
    golden(
        "planewave_duality.json",
        &["--format", "json", "planewave", "duality", "--axis", "y", "--k", "1", "--m", "1"],
        0,
    );
}

#[test]
fn golden_verify_all() {
    golden("verify_all.txt", &["verify-all"], 0);
    golden("verify_all.json", &["--format", "json", "verify-all"], 0);
}

#[test]
fn derive_matches_transcriptions() {
    let derived =
        String::from_utf8(run(&["derive", "--form", "2.10", "--axis", "y", "--orientation", "cw"]).stdout).unwrap();
    let lines: Vec<&str> = derived.lines().skip(1).collect();
    assert_eq!(lines[0], "(1/c)∂E_z/∂t + ∂H_x/∂y = -i(ω/c)E_z");
    assert_eq!(lines.len(), 4);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["derive", "--form", "2.10", "--axis", "q", "--orientation", "cw"]), 2);
    assert_eq!(code(&["derive", "--form", "9.9", "--axis", "x", "--orientation", "cw"]), 2);
    assert_eq!(code(&["compare-paper", "4.2"]), 2);
    assert_eq!(code(&["planewave", "dispersion", "--m", "-1", "--p", "1"]), 2);
    assert_eq!(code(&["planewave", "residual", "--axis", "x", "--k", "1", "--m", "-1"]), 2);
    assert_eq!(code(&["--c", "0", "planewave", "dispersion", "--m", "1", "--p", "1"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
    assert_eq!(code(&["algebra", "verify", "--set", "/nonexistent/set.json"]), 2);
}

fn write_set(dir: &tempfile::TempDir, mutate: impl FnOnce(&mut Vec<serde_json::Value>)) -> String {
    let path = dir.path().join("set.json");
    let standard: Vec<serde_json::Value> = ["alpha1", "alpha2", "alpha3", "beta"]
        .iter()
        .map(|l| serde_json::to_value(diracem_core::standard_matrix(l.parse().unwrap())).unwrap())
        .collect();
    let mut set = standard;
    mutate(&mut set);
    std::fs::write(&path, serde_json::to_string(&set).unwrap()).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn broken_set_exits_1_naming_the_pair() {
    let dir = tempfile::tempdir().unwrap();
    let ok = write_set(&dir, |_| {});
    assert_eq!(code(&["algebra", "verify", "--set", &ok]), 0);
    let broken = write_set(&dir, |s| s[3] = s[0].clone());
    let out = run(&["algebra", "verify", "--set", &broken]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL   {alpha1, beta} = 0"), "{text}");
    assert_eq!(code(&["verify-all", "--set", &broken]), 1);
    let out = String::from_utf8(run(&["verify-all", "--set", &broken]).stdout).unwrap();
    assert!(out.contains("FAIL {alpha1, beta} = 0"), "{out}");
}

#[test]
fn ledger_controls_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, r#"{"version":1,"entries":[]}"#).unwrap();
    let empty = empty.to_str().unwrap();
    assert_eq!(code(&["compare-paper", "2.8"]), 0);
    assert_eq!(code(&["compare-paper", "2.8", "--ledger", empty]), 3);
    assert_eq!(code(&["compare-paper", "3.7", "--ledger", empty]), 0);
    assert_eq!(code(&["compare-paper", "all", "--ledger", empty]), 3);
    assert_eq!(code(&["verify-all", "--ledger", empty]), 3);
    let text = String::from_utf8(run(&["compare-paper", "2.9", "--ledger", empty]).stdout).unwrap();
    assert!(text.contains("UNLISTED line 1, E_x source: printed -i, derived i"), "{text}");
}

#[test]
fn json_is_deterministic_and_env_selects_format() {
    for args in [
        &["--format", "json", "verify-all"][..],
        &["--format", "json", "--seed", "7", "planewave", "residual", "--axis", "z", "--k", "2", "--m", "0.5"],
    ] {
        let a = run(args).stdout;
        let b = run(args).stdout;
        assert_eq!(a, b);
        serde_json::from_slice::<serde_json::Value>(&a).unwrap();
    }
    let via_env =
        Command::new(env!("CARGO_BIN_EXE_diracem")).arg("poynting").env("DIRACEM_FORMAT", "json").output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&via_env.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 18);
}
