use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use spinlrl_core::clifford::{parse_fixture, FixtureBlock, Matrix};
use spinlrl_core::GaussianRational;

fn spinlrl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinlrl")).args(args).env_remove("SPINLRL_OUT_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn reduce_goldens() {
    let cases = [
        (vec!["reduce", "--d", "2", "[A(1),M(1)] - i*T"], "0"),
        (vec!["reduce", "--d", "3", "(x1*g1+x2*g2+x3*g3)^2"], "x1^2+x2^2+x3^2"),
        (vec!["reduce", "--d", "3", "--adjoint", "x1*p1"], "-i+x1*p1"),
        (vec!["reduce", "--d", "3", "[x1,p1]"], "i"),
        (vec!["reduce", "--d", "3", "--sub", "alpha=2", "alpha^2"], "4"),
    ];
    for (args, want) in cases {
        let o = spinlrl(&args);
        assert_eq!(code(&o), 0, "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
}

#[test]
fn casimir_reduces_to_a_constant() {
    let o = spinlrl(&["verify", "--d", "3", "--suite", "core", "--format", "json", "--no-timing"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let q2 = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "CASIMIR-Q2").unwrap();
    assert_eq!(q2["pass"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["reduce", "--d", "3", "x1 +"],
        vec!["reduce", "--d", "3", "x9"],
        vec!["verify", "--suite", "bogus"],
        vec!["verify", "--d", "7"],
        vec!["verify", "--d", "1..3"],
        vec!["matrices", "--d", "1"],
        vec!["frobnicate"],
    ] {
        assert_eq!(code(&spinlrl(&args)), 2, "{args:?}");
    }
    let o = spinlrl(&["reduce", "--d", "3", "x1 +"]);
    assert!(stderr(&o).contains("parse error"));
}

#[test]
fn io_errors_exit_three() {
    let o = spinlrl(&["verify", "--d", "2", "--suite", "sturm", "--out", "/dev/null/report.txt"]);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
}

#[test]
fn strict_turns_transcription_mismatches_into_failures() {
    let lenient = spinlrl(&["verify", "--d", "2", "--suite", "core", "--no-timing"]);
    assert_eq!(code(&lenient), 0);
    assert!(stdout(&lenient).contains("[transcription]"));
    let strict = spinlrl(&["verify", "--d", "2", "--suite", "core", "--no-timing", "--strict"]);
    assert_eq!(code(&strict), 1);
}

#[test]
fn matrices_match_fixtures() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures");
    for d in 2..=5 {
        let o = spinlrl(&["matrices", "--d", &d.to_string()]);
        assert_eq!(code(&o), 0);
        let want = std::fs::read_to_string(dir.join(format!("matrices_d{d}.txt"))).unwrap();
        assert_eq!(stdout(&o), want, "d={d}");
    }
}

fn anti(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).add(&b.mul(a))
}

#[test]
fn large_matrices_satisfy_the_clifford_relations() {
    for d in 6..=8 {
        let o = spinlrl(&["matrices", "--d", &d.to_string()]);
        assert_eq!(code(&o), 0);
        let blocks = parse_fixture(&stdout(&o)).unwrap();
        let gammas: Vec<&Matrix> = blocks
            .iter()
            .filter_map(|b| match b {
                FixtureBlock::Gamma { matrix, .. } => Some(matrix),
                _ => None,
            })
            .collect();
        assert_eq!(gammas.len(), d);
        let n = gammas[0].size();
        let two = Matrix::identity(n).scale(&GaussianRational::from_int(2));
        for i in 0..d {
            for j in 0..d {
                let want = if i == j { two.clone() } else { Matrix::zeros(n) };
                assert_eq!(anti(gammas[i], gammas[j]), want, "d={d} i={i} j={j}");
            }
        }
        let quarter = GaussianRational::imag(spinlrl_core::Rational::new(-1, 4));
        for b in &blocks {
            if let FixtureBlock::Spin { i, j, matrix, .. } = b {
                let (gi, gj) = (gammas[i - 1], gammas[j - 1]);
                assert_eq!(*matrix, gi.mul(gj).sub(&gj.mul(gi)).scale(&quarter), "d={d} S{i}{j}");
            }
        }
    }
}

#[test]
fn multi_dimension_reports() {
    let o = spinlrl(&["verify", "--d", "2..4", "--suite", "sturm", "--no-timing"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.matches("suite=sturm").count(), 3);
    let o = spinlrl(&["verify", "--d", "2..3", "--suite", "sturm", "--format", "json", "--no-timing"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.iter().map(|r| r["d"].as_u64().unwrap()).collect::<Vec<_>>(), vec![2, 3]);
}

#[test]
fn json_report_fields() {
    let o = spinlrl(&["verify", "--d", "3", "--suite", "core", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "core");
    assert_eq!(v["d"], 3);
    assert!(v["version"].is_string());
    let checks = v["checks"].as_array().unwrap();
    for c in checks {
        for key in ["id", "paperRef", "tier", "pass", "residualTermCount", "residualText", "elapsedMs"] {
            assert!(c.get(key).is_some(), "{key} missing in {c}");
        }
    }
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let failed = checks.iter().filter(|c| c["pass"] == false).count() as u64;
    assert_eq!(v["summary"]["failed"].as_u64().unwrap(), failed);
    let bad = checks.iter().find(|c| c["id"] == "NONCLOSE-GIGD1").unwrap();
    assert_eq!(bad["tier"], "transcription");
    assert_eq!(bad["residualText"], "-i*x2*g1*g2-i*x3*g1*g3");
    assert_eq!(bad["failingInstance"], "i=1");
}

#[test]
fn reports_are_reproducible_without_timing() {
    for format in ["text", "json", "markdown"] {
        let args = ["verify", "--d", "2", "--suite", "all", "--format", format, "--no-timing"];
        let a = spinlrl(&args);
        let b = spinlrl(&args);
        assert_eq!(a.stdout, b.stdout, "{format}");
        assert!(!stdout(&a).contains("elapsed"), "{format}");
    }
}

#[test]
fn markdown_report_lists_residuals() {
    let o = spinlrl(&["verify", "--d", "2", "--suite", "core", "--format", "markdown", "--no-timing"]);
    let text = stdout(&o);
    assert!(text.starts_with("# spinlrl"));
    assert!(text.contains("| NONCLOSE-GIGD1 |"));
    assert!(text.contains("## Residuals"));
    assert!(text.contains("-i*x2*g1*g2"));
}

#[test]
fn out_dir_environment_variable() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_spinlrl"))
        .args(["verify", "--d", "2..3", "--suite", "sturm", "--format", "json", "--no-timing"])
        .env("SPINLRL_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let path = dir.path().join("spinlrl-sturm-d2-3.json");
    assert!(stderr(&o).contains("wrote"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);

    let explicit = dir.path().join("nested/report.md");
    let o = spinlrl(&["verify", "--d", "2", "--suite", "sturm", "--format", "markdown", "--out", explicit.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(std::fs::read_to_string(explicit).unwrap().starts_with("# spinlrl"));
}

#[test]
fn oracle_command() {
    let args = ["oracle", "--d", "3", "--trials", "50", "--seed", "7", "[x1,p1]", "0"];
    let a = spinlrl(&args);
    assert_eq!(code(&a), 1);
    assert!(stdout(&a).starts_with("witness: the two sides differ"));
    assert_eq!(a.stdout, spinlrl(&args).stdout);

    let o = spinlrl(&["oracle", "--d", "3", "--trials", "50", "--seed", "7", "[x1,p1]", "i"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "confirmed: both sides agree on 50 test functions (seed 7)");

    let o = spinlrl(&["oracle", "--d", "2", "[LRL(1),H]", "0"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn oracle_flag_on_verify() {
    let o = spinlrl(&["verify", "--d", "2", "--suite", "sturm", "--oracle", "--trials", "4", "--format", "json", "--no-timing"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["oracle"], "agree", "{}", c["id"]);
    }
}

#[test]
fn list_command() {
    let o = spinlrl(&["list"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().count() > 50);
    let o = spinlrl(&["list", "--suite", "d3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["dims"] == "3"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&spinlrl(&["--help"])), 0);
    assert_eq!(code(&spinlrl(&["--version"])), 0);
}
