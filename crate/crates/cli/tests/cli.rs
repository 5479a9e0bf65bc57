use std::process::{Command, Output};

fn zigzag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zigzag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).to_string()
}

#[test]
fn hom_identity_examples() {
    let out = zigzag(&["hom", "--m", "2", "--braid", "", "--i", "1", "--j", "1"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("1 + q2"), "{s}");
    assert!(s.contains("total rank: 2"), "{s}");
    assert!(s.contains("torsion: none"), "{s}");

    let out = zigzag(&["hom", "--m", "2", "--braid", "1", "--i", "1", "--j", "1"]);
    assert!(stdout(&out).contains("q1^-1 q2 + q1^-1 q2^2"));
}

#[test]
fn hom_cross_oracle_case() {
    let out = zigzag(&["hom", "--m", "2", "--braid", "1", "--i", "0", "--j", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("curve-side cross-check: ok"));
}

#[test]
fn gin_examples() {
    let out = zigzag(&["gin", "--m", "2", "--braid", "", "--i", "1", "--j", "2"]);
    assert!(stdout(&out).contains("= 1/2"));
    let out = zigzag(&["gin", "--m", "2", "--braid", "", "--i", "1", "--j", "1"]);
    assert!(stdout(&out).contains("= 1"));
    let out = zigzag(&[
        "gin", "--m", "2", "--braid", "1", "--i", "1", "--j", "1", "--n", "2",
    ]);
    let s = stdout(&out);
    assert!(s.contains("q + q^3"), "{s}");
}

#[test]
fn is_identity_exit_codes() {
    let out = zigzag(&["is-identity", "--m", "2", "--braid", "1,2,1,-2,-1,-2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("true"));
    let out = zigzag(&["is-identity", "--m", "2", "--braid", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("false"));
    let out = zigzag(&["is-identity", "--m", "2", "--braid", ""]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn parse_errors_exit_2() {
    let out = zigzag(&["hom", "--m", "2", "--braid", "1,x", "--i", "0", "--j", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = zigzag(&["hom", "--m", "2", "--braid", "3", "--i", "0", "--j", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = zigzag(&["check", "--m", "2", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = zigzag(&["hom", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2), "missing required flags");
}

#[test]
fn burau_output() {
    let out = zigzag(&["burau", "--m", "1", "--braid", "1"]);
    let s = stdout(&out);
    assert!(s.contains("[ 1, 0 ]"), "{s}");
    assert!(s.contains("[ -q, -q ]"), "{s}");
    // identity word gives identity matrix
    let out = zigzag(&["burau", "--m", "2", "--braid", "1,-1"]);
    let s = stdout(&out);
    assert!(s.contains("[ 1, 0, 0 ]"));
    // the two sides of the braid relation agree
    let a = stdout(&zigzag(&["burau", "--m", "2", "--braid", "1,2,1"]));
    let b = stdout(&zigzag(&["burau", "--m", "2", "--braid", "2,1,2"]));
    assert_eq!(a, b);
}

#[test]
fn check_suites_run() {
    let out = zigzag(&["check", "--suite", "inverses", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all passed"));
    let out = zigzag(&[
        "check", "--suite", "dimequals", "--m", "3", "--max-len", "6", "--seed", "7",
        "--words", "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = zigzag(&[
        "check", "--suite", "burau-euler", "--m", "4", "--max-len", "8", "--words", "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_output_is_valid() {
    for args in [
        vec!["hom", "--m", "2", "--braid", "1", "--i", "1", "--j", "1", "--format", "json"],
        vec!["gin", "--m", "2", "--braid", "1", "--i", "1", "--j", "1", "--n", "2",
            "--format", "json"],
        vec!["is-identity", "--m", "2", "--braid", "", "--format", "json"],
        vec!["burau", "--m", "2", "--braid", "1,2", "--format", "json"],
        vec!["check", "--suite", "tl", "--m", "2", "--format", "json"],
    ] {
        let out = zigzag(&args);
        let v: serde_json::Value =
            serde_json::from_str(stdout(&out).trim()).expect("valid json");
        assert_eq!(v["schema_version"], 1, "{args:?}");
    }
}

#[test]
fn mod2_coefficients_accepted() {
    let out = zigzag(&[
        "hom", "--m", "2", "--braid", "1", "--i", "1", "--j", "1", "--coefficients", "mod2",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("q1^-1 q2 + q1^-1 q2^2"));
}
