use std::io::Write;
use std::process::{Command, Stdio};

use lacunary::classify::{classify_main, classify_tri2};
use lacunary::decompose::full_decompose;
use lacunary::dickson::dickson;
use lacunary::rational::frac;
use lacunary::{parse_poly, EquationInstance, Outcome};
use serde_json::Value;

struct Run {
    code: i32,
    report: Value,
    stdout: String,
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lacunary"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    Run { code: out.status.code().unwrap(), report, stdout }
}

fn run(args: &[&str]) -> Run {
    run_with_stdin(args, "")
}

#[test]
fn tri2_instance() {
    let r = run(&["classify", "--theorem", "tri2", "2x^3-3x^2+1", "2x^3+3x^2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["status"], "ok");
    assert_eq!(r.report["payload"]["outcome"], "infinitely-many");
    assert_eq!(r.report["payload"]["certificate"]["mu"], "x - 1");
}

#[test]
fn dickson_cubic() {
    let r = run(&["dickson", "3", "1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["payload"]["poly"], "x^3 - 3x");
    let r = run(&["dickson", "4", "-3/2"]);
    assert_eq!(r.report["payload"]["poly"], dickson(4, &frac(-3, 2)).to_string());
}

#[test]
fn main_hypotheses_not_met() {
    let r = run(&["classify", "--theorem", "main", "x^6+x^4+x^2", "x^6+x^4+x^2"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["status"], "hypotheses-not-met");
    let failed = r.report["payload"]["failed_hypotheses"].as_array().unwrap();
    assert!(failed.iter().any(|v| v == "gcd-condition"));
}

#[test]
fn errors_exit_one() {
    let r = run(&["parse", "x^2 + y"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.report["status"], "error");
    assert!(r.report["payload"]["error"].as_str().unwrap().contains("position 6"));

    assert_eq!(run(&["frobnicate"]).code, 1);
    assert_eq!(run(&["search", "x", "y", "--height", "0"]).code, 1);
    assert_eq!(run(&["pair", "third", "--m", "2", "--n", "4", "--a", "1"]).code, 1);
    assert_eq!(run(&["pair", "third", "--m", "2"]).code, 1);
}

#[test]
fn parse_print_identity() {
    for text in ["-1/64x^6 + 3/8x^4 + 2", "x^13 + x^11 + x^2", "7", "-y^3 + 1/2y"] {
        let r = run(&["parse", text]);
        let printed = r.report["payload"]["poly"].as_str().unwrap().to_string();
        assert_eq!(parse_poly(&printed).unwrap(), parse_poly(text).unwrap());
        let again = run(&["parse", &printed]);
        assert_eq!(again.report["payload"]["poly"], printed.as_str());
    }
}

#[test]
fn stdin_arguments() {
    let r = run_with_stdin(&["search", "-", "-", "--height", "5"], "x^2\n\ny^2\n");
    assert_eq!(r.code, 0);
    assert_eq!(r.report["payload"]["count"], 11 * 2 - 1);
    let r = run_with_stdin(&["equiv", "-", "-"], "x^2\n");
    assert_eq!(r.code, 1);
}

#[test]
fn plain_output() {
    let r = run(&["--plain", "dickson", "3", "1"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.lines().any(|l| l == "poly: x^3 - 3x"));
    assert!(r.stdout.starts_with("status: ok"));
}

#[test]
fn family_members() {
    let r = run(&["family", "x^3+3x^2+3x+1", "y^13+y^12", "--theorem", "main2", "--count", "5"]);
    assert_eq!(r.code, 0);
    let members = r.report["payload"]["members"].as_array().unwrap();
    assert_eq!(members.len(), 5);
    // parameters 0, 1, -1, 2, -2
    assert_eq!(members[3]["x"], "4801");
    assert_eq!(members[3]["y"], "7");
    assert_eq!(run(&["family", "x^3+x+1", "y^3+y"]).code, 1);
}

#[test]
fn verdicts_match_library() {
    let cases = [
        ("tri2", "x^3 + 6x^2 - 16", "y^3 - 12y"),
        ("tri2", "x^3 + x^2 + 1", "y^3 + y"),
        ("tri2", "32x^5 + 4x^2", "y^5 + y^2"),
        ("main", "8192x^13 + 2048x^11 + 4x^2", "y^13 + y^11 + y^2"),
        ("main", "x^13 + x^11 + x^2 + 1", "y^13 + y^11 + y^2"),
    ];
    for (theorem, f, g) in cases {
        let inst = EquationInstance::new(parse_poly(f).unwrap(), parse_poly(g).unwrap()).unwrap();
        let verdict = match theorem {
            "tri2" => classify_tri2(&inst),
            _ => classify_main(&inst),
        }
        .unwrap();
        let r = run(&["classify", "--theorem", theorem, f, g]);
        assert_eq!(r.report["payload"]["outcome"], verdict.outcome.label(), "{f} = {g}");
        if let Outcome::InfinitelyMany(_) = verdict.outcome {
            assert!(r.report["payload"]["certificate"].is_object());
        }
    }
}

#[test]
fn decompose_matches_library() {
    let text = "32x^6 - 48x^4 + 18x^2 - 1";
    let r = run(&["decompose", text]);
    let splits = full_decompose(&parse_poly(text).unwrap()).unwrap();
    let listed = r.report["payload"]["decompositions"].as_array().unwrap();
    assert_eq!(listed.len(), splits.len());
    for (json, s) in listed.iter().zip(&splits) {
        assert_eq!(json["inner"], s.inner.to_string().as_str());
        assert_eq!(json["outer"], s.outer.to_string().as_str());
    }
    let r = run(&["indecomposable", "x^7 + x^3 + 1"]);
    assert_eq!(r.report["payload"]["reason"], "prime-degree");
}

#[test]
fn pairs_and_detection() {
    let r = run(&["pair", "specific", "--m", "3", "--n", "3", "--a", "1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["payload"]["g"], "-1/8x^3 + 3/2x");
    let r = run(&["detect-dickson", "-1/8x^3 + 3/2x"]);
    assert_eq!(r.report["payload"]["form"]["a"], "4");
    let r = run(&["detect-dickson", "x^4 + x"]);
    assert!(r.report["payload"]["form"].is_null());
    let r = run(&["pair", "first", "--m", "3", "--r", "1", "--a", "2", "--p", "x + 1"]);
    assert_eq!(r.report["payload"]["f"], "x^3");
}
