//! Command-line behaviour and the expression parser on a fixed corpus.

use std::process::{Command, Output};

use qpoincare::expr::{parse, Side};
use qpoincare::scalars::CycField;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpoincare")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

const GROUP: [&str; 30] = [
    "1",
    "0",
    "eta+",
    "eta-",
    "delta",
    "delta^-1",
    "eta- eta+",
    "eta+^2 eta-^2 delta^2",
    "eta+^3",
    "(eta+ + eta-)^2",
    "q eta+ - q^-1 eta-",
    "q^(1/2) delta",
    "w^3 eta+ delta^2",
    "i z+",
    "z+^2 z- - z-",
    "(1 + w)/3 eta+",
    "-delta^2 eta-",
    "lambda+ eta+ + lambda- eta-",
    "lambda'+ lambda'- delta",
    "chi+ z+ - chi- z-",
    "mu^2 delta + 1",
    "qexp+(eta+)",
    "qexp-(i eta-)",
    "qbessel(0, eta+ eta-)",
    "qbessel(2, lambda+ lambda- eta+ eta-)",
    "zeta(0) + zeta(1)",
    "exp(-i lambda+ z+) eta+",
    "exp(i z+ - i z-) z+ delta",
    "(eta+ delta - delta eta+) / 2",
    "eta+ (eta- + q) delta^-2",
];

const ALGEBRA: [&str; 20] = [
    "p+",
    "p-",
    "kappa",
    "kappa^-1",
    "P+",
    "P-",
    "p- p+",
    "kappa p+ kappa^-1",
    "p+^3 p-^2 kappa",
    "P+ P- + p+ p-",
    "q^(1/2) p+ kappa^-1",
    "(p+ + p-)^3",
    "lambda+ p+ - lambda- p-",
    "qexp+(i p+)",
    "qexp-(p- kappa)",
    "qbessel(1, p+ p-)",
    "w p+ + i kappa",
    "(kappa - kappa^-1) / (q - q^-1)",
    "mu P+ + 7/2",
    "kappa^7 p-^4",
];

#[test]
fn corpus_renders_and_parses_back() {
    for p in [3, 5, 7] {
        let field = CycField::new(p).unwrap();
        let cases = GROUP.iter().map(|s| (s, Side::A)).chain(ALGEBRA.iter().map(|s| (s, Side::U)));
        for (src, side) in cases {
            let x = parse(field, src, side).unwrap_or_else(|e| panic!("p={p} '{src}': {e}"));
            let text = x.render();
            let y = parse(field, &text, side).unwrap_or_else(|e| panic!("p={p} '{text}': {e}"));
            assert_eq!(x, y, "p={p} '{src}' renders as '{text}'");
        }
    }
}

#[test]
fn parse_prints_normal_form() {
    let out = run(&["parse", "--p", "3", "eta- eta+"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(-w^2)*eta+ eta-");
    let out = run(&["parse", "--p", "5", "--side", "U", "kappa p+"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "(w^4)*p+ kappa");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["parse", "--p", "3", "eta+ p+"][..],
        &["parse", "--p", "3", "eta+ +"],
        &["parse", "--p", "4", "eta+"],
        &["suite", "--p", "4"],
        &["suite", "--p", "1"],
        &["export", "gram", "--p", "6"],
        &["export", "dmatrix", "--p", "3", "--lambda-plus", "x", "--lambda-minus", "1"],
        &["export", "dmatrix", "--p", "3", "--lambda-plus", "0", "--lambda-minus", "0"],
        &["suite", "--p", "3", "--suite", "nonsense"],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn suite_reports_json() {
    let out = run(&["suite", "--p", "3", "--suite", "forms"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["p"], 3);
    let results = report["results"].as_array().unwrap();
    assert!(!results.is_empty());
    for r in results {
        assert!(["pass", "info"].contains(&r["status"].as_str().unwrap()), "{r}");
        assert!(r["assertion_id"].as_str().unwrap().starts_with("forms."));
    }
}

#[test]
fn exports() {
    let out = run(&["export", "gram", "--p", "3", "--space", "SO", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert_eq!(text.lines().next().unwrap(), "delta^0,delta^1,delta^2");

    let out = run(&["export", "pairing", "--p", "3"]);
    assert_eq!(code(&out), 0);
    let rows: Vec<Vec<String>> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.len(), 27);

    let out = run(&["export", "dmatrix", "--p", "3", "--lambda-plus", "1/2", "--lambda-minus", "-3", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("m,n,eta_plus"));

    let dir = std::env::temp_dir().join(format!("qpoincare-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d.json");
    let out = run(&["export", "dmatrix", "--p", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let rows: Vec<Vec<String>> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rows.len(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}
