use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_elasym"))
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(p).unwrap()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn reports(out: &Output) -> Vec<Value> {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice::<Vec<Value>>(&out.stdout).unwrap()
}

fn classify_stdin(input: &[u8], extra: &[&str]) -> Output {
    let mut child = bin()
        .arg("classify")
        .args(extra)
        .arg("-")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn isotropic_fixture() {
    let r = reports(&run(&["classify", &fixture("isotropic.json")]));
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["class"], "isotropic");
}

#[test]
fn isotropic_report_matches_golden() {
    let out = run(&["classify", &fixture("isotropic.json")]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        golden("isotropic_report.json")
    );
}

#[test]
fn kelvin_input_is_converted() {
    let r = reports(&run(&["classify", &fixture("isotropic_kelvin.json")]));
    assert_eq!(r[0]["class"], "isotropic");
    let voigt = reports(&run(&["classify", &fixture("isotropic.json")]));
    assert_eq!(r[0]["digest"], voigt[0]["digest"]);
}

#[test]
fn cubic_fixture_recovers_delta() {
    let r = reports(&run(&["classify", &fixture("cubic.json")]));
    assert_eq!(r[0]["class"], "cubic");
    let delta = r[0]["parameters"]["delta"].as_f64().unwrap();
    assert!((delta - 1.0).abs() < 1e-8, "{delta}");
}

#[test]
fn perturbed_trigonal_depends_on_tolerance() {
    let loose = reports(&run(&[
        "classify",
        "--tol-syzygy",
        "1e-3",
        &fixture("trigonal_perturbed.json"),
    ]));
    assert_eq!(loose[0]["class"], "trigonal");

    let strict = reports(&run(&["classify", &fixture("trigonal_perturbed.json")]));
    assert_eq!(strict[0]["class"], "triclinic");
    assert_eq!(strict[0]["nearest"][0]["transition"], "1->D3");
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "classify",
        &fixture("cubic.json"),
        &fixture("trigonal_perturbed.json"),
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn text_output() {
    let out = run(&["classify", "--text", &fixture("cubic.json")]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("cubic: cubic [O]"), "{s}");
}

#[test]
fn asymmetric_matrix_is_rejected_with_entry_pair() {
    let out = run(&["classify", &fixture("asymmetric.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("(2,5)") && err.contains("(5,2)"), "{err}");
}

#[test]
fn parse_errors_exit_two() {
    let out = run(&["classify", &fixture("malformed.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("36"));

    let out = run(&["classify", &fixture("no_such_file.json")]);
    assert_eq!(out.status.code(), Some(2));

    let out = classify_stdin(b"{ not json", &[]);
    assert_eq!(out.status.code(), Some(2));

    // good records are still reported alongside the failure
    let out = run(&[
        "classify",
        &fixture("isotropic.json"),
        &fixture("malformed.json"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let r: Vec<Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.len(), 1);
}

#[test]
fn stdin_input() {
    let input = std::fs::read(fixture("isotropic.json")).unwrap();
    let r = reports(&classify_stdin(&input, &["--json"]));
    assert_eq!(r[0]["class"], "isotropic");
}

fn generate_then_classify(args: &[&str]) -> Value {
    let gen = run(args);
    assert!(
        gen.status.success(),
        "{}",
        String::from_utf8_lossy(&gen.stderr)
    );
    let r = reports(&classify_stdin(&gen.stdout, &[]));
    r.into_iter().next().unwrap()
}

#[test]
fn generated_cubic_round_trip() {
    let r = generate_then_classify(&["generate", "cubic", "--delta", "2", "--seed", "7"]);
    assert_eq!(r["class"], "cubic");
    assert!((r["parameters"]["delta"].as_f64().unwrap() - 2.0).abs() < 1e-8);
}

#[test]
fn generated_orthotropic_round_trip() {
    let r = generate_then_classify(&[
        "generate",
        "orthotropic",
        "--lambda",
        "1,2,3",
        "--random-lower",
    ]);
    assert_eq!(r["class"], "orthotropic");
    let l: Vec<f64> = r["parameters"]["lambda"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    for (a, b) in l.iter().zip([3.0, 2.0, 1.0]) {
        assert!((a - b).abs() < 1e-8, "{l:?}");
    }
}

#[test]
fn generate_is_deterministic_and_has_provenance() {
    let args = [
        "generate",
        "trigonal",
        "--delta",
        "0.5",
        "--sigma",
        "-2",
        "--seed",
        "3",
        "--random-lower",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let p = &v[0]["provenance"];
    assert_eq!(p["class"], "trigonal");
    assert_eq!(p["seed"], 3);
    assert_eq!(p["params"]["sigma"], -2.0);
    assert_eq!(p["rotation"].as_array().unwrap().len(), 3);
}

#[test]
fn degenerate_generation_names_actual_class() {
    let out = run(&["generate", "orthotropic", "--lambda", "1,1,2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("tetragonal"), "{err}");
}

#[test]
fn tables_match_golden() {
    let out = run(&["tables"]);
    assert!(out.status.success());
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(s, golden("tables.txt"));
    let row = |title: &str, h: &str| -> Vec<String> {
        let block = s.split("\n\n").find(|b| b.starts_with(title)).unwrap();
        let line = block
            .lines()
            .find(|l| l.split_whitespace().next() == Some(h))
            .unwrap();
        line.split_whitespace()
            .rev()
            .take(3)
            .map(str::to_string)
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .collect()
    };
    assert_eq!(row("Ela", "D2"), ["9", "9", "12"]);
    assert_eq!(row("H^4", "O"), ["1", "1", "4"]);
}
