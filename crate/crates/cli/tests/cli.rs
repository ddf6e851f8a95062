use std::io::Write;
use std::process::{Command, Output, Stdio};

use prym_cli::report::{GroupInfo, MatchStatus, Quantity, ReportDocument, VerifyDocument};

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn prym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn dims(doc: &ReportDocument) -> Vec<Quantity> {
    doc.dimensions.iter().map(|d| d.dim.clone()).collect()
}

fn ints(xs: &[i64]) -> Vec<Quantity> {
    xs.iter().map(|&x| Quantity::Integer(x)).collect()
}

#[test]
fn s3_dims_json_round_trips() {
    let out = prym(&["dims", &fixture("s3.json"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let doc: ReportDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(dims(&doc), ints(&[0, 1, 1]));
    assert_eq!(doc.genera.total, Quantity::Integer(3));
    assert_eq!(doc.fixed_dims[1].dims, vec![1, 0, 1]);
    assert!(doc.diagnostics.is_empty());
    assert!(doc.timing.is_none());
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", text);
}

#[test]
fn classical_prym_dimension() {
    let out = prym(&["dims", &fixture("z2_classical.json"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: ReportDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(dims(&doc), ints(&[1, 2]));
    assert_eq!(doc.genera.total, Quantity::Integer(3));
}

#[test]
fn weyl_spec_file() {
    let out = prym(&["dims", &fixture("g2_weyl.json"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc: ReportDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.group.order, 12);
    // Unramified: dim V_j = deg ρ_j · (g − 1) apart from the trivial irrep.
    for d in &doc.dimensions[1..] {
        assert_eq!(d.dim, Quantity::Integer(d.degree));
    }
}

#[test]
fn dims_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_prym"))
        .args(["dims", "-", "--format", "tsv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let spec = std::fs::read_to_string(fixture("s3.json")).unwrap();
    child.stdin.take().unwrap().write_all(spec.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "irrep\tdegree\tdim\tclosed_form\nrho1[1]\t1\t0\t0\nrho2[1]\t1\t1\t1\nrho3[2]\t2\t1\t1\n"
    );
}

#[test]
fn malformed_spec_is_an_input_error() {
    let out = prym(&["dims", &fixture("malformed.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 4 column"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());

    let out = prym(&["dims", &fixture("does_not_exist.json")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn diagnostics_exit_with_two() {
    let out = prym(&["dims", &fixture("s3_odd.json"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: ReportDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!doc.diagnostics.is_empty());
    assert_eq!(doc.dimensions[1].dim, Quantity::Fraction("1/2".into()));
}

fn preset(args: &[&str]) -> ReportDocument {
    let mut full = vec!["preset"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let out = prym(&full);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn presets_match() {
    let cases: [(&[&str], i64); 5] = [
        (&["toda", "A", "3"], 3),
        (&["toda", "F", "4", "--reflection-split", "roots"], 4),
        (&["hitchin", "A", "2", "--genus", "2"], 8),
        (&["hitchin", "B", "2", "--genus", "3"], 20),
        (&["markman", "A", "2", "--genus", "2", "--degD", "2"], 14),
    ];
    for (args, expected) in cases {
        let doc = preset(args);
        let p = doc.preset.unwrap();
        assert_eq!(p.status, MatchStatus::Match, "{args:?}");
        assert_eq!(p.dim, Quantity::Integer(expected), "{args:?}");
    }
    let text = stdout(&prym(&["preset", "toda", "A", "3"]));
    assert!(text.trim_end().ends_with("MATCH"), "{text}");
}

#[test]
fn unrealizable_default_split_is_reported() {
    let out = prym(&["preset", "toda", "C", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: ReportDocument = serde_json::from_str(&stdout(&out)).unwrap();
    let p = doc.preset.unwrap();
    assert_eq!((p.status, p.dim), (MatchStatus::Match, Quantity::Integer(3)));
    assert!(!doc.diagnostics.is_empty());
}

#[test]
fn reflection_split_keeps_torus_dimension() {
    for split in ["long", "short", "even", "roots"] {
        let doc = preset(&["hitchin", "G", "2", "--genus", "2", "--reflection-split", split]);
        assert_eq!(doc.preset.unwrap().dim, Quantity::Integer(14), "{split}");
    }
}

#[test]
fn preset_input_errors() {
    for args in [
        &["preset", "hitchin", "A", "2"][..],
        &["preset", "toda", "E", "6"],
        &["preset", "toda", "D", "3"],
        &["preset", "hitchin", "A", "2", "--genus", "1"],
        &["preset", "markman", "A", "1", "--genus", "0", "--degD", "2"],
        &["preset", "toda", "A", "3", "--reflection-split", "sideways"],
    ] {
        let out = prym(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn verify_weyl_group() {
    let out = prym(&["verify", "--weyl", "A3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let doc: VerifyDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc.report.passed());
    assert_eq!(doc.report.checks.len(), 7);

    let out = prym(&["verify", "--weyl", "G2", "--tuples", "200", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: VerifyDocument = serde_json::from_str(&stdout(&out)).unwrap();
    let oracle = doc.report.checks.iter().find(|c| c.name == "monodromy_oracle").unwrap();
    assert!(oracle.passed);
    assert!(oracle.detail.starts_with("200 tuples"), "{}", oracle.detail);
}

#[test]
fn verify_rejects_irrational_group() {
    let out = prym(&["verify", "--generators", "(0 1 2)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("irrational"), "{}", stderr(&out));
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["dims", &fixture("s3.json"), "--format", "json"][..],
        &["verify", "--weyl", "B3", "--seed", "11", "--format", "json"],
        &["preset", "hitchin", "C", "3", "--genus", "2", "--format", "json"],
    ] {
        let a = prym(args);
        let b = prym(args);
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn timing_only_on_request() {
    let out = prym(&["dims", &fixture("s3.json"), "--format", "json", "--timing"]);
    let doc: ReportDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc.timing.is_some());
}

#[test]
fn chartable_tsv() {
    let out = prym(&["chartable", "--generators", "(0 1)", "(0 1 2)", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "class\t()\t(1 2)\t(0 1 2)\nsize\t1\t3\t2\nrho1[1]\t1\t1\t1\nrho2[1]\t1\t-1\t1\nrho3[2]\t2\t0\t-1\n"
    );
}

#[test]
fn group_info() {
    let out = prym(&["group-info", "--generators", "(0 1 2)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let info: GroupInfo = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!info.rational);
    assert_eq!(info.group.order, 3);

    let out = prym(&["group-info", "--weyl", "F4", "--format", "json"]);
    let info: GroupInfo = serde_json::from_str(&stdout(&out)).unwrap();
    let w = info.weyl.unwrap();
    assert_eq!((info.group.order, w.coxeter_number, w.lie_dim, w.reflections), (1152, 12, 52, 24));
    assert!(info.rational);
}

#[test]
fn usage_errors() {
    assert_eq!(prym(&["--help"]).status.code(), Some(0));
    assert_eq!(prym(&["dims"]).status.code(), Some(1));
    assert_eq!(prym(&["chartable"]).status.code(), Some(1));
    assert_eq!(prym(&["chartable", "--weyl", "A2", "--generators", "(0 1)"]).status.code(), Some(1));
    assert_eq!(prym(&["verify", "--weyl", "A3", "--format", "xml"]).status.code(), Some(1));
}
