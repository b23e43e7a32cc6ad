use std::path::PathBuf;
use std::process::{Command, Output};

fn divgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divgraph"))
        .args(args)
        .env_remove("DIVGRAPH_CORPUS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "..",
        "core",
        "tests",
        "fixtures",
        name,
    ]
    .iter()
    .collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["classify", "--ring", "Zmod(6)"], 0),
        (&["graph", "--ring", "Zmod(6)", "--x", "1"], 3),
        (&["graph", "--ring", "Zmod(6)", "--x", "9"], 2),
        (&["graph", "--ring", "Zmod(", "--x", "0"], 2),
        (&["graph", "--ring", "PolyQ(Zmod(4),2*x^2)", "--x", "0"], 2),
        (&["classify", "--ring", "Zmod(6)", "--format", "dot"], 2),
        (
            &["factor", "--ring", "Zmod(8)", "--x", "0", "--cap", "0"],
            2,
        ),
        (&["verify", "--only", "T-nope"], 2),
        (&["frobnicate"], 2),
    ];
    for (args, code) in cases {
        let o = divgraph(args);
        assert_eq!(
            o.status.code(),
            Some(*code),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        if *code != 0 {
            assert!(!o.stderr.is_empty(), "{args:?} printed no diagnostic");
        }
    }
    let table = format!("Table({})", fixture("corrupted_zmod3.json"));
    let o = divgraph(&["classify", "--ring", &table]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("distributivity"));
}

#[test]
fn dot_output_is_well_formed() {
    let o = divgraph(&[
        "graph",
        "--ring",
        "Prod(Zmod(2),Zmod(2))",
        "--x",
        "(0,0)",
        "--format",
        "dot",
    ]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.trim_start().starts_with("graph") || dot.trim_start().starts_with("strict graph"));
    assert_eq!(dot.matches('{').count(), dot.matches('}').count());
    for node in ["\"(1,0)\"", "\"(0,1)\""] {
        assert!(dot.contains(node), "{node} missing from\n{dot}");
    }
    assert!(dot.contains("--"), "no edge in\n{dot}");
    assert!(!dot.contains("->"));
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let one = divgraph(&["verify", "--jobs", "1"]);
    let eight = divgraph(&["verify", "--jobs", "8"]);
    assert!(one.status.success(), "{}", stdout(&one));
    assert_eq!(one.stdout, eight.stdout);
    let text = stdout(&one);
    assert!(text.contains("summary: 18 passed, 0 failed"), "{text}");
}

#[test]
fn verify_reads_corpus_files_and_reports_build_failures() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.txt");
    std::fs::write(
        &corpus,
        format!(
            "# two rings\nZmod(4)\nTable({})\n",
            fixture("corrupted_zmod3.json")
        ),
    )
    .unwrap();
    let o = divgraph(&["verify", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("BUILD-FAIL"), "{text}");
    assert!(text.contains("over 1 ring(s)"), "{text}");
}

#[test]
fn output_flag_writes_json_with_schema_tag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("props.json");
    let o = divgraph(&[
        "props",
        "--ring",
        "Zmod(12)",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], "divgraph/1");
    assert_eq!(v["kind"], "props");
    assert_eq!(v["ring"], "Zmod(12)");

    for (args, kind) in [
        (
            vec!["classify", "--ring", "Zmod(6)", "--format", "json"],
            "classify",
        ),
        (
            vec![
                "factor", "--ring", "Zmod(8)", "--x", "0", "--cap", "4", "--format", "json",
            ],
            "factor",
        ),
        (
            vec!["graph", "--ring", "Zmod(6)", "--x", "0", "--format", "json"],
            "graph",
        ),
        (
            vec!["verify", "--only", "T-zero", "--format", "json"],
            "verify",
        ),
    ] {
        let o = divgraph(&args);
        assert!(o.status.success(), "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["schema"], "divgraph/1", "{args:?}");
        assert_eq!(v["kind"], kind, "{args:?}");
    }
}

#[test]
fn factor_reports_truncation() {
    let o = divgraph(&["factor", "--ring", "Zmod(8)", "--x", "0", "--cap", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("truncated"), "{text}");
    assert!(text.contains("[3]") && text.contains("[4]"), "{text}");
}

#[test]
fn props_include_zero_shows_both_scopes() {
    let o = divgraph(&[
        "props",
        "--ring",
        "Zmod(4)",
        "--include-zero",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let scopes = v["scopes"].as_array().unwrap();
    assert_eq!(scopes.len(), 2);
    assert_ne!(scopes[0]["scope"], scopes[1]["scope"]);
}
