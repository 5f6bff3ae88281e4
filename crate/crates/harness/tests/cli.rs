use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn suntrap(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_suntrap"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("suntrap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn generate_pipes_into_analyze() {
    let g = suntrap(&["generate", "t-sun", "7"], "");
    assert!(g.status.success());
    let a = suntrap(&["--json", "analyze", "-"], &stdout(&g));
    assert!(a.status.success());
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    let first = if v.is_array() { &v[0] } else { &v };
    assert_eq!(first["n"], 14);
    assert_eq!(first["sun"]["cycle"].as_array().unwrap().len(), 7);
    assert_eq!(first["triangle_free"], true);
}

#[test]
fn verify_writes_a_report_that_rechecks() {
    let path = scratch("lem32.json");
    let p = path.to_str().unwrap();
    let v = suntrap(
        &[
            "--jobs", "2", "verify", "lem-3.2", "--nmax", "7", "--report", p,
        ],
        "",
    );
    assert_eq!(
        v.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&v.stderr)
    );
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["campaign"], "lem-3.2");
    assert_eq!(report["summary"]["violated"], 0);

    let r = suntrap(&["recheck", p], "");
    assert_eq!(r.status.code(), Some(0));

    let mut tampered = report.clone();
    tampered["summary"]["graphs"] = Value::from(1_000_000);
    let bad = scratch("tampered.json");
    std::fs::write(&bad, tampered.to_string()).unwrap();
    let r = suntrap(&["recheck", bad.to_str().unwrap()], "");
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn generated_corpus_campaign() {
    let v = suntrap(
        &[
            "--json",
            "verify",
            "lem-2.4",
            "--corpus",
            "generated:spoked-hole 5,t-sun 6",
        ],
        "",
    );
    assert_eq!(v.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&v)).unwrap();
    assert_eq!(report["summary"]["graphs"], 2);
    assert_eq!(report["summary"]["holds"], 1);
}

#[test]
fn extraction_of_a_sunspot() {
    let g = suntrap(&["generate", "t-sunspot", "4"], "");
    let e = suntrap(&["--json", "extract", "-", "--ell", "6"], &stdout(&g));
    assert_eq!(e.status.code(), Some(0));
    assert!(stdout(&e).contains("sunspot"));
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(
        suntrap(&["analyze", "-"], "not a graph\n").status.code(),
        Some(2)
    );
    assert_eq!(suntrap(&["verify", "lem-9.9"], "").status.code(), Some(2));
    assert_eq!(
        suntrap(&["constants", "--ell", "3"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        suntrap(&["recheck", "/nonexistent/report.json"], "")
            .status
            .code(),
        Some(2)
    );
}
