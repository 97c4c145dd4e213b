use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const EXAMPLE: &str = "n 4\n1 2\n2 3\n2 4\n3 4\n";
const CLAW: &str = "n 4\n1 2\n1 3\n1 4\n";
const C4: &str = "n 4\n1 2\n2 3\n3 4\n1 4\n";
const C5: &str = "n 5\n1 2\n2 3\n3 4\n4 5\n1 5\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_interval-complex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_delta_and_ind_facets() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", EXAMPLE);
    let o = run(&["build", "--graph", s(&g), "-d", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "n 4 d 2\n1 2 3\n1 2 4\n2 3 4\n");
    let o = run(&["build", "--graph", s(&g), "-d", "2", "--target", "ind-facets"]);
    assert_eq!(stdout(&o), "n 4\n1 2\n1 3 4\n2 3\n2 4\n");
    let o = run(&["--format", "json", "build", "--graph", s(&g), "-d", "2", "--target", "ind-faces", "-t", "3"]);
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["faces"], serde_json::json!([[1, 3, 4]]));
}

#[test]
fn build_on_edgeless_graph_is_empty() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "n 3\n");
    let o = run(&["build", "--graph", s(&g), "-d", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "n 3 d 1\n");
}

#[test]
fn build_writes_output_file_that_check_reads() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", C4);
    let out = dir.path().join("delta.txt");
    let o = run(&["build", "--graph", s(&g), "-d", "1", "-o", s(&out)]);
    assert_eq!(code(&o), 0);
    let o = run(&["check", "--complex", s(&out), "--predicate", "under-closed"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("violation"), "{}", stdout(&o));
}

#[test]
fn check_example_complex_under_identity() {
    // 124 spans 1..4 while 134 is missing, so the identity labeling is not unit interval.
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c.txt", "n 4 d 2\n1 2 3\n1 2 4\n2 3 4\n");
    let o = run(&["check", "--complex", s(&c), "--predicate", "unit-interval"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("{1,3,4}"));
    let o = run(&["check", "--complex", s(&c), "--predicate", "under-closed"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn check_single_facet_is_chordal() {
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c.txt", "n 5 d 2\n2 4 5\n");
    let o = run(&["check", "--complex", s(&c), "--predicate", "chordal-complex"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn check_text_and_json_agree() {
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c.txt", "n 4 d 1\n1 2\n1 4\n2 3\n3 4\n");
    for pred in ["under-closed", "unit-interval", "cond2", "condition-star", "chordal-complex"] {
        for lab in ["1,2,3,4", "1,2,4,3", "2,1,3,4"] {
            let t = run(&["check", "--complex", s(&c), "--predicate", pred, "--labeling", lab]);
            let j = run(&["--format", "json", "check", "--complex", s(&c), "--predicate", pred, "--labeling", lab]);
            assert_eq!(code(&t), code(&j));
            assert_eq!(json(&j)["holds"], code(&t) == 0);
        }
    }
}

#[test]
fn check_rejects_bad_labeling() {
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c.txt", "n 3 d 1\n1 2\n");
    let o = run(&["check", "--complex", s(&c), "--predicate", "under-closed", "--labeling", "1,1,2"]);
    assert_eq!(code(&o), 2);
    let o = run(&["check", "--complex", s(&c), "--predicate", "under-closed", "--labeling", "1,2"]);
    assert_eq!(code(&o), 2);
    let o = run(&["check", "--complex", s(&c), "--predicate", "nope"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn recognize_cycle_and_claw() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.txt", C5);
    let o = run(&["recognize", "--graph", s(&c5), "-d", "3", "--class", "unit_interval"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("labeling: 1,2,3,4,5"));
    let o = run(&["recognize", "--graph", s(&c5), "-d", "2", "--class", "unit_interval"]);
    assert_eq!(code(&o), 1);
    let claw = write(&dir, "claw.txt", CLAW);
    let o = run(&["recognize", "--graph", s(&claw), "-d", "1", "--class", "unit_interval"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("not found"));
}

#[test]
fn recognize_rejects_d_too_large() {
    let dir = TempDir::new().unwrap();
    let k1 = write(&dir, "k1.txt", "n 1\n");
    let o = run(&["recognize", "--graph", s(&k1), "-d", "1", "--class", "unit_interval"]);
    assert_eq!(code(&o), 2);
    let o = run(&["--format", "json", "recognize", "--graph", s(&k1), "-d", "1", "--class", "unit_interval"]);
    assert_eq!(json(&o)["error"]["kind"], "invalid_input");
}

#[test]
fn recognize_guard_exit_code() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("n 10\n");
    for v in 1..10 {
        text.push_str(&format!("{v} {}\n", v + 1));
    }
    let g = write(&dir, "p10.txt", &text);
    let o = run(&["recognize", "--graph", s(&g), "-d", "1", "--class", "unit_interval"]);
    assert_eq!(code(&o), 3);
    let o = run(&["recognize", "--graph", s(&g), "-d", "1", "--class", "strong_interval"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn recognize_certificate_checks_back() {
    let dir = TempDir::new().unwrap();
    for (name, graph, d, class, pred) in [
        ("c5", C5, 3, "strong_unit", "under-closed"),
        ("c5", C5, 3, "unit_interval", "unit-interval"),
        ("ex", EXAMPLE, 2, "strong_interval", "under-closed"),
        ("ex", EXAMPLE, 1, "under_closed", "under-closed"),
        ("p4", "n 4\n1 2\n2 3\n3 4\n", 2, "condition_star", "condition-star"),
    ] {
        let g = write(&dir, &format!("{name}.txt"), graph);
        let o = run(&["--format", "json", "recognize", "--graph", s(&g), "-d", &d.to_string(), "--class", class]);
        assert_eq!(code(&o), 0, "{name} {class}");
        let cert = write(&dir, "cert.json", &stdout(&o));
        let cx = dir.path().join("cx.txt");
        assert_eq!(code(&run(&["build", "--graph", s(&g), "-d", &d.to_string(), "-o", s(&cx)])), 0);
        let o = run(&["check", "--complex", s(&cx), "--predicate", pred, "--certificate", s(&cert)]);
        assert_eq!(code(&o), 0, "{name} {class}: {}", stdout(&o));
    }
}

#[test]
fn forbidden_paw_on_claw() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "claw.txt", CLAW);
    let o = run(&["forbidden", "--graph", s(&g), "-d", "2", "--kinds", "paw"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("{1,2,3,4}"));
    let o = run(&["forbidden", "--graph", s(&g), "-d", "2", "--kinds", "cycle"]);
    assert_eq!(code(&o), 0);
    let p = write(&dir, "p.txt", "n 3\n1 2\n2 3\n");
    let o = run(&["--format", "json", "forbidden", "--graph", s(&p), "-d", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["present"], false);
}

#[test]
fn sortable_example_and_search() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", EXAMPLE);
    let o = run(&["sortable", "--graph", s(&g), "-d", "2"]);
    assert_eq!(code(&o), 0);
    // Independent pairs 12 and 34 sort to 13 and 24, both edges.
    let h = write(&dir, "h.txt", "n 4\n1 3\n2 4\n");
    let o = run(&["sortable", "--graph", s(&h), "-d", "1"]);
    assert_eq!(code(&o), 1);
    let o = run(&["--format", "json", "sortable", "--graph", s(&h), "-d", "1", "--search"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["labeling"].is_array());
}

#[test]
fn verify_cycles_and_mutation() {
    let o = run(&["verify", "--suite", "CYCLES"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("CYCLES: PASS"));
    let o = run(&["--threads", "1", "--format", "json", "verify", "--suite", "CYCLES", "--mutate"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert!(v["reports"][0]["failure_count"].as_u64().unwrap() > 0);
    let dump = v["reports"][0]["failures"][0]["instance"].as_str().unwrap();
    assert!(dump.starts_with("n "));
}

#[test]
fn verify_seed_and_unknown_suite() {
    assert_eq!(code(&run(&["verify", "--suite", "CORONA"])), 2);
    let o = run(&["verify", "--suite", "CORONA", "--seed", "5", "--samples", "12"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(code(&run(&["verify", "--suite", "NOPE"])), 2);
}

#[test]
fn verify_json_is_reproducible() {
    let args = ["--format", "json", "verify", "--suite", "CORONA", "--seed", "9", "--samples", "10"];
    let mut a = json(&run(&args));
    let mut b = json(&run(&args));
    for v in [&mut a, &mut b] {
        v["reports"][0]["elapsed_ms"] = Value::Null;
    }
    assert_eq!(a, b);
}

#[test]
fn parse_errors_report_line() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bad.txt", "n 3\n1 2\n2 x\n");
    let o = run(&["build", "--graph", s(&g), "-d", "1"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
    let o = run(&["build", "--graph", "/nonexistent/graph.txt", "-d", "1"]);
    assert_eq!(code(&o), 2);
}
