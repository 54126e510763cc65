use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn vm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vm")).args(args).output().unwrap()
}

fn vm_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn assert_verifies(cert: &Value) {
    let o = vm_stdin(&["verify"], &cert.to_string());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn lc_on_p3_centre_gives_triangle() {
    let o = vm(&["lc", "--graph", "Bg", "--vertex", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Bw");
}

#[test]
fn pivot_and_labels() {
    let o = vm(&["pivot", "--graph", "Bg", "--u", "0", "--v", "1"]);
    assert_eq!(o.status.code(), Some(0));
    // pivoting 01 of the path 0-1-2 moves vertex 2 over to 0
    assert_eq!(stdout(&o).trim(), "Bo");
    let hn = vm(&["hn", "-n", "2"]);
    let rec = stdout(&hn);
    let o = vm(&["lc", "--graph", rec.trim(), "--vertex", "b1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"labels\":[\"a1\",\"b1\",\"a2\",\"b2\"]"));
}

#[test]
fn tree_depth_of_k4() {
    let o = vm(&["tree-depth", "--graph", "C~"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(v["td"], 4);
    assert_eq!(v["witness"]["parent"].as_array().unwrap().len(), 4);
}

#[test]
fn depth_reports() {
    let o = vm(&["sc-depth", "--graph", "C~"]);
    assert_eq!(json_lines(&o)[0]["sc_depth"], 1);
    let o = vm(&["bsc-depth", "--graph", "C~"]);
    assert_eq!(json_lines(&o)[0]["bsc_depth"], 2);
    let o = vm(&["tree-model", "--graph", "C~", "-d", "1", "-m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o)[0]["member"], true);
    // P_4 needs more than one colour at depth 1
    let o = vm(&["tree-model", "--graph", "Ch", "-d", "1", "-m", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn emitted_certificates_verify() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["vertex-minor", "--graph", "Dhc", "--target", "Ch"],
        vec!["pivot-minor", "--graph", "Dhc", "--target", "Bg"],
        vec!["hn-path", "-n", "6"],
    ];
    for args in runs {
        let o = vm(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_verifies(&json_lines(&o)[0]);
    }
    for cmd in ["sc-to-host", "bsc-to-host"] {
        let o = vm(&[cmd, "--graph", "Dhc"]);
        assert_eq!(o.status.code(), Some(0));
        let v = &json_lines(&o)[0];
        assert_verifies(&v["certificate"]);
        assert!(v["td_bound"].as_u64().unwrap() >= 2);
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let o = vm(&["hn-path", "-n", "4"]);
    let mut v = json_lines(&o)[0].clone();
    v["target"] = Value::String("Dhc".into());
    let o = vm_stdin(&["verify", "-"], &v.to_string());
    assert_eq!(o.status.code(), Some(1));
    let o = vm_stdin(&["verify"], "{not json");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let negative = vm(&["pivot-minor", "--graph", "Bg", "--target", "Bw"]);
    assert_eq!(negative.status.code(), Some(1));
    assert!(stdout(&negative).is_empty());
    assert_eq!(vm(&["lc", "--graph", "B w", "--vertex", "0"]).status.code(), Some(2));
    assert_eq!(vm(&["lc", "--graph", "Bg"]).status.code(), Some(2));
    assert_eq!(vm(&["lc", "--graph", "Bg", "--vertex", "7"]).status.code(), Some(2));
    assert_eq!(vm(&["frobnicate"]).status.code(), Some(2));
    let big = format!("{}{}", (63 + 13) as u8 as char, "~".repeat(13));
    assert_eq!(vm(&["tree-depth", "--graph", &big]).status.code(), Some(3));
    assert_eq!(vm(&["clique-bound", "-d", "4"]).status.code(), Some(3));
}

#[test]
fn batch_mode_reads_one_graph_per_line() {
    let dir = std::env::temp_dir().join(format!("vm-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("graphs.g6");
    std::fs::write(&file, "Bg\n\nBw\nC~\n").unwrap();
    let o = vm(&["tree-depth", "--file", file.to_str().unwrap()]);
    let tds: Vec<u64> = json_lines(&o).iter().map(|v| v["td"].as_u64().unwrap()).collect();
    assert_eq!(tds, vec![2, 3, 4]);
    let o = vm_stdin(&["tree-depth"], "Bg\nBw\n");
    assert_eq!(json_lines(&o).len(), 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn orbit_respects_node_limit() {
    let full = vm(&["orbit", "--graph", "Dhc"]);
    let v = &json_lines(&full)[0];
    assert_eq!(v["truncated"], false);
    let limited = Command::new(env!("CARGO_BIN_EXE_vm"))
        .args(["orbit", "--graph", "Ehuw"])
        .env("VM_NODE_LIMIT", "2")
        .output()
        .unwrap();
    let v = &json_lines(&limited)[0];
    assert_eq!(v["truncated"], true);
    assert_eq!(v["size"], 2);
}

#[test]
fn pivot_decompose_output() {
    let o = vm(&["pivot-decompose", "--graph", "Ch", "--set", "0,1,2,3", "--s", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    let pairs = v["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 2);
    let last = pairs[1].as_array().unwrap();
    assert!(last.contains(&Value::from(0)));
}

#[test]
fn clique_bound_is_deterministic() {
    let a = vm(&["clique-bound", "-d", "2", "--n-max", "6", "--threads", "1"]);
    let b = vm(&["clique-bound", "-d", "2", "--n-max", "6", "--threads", "1"]);
    let c = vm(&["clique-bound", "-d", "2", "--n-max", "6", "--threads", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let v = &json_lines(&a)[0];
    assert_eq!(v["bound"], 3);
    assert!(v["max_found"].as_u64().unwrap() <= 3);
}

#[test]
fn selftest_passes() {
    let o = vm(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}
