use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spanfactor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_and_check_k_tree() {
    let gen = run(&["gen", "--family", "exktree", "--n", "10", "--m", "1", "--k", "2"], "");
    assert!(gen.status.success());
    let g6 = stdout(&gen);
    let check = run(&["check", "--property", "k-tree", "--k", "2"], &g6);
    let v: Value = serde_json::from_str(stdout(&check).trim()).unwrap();
    assert_eq!(v["graph6"], g6.trim());
    assert_eq!(v["answer"], "no");
    let line = stdout(&check);
    assert!(line.find("graph6").unwrap() < line.find("answer").unwrap());

    let check3 = run(&["check", "--property", "k-tree", "--k", "3"], &g6);
    let v: Value = serde_json::from_str(stdout(&check3).trim()).unwrap();
    assert_eq!(v["answer"], "yes");
    assert_eq!(v["certificate"].as_array().unwrap().len(), 9);
}

#[test]
fn check_one_factor_and_leaf_degree() {
    // K4 and the 4-vertex star.
    let out = run(&["check", "--property", "1-factor"], "C~\nCs\n");
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["answer"], "yes");
    assert_eq!(lines[0]["certificate"].as_array().unwrap().len(), 2);
    assert_eq!(lines[1]["answer"], "no");

    let leaf = run(&["gen", "--family", "exleaf", "--n", "11", "--delta", "1", "--k", "1"], "");
    let out = run(&["check", "--property", "leaf-degree", "--k", "1"], &stdout(&leaf));
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["answer"], "no");
    assert_eq!(v["violator"], serde_json::json!([0]));
}

#[test]
fn thresholds_and_spectra() {
    let t = run(&["threshold", "--which", "spec1f", "--n", "16", "--delta", "1"], "");
    assert_eq!(stdout(&t).trim(), "12.3693168769");
    let t = run(&["threshold", "--which", "phi", "--n", "10", "--r", "2", "--q", "3"], "");
    // C(6, 2) + 4·C(3, 1)
    assert_eq!(stdout(&t).trim(), "27");
    let s = run(&["spectral", "--method", "power"], "C~\n");
    assert_eq!(stdout(&s).trim(), "3");
    let q = run(&["spectral", "--method", "quotient", "--a", "2", "--b", "3", "--c", "0"], "");
    assert_eq!(stdout(&q).trim(), "4");
    let c = run(&["cliques", "--r", "3"], "C~\n");
    assert_eq!(stdout(&c).trim(), "4");
}

#[test]
fn closure_of_path() {
    // P_4 closes to K_4 at l = 3.
    let p4 = "Ch\n";
    let out = run(&["closure", "--l", "3"], p4);
    assert_eq!(stdout(&out).trim(), "C~");
    let out = run(&["closure", "--l", "kf:2"], p4);
    assert_eq!(stdout(&out).trim(), "Ch");
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--theorem", "EQ-T12", "--n", "5", "--k", "2", "--format", "csv"], "");
    assert_eq!(ok.status.code(), Some(0));
    let text = stdout(&ok);
    assert!(text.lines().nth(1).unwrap().starts_with("EQ-T12,5,1024,1024,"));

    let bad = run(&["verify", "--theorem", "T13i", "--n", "7", "--delta", "1", "--r", "2"], "");
    assert_eq!(bad.status.code(), Some(2));
    let unknown = run(&["verify", "--theorem", "T99", "--n", "7"], "");
    assert_eq!(unknown.status.code(), Some(2));

    let json = run(&["verify", "--theorem", "BND-L33", "--n", "4", "--source", "file:-"], "C~\nCr\n");
    assert_eq!(json.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["scanned"], 2);
    assert_eq!(v["source"], "file:-");
}

#[test]
fn random_source_is_deterministic() {
    let args = ["verify", "--theorem", "FACT21", "--n", "9", "--s", "2", "--q", "3", "--r", "3"];
    let a = run(&[&args[..], &["--source", "random:200:0.5", "--seed", "11"]].concat(), "");
    let b = run(&[&args[..], &["--source", "random:200:0.5", "--seed", "11"]].concat(), "");
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_str(&stdout(o)).unwrap();
        v["wall_time"] = Value::Null;
        v
    };
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn counterexample_exits_with_one() {
    // K_6 ∪ K_2 has a 1-factor, so it is not extremal for that property.
    let out = run(&["perturb", "--family", "ex1fa", "--n", "8", "--delta", "1"], "");
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!v["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn wrong_order_file_input_is_rejected() {
    let out = run(&["verify", "--theorem", "BND-L27", "--n", "5", "--source", "file:-"], "C~\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn perturbation_report() {
    let out = run(&["perturb", "--family", "exfan", "--n", "8", "--k", "2"], "");
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert_eq!(v["scanned"], 1 + 28);
}
