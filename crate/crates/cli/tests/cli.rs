//! End-to-end checks of the command-line surface using the built binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn critset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn critset_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_critset"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    let text = String::from_utf8_lossy(&output.stdout);
    serde_json::from_str(text.lines().next().unwrap_or_else(|| panic!("no output: {output:?}")))
        .unwrap_or_else(|e| panic!("bad json ({e}): {text}"))
}

fn temp_file(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("critset-cli-{}-{name}", std::process::id()))
}

#[test]
fn gen_then_param_pipeline() {
    let gen = critset(&["gen", "petersen"]);
    assert!(gen.status.success());
    let record = String::from_utf8_lossy(&gen.stdout).trim().to_string();

    let out = critset_stdin(
        &["param", "sn", "--k", "3", "--input", "-", "--no-cache"],
        &record,
    );
    assert!(out.status.success(), "{out:?}");
    let json = stdout_json(&out);
    assert_eq!(json["value"], 4);
    assert_eq!(json["parameter"], "sn");
    assert_eq!(json["cached"], false);
}

#[test]
fn gen_emits_hjson_for_hypergraphs() {
    let gen = critset(&["gen", "latin_hypergraph", "3"]);
    assert!(gen.status.success());
    let json: serde_json::Value =
        serde_json::from_slice(&gen.stdout).expect("hypergraph emits json");
    assert_eq!(json["n"], 9);
    assert_eq!(json["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn percolouring_scs_roundtrip() {
    let gen = critset(&["gen", "cycle", "4"]);
    let record = String::from_utf8_lossy(&gen.stdout).trim().to_string();
    let graph_file = temp_file("c4.g6");
    let colouring_file = temp_file("c4-colouring.json");
    std::fs::write(&graph_file, format!("{record}\n")).unwrap();
    std::fs::write(&colouring_file, "[1,2,1,2]").unwrap();

    let out = critset(&[
        "percolouring",
        "scs",
        "--input",
        graph_file.to_str().unwrap(),
        "--colouring",
        colouring_file.to_str().unwrap(),
        "--k",
        "2",
    ]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(stdout_json(&out)["value"], 1);

    let _ = std::fs::remove_file(graph_file);
    let _ = std::fs::remove_file(colouring_file);
}

#[test]
fn tree_sn_command() {
    let gen = critset(&["gen", "complete_binary_tree", "2"]);
    let record = String::from_utf8_lossy(&gen.stdout).trim().to_string();
    let out = critset_stdin(&["tree-sn", "--k", "3", "--input", "-"], &record);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["value"], 4);
}

#[test]
fn param_cache_hits_on_second_run() {
    let gen = critset(&["gen", "cycle", "5"]);
    let record = String::from_utf8_lossy(&gen.stdout).trim().to_string();
    let graph_file = temp_file("c5.g6");
    let cache_file = temp_file("cache.jsonl");
    let _ = std::fs::remove_file(&cache_file);
    std::fs::write(&graph_file, format!("{record}\n")).unwrap();

    let args = [
        "param",
        "sn",
        "--k",
        "3",
        "--input",
        graph_file.to_str().unwrap(),
        "--cache",
        cache_file.to_str().unwrap(),
    ];
    let first = critset(&args);
    assert!(first.status.success());
    let first_json = stdout_json(&first);
    assert_eq!(first_json["cached"], false);
    assert_eq!(first_json["value"], 3);

    let second = critset(&args);
    let second_json = stdout_json(&second);
    assert_eq!(second_json["cached"], true);
    assert_eq!(second_json["value"], 3);

    let _ = std::fs::remove_file(graph_file);
    let _ = std::fs::remove_file(cache_file);
}

#[test]
fn cache_env_variable_is_honoured() {
    let gen = critset(&["gen", "path", "4"]);
    let record = String::from_utf8_lossy(&gen.stdout).trim().to_string();
    let graph_file = temp_file("p4.g6");
    let cache_file = temp_file("env-cache.jsonl");
    let _ = std::fs::remove_file(&cache_file);
    std::fs::write(&graph_file, format!("{record}\n")).unwrap();

    let out = Command::new(env!("CARGO_BIN_EXE_critset"))
        .args(["param", "sn", "--k", "2", "--input", graph_file.to_str().unwrap()])
        .env("CRITSET_CACHE", &cache_file)
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    assert!(cache_file.exists(), "cache file written at $CRITSET_CACHE");

    let _ = std::fs::remove_file(graph_file);
    let _ = std::fs::remove_file(cache_file);
}

#[test]
fn budget_exhaustion_has_distinct_status_and_exit_code() {
    // an 18-vertex palette-heavy instance cannot finish in a microsecond
    let gen = critset(&["gen", "kkk_minus_matching", "9"]);
    let record = String::from_utf8_lossy(&gen.stdout).trim().to_string();
    let out = critset_stdin(
        &[
            "param", "ulcs", "--k", "9", "--input", "-", "--no-cache", "--budget", "0.000001",
        ],
        &record,
    );
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let json = stdout_json(&out);
    assert_eq!(json["error"]["kind"], "budget-exhausted");
}

#[test]
fn infeasible_k_is_an_error_object() {
    let gen = critset(&["gen", "cycle", "5"]);
    let record = String::from_utf8_lossy(&gen.stdout).trim().to_string();
    let out = critset_stdin(&["param", "sn", "--k", "2", "--input", "-", "--no-cache"], &record);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"]["kind"], "infeasible");
}

#[test]
fn verify_single_check_and_exit_codes() {
    let out = critset(&["verify", "latin3-example"]);
    assert!(out.status.success(), "{out:?}");
    let json = stdout_json(&out);
    assert_eq!(json["pass"], true);
    assert_eq!(json["name"], "latin3-example");

    let listed = critset(&["verify", "--list"]);
    assert!(listed.status.success());
    assert!(String::from_utf8_lossy(&listed.stdout).contains("k3k3-sn-table"));

    let unknown = critset(&["verify", "no-such-check"]);
    assert_eq!(unknown.status.code(), Some(1));
}

#[test]
fn scan_from_stdin() {
    // K3 and C4 records
    let gen3 = critset(&["gen", "complete", "3"]);
    let gen4 = critset(&["gen", "cycle", "4"]);
    let stream = format!(
        "{}\n{}\n",
        String::from_utf8_lossy(&gen3.stdout).trim(),
        String::from_utf8_lossy(&gen4.stdout).trim()
    );
    let out = critset_stdin(&["scan", "--predicate", "thm-sn-n-1"], &stream);
    assert!(out.status.success(), "{out:?}");
    let json = stdout_json(&out);
    assert_eq!(json["pass"], true);
    assert_eq!(json["computed"], "2 records, 0 violations");
}

#[test]
fn scan_rejects_unknown_predicate() {
    let out = critset_stdin(&["scan", "--predicate", "bogus"], "");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"]["kind"], "unknown-predicate");
}

#[test]
fn edge_list_format_accepted() {
    let graph_file = temp_file("path.edges");
    std::fs::write(&graph_file, "# path on five vertices\n5\n0 1\n1 2\n2 3\n3 4\n").unwrap();
    let out = critset(&[
        "param",
        "sn",
        "--k",
        "2",
        "--input",
        graph_file.to_str().unwrap(),
        "--format",
        "edges",
        "--no-cache",
    ]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(stdout_json(&out)["value"], 1);
    let _ = std::fs::remove_file(graph_file);
}
