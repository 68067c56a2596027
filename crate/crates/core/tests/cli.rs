//! End-to-end checks of the `bgg` binary: formats, exit codes, diagnostics.

use std::process::{Command, Output};

fn bgg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bgg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn analyze_reports_singularity_data() {
    let out = bgg(&["analyze", "--mu", "5,5,4,3,2,2,1,0", "--k", "4"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n=8 k=4 l=2 S=[1,5] I=[5,2] J=[4,3,1,0]\n"
    );
}

#[test]
fn images_prints_the_label_grid() {
    let out = bgg(&["images", "--mu", "5,5,4,3,2,2,1,0", "--k", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let cells: Vec<&str> = text.split_whitespace().collect();
    assert_eq!(
        cells,
        ["x", "x", "x", "x", "x", "2", "x", "1", "1", "x", "1", "1", "x", "x", "0"]
    );
}

#[test]
fn complex_lists_chain_spaces_and_jump_arrows() {
    let out = bgg(&["complex", "--mu", "5,5,4,3,2,2,1,0", "--k", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("s=0: (52|43|5210)"));
    assert!(text.contains("s=2: (52|31|5420)  (52|40|5321)"));
    assert!(text.contains("d2  order 2  nonstandard"));
}

#[test]
fn json_output_parses_with_expected_fields() {
    let out = bgg(&[
        "complex", "--mu", "5,5,4,3,2,2,1,0", "--k", "4", "--format", "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["l"], 2);
    assert_eq!(value["S"], serde_json::json!([1, 5]));
    assert_eq!(value["complex"]["chain_spaces"].as_array().unwrap().len(), 5);
}

#[test]
fn check_passes_on_good_input() {
    let out = bgg(&["check", "--mu", "5,4,4,3,2,1,1,0", "--k", "4"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "oracle isomorphism OK, shift OK (min p+q=4), jump law OK, diamonds OK\n"
    );
}

#[test]
fn oracle_reports_counts() {
    let out = bgg(&["oracle", "--mu", "5,5,4,3,2,2,1,0", "--k", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("oracle OK: 6 vertices / 6 arrows against 6 / 6"));
}

#[test]
fn render_emits_dot() {
    let out = bgg(&["render", "--mu", "4,3,2,1,0", "--k", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("digraph bgg {"));
    assert_eq!(text.matches("label=\"r").count(), 12);
}

#[test]
fn triple_repetition_is_a_user_error() {
    let out = bgg(&["analyze", "--mu", "3,2,2,2,1,0", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error:"));
}

#[test]
fn too_deep_singularity_for_k_is_a_user_error() {
    let out = bgg(&["analyze", "--mu", "2,2,1,1,0,0", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join("bgg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = bgg(&[
        "complex",
        "--mu",
        "5,5,4,3,2,2,1,0",
        "--k",
        "4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["n"], 8);
}
