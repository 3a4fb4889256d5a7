//! End-to-end tests of the installed binary.

use std::process::{Command, Output};

fn symhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symhopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim_end().to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).to_string()
}

#[test]
fn cup_distributes_into_a_spread_product() {
    let out = symhopf(&["cup", "g[1,2]", "g[1,1] o g[1,1]^2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "g[1,1]^2 o g[1,1]^3");
}

#[test]
fn pairing_hits_the_dual_square() {
    let out = symhopf(&["pair", "g[1,2]^3", "q[0,3]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1");

    let out = symhopf(&["pair", "g[1,2]^3", "q[1]*q[5]"]);
    assert_eq!(stdout(&out), "0");
}

#[test]
fn normalize_rewrites_or_kills_composites() {
    let out = symhopf(&["normalize", "q[1,0]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0");

    let out = symhopf(&["normalize", "q[2,0]"]);
    assert_eq!(stdout(&out), "q[0,1]");
}

#[test]
fn transfer_gathers_and_cancels() {
    let out = symhopf(&["odot", "g[1,1]", "g[1,1]"]);
    assert_eq!(stdout(&out), "0");

    let out = symhopf(&["odot", "g[1,1]", "u[2]"]);
    assert_eq!(stdout(&out), "g[1,1] o u[2]");

    let out = symhopf(&["odot", "u[2]", "u[2]"]);
    assert_eq!(stdout(&out), "0");
}

#[test]
fn coproducts_in_both_theories() {
    let out = symhopf(&["coprod", "g[1,2]"]);
    assert_eq!(
        stdout(&out),
        "u[0] (x) g[1,2] + g[1,1] (x) g[1,1] + g[1,2] (x) u[0]"
    );

    let out = symhopf(&["coprod", "--cup", "q[1]"]);
    assert_eq!(stdout(&out), "i^2 (x) q[1] + q[1] (x) i^2");

    let out = symhopf(&["coprod", "--transfer", "q[1]"]);
    assert_eq!(stdout(&out), "1 (x) q[1] + q[1] (x) 1");
}

#[test]
fn basis_lists_both_models() {
    let out = symhopf(&["basis", "--component", "4", "--degree", "2"]);
    assert_eq!(stdout(&out), "g[1,1]^2 o u[2]\ng[1,2]");

    let out = symhopf(&["basis", "--component", "4", "--degree", "2", "--homology"]);
    assert_eq!(stdout(&out), "q[1]^2\nq[2]*i^2");
}

#[test]
fn exponent_zero_is_the_component_unit() {
    let out = symhopf(&["cup", "g[1,1]^0", "g[1,1]"]);
    assert_eq!(stdout(&out), "g[1,1]");
}

#[test]
fn stiefel_whitney_subcommands() {
    let out = symhopf(&["sw", "--k", "1", "--l", "1"]);
    assert_eq!(stdout(&out), "g[1,2]");

    let out = symhopf(&["sw-coprod", "--k", "1", "--l", "1"]);
    assert_eq!(
        stdout(&out),
        "u[0] (x) g[1,2] + g[1,1] (x) g[1,1] + g[1,2] (x) u[0]"
    );
}

#[test]
fn generator_table_and_invariant_image() {
    let out = symhopf(&["feshbach", "--component", "4"]);
    let text = stdout(&out);
    assert!(text.contains("d[0,1]  degree 2  class g[1,2]"));

    let out = symhopf(&["invt-map", "g[2,1]"]);
    assert_eq!(stdout(&out), "x{1,2,3,4}");
}

#[test]
fn json_output_shapes() {
    let out = symhopf(&["--json", "cup", "g[1,2]", "g[1,1] o g[1,1]^2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["blocks"][0]["profile"], serde_json::json!([[1, 2]]));
    assert_eq!(v[0]["unit"], 0);

    let out = symhopf(&["--json", "pair", "g[1,2]^3", "q[0,3]"]);
    assert_eq!(stdout(&out), r#"{"value":1}"#);

    let out = symhopf(&["--json", "verify", "examples"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["suite"], "examples");
    assert_eq!(v[0]["failed"], serde_json::json!([]));

    let out = symhopf(&["--json", "basis", "--component", "4", "--degree", "2", "--homology"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["factors"], serde_json::json!([[1], [1]]));
}

#[test]
fn disjoint_components_vanish_with_a_note() {
    let out = symhopf(&["cup", "g[1,1]", "g[1,2]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0");
    assert!(stderr(&out).contains("disjoint components"));
}

#[test]
fn parse_and_usage_errors_exit_with_two() {
    let out = symhopf(&["cup", "g[1,1", "g[1,1]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse error at byte 5"));

    let out = symhopf(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));

    let out = symhopf(&["cup", "g[1,1]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_subcommand_reports_and_exits_clean() {
    let out = symhopf(&["verify", "adem"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("... ok"));

    let out = symhopf(&["verify", "dimensions", "--max-component", "6", "--max-degree", "6"]);
    assert!(out.status.success());
}
