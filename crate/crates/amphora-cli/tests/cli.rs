//! End-to-end tests against the built binary: JSON shapes, frozen example
//! outputs, DOT determinism, and the exit-code contract (0 success,
//! 1 invalid input, 2 verification failure).

use std::process::{Command, Output};

use serde_json::Value;

fn amphora(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amphora"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Runs the binary expecting success and a single JSON document on stdout.
fn stdout_json(args: &[&str]) -> Value {
    let out = amphora(args);
    assert!(
        out.status.success(),
        "amphora {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

/// Runs the binary expecting a failure with the given exit code; returns
/// stderr for message checks.
fn expect_failure(args: &[&str], code: i32) -> String {
    let out = amphora(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "amphora {args:?}: stdout {} stderr {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn stdout_pretty(args: &[&str]) -> String {
    let mut full = args.to_vec();
    full.push("--pretty");
    let out = amphora(&full);
    assert!(out.status.success(), "amphora {full:?} failed");
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn dis_lists_the_single_partition_of_one() {
    let v = stdout_json(&["dis", "-n", "1"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["elements"], serde_json::json!(["1"]));
    assert_eq!(v["covers"].as_array().unwrap().len(), 0);
    assert!(stdout_pretty(&["dis", "-n", "1"]).contains("(1)"));
}

#[test]
fn dis_ten_has_ten_elements_and_ten_covers() {
    let v = stdout_json(&["dis", "-n", "10"]);
    assert_eq!(v["count"], 10);
    assert_eq!(v["covers"].as_array().unwrap().len(), 10);
    assert_eq!(v["elements"][0], "10");
}

#[test]
fn dis_restricts_to_a_fixed_part_count() {
    let v = stdout_json(&["dis", "-n", "10", "-k", "3"]);
    assert_eq!(v["k"], 3);
    assert_eq!(v["count"], 4);
    for el in v["elements"].as_array().unwrap() {
        assert_eq!(el.as_str().unwrap().split(',').count(), 3);
    }
}

#[test]
fn dis_rejects_zero_weight() {
    let err = expect_failure(&["dis", "-n", "0"], 1);
    assert!(err.contains("-n"), "stderr: {err}");
}

#[test]
fn classify_sequence_reports_both_ng_flags() {
    let v = stdout_json(&["classify", "--pi", "5,4,4,3,2,1,1"]);
    assert_eq!(v["block"], "5,3,2|6,3,1");
    assert_eq!(v["mark"], 4);
    assert_eq!(v["verdict"], "s-block");
    assert_eq!(v["is_ng1"], true);
    assert_eq!(v["is_ng2"], true);
    assert_eq!(v["is_pseudo_split"], true);
}

#[test]
fn classify_block_literal_round_trips_to_its_sequence() {
    let v = stdout_json(&["classify", "--block", "6,4|7,3"]);
    assert_eq!(v["pi"], "6,5,2,2,2,1,1,1");
    assert_eq!(v["alpha"], "6,4");
    assert_eq!(v["beta"], "7,3");
    assert_eq!(v["mark"], 3);
    assert_eq!(v["verdict"], "s-block");
    assert_eq!(v["is_threshold_covered"], true);
}

#[test]
fn classify_non_split_sequence_is_a_result_not_an_error() {
    // The four-cycle: graphic but not split.
    let v = stdout_json(&["classify", "--pi", "2,2,2,2"]);
    assert_eq!(v["verdict"], "block-only");
    assert_eq!(v["block"], "2,1|3,2");
    assert_eq!(v["is_sblock"], false);
}

#[test]
fn classify_non_graphic_sequence_names_the_violated_clause() {
    let v = stdout_json(&["classify", "--pi", "3,2"]);
    assert_eq!(v["verdict"], "invalid");
    assert!(
        v["invalid_clause"]
            .as_str()
            .unwrap()
            .contains("parity clause"),
        "clause: {}",
        v["invalid_clause"]
    );
    assert!(v.get("block").is_none());
}

#[test]
fn classify_rejects_a_malformed_block_literal() {
    let err = expect_failure(&["classify", "--block", "4,4|5,3"], 1);
    assert!(err.contains("distinct parts"), "stderr: {err}");
}

#[test]
fn classify_requires_exactly_one_subject() {
    expect_failure(&["classify"], 1);
    expect_failure(&["classify", "--pi", "2,1", "--block", "2,1|2,1"], 1);
}

#[test]
fn meetjoin_across_amphoras_lands_in_the_balanced_class() {
    let v = stdout_json(&[
        "meetjoin",
        "-n",
        "10",
        "--b1",
        "5,3,2|5,3,2",
        "--b2",
        "6,4|6,4",
    ]);
    assert_eq!(v["meet"], "5,3,2|6,4");
    assert_eq!(v["join"], "top");
    assert_eq!(v["case"]["row"], "3b");
    assert_eq!(v["case"]["kinds"], serde_json::json!(["U(2)", "U(3)"]));
    assert_eq!(v["case"]["meet_at"], "B(3)");
    assert_eq!(v["case"]["join_at"], "top");
    assert!(v["case"].get("cells").is_none());
}

#[test]
fn meetjoin_within_one_amphora_refines_to_cells() {
    let v = stdout_json(&[
        "meetjoin",
        "-n",
        "10",
        "--b1",
        "7,2,1|7,2,1",
        "--b2",
        "5,3,2|5,3,2",
    ]);
    assert_eq!(v["meet"], "5,3,2|7,2,1");
    assert_eq!(v["join"], "top");
    assert_eq!(v["case"]["row"], "1");
    assert_eq!(v["case"]["meet_at"], "U(3)");
    assert_eq!(v["case"]["cells"], serde_json::json!(["1*", "2*"]));
    assert_eq!(v["case"]["meet_cell"], "1*2*");
    // No predicted join cell: the join left the amphora for the top.
    assert!(v["case"].get("join_cell").is_none());
}

#[test]
fn meetjoin_rejects_an_operand_of_the_wrong_weight() {
    let err = expect_failure(
        &["meetjoin", "-n", "10", "--b1", "4,2|4,2", "--b2", "6,4|6,4"],
        1,
    );
    assert!(
        err.contains("--b1") && err.contains("weight 10"),
        "stderr: {err}"
    );
}

#[test]
fn meetjoin_rejects_a_non_sblock_operand() {
    let err = expect_failure(
        &["meetjoin", "-n", "3", "--b1", "2,1|3,2", "--b2", "2,1|2,1"],
        1,
    );
    assert!(
        err.contains("--b1") && err.contains("S-block"),
        "stderr: {err}"
    );
}

#[test]
fn amphoras_prints_the_fence_of_weight_ten() {
    let v = stdout_json(&["amphoras", "-n", "10"]);
    let names: Vec<&str> = v["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["U(1)", "B(2)", "U(2)", "B(3)", "U(3)", "B(4)", "U(4)"]
    );
    assert_eq!(
        v["covers"],
        serde_json::json!([[0, 1], [2, 1], [2, 3], [4, 3], [4, 5], [6, 5]])
    );
    let u4 = &v["nodes"][6];
    assert_eq!(u4["size"], 1);
    assert_eq!(u4["bottom"], "4,3,2,1|4,3,2,1");
    let b3 = &v["nodes"][3];
    assert_eq!(b3["bottom"], "5,3,2|9,1");
    assert_eq!(b3["tops"].as_array().unwrap().len(), 2);
}

#[test]
fn ng3_example_family_and_its_image() {
    let v = stdout_json(&["ng3", "-n", "38", "-k", "5"]);
    assert_eq!(v["count"], 6);
    assert_eq!(v["covers"].as_array().unwrap().len(), 6);
    assert_eq!(v["image"]["n"], 18);
    assert_eq!(v["image"]["k"], 5);
    let elements = v["elements"].as_array().unwrap();
    let image = v["image"]["elements"].as_array().unwrap();
    assert_eq!(elements.len(), image.len());
    assert_eq!(elements[0], "12,8,7,6,5,2,1|12,8,7,6,5,4,3");
    assert_eq!(image[0], "8,4,3,2,1|8,4,3,2,1");
}

#[test]
fn ng3_below_the_bound_names_the_bound() {
    let err = expect_failure(&["ng3", "-n", "20", "-k", "5"], 1);
    assert!(err.contains("n >= 4k + k(k+1)/2"), "stderr: {err}");
}

#[test]
fn hasse_stdout_is_byte_deterministic() {
    let a = amphora(&["hasse", "--target", "sblock", "-n", "8"]);
    let b = amphora(&["hasse", "--target", "sblock", "-n", "8"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.starts_with(b"digraph"));
}

#[test]
fn hasse_writes_the_dot_file() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("amphora-hasse-{}.dot", std::process::id()));
    let path_str = path.to_str().unwrap();
    let v = stdout_json(&["hasse", "--target", "dis", "-n", "9", "--dot", path_str]);
    let written = std::fs::read(&path).expect("file written");
    assert_eq!(v["bytes"].as_u64().unwrap() as usize, written.len());
    assert!(written.starts_with(b"digraph"));
    let again = stdout_json(&["hasse", "--target", "dis", "-n", "9", "--dot", path_str]);
    assert_eq!(again["bytes"], v["bytes"]);
    assert_eq!(std::fs::read(&path).unwrap(), written);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn hasse_ng3_requires_the_core_length() {
    let err = expect_failure(&["hasse", "--target", "ng3", "-n", "38"], 1);
    assert!(err.contains("-k"), "stderr: {err}");
}

#[test]
fn sblock_labels_mark_kinds_and_flags() {
    let v = stdout_json(&["sblock", "-n", "10", "--labels"]);
    assert_eq!(v["count"], 45);
    let rows = v["elements"].as_array().unwrap();
    let threshold = rows
        .iter()
        .find(|r| r["block"] == "4,3,2,1|4,3,2,1")
        .expect("staircase threshold present");
    assert_eq!(threshold["kind"], "U(4)");
    assert_eq!(threshold["ng1"], true);
    assert_eq!(threshold["ng2"], false);
    assert_eq!(threshold["in_tc"], false);
    let covered = rows
        .iter()
        .find(|r| r["block"] == "9,1|10")
        .expect("balanced block present");
    assert_eq!(covered["kind"], "B(2)");
    assert_eq!(covered["in_tc"], true);
}

#[test]
fn sblock_without_labels_omits_them() {
    let v = stdout_json(&["sblock", "-n", "6"]);
    let rows = v["elements"].as_array().unwrap();
    assert!(!rows.is_empty());
    for row in rows {
        assert!(row.get("kind").is_none());
    }
}

#[test]
fn verify_small_battery_passes_with_exit_zero() {
    let v = stdout_json(&["verify", "--max-n", "5", "--graphs-max-v", "4"]);
    assert_eq!(v["pass"], true);
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 12);
    for suite in suites {
        assert_eq!(suite["pass"], true, "suite {}", suite["name"]);
        assert!(suite["checked"].as_u64().unwrap() > 0);
        assert_eq!(suite["counterexamples"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn verify_rejects_an_out_of_range_graph_bound() {
    let err = expect_failure(&["verify", "--graphs-max-v", "9"], 1);
    assert!(err.contains("--graphs-max-v"), "stderr: {err}");
    expect_failure(&["verify", "--graphs-max-v", "0"], 1);
}

#[test]
fn help_exits_zero_and_unknown_subcommand_exits_one() {
    let help = amphora(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    expect_failure(&["bogus"], 1);
}

#[test]
fn pretty_renderings_succeed_for_every_subcommand() {
    for args in [
        vec!["dis", "-n", "8"],
        vec!["sblock", "-n", "8", "--labels"],
        vec!["classify", "--pi", "5,4,4,3,2,1,1"],
        vec!["classify", "--block", "6,4|7,3"],
        vec![
            "meetjoin",
            "-n",
            "10",
            "--b1",
            "5,3,2|5,3,2",
            "--b2",
            "6,4|6,4",
        ],
        vec!["amphoras", "-n", "8"],
        vec!["ng3", "-n", "38", "-k", "5"],
        vec!["verify", "--max-n", "4", "--graphs-max-v", "3"],
    ] {
        let text = stdout_pretty(&args);
        assert!(!text.is_empty(), "empty pretty output for {args:?}");
        assert!(
            serde_json::from_str::<Value>(&text).is_err(),
            "pretty output for {args:?} still looks like JSON"
        );
    }
}
