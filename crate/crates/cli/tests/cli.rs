//! End-to-end checks of the `zf` binary: output contracts, exit codes, and
//! byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn zf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn temp_edge_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("zf-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writes");
    path
}

#[test]
fn compute_bouquet_text() {
    let out = zf(&["compute", "--family", "bouquet", "--params", "2,3,4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("z = 4"), "{text}");
    assert!(text.contains("i = 3"), "{text}");
    assert!(text.contains("match = true"), "{text}");
}

#[test]
fn compute_cycle_json() {
    let out = zf(&[
        "compute", "--family", "cycle", "--params", "7", "--format", "json",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(json["z"], 2);
    assert_eq!(json["i"], 3);
    assert_eq!(json["graph"]["family"], "cycle");
    assert_eq!(json["match"], true);
    assert!(json.get("timing_ms").is_none());
}

#[test]
fn compute_from_edge_list_file() {
    let path = temp_edge_file("p2.edges", "2 1\n0 1\n");
    let out = zf(&[
        "compute",
        "--graph",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(json["z"], 1);
    assert_eq!(json["i"], 1);
    assert_eq!(json["graph"]["family"], "edge_list");
    std::fs::remove_file(path).ok();
}

#[test]
fn compute_reports_components_of_disconnected_input() {
    let path = temp_edge_file("two-edges.edges", "4 2\n0 1\n2 3\n");
    let out = zf(&[
        "compute",
        "--graph",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(json["z"], 2);
    assert_eq!(json["i"], 1);
    assert_eq!(json["num_min_zfs"], 4);
    assert_eq!(json["graph"]["components"], 2);
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_bouquet_by_exact_params() {
    let out = zf(&[
        "verify", "--family", "bouquet", "--params", "2,3,4", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap().ends_with(",match"), "{text}");
}

#[test]
fn compute_csv_has_header_and_row() {
    let out = zf(&[
        "compute", "--family", "path", "--params", "5", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("family,params,n,m,"));
    assert!(lines[1].starts_with("path,5,5,4,"));
}

#[test]
fn verify_grid_ranges_match() {
    let out = zf(&["verify", "--family", "grid", "--s", "2..4", "--t", "2..6"]);
    assert!(out.status.success(), "verify must exit 0 on full match");
    let text = stdout(&out);
    assert!(text.contains("match"));
    assert!(!text.contains("mismatch"));
}

#[test]
fn verify_king_grid_bounds() {
    let out = zf(&[
        "verify",
        "--family",
        "king_grid",
        "--s",
        "2..4",
        "--t",
        "2..6",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",match"), "{line}");
    }
}

#[test]
fn verify_products_of_completes() {
    let out = zf(&[
        "verify",
        "--family",
        "complete_x_complete",
        "--s",
        "3..4",
        "--t",
        "3..4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    for row in rows.as_array().unwrap() {
        assert_eq!(row["i"], 2, "{row}");
        assert_eq!(row["status"], "match");
    }
}

#[test]
fn verify_triangular_grid_reports_bounds() {
    let out = zf(&[
        "verify",
        "--family",
        "triangular_grid",
        "--s",
        "2..3",
        "--t",
        "3..4",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        assert!(
            line.contains("<="),
            "bounded expectations print as <=: {line}"
        );
        assert!(line.ends_with(",match"), "{line}");
    }
}

#[test]
fn verify_single_parameter_families_use_s() {
    let out = zf(&["verify", "--family", "cycle", "--s", "3..8"]);
    assert!(out.status.success());
    let out = zf(&[
        "verify", "--family", "path", "--s", "2..8", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 8);
}

#[test]
fn verify_reports_unknown_values() {
    // The 5x5 cycle product has no established closed form.
    let out = zf(&[
        "verify",
        "--family",
        "cycle_x_cycle",
        "--s",
        "5..5",
        "--t",
        "5..5",
    ]);
    assert!(out.status.success(), "unknown values are not failures");
    assert!(stdout(&out).contains("no_known_value"));
}

#[test]
fn conjecture_csv_is_stable() {
    let out = zf(&["conjecture", "--max", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "s,t,n,z,i,conjectured_z,upper_bound,status");
    assert_eq!(lines[1], "3,3,9,5,2,5,5,confirmed");
    assert_eq!(lines.len(), 2);
}

#[test]
fn conjecture_four_confirms_three_cells() {
    let out = zf(&["conjecture", "--max", "4", "--format", "json"]);
    assert!(out.status.success());
    let cells: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let cells = cells.as_array().unwrap();
    assert_eq!(cells.len(), 3);
    let zs: Vec<u64> = cells.iter().map(|c| c["z"].as_u64().unwrap()).collect();
    assert_eq!(zs, vec![5, 6, 8]);
    assert!(cells.iter().all(|c| c["status"] == "confirmed"));
}

#[test]
fn trace_annotates_rounds() {
    let out = zf(&[
        "trace",
        "--family",
        "cycle_x_complete",
        "--params",
        "3,2",
        "--set",
        "2,3,5",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(json["success"], true);
    assert_eq!(json["iterations"], 2);
    assert_eq!(json["derived"][0], serde_json::json!([1]));
    assert_eq!(json["derived"][1], serde_json::json!([0, 4]));
    assert_eq!(json["first_black"][2], 0);
    assert_eq!(json["first_black"][1], 1);
    assert_eq!(json["first_black"][0], 2);
}

#[test]
fn trace_accepts_labels_and_reports_failures() {
    let out = zf(&[
        "trace",
        "--family",
        "grid",
        "--params",
        "2,2",
        "--set",
        "(1,1),(2,2)",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("success = false"), "{text}");
    assert!(text.contains("white remainder"), "{text}");
}

#[test]
fn trace_torus_witness_fills_the_outer_columns_by_round_two() {
    // Two adjacent rows minus one vertex; after two rounds both columns
    // adjacent across the wrap are entirely black.
    let out = zf(&[
        "trace",
        "--family",
        "cycle_x_cycle",
        "--params",
        "5,5",
        "--set",
        "(1,1),(1,2),(1,4),(1,5),(2,1),(2,2),(2,3),(2,4),(2,5)",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(json["success"], true);
    let first_black = json["first_black"].as_array().unwrap();
    for i in 0..5 {
        for j in [0usize, 4] {
            let round = first_black[i * 5 + j].as_u64().unwrap();
            assert!(round <= 2, "vertex ({i},{j}) black at round {round}");
        }
    }
}

#[test]
fn trace_full_set_is_all_zeros() {
    let out = zf(&[
        "trace", "--family", "path", "--params", "3", "--set", "0,1,2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("iterations = 0"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    let out = zf(&["compute"]);
    assert_eq!(out.status.code(), Some(2));
    let out = zf(&["compute", "--family", "nosuch", "--params", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = zf(&["compute", "--family", "cycle", "--params", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = zf(&["trace", "--family", "path", "--params", "3", "--set", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_refusals_exit_3() {
    let out = zf(&[
        "compute",
        "--family",
        "king_grid",
        "--params",
        "5,5",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn budget_env_variable_applies() {
    let out = Command::new(env!("CARGO_BIN_EXE_zf"))
        .args(["compute", "--family", "king_grid", "--params", "5,5"])
        .env("ZF_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
    // An explicit flag overrides the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_zf"))
        .args([
            "compute", "--family", "cycle", "--params", "5", "--budget", "100000",
        ])
        .env("ZF_BUDGET", "1")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "compute",
        "--family",
        "cycle_x_cycle",
        "--params",
        "3,4",
        "--format",
        "json",
    ];
    let first = zf(&args);
    let second = zf(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn worker_counts_do_not_change_payloads() {
    for format in ["json", "csv"] {
        let serial = zf(&[
            "compute",
            "--family",
            "king_grid",
            "--params",
            "4,4",
            "--format",
            format,
            "--workers",
            "1",
        ]);
        let parallel = zf(&[
            "compute",
            "--family",
            "king_grid",
            "--params",
            "4,4",
            "--format",
            format,
            "--workers",
            "4",
        ]);
        assert!(serial.status.success());
        assert_eq!(stdout(&serial), stdout(&parallel));
    }
}

#[test]
fn verify_and_conjecture_are_worker_independent() {
    for base in [
        vec![
            "verify",
            "--family",
            "king_grid",
            "--s",
            "2..4",
            "--t",
            "2..4",
            "--format",
            "json",
        ],
        vec!["conjecture", "--max", "4", "--format", "json"],
    ] {
        let mut serial = base.clone();
        serial.extend(["--workers", "1"]);
        let mut parallel = base.clone();
        parallel.extend(["--workers", "4"]);
        let a = zf(&serial);
        let b = zf(&parallel);
        assert!(a.status.success());
        assert_eq!(stdout(&a), stdout(&b), "{base:?}");
    }
}

#[test]
fn timing_flag_adds_timing_only() {
    let plain = zf(&[
        "compute", "--family", "cycle", "--params", "6", "--format", "json",
    ]);
    let timed = zf(&[
        "compute", "--family", "cycle", "--params", "6", "--format", "json", "--timing",
    ]);
    let plain_json: serde_json::Value = serde_json::from_str(&stdout(&plain)).unwrap();
    let timed_json: serde_json::Value = serde_json::from_str(&stdout(&timed)).unwrap();
    assert!(plain_json.get("timing_ms").is_none());
    assert!(timed_json.get("timing_ms").is_some());
}
