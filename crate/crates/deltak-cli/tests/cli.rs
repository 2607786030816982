//! End-to-end tests against the compiled binary: output formats are
//! byte-exact, exit codes follow the 0/1/2 contract, and the disk cache
//! behaves (warm runs identical to cold ones, corrupt entries surface as
//! failing cells rather than silent wrong answers).

use std::path::PathBuf;
use std::process::{Command, Output};

fn deltak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltak"))
        .args(args)
        .env_remove("DELTAK_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("deltak-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn dims_csv_has_the_expected_parity_row() {
    let out = deltak(&["dims", "--k", "0", "--s-max", "1", "--d-max", "6"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "s,0,1,2,3,4,5,6\n0,1,0,0,0,0,0,0\n1,0,1,0,1,0,1,0\n"
    );
}

#[test]
fn dims_covers_the_single_unit_cell() {
    let out = deltak(&["dims", "--k", "0", "--s-max", "0", "--d-max", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "s,0\n0,1\n");
}

#[test]
fn dims_json_matches_the_closed_formula() {
    let out = deltak(&[
        "dims", "--k", "0", "--s-max", "2", "--d-max", "4", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["k"], 0);
    assert_eq!(v["bounds"]["s_max"], 2);
    assert_eq!(v["dims"][2][4], 2);
    assert_eq!(v["dims"][0][0], 1);
}

#[test]
fn generators_list_sigmas_at_level_zero() {
    let out = deltak(&["generators", "--k", "0", "--s-max", "2", "--d-max", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2,3,\"sigma(0,0)\",\"[1,2]+[2,1]\""), "{text}");

    let out = deltak(&["generators", "--k", "0", "--s-max", "1", "--d-max", "5"]);
    let text = stdout(&out);
    assert_eq!(
        text,
        "s,d,descriptor,element\n\
         1,1,\"sigma(0)\",\"[1]\"\n\
         1,3,\"sigma(1)\",\"[3]\"\n\
         1,5,\"sigma(2)\",\"[5]\"\n"
    );
}

#[test]
fn generators_empty_range_is_fine() {
    let out = deltak(&["generators", "--k", "0", "--s-max", "0", "--d-max", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "s,d,descriptor,element\n");
}

#[test]
fn generators_at_level_one_come_from_the_quotient() {
    let out = deltak(&[
        "generators", "--k", "1", "--s-max", "1", "--d-max", "6", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let gens = v["generators"].as_array().unwrap();
    // gamma_1 is annihilated by Sq1 and Sq2 and nothing decomposes it.
    assert!(gens
        .iter()
        .any(|g| g["s"] == 1 && g["d"] == 1 && g["element"] == "[1]"));
    assert!(gens.iter().all(|g| g.get("descriptor").is_none()));
}

#[test]
fn sq_prints_canonical_elements() {
    let out = deltak(&["sq", "[2,2]", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[1,2]+[2,1]\n");

    let out = deltak(&["sq", "[3]", "1"]);
    assert_eq!(stdout(&out), "0\n");

    let out = deltak(&["sq", "[5]", "0"]);
    assert_eq!(stdout(&out), "[5]\n");
}

#[test]
fn sq_parse_errors_name_the_position_and_exit_2() {
    let out = deltak(&["sq", "[2,x]", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("byte 3"), "{err}");
}

#[test]
fn verify_single_suite_passes() {
    let out = deltak(&["verify", "--suite", "ker-eq-im", "--s-max", "3", "--d-max", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "ker-eq-im: PASS\n");
}

#[test]
fn verify_unknown_suite_is_a_usage_error() {
    let out = deltak(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn verify_runs_all_suites_by_default() {
    let out = deltak(&["verify", "--s-max", "2", "--d-max", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().all(|l| l.ends_with(": PASS")), "{text}");
}

#[test]
fn certify_passes_and_writes_a_report() {
    let dir = temp_dir("certify-out");
    let report_path = dir.join("report.json");
    let out = deltak(&[
        "certify", "--k", "0", "--s-max", "3", "--d-max", "9",
        "--out", report_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS k=0 s_max=3 d_max=9"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["k"], 0);
    assert_eq!(report["bounds"]["d_max"], 9);
    let cells = report["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 4 * 10);
    assert!(cells.iter().all(|c| c["pass"] == true));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn certify_level_two_passes() {
    let out = deltak(&["certify", "--k", "2", "--s-max", "2", "--d-max", "10"]);
    assert!(out.status.success());
}

#[test]
fn certify_names_the_cell_broken_by_a_corrupt_cache() {
    let dir = temp_dir("corrupt-cache");
    // A well-formed cache document claiming [2] is annihilated at (1,2).
    let lie = serde_json::json!({
        "format_version": 1,
        "k": 0, "s": 1, "d": 2,
        "vectors": ["[2]"],
    });
    std::fs::write(dir.join("delta_k0_s1_d2.json"), lie.to_string()).unwrap();
    let out = deltak(&[
        "certify", "--k", "0", "--s-max", "2", "--d-max", "4",
        "--cache-dir", dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("FAIL k=0 at ("), "{text}");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn warm_cache_runs_are_byte_identical() {
    let dir = temp_dir("warm-cache");
    let args = [
        "dims", "--k", "1", "--s-max", "2", "--d-max", "8",
        "--cache-dir", dir.to_str().unwrap(),
    ];
    let cold = deltak(&args);
    assert!(cold.status.success());
    assert!(dir.join("delta_k1_s2_d8.json").exists());
    let warm = deltak(&args);
    assert_eq!(stdout(&cold), stdout(&warm));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn cache_env_var_is_used_only_without_the_flag() {
    let env_dir = temp_dir("env-cache");
    let flag_dir = temp_dir("flag-cache");

    let out = Command::new(env!("CARGO_BIN_EXE_deltak"))
        .args(["dims", "--k", "0", "--s-max", "1", "--d-max", "3"])
        .env("DELTAK_CACHE_DIR", &env_dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(env_dir.join("delta_k0_s1_d3.json").exists());

    let out = Command::new(env!("CARGO_BIN_EXE_deltak"))
        .args([
            "dims", "--k", "0", "--s-max", "1", "--d-max", "3",
            "--cache-dir", flag_dir.to_str().unwrap(),
        ])
        .env("DELTAK_CACHE_DIR", "/nonexistent/forbidden")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(flag_dir.join("delta_k0_s1_d3.json").exists());

    let _ = std::fs::remove_dir_all(&env_dir);
    let _ = std::fs::remove_dir_all(&flag_dir);
}

#[test]
fn oversized_bounds_are_rejected() {
    let out = deltak(&["dims", "--k", "0", "--s-max", "8", "--d-max", "200"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("invalid bounds"));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let out = deltak(&[
        "dims", "--k", "0", "--s-max", "1", "--d-max", "2",
        "--out", "/nonexistent-dir/table.csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sq_matrix_dumps_row_major_csv() {
    let out = deltak(&["sq-matrix", "--s", "1", "--d", "2", "--k", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");

    // Both words of (2,3) map to [1,1].
    let out = deltak(&["sq-matrix", "--s", "2", "--d", "3", "--k", "1"]);
    assert_eq!(stdout(&out), "1\n1\n");
}
