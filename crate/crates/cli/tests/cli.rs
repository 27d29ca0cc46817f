//! End-to-end runs of the binary: spec'd examples, format agreement,
//! determinism, exit codes, and output-path plumbing.

use std::process::{Command, Output};

use serde_json::Value;

fn betagamma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_betagamma"))
        .args(args)
        .env_remove("BETAGAMMA_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn p2_counts_match_the_frozen_series() {
    let out = betagamma(&["p2", "--max", "6", "--no-timestamp"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["counts"], serde_json::json!([1, 2, 5, 10, 20, 36, 65]));
    assert!(v.get("generated_at").is_none());
}

#[test]
fn p2_can_list_one_degree() {
    let out = betagamma(&["p2", "--max-d", "3", "--level", "2", "--no-timestamp"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["bipartitions"].as_array().unwrap().len(), 5);
}

#[test]
fn mta_level_one_has_two_of_everything() {
    let out = betagamma(&["mta", "--level", "1", "--no-timestamp"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["bipartitions"].as_array().unwrap().len(), 2);
    assert_eq!(v["constants"].as_array().unwrap().len(), 2);
    assert_eq!(v["unity"].as_array().unwrap().len(), 2);
    assert_eq!(v["strong_unity"]["passed"], Value::Bool(true));
    let consts: Vec<&str> = v["constants"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["constant"].as_str().unwrap())
        .collect();
    assert_eq!(consts, ["1", "-1"]);
}

#[test]
fn zhu_level_one_blocks() {
    let out = betagamma(&["zhu", "--level", "1", "--no-timestamp"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["blocks"], serde_json::json!([1, 2]));
    assert_eq!(v["total_rank"], serde_json::json!(5));
}

#[test]
fn reruns_are_byte_identical_without_timestamp() {
    let args = ["modules", "--family", "w0-", "--window", "10", "--no-timestamp"];
    let first = betagamma(&args);
    let second = betagamma(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let stamped = betagamma(&["modules", "--family", "w0-", "--window", "10"]);
    let v = stdout_json(&stamped);
    assert!(v["generated_at"].as_str().unwrap().contains('T'));
}

#[test]
fn json_and_csv_agree_on_the_character_table() {
    let json_out = betagamma(&["characters", "--max-d", "3", "--j-window", "2", "--no-timestamp"]);
    let csv_out = betagamma(&[
        "characters",
        "--max-d",
        "3",
        "--j-window",
        "2",
        "--no-timestamp",
        "--format",
        "csv",
    ]);
    assert!(json_out.status.success() && csv_out.status.success());
    let v = stdout_json(&json_out);
    let mut from_json: Vec<(i64, i64, String)> = v["table"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            (
                row["d"].as_i64().unwrap(),
                row["j"].as_i64().unwrap(),
                row["coefficient"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let text = String::from_utf8(csv_out.stdout).unwrap();
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let d_at = header.iter().position(|h| *h == "d").unwrap();
    let j_at = header.iter().position(|h| *h == "j").unwrap();
    let c_at = header.iter().position(|h| *h == "coefficient").unwrap();
    let mut from_csv: Vec<(i64, i64, String)> = lines
        .map(|l| {
            let cells: Vec<&str> = l.split(',').collect();
            (
                cells[d_at].parse().unwrap(),
                cells[j_at].parse().unwrap(),
                cells[c_at].to_string(),
            )
        })
        .collect();
    from_json.sort();
    from_csv.sort();
    assert_eq!(from_json, from_csv);
}

#[test]
fn modules_flags_the_reducible_family() {
    let out = betagamma(&["modules", "--family", "w0+", "--window", "12", "--no-timestamp"]);
    assert!(out.status.success(), "diagnostic reports exit 0");
    let v = stdout_json(&out);
    assert_eq!(v["weakly_interlocked"], Value::Bool(false));
    assert_eq!(v["socle"], v["radical"]);
    assert_eq!(v["boundary_status"], "clean");
    assert!(v["witness"].as_str().unwrap().contains("not isomorphic"));
}

#[test]
fn modules_lattice_lists_the_closed_chain() {
    let out = betagamma(&[
        "modules",
        "--family",
        "w0+",
        "--window",
        "10",
        "--report",
        "lattice",
        "--no-timestamp",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["closed"], serde_json::json!(["zero", "upset(0)", "whole"]));
}

#[test]
fn lambda_validation_is_strict() {
    let bad = betagamma(&["modules", "--family", "wlambda", "--lambda", "5/3", "--window", "8"]);
    assert_eq!(bad.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&bad.stderr).expect("machine-readable error");
    assert_eq!(err["error"]["kind"], "config");

    let missing = betagamma(&["modules", "--family", "wlambda", "--window", "8"]);
    assert_eq!(missing.status.code(), Some(2));

    let misplaced = betagamma(&["modules", "--family", "v", "--lambda", "1/2", "--window", "8"]);
    assert_eq!(misplaced.status.code(), Some(2));

    let good = betagamma(&[
        "modules", "--family", "wlambda", "--lambda", "1/2", "--window", "8", "--no-timestamp",
    ]);
    assert!(good.status.success());
    let v = stdout_json(&good);
    assert_eq!(v["weakly_interlocked"], Value::Bool(true));
}

#[test]
fn flow_defaults_run_the_sweep() {
    let out = betagamma(&["flow", "--ell", "1", "--family", "v", "--no-timestamp"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["truncation_errors"], serde_json::json!(0));
    assert_eq!(v["skipped"], Value::Null);
    assert!(v["commutator_cases"].as_u64().unwrap() > 0);
}

#[test]
fn flow_reports_when_the_truncation_is_too_small() {
    let out = betagamma(&[
        "flow", "--ell", "2", "--family", "w0-", "--depth", "2", "--no-timestamp",
    ]);
    assert!(out.status.success(), "a skipped sweep is not a failure");
    let v = stdout_json(&out);
    assert!(v["skipped"].as_str().unwrap().contains("depth"));
}

#[test]
fn verify_all_quick_is_green() {
    let out = betagamma(&["verify-all", "--quick", "--no-timestamp"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["passed"], Value::Bool(true));
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 11);
    assert!(checks.iter().all(|c| c["passed"] == Value::Bool(true)));
}

#[test]
fn out_flag_and_env_dir_write_files() {
    let dir = std::env::temp_dir().join(format!("betagamma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let path = dir.join("counts.json");
    let to_file = Command::new(env!("CARGO_BIN_EXE_betagamma"))
        .args(["p2", "--max-d", "4", "--no-timestamp", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    let on_disk = std::fs::read(&path).unwrap();
    let on_stdout = betagamma(&["p2", "--max-d", "4", "--no-timestamp"]);
    assert_eq!(on_disk, on_stdout.stdout);

    let via_env = Command::new(env!("CARGO_BIN_EXE_betagamma"))
        .args(["p2", "--max-d", "4", "--no-timestamp"])
        .env("BETAGAMMA_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(via_env.status.success());
    assert_eq!(std::fs::read(dir.join("p2.json")).unwrap(), on_disk);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn zhu_products_cover_every_pair_both_ways() {
    let out = betagamma(&["zhu-products", "--level", "0", "--no-timestamp"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["table"].as_array().unwrap().len(), 50);
}
