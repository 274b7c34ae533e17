//! End-to-end checks of the command-line interface: exit codes, output
//! formats, file outputs, and the construct -> export -> simulate pipeline.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qcg8(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcg8"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn construct_prints_csv() {
    let out = qcg8(&["construct", "--col-weight", "7", "--row-weight", "12"]);
    assert!(out.status.success());
    let csv = stdout_of(&out);
    let first_line = csv.lines().next().unwrap();
    assert_eq!(first_line, "0,0,0,0,0,0,0,0,0,0,0,0");
    assert_eq!(csv.lines().count(), 7);
    assert!(csv.lines().nth(6).unwrap().starts_with("0,60,120"));
}

#[test]
fn construct_writes_csv_and_json_header() {
    let csv_path = tmp("construct_out.csv");
    let out = qcg8(&[
        "construct",
        "--col-weight",
        "8",
        "--row-weight",
        "13",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert_eq!(csv.lines().count(), 8);
    let header: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(csv_path.with_extension("json")).unwrap())
            .unwrap();
    assert_eq!(header["family"], "J8-135");
    assert_eq!(header["schema_version"], 1);
    assert_eq!(header["entries"][1], 4);
}

#[test]
fn verify_reports_girth_eight_json() {
    let out = qcg8(&[
        "verify",
        "--col-weight",
        "7",
        "--row-weight",
        "12",
        "--p",
        "221",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["girth"], 8);
    assert_eq!(report["girth_is_exact"], true);
    assert_eq!(report["family"], "J7-024");
    assert!(report["witness"].is_array());
}

#[test]
fn verify_reports_capped_girth_without_witness() {
    let csv_path = tmp("two_row.csv");
    std::fs::write(&csv_path, "0,0\n0,1\n").unwrap();
    let out = qcg8(&["verify", "--e", csv_path.to_str().unwrap(), "--p", "3"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["girth"], 10);
    assert_eq!(report["girth_is_exact"], false);
    assert!(report["witness"].is_null());
}

#[test]
fn domain_errors_exit_one_usage_errors_exit_two() {
    let out = qcg8(&[
        "verify",
        "--col-weight",
        "9",
        "--row-weight",
        "12",
        "--p",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("unsupported column weight"), "{stderr}");

    // Missing required flag is a usage error.
    let out = qcg8(&["bounds", "--col-weight", "7"]);
    assert_eq!(out.status.code(), Some(2));

    let out = qcg8(&[
        "scan",
        "--col-weight",
        "7",
        "--row-weight",
        "12",
        "--from",
        "10",
        "--to",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bounds_json_reports_all_landmarks() {
    let out = qcg8(&["bounds", "--col-weight", "7", "--row-weight", "12"]);
    assert!(out.status.success());
    let b: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(b["search_floor"], 67);
    assert_eq!(b["special_p"]["p"], 559);
    assert_eq!(b["special_p"]["truncate_from_next"], true);
    assert_eq!(b["ccs_class_bound"], 661);
    assert_eq!(b["global_lower_bound"], 749);
    assert_eq!(b["min_p_upper_bound"], 637);
    assert_eq!(b["family"], "J7-024");
}

#[test]
fn certify_emits_the_indicator_table() {
    let out = qcg8(&["certify", "--col-weight", "7", "--row-weight", "11"]);
    assert!(out.status.success());
    let csv = stdout_of(&out);
    assert!(csv.starts_with("#,triple,reduced_form,gcd_indicator,reason\n"));
    assert_eq!(csv.lines().count(), 36);
    assert!(csv.contains("\n1,0 4 11,0 4 11,11,"));
    assert!(csv.lines().last().unwrap().contains("same as #16"));

    let at_p = qcg8(&[
        "certify",
        "--col-weight",
        "7",
        "--row-weight",
        "11",
        "--p",
        "407",
    ]);
    assert!(at_p.status.success());
    let csv = stdout_of(&at_p);
    assert!(csv.contains("P2"), "{csv}");
    assert!(csv.contains("enumerated: 6-cycle-free"), "{csv}");
}

#[test]
fn scan_and_search_min_are_consistent() {
    let scan_with_jobs = |jobs: &str| {
        let out = qcg8(&[
            "scan",
            "--col-weight",
            "7",
            "--row-weight",
            "12",
            "--from",
            "200",
            "--to",
            "230",
            "--jobs",
            jobs,
        ]);
        assert!(out.status.success());
        stdout_of(&out)
    };
    let csv = scan_with_jobs("2");
    assert!(csv.starts_with("p,girth\n"));
    assert!(csv.contains("221,8"));
    // Worker count must not change the output.
    assert_eq!(csv, scan_with_jobs("1"));

    let out = qcg8(&["search-min", "--col-weight", "7", "--row-weight", "12"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["min_p"], 221);
    assert_eq!(v["verification"]["girth"], 8);
}

#[test]
fn scan_gnuplot_file_carries_landmarks() {
    let gp = tmp("scan_plot.dat");
    let out = qcg8(&[
        "scan",
        "--col-weight",
        "7",
        "--row-weight",
        "12",
        "--from",
        "67",
        "--to",
        "230",
        "--gnuplot",
        gp.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&gp).unwrap();
    assert!(text.contains("special_p=559"));
    assert!(text.contains("ccs_class_bound=661"));
    assert!(text.contains("\n12 221\n"));
}

#[test]
fn export_then_verify_from_file_round_trips() {
    let csv_path = tmp("e_7_12.csv");
    assert!(qcg8(&[
        "construct",
        "--col-weight",
        "7",
        "--row-weight",
        "12",
        "--out",
        csv_path.to_str().unwrap(),
    ])
    .status
    .success());

    // Girth of the file-loaded matrix matches the named construction.
    let out = qcg8(&["verify", "--e", csv_path.to_str().unwrap(), "--p", "221"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["girth"], 8);
    assert!(report["family"].is_null());

    let alist_path = tmp("code_7_12_101.alist");
    let out = qcg8(&[
        "export",
        "--e",
        csv_path.to_str().unwrap(),
        "--p",
        "101",
        "--format",
        "alist",
        "--out",
        alist_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let alist = std::fs::read_to_string(&alist_path).unwrap();
    assert!(alist.starts_with("1212 707\n7 12\n"));
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(alist_path.with_extension("json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["p"], 101);
    assert_eq!(sidecar["code_length"], 1212);

    // The exported code simulates deterministically.
    let run = |seed: &str| {
        let out = qcg8(&[
            "simulate",
            "--alist",
            alist_path.to_str().unwrap(),
            "--snr",
            "2.0,4.0",
            "--seed",
            seed,
            "--max-frames",
            "64",
            "--target-frame-errors",
            "4",
            "--jobs",
            "2",
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        stdout_of(&out)
    };
    let a = run("9");
    let b = run("9");
    assert_eq!(a, b);
    assert!(a.starts_with("snr_db,frames,bit_errors,frame_errors,ber,fer\n"));
    assert_eq!(a.lines().count(), 3);
}

#[test]
fn out_dir_env_var_resolves_relative_outputs() {
    let dir = tmp("outdir_env");
    std::fs::create_dir_all(&dir).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_qcg8"))
        .args([
            "bounds",
            "--col-weight",
            "8",
            "--row-weight",
            "11",
            "--out",
            "bounds_8_11.json",
        ])
        .env("QCG8_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("bounds_8_11.json")).unwrap())
            .unwrap();
    assert_eq!(written["global_lower_bound"], 721);
}
