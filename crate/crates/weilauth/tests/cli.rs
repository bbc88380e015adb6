use std::process::{Command, Output};

use serde_json::Value;

fn weilauth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weilauth")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

#[test]
fn impersonation_both_methods_agree() {
    let out = weilauth(&["pi", "--p", "3", "--n", "3", "--r", "1", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["brute"]["value"]["num"], 4);
    assert_eq!(v["results"]["brute"]["value"]["den"], 9);
    assert_eq!(v["results"]["closed"]["num"], 4);
    assert_eq!(v["agreement"], true);
    assert!(v["runtime_ms"].is_u64());
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["params", "method", "results", "agreement", "runtime_ms"]);
}

#[test]
fn weil_sum_example() {
    let out = weilauth(&["weil", "--p", "3", "--h", "2", "--u", "1", "--a", "1,0", "--b", "0,0", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["brute"]["integer"], -3);
    assert_eq!(v["results"]["closed"]["integer"], -3);
    assert_eq!(v["agreement"], true);
}

#[test]
fn gauss_sum_is_plus_three_over_f9() {
    let out = weilauth(&["gauss", "--p", "3", "--h", "2", "--method", "both"]);
    let v = json(&out);
    assert_eq!(v["results"]["brute"]["integer"], 3);
    assert_eq!(v["agreement"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(weilauth(&["pi", "--p", "3", "--n", "20", "--r", "1", "--method", "brute"]).status.code(), Some(2));
    assert_eq!(weilauth(&["pi", "--p", "3", "--n", "9", "--r", "1", "--method", "brute"]).status.code(), Some(2));
    assert_eq!(
        weilauth(&["pi", "--p", "3", "--n", "9", "--r", "1", "--method", "brute", "--scan-cap", "20000"]).status.code(),
        Some(0)
    );
    assert_eq!(weilauth(&["pi", "--p", "3", "--n", "3"]).status.code(), Some(1));
    assert_eq!(weilauth(&["pi", "--p", "4", "--n", "3", "--r", "1"]).status.code(), Some(1));
    assert_eq!(
        weilauth(&["weil", "--p", "3", "--h", "2", "--u", "1", "--a", "1", "--b", "0,0"]).status.code(),
        Some(1)
    );
    assert_eq!(weilauth(&["pi", "--p", "3", "--n", "3", "--r", "1", "--enum-cap", "0"]).status.code(), Some(1));
    assert_eq!(weilauth(&["--help"]).status.code(), Some(0));
    assert_eq!(weilauth(&["--version"]).status.code(), Some(0));
    let out = weilauth(&["pi", "--p", "9", "--n", "2", "--r", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not prime"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn encode_and_verify_round_trip() {
    let base = ["--p", "3", "--n", "2", "--r", "1", "--modulus", "1,0,1"];
    let mut args = vec!["encode"];
    args.extend(base);
    args.extend(["--k", "0,1", "--s", "1,0"]);
    let v = json(&weilauth(&args));
    assert_eq!(v["results"]["m1"], "1,2");
    assert_eq!(v["results"]["m2"], 0);

    let mut args = vec!["verify"];
    args.extend(base);
    args.extend(["--k", "0,1", "--m1", "1,2", "--m2", "0"]);
    let v = json(&weilauth(&args));
    assert_eq!(v["results"]["accepted"], true);
    assert_eq!(v["results"]["source"], "1,0");

    let mut args = vec!["verify"];
    args.extend(base);
    args.extend(["--k", "0,1", "--m1", "1,2", "--m2", "1"]);
    let v = json(&weilauth(&args));
    assert_eq!(v["results"]["accepted"], false);
}

#[test]
fn substitution_and_entropy() {
    let v = json(&weilauth(&["ps", "--p", "3", "--n", "3", "--r", "1", "--method", "both"]));
    assert_eq!(v["agreement"], true);
    assert_eq!(v["results"]["lower_bound"]["num"], 13);
    assert_eq!(v["results"]["closed"]["case_id"], 1);

    let v = json(&weilauth(&["ps", "--p", "3", "--n", "4", "--r", "1", "--method", "closed"]));
    assert!(v["results"]["closed"]["bound"].is_null());

    let out = weilauth(&["entropy", "--p", "3", "--n", "3", "--r", "1", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["agreement"], true);
    let q_i = v["results"]["q_i"].as_f64().unwrap();
    assert!(q_i <= 4.0 / 9.0 + 1e-9);
    assert!(v["results"]["h_e_given_mm"].is_f64());
}

#[test]
fn report_csv_columns_and_empty_cells() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = weilauth(&[
        "report",
        "--p",
        "3",
        "--r",
        "1",
        "--n-from",
        "2",
        "--n-to",
        "9",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "p,n,r,v,case_id,pi_num,pi_den,pi_closed_num,pi_closed_den,ps_exact_num,ps_exact_den,ps_bound,\
         R_num,R_den,P_num,P_den,h_e,h_e_given_m,q_i,ratio_R_pi,ratio_q_pi"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 8);
    // n = 3: everything computed
    assert_eq!(&rows[1][..11], ["3", "3", "1", "1", "1", "4", "9", "4", "9", "2", "3"]);
    // n = 9 exceeds the scan cap: exact cells are empty, never zero
    let last = &rows[7];
    assert_eq!(last[1], "9");
    assert_eq!(last[5], "");
    assert_eq!(last[9], "");
    assert_eq!(last[17], "");
    assert_eq!(last[20], "");
    assert_eq!(last[7], "82");
}

#[test]
fn text_and_csv_formats() {
    let out = weilauth(&["field", "--p", "3", "--n", "2", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("results.modulus: 1,0,1\n"));
    assert!(text.contains("results.primitive: 1,1\n"));
    let out = weilauth(&["field", "--p", "5", "--n", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("key,value\n"));
    assert!(text.contains("results.modulus,\"1,1,1\"\n"));
}
