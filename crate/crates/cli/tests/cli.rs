use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn thetadim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetadim"))
        .args(args)
        .env_remove("THETA_DIM_MAX_ORDER")
        .output()
        .expect("spawn thetadim")
}

fn thetadim_env(args: &[&str], max_order: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetadim"))
        .args(args)
        .env("THETA_DIM_MAX_ORDER", max_order)
        .output()
        .expect("spawn thetadim")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = thetadim(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn compute_json_schema() {
    let v = json(&["compute", "Istar", "--json"]);
    let keys: BTreeSet<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let want: BTreeSet<&str> = [
        "group",
        "order",
        "num_classes",
        "d1",
        "d2",
        "dim_Cpi",
        "dim_ker_eps",
        "dim_classhat_Z2",
        "method",
        "millis",
    ]
    .into_iter()
    .collect();
    assert_eq!(keys, want);
    assert_eq!(v["dim_Cpi"], 65);
    assert_eq!(v["dim_ker_eps"], 56);
    assert_eq!(v["dim_classhat_Z2"], 9);
    assert_eq!(v["method"], "closed");
    assert!(v["d1"].is_null());
}

#[test]
fn compute_examples() {
    let v = json(&["compute", "Z(1)", "--json"]);
    assert_eq!(
        (v["dim_Cpi"].clone(), v["dim_ker_eps"].clone()),
        (1.into(), 0.into())
    );
    let v = json(&["compute", "Tprime(2)", "--method", "burnside", "--json"]);
    assert_eq!(
        (v["dim_Cpi"].clone(), v["dim_ker_eps"].clone()),
        (78.into(), 66.into())
    );
    assert_eq!(v["d1"], 135);
    assert_eq!(v["d2"], 21);
    assert_eq!(v["num_classes"], 21);
}

#[test]
fn auto_uses_burnside_off_the_spherical_list() {
    let v = json(&["compute", "Z(4) x Dstar(3)", "--json"]);
    assert_eq!(v["method"], "burnside");
    assert_eq!(v["dim_Cpi"], 86);
}

#[test]
fn compute_csv_is_unquoted() {
    let o = thetadim(&["compute", "Z(5) x Dstar(3)", "--method", "chars", "--csv"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(
        lines[0],
        "group,order,num_classes,d1,d2,dim_Cpi,dim_ker_eps,dim_classhat_Z2,method,millis"
    );
    assert!(lines[1].starts_with("Z(5)xDstar(3),60,30,209,29,119,102,17,chars,"));
    assert!(!s.contains('"') && !s.contains('\r'));
}

#[test]
fn parse_error_exits_1_with_offset() {
    let o = thetadim(&["compute", "Z(5 x"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("byte 4"), "{err}");
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(thetadim(&["compute", "Dprime(1,4)"]).status.code(), Some(1));
    assert_eq!(thetadim(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        thetadim(&["table", "d4p", "--max-k", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(thetadim(&["--help"]).status.code(), Some(0));
}

#[test]
fn budget_exits_3() {
    let o = thetadim(&["compute", "Z(500)", "--method", "orbits"]);
    assert_eq!(o.status.code(), Some(3));
    let o = thetadim(&[
        "--max-order",
        "10",
        "compute",
        "Z(11)",
        "--method",
        "burnside",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn env_budget_and_flag_precedence() {
    let args = ["compute", "Z(20)", "--method", "diagrams"];
    assert_eq!(thetadim_env(&args, "10").status.code(), Some(3));
    assert_eq!(thetadim_env(&args, "30").status.code(), Some(0));
    let with_flag = [
        "--max-order",
        "30",
        "compute",
        "Z(20)",
        "--method",
        "diagrams",
    ];
    assert_eq!(thetadim_env(&with_flag, "10").status.code(), Some(0));
    let with_flag = [
        "--max-order",
        "10",
        "compute",
        "Z(20)",
        "--method",
        "diagrams",
    ];
    assert_eq!(thetadim_env(&with_flag, "30").status.code(), Some(3));
    assert_eq!(thetadim_env(&args, "lots").status.code(), Some(1));
}

#[test]
fn verify_examples() {
    let o = thetadim(&["verify", "Dstar(6)"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&["verify", "Z(9)", "--json"]);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 5);
    for r in reports {
        assert_eq!(
            (r["dim_Cpi"].clone(), r["dim_ker_eps"].clone()),
            (12.into(), 7.into())
        );
    }
    // not a spherical group: closed form is skipped, the rest still compared
    let v = json(&["verify", "Z(4) x Dstar(3)", "--json"]);
    assert_eq!(v["reports"].as_array().unwrap().len(), 4);
    let skipped = v["skipped"].as_array().unwrap();
    assert_eq!(skipped.len(), 1);
    assert!(skipped[0].to_string().contains("gcd"));
}

#[test]
fn table_csv_is_deterministic() {
    let a = thetadim(&["table", "d4p", "--max-p", "15"]);
    let b = thetadim(&["table", "d4p", "--max-p", "15"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.starts_with("param,dim_Cpi,dim_ker_eps,method\n"));
    assert_eq!(s.lines().count(), 16);
    assert!(s.ends_with("15,107,90,closed+burnside\n"));
}

#[test]
fn table_zn_rows() {
    let s = stdout(&thetadim(&[
        "table", "zn", "--max-n", "12", "--method", "closed",
    ]));
    let rows: Vec<&str> = s.lines().skip(1).collect();
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[0], "1,1,0,closed");
    assert_eq!(rows[11], "12,19,12,closed");
}

#[test]
fn table_falls_back_to_closed_over_budget() {
    let s = stdout(&thetadim(&[
        "--max-order",
        "100",
        "table",
        "t8_3k",
        "--max-k",
        "3",
    ]));
    let rows: Vec<&str> = s.lines().skip(1).collect();
    assert_eq!(
        rows,
        [
            "1,15,10,closed+burnside",
            "2,78,66,closed+burnside",
            "3,570,537,closed"
        ]
    );
}

#[test]
fn classes_dump() {
    let s = stdout(&thetadim(&["classes", "Ostar", "--csv"]));
    let mut lines = s.lines();
    assert_eq!(
        lines.next(),
        Some("class,rep,size,order,square,cube,inverse")
    );
    let sizes: Vec<u64> = lines
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert_eq!(sizes.len(), 8);
    assert_eq!(sizes.iter().sum::<u64>(), 48);
}

#[test]
fn chartab_formats() {
    for f in ["table", "text", "csv"] {
        let o = thetadim(&["chartab", "Tstar", "--format", f]);
        assert!(o.status.success(), "{f}");
    }
    let s = stdout(&thetadim(&["chartab", "Istar", "--format", "csv"]));
    // header, sizes, nine characters
    assert_eq!(s.lines().count(), 11);
    assert!(s.lines().all(|l| l.split(',').count() == 10));
}
