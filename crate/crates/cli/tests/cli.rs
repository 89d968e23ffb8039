//! End-to-end tests driving the built binary.

use std::process::{Command, Output};

fn run(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symplectic-euler"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn table_reproduces_first_published_grid() {
    let out = run(&["table", "--q", "2", "--r", "1..6", "--n", "1..6", "--no-version"], &[]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,n,value"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 36);
    let expected = [
        ("1,1,0"),
        ("2,1,1"),
        ("3,3,32"),
        ("4,2,109"),
        ("5,6,44494080"),
        ("6,6,16278881385"),
    ];
    for cell in expected {
        assert!(rows.contains(&cell), "missing {cell}");
    }
}

#[test]
fn table_single_cell_large_value() {
    let out = run(&["table", "--q", "5", "--r", "6", "--n", "6", "--no-version"], &[]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "r,n,value\n6,6,15934300493580428376\n");
}

#[test]
fn table_r1_row_is_zero() {
    let out = run(&["table", "--q", "2", "--r", "1", "--n", "1..6", "--no-version"], &[]);
    assert!(out.status.success());
    for line in stdout(&out).lines().skip(1) {
        assert!(line.ends_with(",0"), "{line}");
    }
}

#[test]
fn output_is_byte_stable_and_thread_independent() {
    let args = ["table", "--q", "3", "--r", "1..5", "--n", "1..5"];
    let a = run(&args, &[("SYMPLECTIC_EULER_THREADS", "1")]);
    let b = run(&args, &[("SYMPLECTIC_EULER_THREADS", "4")]);
    let c = run(&args, &[]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(stdout(&a).starts_with("# symplectic-euler "));
}

#[test]
fn version_line_suppression() {
    let with = run(&["series", "fsp", "--r", "2", "--q", "2", "--N", "3"], &[]);
    let without = run(
        &["series", "fsp", "--r", "2", "--q", "2", "--N", "3", "--no-version"],
        &[],
    );
    assert!(stdout(&with).starts_with("# symplectic-euler "));
    assert!(stdout(&without).starts_with("n,coefficient"));
}

#[test]
fn symbolic_series_matches_displayed_polynomials() {
    let out = run(
        &["series", "fsp", "--r", "4", "--symbolic", "--N", "3", "--no-version"],
        &[],
    );
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,coefficient\n0,1\n1,3*q^2 + 1\n2,6*q^4 + 3*q^2 + 1\n3,10*q^6 + 6*q^4 + 3*q^2 + 1\n"
    );
}

#[test]
fn p_primary_series_row() {
    let out = run(
        &[
            "series", "fsp-p", "--r", "5", "--p", "3", "--q", "2", "--N", "4", "--no-version",
        ],
        &[],
    );
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,coefficient\n0,1\n1,40\n2,780\n3,10960\n4,134590\n"
    );
    // the pseries shorthand emits the same bytes
    let alias = run(
        &["pseries", "--r", "5", "--p", "3", "--q", "2", "--N", "4", "--no-version"],
        &[],
    );
    assert_eq!(out.stdout, alias.stdout);
}

#[test]
fn gsp_rank_zero_is_all_ones() {
    let out = run(
        &["series", "gsp", "--n", "0", "--q", "7", "--N", "5", "--no-version"],
        &[],
    );
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "r,coefficient\n0,1\n1,1\n2,1\n3,1\n4,1\n5,1\n"
    );
    let alias = run(&["gsp", "--n", "0", "--q", "7", "--N", "5", "--no-version"], &[]);
    assert_eq!(out.stdout, alias.stdout);
}

#[test]
fn json_output_parses() {
    let out = run(
        &[
            "table", "--q", "2", "--r", "3", "--n", "1..3", "--format", "json", "--no-version",
        ],
        &[],
    );
    assert!(out.status.success());
    let values: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid json"))
        .collect();
    assert_eq!(values.len(), 3);
    assert_eq!(values[2]["value"], "32");
}

#[test]
fn identities_all_pass() {
    let out = run(&["identities", "--all", "--N", "5", "--no-version"], &[]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().skip(1).all(|l| l.ends_with(",pass")));
}

#[test]
fn identities_selection_and_json() {
    let out = run(
        &[
            "identities", "--which", "tsts", "--N", "3", "--format", "json", "--no-version",
        ],
        &[],
    );
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4); // two signs, two parities
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["id"], "tsts");
        assert_eq!(v["result"], "pass");
    }
}

#[test]
fn master_c_selection() {
    let out = run(
        &["identities", "--which", "master-c", "--r", "3", "--N", "3", "--no-version"],
        &[],
    );
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6); // r = 1..3, both signs
    assert!(rows.iter().all(|l| l.ends_with(",pass")));
}

#[test]
fn oracle_matches() {
    let out = run(&["oracle", "--n", "1", "--q", "2", "--r", "3", "--no-version"], &[]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,q,r,p,brute,formula,match\n1,2,3,-,4,4,true\n");
    let out = run(&["oracle", "--n", "2", "--q", "2", "--r", "2", "--no-version"], &[]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("2,2,2,-,1,1,true"));
}

#[test]
fn oracle_p_primary() {
    let out = run(
        &["oracle", "--n", "1", "--q", "3", "--r", "3", "--p", "2", "--no-version"],
        &[],
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("1,3,3,2,6,6,true"));
}

#[test]
fn sign_flag_flips_values() {
    let out = run(
        &["table", "--q", "2", "--r", "3", "--n", "1", "--sign", "chi", "--no-version"],
        &[],
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out), "r,n,value\n3,1,-4\n");
}

#[test]
fn invalid_parameters_exit_2() {
    let bad_q = run(&["table", "--q", "6"], &[]);
    assert_eq!(bad_q.status.code(), Some(2));
    let bad_kind = run(&["series", "fsp", "--N", "3"], &[]);
    assert_eq!(bad_kind.status.code(), Some(2));
    let oversized = run(&["oracle", "--n", "3", "--q", "5", "--r", "1"], &[]);
    assert_eq!(oversized.status.code(), Some(2));
    let bad_id = run(&["identities", "--which", "nope"], &[]);
    assert_eq!(bad_id.status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest", "--no-version"], &[]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("selftest passed"));
}
