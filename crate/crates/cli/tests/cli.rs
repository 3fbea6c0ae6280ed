use std::process::{Command, Output};

fn degsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degsq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const HEADER_ALL: &str = "n,m,C,S,f,winner,D_num,D_den,F_display,th1_lo_display,th1_hi_display,\
bo1,bo2,bo3,bo4,p1,pro1,in5,pr0,sc,complement,oracle,subtle";

#[test]
fn exact_subcommand() {
    let o = degsq(&["exact", "5", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("C=18 S=20 f=20 winner=S"));
    let o = degsq(&["exact", "4", "6"]);
    assert!(stdout(&o).contains("C=36 S=36 f=36 winner=tie"));
    let o = degsq(&["exact", "5", "11"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exceeds binom(n,2)"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(degsq(&[]).status.code(), Some(1));
    assert_eq!(degsq(&["exact", "x", "1"]).status.code(), Some(1));
    assert_eq!(degsq(&["verify", "--n-max", "0"]).status.code(), Some(1));
    assert_eq!(degsq(&["verify", "--checks", "nope"]).status.code(), Some(1));
    assert_eq!(degsq(&["verify", "--n-max", "301"]).status.code(), Some(1));
    assert_eq!(degsq(&["--help"]).status.code(), Some(0));
}

#[test]
fn bounds_subcommand() {
    let o = degsq(&["bounds", "5", "6"]);
    let out = stdout(&o);
    assert!(o.status.success());
    assert!(out.contains("f=36"));
    assert!(out.contains("D=36 (36/1)"));
    assert!(out.contains("F=41.8722 (-5 + 1*sqrt(2197)) branch=sparse"));
    assert!(out.contains("th1_upper=36"));
    assert!(out.contains("th1_applies=true"));

    let o = degsq(&["bounds", "5", "0"]);
    let out = stdout(&o);
    assert!(out.contains("f=0") && out.contains("D=0 ") && out.contains("F=0 "));

    let o = degsq(&["bounds", "1", "0"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("f=0") && out.contains("D=undefined"));
}

#[test]
fn bounds_json_is_exact() {
    let o = degsq(&["bounds", "1000", "250000", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["f"], "353197860");
    assert_eq!(v["s"], "706");
    assert_eq!(v["t"], "635");
    assert_eq!(v["D"]["num"], "374250500000");
    assert_eq!(v["D"]["den"], "999");
    assert_eq!(v["F"]["branch"], serde_json::Value::Null);
    assert_eq!(v["F_branch"], "dense");
}

#[test]
fn construct_matches_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    for (n, m, kind, golden, line) in [
        ("5", "4", "qs", include_str!("golden/qs_5_4.txt"), "sumsq=20 S=20 match"),
        ("6", "7", "qc", include_str!("golden/qc_6_7.txt"), "sumsq=44 C=44 match"),
        ("5", "4", "extremal", include_str!("golden/qs_5_4.txt"), "sumsq=20 f=20 match"),
    ] {
        let path = dir.path().join(format!("{kind}.txt"));
        let o = degsq(&["construct", n, m, "--kind", kind, "--out", path.to_str().unwrap()]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), line);
        let written = std::fs::read_to_string(&path).unwrap();
        assert_eq!(written, golden);
        let g = degsq_core::Graph::parse_edge_list(&written).unwrap();
        assert_eq!(g.edge_count(), m.parse::<usize>().unwrap());
    }
    let o = degsq(&["construct", "4", "6", "--kind", "qc"]);
    assert_eq!(stdout(&o), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
}

#[test]
fn construct_reports_io_failure() {
    let o = degsq(&["construct", "4", "6", "--kind", "qc", "--out", "/nonexistent/dir/g.txt"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn oracle_subcommand() {
    let o = degsq(&["oracle", "5"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 11);
    assert!(out.lines().all(|l| l.ends_with(" match")));
    let o = degsq(&["oracle", "7", "--m", "10"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
    let o = degsq(&["oracle", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("oracle cap exceeded"));
}

#[test]
fn verify_csv_matches_golden() {
    let o = degsq(&["verify", "--n-min", "5", "--n-max", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), include_str!("golden/verify_n5.csv"));
    assert_eq!(stdout(&o).lines().next().unwrap(), HEADER_ALL);
}

#[test]
fn verify_row_count_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let o = degsq(&["verify", "--n-max", "5", "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    let pairs: usize = (1..=5usize).map(|n| n * (n - 1) / 2 + 1).sum();
    assert_eq!(text.lines().count(), pairs + 1);
    assert!(stderr(&o).contains(&format!("rows={pairs} violations=0")));
}

#[test]
fn verify_stride_and_json() {
    let o = degsq(&["verify", "--n-min", "400", "--n-max", "401", "--stride", "20000", "--checks", "bo2,bo4", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 4 + 5);
    assert_eq!(v["summary"]["violations"], 0);
}

#[test]
fn verify_ratio_column() {
    let o = degsq(&["verify", "--n-min", "1000", "--n-max", "1000", "--m", "250000", "--checks", "ratio106"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().ends_with(",ratio106,subtle,ratio_display"));
    assert!(lines.next().unwrap().ends_with(",pass,1,106.067"));
}

#[test]
fn verify_exit_code_on_violation() {
    // bo3's lower half fails at n = 6, m = 1.
    let o = degsq(&["verify", "--n-min", "6", "--n-max", "6", "--m", "1", "--checks", "bo3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["violations"][0]["lhs"]["exact"], "-196 + 1*sqrt(39304)");
    assert_eq!(v["violations"][0]["rhs"]["exact"], "2");
}
