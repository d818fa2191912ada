use std::process::{Command, Output};

fn twistfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistfib")).args(args).env_remove("TWISTFIB_DATA_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn report_json_p3() {
    let o = twistfib(&["report", "--p", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["euler_characteristic"], 60);
    assert_eq!(v["signature"], -36);
    assert_eq!(v["c1_squared"], 12);
    assert_eq!(v["chi_h"], 6);
    assert_eq!(v["num_cycles"], 72);
    assert_eq!(v["golden_match"], true);
    for key in ["h1_trivial", "relator_identity", "involutions_ok", "pi1_chain_ok"] {
        assert_eq!(v[key], true, "{key}");
    }
    assert_eq!(v["phi_order"], 3);
    assert_eq!(v["contributions"].as_array().unwrap().len(), 72);
}

#[test]
fn report_is_deterministic() {
    let a = stdout(&twistfib(&["report", "--p", "5"]));
    let b = stdout(&twistfib(&["report", "--p", "5"]));
    assert_eq!(a, b);
}

#[test]
fn report_csv_p5() {
    let o = twistfib(&["report", "--p", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let field = |k: &str| row[header.iter().position(|h| *h == k).unwrap()];
    assert_eq!(field("num_cycles"), "140");
    assert_eq!(field("signature"), "-60");
}

#[test]
fn report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.txt");
    let o = twistfib(&["report", "--p", "3", "--format", "text", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(path).unwrap().contains("chi_h"));
}

#[test]
fn invalid_p_is_usage_error() {
    for cmd in ["report", "verify", "cycles", "matrix"] {
        let o = twistfib(&[cmd, "--p", "4"]);
        assert_eq!(o.status.code(), Some(2), "{cmd}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("p must be odd and ≥ 3"));
    }
    assert_eq!(twistfib(&["report", "--p", "-3"]).status.code(), Some(2));
    assert_eq!(twistfib(&["report"]).status.code(), Some(2));
}

#[test]
fn verify_selected_checks() {
    let o = twistfib(&["verify", "--p", "7", "--checks", "relator,h1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "relator: pass\nh1: pass\n");
    let o = twistfib(&["verify", "--p", "3", "--checks", "golden"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "golden: pass\n");
    assert_eq!(twistfib(&["verify", "--p", "3", "--checks", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_fails_on_bad_golden_data() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("golden")).unwrap();
    let mut seq = vec!["0"; 72];
    seq[0] = "-1";
    std::fs::write(dir.path().join("golden/p3.csv"), seq.join(",")).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_twistfib"))
        .args(["verify", "--p", "3", "--checks", "golden"])
        .env("TWISTFIB_DATA_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("golden: FAIL"));
    let o = Command::new(env!("CARGO_BIN_EXE_twistfib"))
        .args(["report", "--p", "3"])
        .env("TWISTFIB_DATA_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_golden_skipped_without_data() {
    let o = twistfib(&["verify", "--p", "11", "--checks", "golden"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("golden: skipped"));
}

#[test]
fn cycles_dumps() {
    let o = twistfib(&["cycles", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.split_whitespace().take(2).eq(["c1^1", "a1"])));
    assert_eq!(stdout(&twistfib(&["cycles", "--p", "5"])).lines().count(), 20);
    let o = twistfib(&["cycles", "--p", "9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 28);
    assert_eq!(v[0]["label"], "c1^1");
    assert_eq!(v[0]["homology"].as_array().unwrap().len(), 20);
}

#[test]
fn matrix_dump() {
    let o = twistfib(&["matrix", "--p", "3", "--word", "relator"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Vec<String>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 8);
    for (r, row) in rows.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            assert_eq!(x, if r == c { "1" } else { "0" });
        }
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(twistfib(&["--help"]).status.code(), Some(0));
    assert_eq!(twistfib(&["--version"]).status.code(), Some(0));
}
