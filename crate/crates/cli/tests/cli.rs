//! End-to-end checks of the `kmk` binary: exit codes, printed output and
//! the deterministic report files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn kmk(args: &[&str], dir: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmk"))
        .args(args)
        .arg("--out")
        .arg(dir)
        .output()
        .expect("binary runs")
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kmk-test-{}-{}", tag, std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn classify_prints_the_expected_bases() {
    let dir = tempdir("classify");
    let out = kmk(&["classify", "--m", "1"], &dir);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1, E, P1"), "{}", stdout(&out));

    let out = kmk(&["classify", "--m", "-2"], &dir);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1, E^-2"), "{}", stdout(&out));

    let out = kmk(&["classify", "--m", "0"], &dir);
    assert!(stdout(&out).contains("1, P0"), "{}", stdout(&out));

    // degenerate window: exit code 2
    let out = kmk(&["classify", "--m", "1", "--degree", "0"], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dirac_prints_solution_and_ledger() {
    let dir = tempdir("dirac");
    let out = kmk(&["dirac"], &dir);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("D0 = (1/λ)(1 - E); D1 = P1; sigma = E"),
        "unexpected solution line in:\n{}",
        text
    );
    // the ledger shows why other twists die and which coefficients are forced
    assert!(text.contains("m=0"), "{}", text);
    assert!(text.contains("no solution"), "{}", text);
    assert!(text.contains("forced to 0"), "{}", text);
    assert!(dir.join("dirac.json").exists());
}

#[test]
fn verify_hopf_suite_reports_and_passes() {
    let dir = tempdir("verify");
    let out = kmk(&["verify", "--suite", "hopf"], &dir);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("[PASS] hopf/dirac-uniqueness"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["all_pass"], true);
    assert!(report["properties"].as_array().unwrap().len() >= 8);
}

#[test]
fn verify_report_is_deterministic() {
    let dir1 = tempdir("det1");
    let dir2 = tempdir("det2");
    assert!(kmk(&["verify", "--suite", "hopf", "--seed", "5"], &dir1).status.success());
    assert!(kmk(&["verify", "--suite", "hopf", "--seed", "5"], &dir2).status.success());
    let a = std::fs::read(dir1.join("report.json")).unwrap();
    let b = std::fs::read(dir2.join("report.json")).unwrap();
    assert_eq!(a, b, "reports must be byte-identical for a fixed config and seed");
}

#[test]
fn zeta_writes_table_and_plot_data() {
    let dir = tempdir("zeta");
    let out = kmk(&["zeta", "--s-list", "2.5,3", "--lambda", "0.5", "--mu", "1.0"], &dir);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(dir.join("zeta.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "lambda,mu,s,c_closed,c_quadrature,rel_gap"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2);
    for row in rows {
        let gap: f64 = row.split(',').last().unwrap().parse().unwrap();
        assert!(gap <= 1e-6, "rel gap {} too large", gap);
    }
    // plot data runs toward s = 2 and its left edge approaches 1/(4π)
    let dat = std::fs::read_to_string(dir.join("zeta_residue.dat")).unwrap();
    let first = dat.lines().next().unwrap();
    let value: f64 = first.split_whitespace().nth(1).unwrap().parse().unwrap();
    let expect = 0.25 / std::f64::consts::PI;
    assert!((value - expect).abs() / expect < 5e-3, "left edge {}", value);
}

#[test]
fn residue_suite_passes_and_writes_report() {
    let dir = tempdir("residue");
    let out = kmk(&["residue"], &dir);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("[PASS]"), "{}", text);
    assert!(!text.contains("[FAIL]"), "{}", text);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("residue.json")).unwrap()).unwrap();
    assert_eq!(report["c_samples"].as_array().unwrap().len(), 18);
    assert!(report["residues"].as_array().unwrap().len() >= 3);
}

#[test]
fn invalid_inputs_exit_with_code_2() {
    let dir = tempdir("invalid");
    // negative λ named in the diagnostic
    let cfg = dir.join("bad.json");
    std::fs::write(&cfg, r#"{"lambda": -0.5}"#).unwrap();
    let out = kmk(&["verify", "--config", cfg.to_str().unwrap()], &dir);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lambda"));

    // unknown keys rejected
    std::fs::write(&cfg, r#"{"lambda": 0.5, "typo_field": 1}"#).unwrap();
    let out = kmk(&["verify", "--config", cfg.to_str().unwrap()], &dir);
    assert_eq!(out.status.code(), Some(2));

    // empty s list
    std::fs::write(&cfg, r#"{"s_list": []}"#).unwrap();
    let out = kmk(&["zeta", "--config", cfg.to_str().unwrap()], &dir);
    assert_eq!(out.status.code(), Some(2));

    // unknown suite name
    let out = kmk(&["verify", "--suite", "bogus"], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kernel_cross_check_passes_and_reads_fixture_files() {
    let dir = tempdir("kernel");
    let out = kmk(&["kernel"], &dir);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("[PASS]"));
    assert!(dir.join("kernel.json").exists());
    assert!(dir.join("fixture.json").exists());

    // round-trip: feed the exported fixture back in
    let fixture = dir.join("fixture.json");
    let out = kmk(&["kernel", "--fixture", fixture.to_str().unwrap()], &dir);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("[PASS]"));
}
