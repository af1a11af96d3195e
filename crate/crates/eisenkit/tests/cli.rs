use std::process::{Command, Output};

fn eisenkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eisenkit"))
        .args(args)
        .env_remove("EISENKIT_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn lfunc_prints_json() {
    let o = eisenkit(&["lfunc", "--chi", "4:1", "--s-re", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let re = v["value"][0].as_f64().unwrap();
    assert!((re - std::f64::consts::FRAC_PI_4).abs() < 1e-13);
}

#[test]
fn fecheck_writes_residual_list() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fe.json");
    let o = eisenkit(&[
        "fecheck", "--chi1", "3:1", "--chi2", "4:1", "--t0", "5", "--points", "6", "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("max residual"));
    let v: Vec<serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v.len(), 6);
    for r in v {
        assert!(r["residual"].as_f64().unwrap() < 1e-6);
        let y = r["y"].as_f64().unwrap();
        assert!((0.5..=3.0).contains(&y));
    }
}

#[test]
fn amp_csv_has_ratio_column() {
    let o = eisenkit(&["amp", "--q", "3", "--L", "1e4", "--r", "20", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.last(), Some(&"ratio"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row.len(), header.len());
    let ratio: f64 = row.last().unwrap().parse().unwrap();
    assert!(ratio.is_finite());
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "chi = \"4:1\"\ns_re = 2.0\ncompleted = false\n").unwrap();
    let c = cfg.to_str().unwrap();
    let a = eisenkit(&["lfunc", "--config", c]);
    assert_eq!(a.status.code(), Some(0));
    let va: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(va["s"][0].as_f64(), Some(2.0));
    let b = eisenkit(&["lfunc", "--config", c, "--s-re", "1"]);
    let vb: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(vb["s"][0].as_f64(), Some(1.0));
    assert_eq!(vb["chi"].as_str(), Some("4:1"));
}

#[test]
fn scan_writes_reports_and_fits() {
    let dir = tempfile::tempdir().unwrap();
    let reports = dir.path().join("reports");
    let o = eisenkit(&[
        "scan", "--level1", "--t0", "10,20,40", "--fit", "--x-steps", "16", "--y-ratio", "1.3",
        "--report-dir", reports.to_str().unwrap(), "--threads", "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["slope"].as_f64().unwrap().is_finite());
    assert_eq!(std::fs::read_dir(&reports).unwrap().count(), 6);
}

#[test]
fn exit_codes() {
    assert_eq!(eisenkit(&["eval", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(eisenkit(&["lfunc", "--chi", "4:2", "--s-re", "1"]).status.code(), Some(2));
    assert_eq!(eisenkit(&["amp", "--q", "3", "--L", "1"]).status.code(), Some(2));
    let pole = eisenkit(&["lfunc", "--chi", "1:0", "--s-re", "1"]);
    assert_eq!(pole.status.code(), Some(3));
    let big = eisenkit(&["bessel", "--nu-im", "500", "--x", "1"]);
    assert_eq!(big.status.code(), Some(3));
    let threads = Command::new(env!("CARGO_BIN_EXE_eisenkit"))
        .args(["lfunc", "--s-re", "2"])
        .env("EISENKIT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(threads.status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = eisenkit(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
