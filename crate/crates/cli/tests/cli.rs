use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn walled(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walled"))
        .args(args)
        .env_remove("WALLED_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(o)).expect("valid JSON")
}

fn matrix(v: &Value) -> Vec<Vec<f64>> {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(walled(&["--help"]).status.code(), Some(0));
    assert_eq!(walled(&["--version"]).status.code(), Some(0));
    assert_eq!(walled(&[]).status.code(), Some(64));
    assert_eq!(walled(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(walled(&["mult", "--n", "four", "--d", "2"]).status.code(), Some(64));
    assert_eq!(walled(&["mult", "--n", "4"]).status.code(), Some(64));
    assert_eq!(walled(&["verify", "--n", "3", "--d", "2", "--exhaustive", "--samples", "3"]).status.code(), Some(64));
    // validation failures
    assert_eq!(walled(&["mult", "--n", "4", "--d", "1"]).status.code(), Some(1));
    assert_eq!(walled(&["gram", "--n", "4", "--d", "3", "--alpha", "3"]).status.code(), Some(1));
    assert_eq!(walled(&["gram", "--n", "4", "--d", "3", "--alpha", "1,2"]).status.code(), Some(1));
    assert_eq!(walled(&["irreps", "--n", "5", "--d", "2", "--alpha", "1,1,1"]).status.code(), Some(1));
    assert_eq!(walled(&["verify", "--n", "3", "--d", "2", "--tolerance", "0"]).status.code(), Some(1));
    assert_eq!(walled(&["ppt-region", "--d", "2", "--grid", "4"]).status.code(), Some(1));
}

#[test]
fn verification_failure_exits_two() {
    let o = walled(&["verify", "--n", "3", "--d", "2", "--tolerance", "1e-300"]);
    // Exact zeros still pass, but any rounding noise fails at this tolerance.
    let text = stdout(&o);
    if text.contains("FAIL") {
        assert_eq!(o.status.code(), Some(2));
        assert!(text.trim_end().ends_with("FAIL"));
    } else {
        assert_eq!(o.status.code(), Some(0));
    }
    let ok = walled(&["verify", "--n", "3", "--d", "3", "--samples", "10", "--seed", "5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).trim_end().ends_with("verify n=3 d=3: PASS"));
}

#[test]
fn classes_n4() {
    let v = json(&walled(&["classes", "--n", "4"]));
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 9);
    for c in classes {
        assert_eq!(c["members"].as_array().unwrap().len(), 2);
    }
    assert_eq!(v["fixes_n"].as_array().unwrap().len(), 6);
    let s11 = &classes[0];
    assert_eq!((s11["a"].as_u64(), s11["b"].as_u64()), (Some(1), Some(1)));
    let cycles: Vec<&str> = s11["members"].as_array().unwrap().iter().map(|m| m["cycles"].as_str().unwrap()).collect();
    assert_eq!(cycles, ["(1 4)", "(1 4)(2 3)"]);
}

#[test]
fn irreps_n3_generators() {
    let v = json(&walled(&["irreps", "--n", "3", "--d", "4", "--generators"]));
    assert_eq!(v["schema"], "walled-irreps/1");
    let irreps = v["irreps"].as_array().unwrap();
    assert_eq!(irreps.len(), 1);
    let m = &irreps[0]["matrices"];
    assert_eq!(m.as_object().unwrap().keys().collect::<Vec<_>>(), ["e", "(1 2)", "(2 3)'"]);
    assert_eq!(matrix(&m["e"]), vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
    assert_eq!(matrix(&m["(1 2)"]), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
    assert_eq!(matrix(&m["(2 3)'"]), vec![vec![0.0, 0.0], vec![1.0, 4.0]]);
}

#[test]
fn irreps_all_elements_and_alpha_selection() {
    let v = json(&walled(&["irreps", "--n", "4", "--d", "3", "--alpha", "2"]));
    assert_eq!(v["alpha"], serde_json::json!([2]));
    assert_eq!(v["dimension"], 3);
    let m = v["matrices"].as_object().unwrap();
    assert_eq!(m.len(), 24);
    assert_eq!(m.keys().filter(|k| k.ends_with('\'')).count(), 18);
    assert!(m.contains_key("e"));
    assert!(m.contains_key("(3 4)'"));

    let reduced = json(&walled(&["irreps", "--n", "4", "--d", "2", "--alpha", "1,1", "--generators"]));
    assert_eq!(reduced["dimension"], 2);
    assert_eq!(reduced["reduced"], true);
}

#[test]
fn gram_output() {
    let v = json(&walled(&["gram", "--n", "3", "--d", "3", "--alpha", "1"]));
    assert_eq!(matrix(&v["q"]), vec![vec![3.0, 1.0], vec![1.0, 3.0]]);
    assert_eq!(v["rank"], 2);
    let inv = matrix(&v["inverse"]);
    assert!((inv[0][0] - 0.375).abs() < 1e-12 && (inv[0][1] + 0.125).abs() < 1e-12);

    let singular = json(&walled(&["gram", "--n", "4", "--d", "2", "--alpha", "1,1"]));
    assert_eq!(singular["rank"], 2);
    assert!(singular["inverse"].is_null());
}

#[test]
fn mult_checksum() {
    let o = walled(&["mult", "--n", "4", "--d", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.trim_end().lines().last(), Some("checksum 256 = 4^4 OK"));
    let body = text.trim_end().rsplit_once('\n').unwrap().0;
    let v: Value = serde_json::from_str(body).unwrap();
    let mults: Vec<u64> = v["entries"].as_array().unwrap().iter().map(|e| e["mult"].as_u64().unwrap()).collect();
    assert_eq!(mults, [70, 64, 10, 10, 6]);
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "# defaults\nn = 4\nd = 2\n").unwrap();
    let path = cfg.to_str().unwrap();

    let o = walled(&["--config", path, "mult"]);
    assert!(stdout(&o).trim_end().ends_with("checksum 16 = 2^4 OK"));
    let o = walled(&["mult", "--config", path, "--d", "3"]);
    assert!(stdout(&o).trim_end().ends_with("checksum 81 = 3^4 OK"));

    std::fs::write(&cfg, "n = 4\nd = two\n").unwrap();
    assert_eq!(walled(&["--config", path, "mult"]).status.code(), Some(64));
    let missing = dir.path().join("absent.conf");
    assert_eq!(walled(&["--config", missing.to_str().unwrap(), "mult"]).status.code(), Some(64));
}

#[test]
fn ppt_csv_and_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("region.csv");
    let o = walled(&["ppt-region", "--d", "3", "--grid", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(Path::new(&out)).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "a_lambda1,a_lambda2,feasible,min_eig");
    assert_eq!(lines.len(), 1 + 15);
    for line in &lines[1..] {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 4);
        assert!(f[2] == "0" || f[2] == "1");
        let a1: f64 = f[0].parse().unwrap();
        let a2: f64 = f[1].parse().unwrap();
        assert!(a1 + a2 <= 1.0 + 1e-12);
    }

    let stdout_csv = stdout(&walled(&["ppt-region", "--d", "4", "--grid", "4"]));
    assert_eq!(stdout_csv.lines().map(|l| l.split(',').nth(2)).collect::<Vec<_>>(), lines.iter().map(|l| l.split(',').nth(2)).collect::<Vec<_>>());

    let spectrum = walled(&["ppt-region", "--d", "3", "--spectrum", "0.2,0.3"]);
    assert_eq!(spectrum.status.code(), Some(0));
    assert!(stdout(&spectrum).trim_end().ends_with("total multiplicity 27 = 3^3"));
    assert_eq!(walled(&["ppt-region", "--d", "3", "--spectrum", "0.7,0.6"]).status.code(), Some(1));
    assert_eq!(walled(&["ppt-region", "--d", "3", "--spectrum", "0.7"]).status.code(), Some(64));
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["irreps", "--n", "4", "--d", "3"][..],
        &["mult", "--n", "5", "--d", "3"],
        &["ppt-region", "--d", "3", "--grid", "10"],
    ] {
        let a = walled(args).stdout;
        let b = Command::new(env!("CARGO_BIN_EXE_walled")).args(args).env("WALLED_THREADS", "1").output().unwrap().stdout;
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn thread_variable_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_walled"))
        .args(["classes", "--n", "3"])
        .env("WALLED_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}
