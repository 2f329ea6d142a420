use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_courant-lab"))
        .args(args)
        .env("COURANT_LAB_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn spectrum_csv_has_the_torus_rows() {
    let o = run(&["spectrum", "--domain", "torus", "--count", "85", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "normalized,min_index,max_index,multiplicity,ratio");
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[3], "3,8,13,6,0.3750000000");
    assert_eq!(lines[11], "21,74,85,12,0.2837837838");
}

#[test]
fn spectrum_json_lists_modes() {
    let o = run(&["spectrum", "--domain", "equilateral", "--count", "4", "--format", "json"]);
    let v = json(&o);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1]["normalized"], 7);
    assert_eq!(rows[1]["ratio"], "3.500000000");
    assert_eq!(rows[1]["modes"].as_array().unwrap().len(), 2);
}

#[test]
fn screen_reports_candidates() {
    let v = json(&run(&["screen", "--domain", "equilateral", "--format", "json"]));
    assert_eq!(v["candidates"], serde_json::json!([1, 2, 4, 5, 7, 11]));
    assert_eq!(v["domain"], "equilateral");
    let o = run(&["screen", "--domain", "right-isosceles", "--format", "csv"]);
    assert!(stdout(&o).starts_with("normalized,min_index,max_index,multiplicity,ratio\n5,1,1,1,5.000000000\n"));
}

#[test]
fn verdict_on_the_right_isosceles_triangle() {
    let o = run(&["verdict", "--domain", "right-isosceles"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["sharp"], serde_json::json!([1, 2]));
}

#[test]
fn nodal_count_of_23() {
    let o = run(&["nodal", "--domain", "equilateral", "--pair", "2,3", "--theta", "0.35", "--resolution", "512"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["domain_count"], 4);
    assert_eq!(v["stable"], true);
    for key in ["domain", "m", "n", "theta", "resolution", "positive_components", "negative_components"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn symbolic_angles() {
    let v = json(&run(&["nodal", "--pair", "1,3", "--theta", "pi/12", "--resolution", "256"]));
    assert_eq!(v["domain_count"], 3);
    assert!((v["theta"].as_f64().unwrap() - std::f64::consts::PI / 12.0).abs() < 1e-15);
    let v = json(&run(&["nodal", "--pair", "2,3", "--theta", "theta_c", "--resolution", "256"]));
    assert!((v["theta"].as_f64().unwrap() - 0.3005211736).abs() < 1e-9);
}

#[test]
fn unstable_count_exits_3() {
    let o = run(&["nodal", "--domain", "hemiequilateral", "--pair", "5,2", "--resolution", "256"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["stable"], false);
}

#[test]
fn plot_writes_arcs_and_markers() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("nodal.svg");
    let o = run(&["plot", "--domain", "equilateral", "--pair", "1,3", "--theta", "0.2618", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    assert_eq!(svg.matches("class=\"nodal\"").count(), 2);
    assert_eq!(svg.matches("class=\"fixed-point\"").count(), 4);
    assert!(!svg.contains("href"));
    assert!(!dir.path().join("nodal.svg.stamp.json").exists());
}

#[test]
fn output_is_byte_identical_and_stamp_is_a_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for (path, stamp) in [(&a, true), (&b, false)] {
        let mut args = vec!["spectrum", "--domain", "hemiequilateral", "--count", "50", "--out", path.to_str().unwrap()];
        if stamp {
            args.push("--stamp");
        }
        assert_eq!(run(&args).status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let sidecar: Value = serde_json::from_slice(&std::fs::read(dir.path().join("a.csv.stamp.json")).unwrap()).unwrap();
    assert_eq!(sidecar["tool"], "courant-lab");
    assert_eq!(sidecar["command"]["command"], "spectrum");
}

#[test]
fn critical_zero_and_fixed_point_commands() {
    let v = json(&run(&["critical-zeros", "--pair", "2,3", "--theta", "0.1"]));
    let edges: Vec<&str> = v.as_array().unwrap().iter().map(|z| z["edge_or_median"].as_str().unwrap()).collect();
    assert_eq!(edges.iter().filter(|e| **e == "OA").count(), 1);
    assert_eq!(edges.iter().filter(|e| **e == "BA").count(), 3);
    let v = json(&run(&["critical-zeros", "--pair", "1,3"]));
    assert_eq!(v["c"].as_array().unwrap().len(), 3);
    assert_eq!(v["s"].as_array().unwrap().len(), 1);
    let v = json(&run(&["fixed-points", "--pair", "2,3"]));
    assert_eq!(v.as_array().unwrap().len(), 7);
    let v = json(&run(&["bifurcation"]));
    assert!((v["u_b"].as_f64().unwrap() - 0.3912873205).abs() < 1e-8);
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        vec!["spectrum", "--domain", "klein-bottle"],
        vec!["frobnicate"],
        vec!["nodal", "--pair", "1,3", "--theta", "0.1", "--resolution", "32"],
        vec!["nodal", "--domain", "torus", "--pair", "1,0"],
        vec!["nodal", "--pair", "1,3"],
        vec!["nodal", "--pair", "1,3", "--theta", "tau"],
        vec!["fixed-points", "--pair", "1,2"],
        vec!["screen", "--stamp"],
        vec!["spectrum", "--count", "0"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}
