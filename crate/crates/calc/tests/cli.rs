use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blowup-calc"))
        .args(args)
        .current_dir(dir)
        .env_remove("BLOWUP_EPSILON")
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn chi_of_fundamental_divisor() {
    let o = run(&[
        "chi", "--rank", "1", "--c1", "2,-1", "--c2", "0,0", "--m", "0", "--twist", "0,0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "9\n");
}

#[test]
fn chi_of_instanton_twist() {
    let o = run(&["chi", "--rank", "2", "--c2", "3,1", "--twist", "-2,1"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn twist_reports_flat_chern_data() {
    let o = run(&[
        "twist", "--rank", "2", "--c1", "0,0", "--c2", "1,0", "--m", "0", "--twist", "1,0",
    ]);
    let v = json(&o);
    assert_eq!(v["schema"], "blowup-calc/1");
    assert_eq!(
        (v["r"].as_i64(), v["a"].as_i64(), v["b"].as_i64()),
        (Some(2), Some(2), Some(0))
    );
    assert_eq!((v["k"].as_i64(), v["l"].as_i64()), (Some(2), Some(0)));
}

#[test]
fn cohom_of_trivial_bundle() {
    let v = json(&run(&["cohom", "--bundle", "O(-2,1)"]));
    for h in ["h0", "h1", "h2", "h3"] {
        assert_eq!(v[h], 0);
    }
    let v = json(&run(&["cohom", "--bundle", "O(0,-3)"]));
    assert_eq!((v["h1"].as_u64(), v["chi"].as_i64()), (Some(9), Some(-9)));
    let v = json(&run(&["cohom", "--bundle", "Omega1(0,0)"]));
    assert_eq!(v["h1"], 1);
}

#[test]
fn deform_fiber_line() {
    let v = json(&run(&["deform", "--charge", "1,0", "--line", "F"]));
    assert_eq!(v["ext1"], 9);
    assert_eq!(v["h0_local_ext"], 3);
    assert_eq!(v["boundary_component"], serde_json::json!([2, 1]));
    assert_eq!(v["smooth"], true);
}

#[test]
fn deform_rejects_exceptional_line() {
    let o = run(&["deform", "--charge", "1,0", "--line", "X"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["kind"], "validation");
}

#[test]
fn component_dim() {
    assert_eq!(stdout(&run(&["component-dim", "--charge", "2,1"])), "9\n");
    assert_eq!(
        run(&["component-dim", "--charge", "1,1"]).status.code(),
        Some(2)
    );
}

#[test]
fn monad_reports_multiplicities() {
    let v = json(&run(&[
        "monad", "--rank", "2", "--charge", "2,1", "--gamma", "1",
    ]));
    assert_eq!(v["multiplicities"], serde_json::json!([2, 1, 1, 2, 2, 1]));
    assert_eq!(v["check"]["all"], true);
}

#[test]
fn transform_trajectory() {
    let v = json(&run(&[
        "transform",
        "--seed",
        "thooft:1,0",
        "--steps",
        "P,P,F,X",
    ]));
    let charges: Vec<Value> = v["trajectory"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["charge"].clone())
        .collect();
    assert_eq!(
        charges,
        serde_json::from_str::<Vec<Value>>("[[1,0],[2,0],[3,0],[4,1],[4,0]]").unwrap()
    );
    assert!(v["trajectory"][4].get("literal_charge").is_none());
}

#[test]
fn literal_mode_from_config() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("blowup.toml"), "literal_mode = true\n").unwrap();
    let v = json(&run_in(
        dir.path(),
        &["transform", "--seed", "thooft:1,0", "--steps", "X"],
    ));
    assert_eq!(v["trajectory"][1]["charge"], serde_json::json!([1, -1]));
    assert_eq!(
        v["trajectory"][1]["literal_charge"],
        serde_json::json!([1, 1])
    );
}

#[test]
fn epsilon_variable_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("blowup.toml"), "epsilon = 1\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_blowup-calc"))
        .args(["transform", "--seed", "thooft:1,0", "--steps", "F"])
        .current_dir(dir.path())
        .env("BLOWUP_EPSILON", "-1")
        .output()
        .unwrap();
    assert_eq!(
        json(&o)["trajectory"][1]["charge"],
        serde_json::json!([2, -1])
    );
}

#[test]
fn check_instanton_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let zero = "[0,0,0,0]";
    let tables = format!(
        r#"{{"charge":[1,0],"tables":[
            {{"twist":[0,0],"h":{zero}}},{{"twist":[-4,1],"h":{zero}}},
            {{"twist":[-2,1],"h":[0,1,0,0]}},{{"twist":[0,-1],"h":{zero}}}]}}"#
    );
    std::fs::write(dir.path().join("t.json"), tables).unwrap();
    let v = json(&run_in(
        dir.path(),
        &["check-instanton", "--tables", "t.json"],
    ));
    assert_eq!(v["summary"]["I"], "pass");
    assert_eq!(v["summary"]["II"], "fail");
    assert_eq!(v["summary"]["III"], "unknown");
    assert_eq!(v["summary"]["euler"], "pass");
    assert_eq!(v["overall"], "fail");

    std::fs::write(dir.path().join("bad.json"), "{\"tables\": 3}").unwrap();
    assert_eq!(
        run_in(dir.path(), &["check-instanton", "--tables", "bad.json"])
            .status
            .code(),
        Some(65)
    );
}

#[test]
fn grid_csv_is_rectangular_and_ordered() {
    let o = run(&[
        "cohom-grid",
        "--pmin",
        "-3",
        "--pmax",
        "2",
        "--qmin",
        "-2",
        "--qmax",
        "3",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,q,h0,h1,h2,h3");
    assert_eq!(lines.len(), 1 + 6 * 6);
    assert_eq!(lines[1], "-3,-2,0,4,0,0");
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 6));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "cohom-grid",
        "--pmin",
        "-8",
        "--pmax",
        "8",
        "--qmin",
        "-8",
        "--qmax",
        "8",
        "--format",
        "json",
    ];
    let first = run(&args);
    for _ in 0..3 {
        assert_eq!(run(&args).stdout, first.stdout);
    }
    let args = [
        "transform",
        "--seed",
        "thooft:3,1",
        "--steps",
        "P,F,X,P",
        "--curve",
        "P*2,(2.0.0)",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["chi"]).status.code(), Some(64));
    assert_eq!(run(&["chi", "--rank", "two"]).status.code(), Some(65));
    assert_eq!(
        run(&["cohom", "--bundle", "O(1;2)"]).status.code(),
        Some(65)
    );
    assert_eq!(
        run(&["chi", "--rank", "2", "--c2", "1,0", "--m", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["transform", "--seed", "thooft:1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn bad_config_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("blowup.toml"), "epsilon = 5\n").unwrap();
    assert_eq!(
        run_in(dir.path(), &["component-dim", "--charge", "1,0"])
            .status
            .code(),
        Some(78)
    );
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains(" PASS ")).count(), 11);
}
