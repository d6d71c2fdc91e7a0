use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn qtwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtwist"))
        .args(args)
        .output()
        .expect("spawn qtwist")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_rs_gl3() {
    let o = qtwist(&["gen", "rs", "--n", "3"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 9);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 12);
    assert_eq!(entries[0], serde_json::json!([1, 1, "s^2"]));
    assert_eq!(entries[2], serde_json::json!([2, 4, "(s^4-1)/(s^2)"]));

    let f = qtwist(&["gen", "rs", "--n", "3", "--factorized"]);
    assert_eq!(stdout(&f), stdout(&o));
}

#[test]
fn gen_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rfg.json");
    let o = qtwist(&["gen", "rfg", "--N", "1", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim"], 9);
    assert_eq!(v["entries"].as_array().unwrap().len(), 14);
}

#[test]
fn gen_rfg_partial_substitution() {
    let dir = tempfile::tempdir().unwrap();
    let params = dir.path().join("p.json");
    fs::write(&params, r#"{"s": "2"}"#).unwrap();
    let o = qtwist(&["gen", "rfg", "--N", "1", "--params", params.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let first = &v["entries"][0];
    assert_eq!(first, &serde_json::json!([1, 1, "4"]));
    assert!(stdout(&o).contains("b_1"));
    assert!(!stdout(&o).contains("s^"));
}

#[test]
fn gen_twist_stages() {
    for stage in ["1", "2", "3", "all"] {
        let o = qtwist(&["gen", "twist", "--N", "2", "--stage", stage]);
        assert!(o.status.success(), "stage {stage}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["n"], 5);
    }
    let o = qtwist(&["gen", "twist", "--N", "2", "--stage", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let kinds: Vec<&str> = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["qexp", "qexp", "qexp", "cartan"]);
}

#[test]
fn compare_cg_passes() {
    let o = qtwist(&["check", "compare-cg", "--N", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("compare-cg N=1 symbolic: pass"));
}

#[test]
fn ybe_at_given_point_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let params = dir.path().join("params.json");
    let report = dir.path().join("report.json");
    fs::write(
        &params,
        r#"{"s": "2", "mu1": "3", "mu2": "5", "b_1": "7", "b_2": "11", "a_12": "13"}"#,
    )
    .unwrap();
    let o = qtwist(&[
        "check",
        "ybe",
        "--N",
        "2",
        "--numeric",
        params.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let r = &v[0];
    assert_eq!(r["check"], "ybe");
    assert_eq!(r["N"], 2);
    assert_eq!(r["mode"], "numeric-rational");
    assert_eq!(r["pass"], true);
    assert_eq!(r["witness"], Value::Null);
    assert_eq!(r["assignment"]["a_12"], "13");
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let report = dir.path().join("r.json");
        let o = qtwist(&["check", "all", "--N", "1", "--report", report.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let mut v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("millis");
        }
        v.to_string()
    };
    let first = run();
    assert_eq!(first, run());
    let names: Vec<String> = serde_json::from_str::<Value>(&first)
        .unwrap()
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["check"].as_str().unwrap().to_string())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 9);
}

#[test]
fn default_numeric_policy_uses_three_points() {
    let o = qtwist(&["check", "cocycle", "--N", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.lines()
            .filter(|l| l.contains("numeric-rational") && l.ends_with("pass"))
            .count(),
        3
    );

    let o = qtwist(&["check", "cocycle", "--N", "2", "--symbolic"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cocycle N=2 symbolic: pass"));
}

#[test]
fn reordered_second_stage_fails_with_exit_one() {
    let o = qtwist(&["check", "cocycle", "--N", "2", "--f2-order", "reverse-lex"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qtwist(&["check", "ybe"]).status.code(), Some(2));
    assert_eq!(qtwist(&["check", "bogus", "--N", "1"]).status.code(), Some(2));
    assert_eq!(
        qtwist(&["gen", "twist", "--N", "1", "--stage", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(qtwist(&["frobnicate"]).status.code(), Some(2));
    let o = qtwist(&["check", "compare-cg", "--N", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("N = 1"));
}

#[test]
fn bad_point_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.json");
    assert_eq!(
        qtwist(&["check", "ybe", "--N", "1", "--numeric", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let partial = dir.path().join("partial.json");
    fs::write(&partial, r#"{"s": "2"}"#).unwrap();
    let o = qtwist(&["check", "ybe", "--N", "1", "--numeric", partial.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let pole = dir.path().join("pole.json");
    fs::write(&pole, r#"{"s": "0", "mu1": "3", "b_1": "5"}"#).unwrap();
    assert_eq!(
        qtwist(&["check", "hecke", "--N", "1", "--numeric", pole.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
