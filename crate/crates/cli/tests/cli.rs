use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Sandbox {
    dir: TempDir,
}

impl Sandbox {
    fn new() -> Self {
        Sandbox {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }

    fn run(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_tropinv"))
            .current_dir(self.dir.path())
            .args(args)
            .output()
            .unwrap()
    }
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

const S2: &str = r#"{"n": 2, "generators": [[2, 1]]}"#;
const C3: &str = r#"{"n": 3, "generators": ["(1 2 3)"]}"#;
const A4: &str = r#"{"n": 4, "generators": ["(1 2 3)", "(2 3 4)"]}"#;

#[test]
fn equal_exit_codes() {
    let s = Sandbox::new();
    s.file("f.json", r#"{"n":1,"terms":[{"exp":[0],"coef":"0"},{"exp":[1],"coef":"0"},{"exp":[2],"coef":"0"}]}"#);
    s.file("g.json", r#"{"n":1,"terms":[{"exp":[0],"coef":"0"},{"exp":[2],"coef":"0"}]}"#);
    s.file("h.json", r#"{"n":1,"terms":[{"exp":[0],"coef":"0"},{"exp":[1],"coef":"1"}]}"#);
    let o = s.run(&["equal", "f.json", "g.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["equal"], Value::Bool(true));
    let o = s.run(&["equal", "f.json", "h.json"]);
    assert_eq!(o.status.code(), Some(1));
    let out = json(&o);
    assert_eq!(out["equal"], Value::Bool(false));
    assert_ne!(out["f"], out["g"]);
}

#[test]
fn canon_and_round_trip() {
    let s = Sandbox::new();
    s.file("f.json", r#"{"n":1,"terms":[{"exp":[0],"coef":"0"},{"exp":[1],"coef":"0"},{"exp":[2],"coef":"0"}]}"#);
    let o = s.run(&["canon", "f.json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    s.file("c.json", &stdout(&o));
    let again = s.run(&["canon", "c.json"]);
    assert_eq!(stdout(&again), stdout(&o));
}

#[test]
fn eval_and_text_format() {
    let s = Sandbox::new();
    s.file("f.json", r#"{"n":2,"terms":[{"exp":[2,1],"coef":"3"},{"exp":[0,0],"coef":"-1/2"}]}"#);
    let o = s.run(&["eval", "f.json", "--at", "-1,1/2", "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "3/2");
}

#[test]
fn schema_errors_exit_2() {
    let s = Sandbox::new();
    s.file("bad.json", r#"{"n":1,"terms":[{"exp":[0],"coef":"-inf"}]}"#);
    s.file("broken.json", "{");
    for args in [
        vec!["canon", "bad.json"],
        vec!["canon", "broken.json"],
        vec!["canon", "missing.json"],
    ] {
        let o = s.run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn generators_verdicts() {
    let s = Sandbox::new();
    s.file("a4.json", A4);
    s.file("s2.json", S2);
    let o = s.run(&["generators", "--group", "a4.json"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2-cycles"));
    let o = s.run(&["generators", "--group", "s2.json"]);
    assert!(o.status.success());
    assert_eq!(json(&o).as_array().unwrap().len(), 2);
}

#[test]
fn rewrite_matches_expected_json() {
    let s = Sandbox::new();
    s.file("s2.json", S2);
    let o = s.run(&["rewrite", "--group", "s2.json", "--beta", "7,0", "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        r#"{"op":"div","args":[{"op":"add","args":[{"op":"pow","m":2,"arg":{"gen":[5,1]}},{"op":"pow","m":3,"arg":{"gen":[1,3]}}]},{"gen":[3,2]}]}"#
    );
}

#[test]
fn embedding_pipeline() {
    let s = Sandbox::new();
    s.file("c3.json", C3);
    let o = s.run(&["separating", "--group", "c3.json"]);
    assert!(o.status.success());
    s.file("spec.json", &stdout(&o));
    let spec = json(&o);
    assert_eq!(spec["e_list"].as_array().unwrap().len() + spec["f_list"].as_array().unwrap().len(), 5);

    let a = s.run(&["embed", "--spec", "spec.json", "--at", "1,2,3"]);
    let b = s.run(&["embed", "--spec", "spec.json", "--at", "2,3,1"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));

    let d = s.run(&["distance", "--group", "c3.json", "--v", "1,2,3", "--w", "3,2,1"]);
    assert_eq!(json(&d)["squared_distance"], "2");

    let run = || s.run(&["distortion", "--spec", "spec.json", "--samples", "50", "--seed", "42"]);
    let (x, y) = (run(), run());
    assert!(x.status.success());
    assert_eq!(x.stdout, y.stdout);
    assert_eq!(json(&x)["kind"], "empirical");
}

#[test]
fn factor_and_decompose() {
    let s = Sandbox::new();
    s.file(
        "r.json",
        r#"{"num":{"n":1,"terms":[{"exp":[2],"coef":"0"},{"exp":[5],"coef":"0"}]},"den":{"n":1,"terms":[{"exp":[0],"coef":"0"}]}}"#,
    );
    let o = s.run(&["factor-bx", "r.json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!((v["a"].as_i64(), v["b"].as_i64()), (Some(2), Some(3)));
    let o = s.run(&["decompose", "--gamma", "2,1,0"]);
    assert_eq!(json(&o)["c"], serde_json::json!([1, 1, 0]));
}

#[test]
fn census_table() {
    let s = Sandbox::new();
    s.file("c3.json", C3);
    let o = s.run(&["census", "--group", "c3.json", "--bound", "4"]);
    assert!(o.status.success());
    let rows = json(&o);
    assert_eq!(rows.as_array().unwrap().len(), 4);
    assert_eq!(rows[3]["bound"], 4);
}

#[test]
fn output_flag_writes_file() {
    let s = Sandbox::new();
    let o = s.run(&["efun", "--n", "3", "--k", "2", "-o", "e2.json"]);
    assert!(o.status.success());
    let body = fs::read_to_string(s.dir.path().join("e2.json")).unwrap();
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    let o = s.run(&["efun", "--n", "3", "--k", "5"]);
    assert_eq!(o.status.code(), Some(4));
}
