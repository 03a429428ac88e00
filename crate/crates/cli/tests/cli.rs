use std::io::Write;
use std::process::{Command, Output, Stdio};

fn maghom(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_maghom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn builder(name: &str) -> String {
    let o = maghom(&["builders", name], "");
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn sphere_table() {
    let o = maghom(&["homology", "--max-degree", "2"], r#"{"kind":"sphere","n":2}"#);
    assert!(o.status.success(), "{o:?}");
    assert_eq!(stdout(&o), "n-category, degrees 0..=2\nMH_0 = Z\nMH_1 = 0\nMH_2 = Z\n");
}

#[test]
fn routes_give_identical_json() {
    for name in ["circle", "sphere-2", "suspended-circle", "torus", "s3-transpositions", "z4-explicit-norm", "s3-mod-a3"] {
        let doc = builder(name);
        let max = if name == "s3-mod-a3" { "1" } else { "2" };
        let runs: Vec<String> = [
            vec!["homology", "--max-degree", max, "--output", "json", "--route", "diag"],
            vec!["homology", "--max-degree", max, "--output", "json", "--route", "tot"],
            vec!["homology", "--max-degree", max, "--output", "json", "--route", "tot", "--normalize-rows"],
            vec!["homology", "--max-degree", max, "--output", "json", "--route", "diag", "--normalize-rows"],
        ]
        .iter()
        .map(|args| {
            let o = maghom(args, &doc);
            assert!(o.status.success(), "{name}: {o:?}");
            stdout(&o)
        })
        .collect();
        assert!(runs.windows(2).all(|w| w[0] == w[1]), "{name}: {runs:?}");
    }
}

#[test]
fn json_shape_and_determinism() {
    let doc = builder("s3-transpositions");
    let args = ["homology", "--max-degree", "2", "--output", "json", "--grading", "1"];
    let (a, b) = (stdout(&maghom(&args, &doc)), stdout(&maghom(&args, &doc)));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["kind"], "normed-group");
    let g = &v["gradings"][0];
    assert_eq!(g["grading"], "1");
    assert_eq!(g["homology"][2], serde_json::json!({"degree": 2, "rank": 1, "torsion": []}));
    let zero = stdout(&maghom(&["homology", "--max-degree", "1", "--output", "json", "--grading", "0"], &doc));
    let v: serde_json::Value = serde_json::from_str(&zero).unwrap();
    assert_eq!(v["gradings"][0]["homology"][1], serde_json::json!({"degree": 1, "rank": 0, "torsion": [2]}));
}

#[test]
fn verify_s3_word_norm() {
    let o = maghom(&["verify"], &builder("s3-transpositions"));
    let out = stdout(&o);
    assert!(o.status.success(), "{out}");
    assert!(out.contains("normed-group MH2 = indecomposable classes: PASS (ℓ∈{1,2}, degree 2)"), "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_passes_on_every_builder() {
    let list = stdout(&maghom(&["builders"], ""));
    for name in list.lines() {
        let o = maghom(&["verify"], &builder(name));
        assert!(o.status.success(), "{name}: {}", stdout(&o));
    }
}

#[test]
fn rejects_invalid_inputs() {
    let o = maghom(&["info"], r#"{"kind":"metric","points":["a","b"],"d":[[0,1],[2,0],[0,0]]}"#);
    assert!(!o.status.success());
    let o = maghom(&["info"], "{\"kind\": \"sphere\",\n \"n\": 2,,}");
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = maghom(&["homology", "--grading", "1"], r#"{"kind":"sphere","n":1}"#);
    assert!(!o.status.success());
    let o = maghom(&["builders", "nope"], "");
    assert!(!o.status.success());
}

#[test]
fn info_counts() {
    let out = stdout(&maghom(&["info"], &builder("s3-mod-a3")));
    assert!(out.contains("components: 2"), "{out}");
    let out = stdout(&maghom(&["info"], r#"{"kind":"metric","points":["a","b"],"d":[[0,"inf"],["inf",0]]}"#));
    assert!(out.contains("components: 2"), "{out}");
}

#[test]
fn thread_override() {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_maghom"));
    let o = cmd.env("MAGHOM_THREADS", "zero").args(["builders"]).output().unwrap();
    assert!(!o.status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_maghom")).env("MAGHOM_THREADS", "2").args(["builders"]).output().unwrap();
    assert!(o.status.success());
}
