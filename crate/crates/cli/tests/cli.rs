use std::process::{Command, Output};

fn rectsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rectsym"))
        .args(args)
        .output()
        .expect("run rectsym")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_examples() {
    for (args, want) in [
        (&["compute", "lr", "--lambda", "1", "--mu", "1", "--nu", "2"][..], "1"),
        (&["compute", "kostka-foulkes", "--lambda", "2,1", "--mu", "1,1,1"][..], "t + t^2"),
        (&["compute", "plethysm", "--lambda", "2", "--mu", "2", "--nu", "2,2"][..], "1"),
        (&["compute", "kronecker", "--lambda", "2,1", "--mu", "2,1", "--nu", "1,1,1", "--check"][..], "1"),
        (&["compute", "lr", "--lambda", "0", "--mu", "0", "--nu", "0", "--method", "oracle"][..], "1"),
    ] {
        let o = rectsym(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
}

#[test]
fn compute_json() {
    let o = rectsym(&["compute", "plethysm", "--lambda", "2", "--mu", "2", "--nu", "2,2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["family"], "plethysm");
    assert_eq!(v["value"], "1");
    assert_eq!(v["indices"][2], serde_json::json!([2, 2]));
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["compute", "lr", "--lambda", "1,2", "--mu", "1", "--nu", "2"][..],
        &["compute", "lr", "--lambda", "1", "--mu", "1"][..],
        &["compute", "kostka-foulkes", "--lambda", "x", "--mu", "1"][..],
        &["verify", "no-such-rule"][..],
        &["verify", "lr-box", "--box", "1,2"][..],
        &["reduce", "kronecker", "--lambda", "2", "--mu", "1", "--nu", "1"][..],
        &["reduce", "lr", "--lambda", "1", "--mu", "1", "--nu", "2"][..],
    ] {
        assert_eq!(rectsym(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_examples() {
    for args in [
        &["verify", "lr-box", "--max-weight", "6"][..],
        &["verify", "all", "--max-weight", "5"][..],
        &["verify", "kron-box", "--max-weight", "4", "--boxes", "2,2,2"][..],
    ] {
        let o = rectsym(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains("no counterexamples"));
    }
}

#[test]
fn verify_json_lists_every_rule() {
    let o = rectsym(&["verify", "all", "--max-weight", "3", "--json", "--jobs", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let rules: Vec<_> = v["rules"].as_array().unwrap().iter().map(|r| r["rule"].as_str().unwrap()).collect();
    assert_eq!(rules.len(), 10);
    assert_eq!(rules[0], "lr-box");
    assert_eq!(rules[9], "kf-translate");
}

#[test]
fn reduce_examples() {
    let o = rectsym(&["reduce", "kronecker", "--lambda", "2,2,2", "--mu", "2,2,2", "--nu", "2,2,2", "--execute"]);
    let text = stdout(&o);
    assert!(o.status.success());
    assert!(text.contains("reduced: (2) (2) (2)"), "{text}");
    assert!(text.contains("weight 6 -> 2"), "{text}");

    let o = rectsym(&["reduce", "kronecker", "--lambda", "4,4", "--mu", "4,4", "--nu", "4,4"]);
    assert!(stdout(&o).contains("no profitable reduction"));

    let o = rectsym(&["reduce", "plethysm", "--lambda", "1", "--mu", "3,3", "--nu", "3,3", "--json", "--execute"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["weight_before"], 6);
    assert_eq!(v["weight_after"], 0);
    assert_eq!(v["values"], serde_json::json!(["1", "1"]));
    assert_eq!(v["family"], "plethysm");
    for key in ["original", "chain", "reduced", "candidates"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn bench_reports_equal_values() {
    let o = rectsym(&["bench", "--reps", "1", "--json"]);
    assert!(o.status.success());
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let row = rows.iter().find(|r| r["instance"] == "kronecker (2^3)^3").unwrap();
    assert_eq!(row["weight_after"], 2);
    assert_eq!(row["value"], "1");
    let row = rows.iter().find(|r| r["instance"] == "kronecker (3^8)^3").unwrap();
    assert_eq!((row["weight_before"].as_u64(), row["weight_after"].as_u64()), (Some(24), Some(3)));
}
