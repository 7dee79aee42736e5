use std::process::{Command, Output};

use serde_json::Value;

fn symplie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symplie"))
        .args(args)
        .env_remove("SYMPLIE_DEGREE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> (String, Value) {
    let o = symplie(args);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    let text = stdout(&o);
    let v = serde_json::from_str(&text).unwrap();
    (text, v)
}

#[test]
fn decompose_text() {
    let o = symplie(&["decompose", "--g", "3", "--module", "p", "--degree", "4"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("p(4) at g=3: [3,1] + [2,1,1] + [2]"), "{s}");
    assert!(s.contains("total dim 280"));
}

#[test]
fn decompose_json_summands() {
    let (_, v) = json(&["decompose", "--g", "4", "--module", "outder", "--degree", "2", "--format", "json"]);
    assert_eq!(v["decomposition"], "[2,2]");
    assert_eq!(v["module"], "outder");
    assert_eq!(v["summands"][0]["partition"], serde_json::json!([2, 2]));
    assert_eq!(v["summands"][0]["multiplicity"], 1);

    let (_, v) = json(&["decompose", "--module", "lambda_k", "--degree", "3", "--format", "json"]);
    assert_eq!(v["decomposition"], "[1,1,1] + [1]");
    assert_eq!(v["dimension"], 20);

    let (_, v) = json(&["decompose", "--module", "sym2lambda2", "--format", "json"]);
    assert_eq!(v["dimension"], 120);
}

#[test]
fn json_round_trips_byte_for_byte() {
    let runs = [
        vec!["verify", "--claim", "no-map", "--g", "3,4", "--format", "json"],
        vec!["decompose", "--module", "der", "--degree", "2", "--format", "json"],
        vec!["dims", "--g", "2", "--max-degree", "4", "--format", "json"],
    ];
    for args in runs {
        let (text, v) = json(&args);
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text, "{args:?}");
    }
}

#[test]
fn verify_all_is_deterministic_and_passes() {
    let a = symplie(&["verify", "--format", "json"]);
    let b = symplie(&["verify", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let claims: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["claim"].as_str().unwrap()).collect();
    let mut sorted = claims.clone();
    sorted.sort_unstable();
    assert_eq!(claims, sorted);
    assert_eq!(claims.len(), 10);
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] == "pass" && r.get("elapsed_ms").is_none()));
}

#[test]
fn verify_text_summary() {
    let o = symplie(&["verify", "--claim", "outer-bracket", "--g", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("PASS outer-bracket g=3"), "{s}");
    assert!(s.contains("coefficient = -9/16"));
    assert!(s.trim_end().ends_with("1/1 passed"));
}

#[test]
fn inverse_twist_and_timing() {
    let (_, v) = json(&["verify", "--claim", "magnus-oracle", "--inverse-twist", "--timing", "--format", "json"]);
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["witness"]["orientation"], "inverse");
    assert!(v[0]["elapsed_ms"].is_u64());
}

#[test]
fn small_genus_skips_three_handle_claims() {
    let o = symplie(&["verify", "--claim", "outer-bracket", "--g", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("outer-bracket needs g >= 3; skipped at g=2"));
    let (_, v) = json(&["verify", "--claim", "dehn-twist-image", "--g", "2", "--format", "json"]);
    assert_eq!(v[0]["status"], "pass");
}

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 6] = [
        &["decompose", "--module", "nope"],
        &["verify", "--claim", "thm-nope"],
        &["decompose", "--module", "p", "--degree", "7"],
        &["decompose", "--module", "der", "--degree", "5"],
        &["decompose", "--g", "1", "--module", "p"],
        &["decompose", "--module", "lambda_k", "--degree", "7"],
    ];
    for args in cases {
        let o = symplie(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn degree_cap_from_environment() {
    let run = |cap: &str, args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_symplie"))
            .args(args)
            .env("SYMPLIE_DEGREE_CAP", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("3", &["decompose", "--module", "p", "--degree", "4"]).status.code(), Some(2));
    assert_eq!(run("3", &["decompose", "--module", "p", "--degree", "3"]).status.code(), Some(0));
    assert_eq!(run("x", &["dims"]).status.code(), Some(2));
    let o = run("4", &["dims", "--max-degree", "3"]);
    let s = stdout(&o);
    assert!(s.lines().nth(2).unwrap().ends_with("20"), "{s}");
    assert!(s.lines().nth(4).unwrap().ends_with('-'), "{s}");
}
