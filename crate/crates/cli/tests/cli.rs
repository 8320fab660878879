use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hankel-forge"))
        .args(args)
        .env_remove("HANKEL_FORGE_BUDGET_SEC")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn decompose_worked_monomial() {
    let o = run(&["decompose", "-c", "2", "x1^2*x2*x4*x7*x8*x10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("tableau: 1 4 7 10 / 1 8 / 2"), "{out}");
    assert!(out.contains("shape: 4,2,1"));
    assert!(out.contains("gamma_2 = 4"));
    assert!(out.contains("gamma_3 = 2"));
}

#[test]
fn decompose_json_and_trivial() {
    let o = run(&["decompose", "-c", "1", "x5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["shape"], serde_json::json!([1]));
    assert_eq!(v["tableau"], serde_json::json!([[5]]));
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(run(&["decompose", "-c", "2", "x1^^2"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "-c", "2", "3*x1"]).status.code(), Some(2));
    assert_eq!(run(&["straighten", "-c", "2", "1 2 / 5"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "gb", "-n", "7"]).status.code(), Some(2));
    // t above m is rejected before any work
    assert_eq!(run(&["verify", "gb", "-n", "7", "-c", "2", "-t", "4"]).status.code(), Some(2));
}

#[test]
fn straighten_examples() {
    let o = run(&["straighten", "-c", "2", "1 4 7 10 / 3 12"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("1 4 7 12 / 3 10"));
    assert_eq!(out.lines().count(), 2);

    let o = run(&["straighten", "-c", "2", "1 4 8 11 / 3 7"]);
    assert_eq!(stdout(&o), "1 4 8 11 / 3 7\n");

    let o = run(&["straighten", "-c", "2", "1 4 7 10 / 3 12", "--json", "--strategy", "random", "--seed", "5"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["normal_form"], "1 4 7 12 / 3 10");
    assert_eq!(v["seed"], 5);
}

#[test]
fn verify_gb_instance() {
    let o = run(&["verify", "gb", "-n", "7", "-c", "2", "-t", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS gb"));
}

#[test]
fn verify_secant_instance() {
    let o = run(&["verify", "secant", "-n", "7", "-c", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_confluence_seeds() {
    let o = run(&["verify", "confluence", "--seeds", "500"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let a = run(&["verify", "confluence", "--seeds", "200", "--seed", "3", "--json"]);
    let b = run(&["verify", "confluence", "--seeds", "200", "--seed", "3", "--json"]);
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_str(&stdout(o)).unwrap();
        v["reports"][0]["timings"] = Value::Null;
        v
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn budget_exhaustion_exits_3_with_report() {
    let o = Command::new(env!("CARGO_BIN_EXE_hankel-forge"))
        .args(["verify", "secant", "-n", "7", "-c", "1", "-r", "3", "--json"])
        .env("HANKEL_FORGE_BUDGET_SEC", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "budget");
    assert_eq!(v["reports"][0]["verdict"], "budget");
    assert!(v["reports"][0]["details"]["budget"].as_str().unwrap().contains("basis"));
}

/// Checks the parts of the published schema that the reports rely on.
fn conforms(v: &Value, schema: &Value) {
    let defs = &schema["$defs"];
    for key in schema["required"].as_array().unwrap() {
        assert!(v.get(key.as_str().unwrap()).is_some(), "missing {key}");
    }
    let verdicts = defs["verdict"]["enum"].as_array().unwrap();
    let checks = defs["check"]["enum"].as_array().unwrap();
    assert!(verdicts.contains(&v["verdict"]));
    assert!(checks.contains(&v["check"]));
    let allowed: Vec<&String> = defs["report"]["properties"].as_object().unwrap().keys().collect();
    for r in v["reports"].as_array().unwrap() {
        for key in defs["report"]["required"].as_array().unwrap() {
            assert!(r.get(key.as_str().unwrap()).is_some(), "report missing {key}");
        }
        for key in r.as_object().unwrap().keys() {
            assert!(allowed.contains(&key), "unexpected report field {key}");
        }
        assert!(verdicts.contains(&r["verdict"]));
        assert!(r["timings"]["elapsed_ms"].is_u64());
        assert!(r["instance"].is_object());
    }
}

#[test]
fn json_reports_follow_schema() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    for check in ["gb", "sympow", "primdec", "linquot", "rees", "perfectgraph"] {
        let o = run(&["verify", check, "-n", "6", "-c", "1", "--json"]);
        assert_eq!(o.status.code(), Some(0), "{check}: {}", stdout(&o));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        conforms(&v, &schema);
    }
}

#[test]
fn report_file_output() {
    let dir = std::env::temp_dir().join(format!("hankel-forge-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("gb.json");
    let o = run(&["verify", "gb", "-n", "5", "-c", "1", "--json", "--out", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
