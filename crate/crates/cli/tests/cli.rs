use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn lspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lspace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report_json(expr: &str) -> (i32, Value) {
    let o = lspace(&["report", expr, "--json"]);
    (
        o.status.code().unwrap(),
        serde_json::from_str(&stdout(&o)).unwrap(),
    )
}

fn check<'a>(doc: &'a Value, name: &str) -> &'a Value {
    doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap()
}

#[test]
fn report_exit_codes() {
    assert_eq!(lspace(&["report", "T(5,6)"]).status.code(), Some(0));
    assert_eq!(
        lspace(&["report", "T(2,3) - T(3,2)"]).status.code(),
        Some(0)
    );
    assert_eq!(
        lspace(&["report", "3*T(5,6)-T(2,5)-T(3,5)"]).status.code(),
        Some(1)
    );
    assert_eq!(
        lspace(&["report", "2*T(4,5)-T(2,5)"]).status.code(),
        Some(1)
    );
    for bad in ["", "T(2,4)", "T(1,7)", "T(2,3", "2*T(2,3) + x"] {
        let o = lspace(&["report", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
    let o = lspace(&["report", "T(1,7)"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknot component; omit it"));
}

#[test]
fn report_json_schema() {
    let (code, doc) = report_json("T(5,6)");
    assert_eq!(code, 0);
    let keys: Vec<&str> = doc
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(
        keys,
        [
            "input",
            "normalized",
            "tau",
            "genus_sum",
            "checks",
            "verdict"
        ]
    );
    assert_eq!(doc["verdict"], "TRIVIAL_LSPACE");
    assert_eq!(doc["tau"], 10);
    let names: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
            assert_eq!(keys, ["name", "status", "witness"]);
            c["name"].as_str().unwrap()
        })
        .collect();
    assert_eq!(
        names,
        [
            "tau",
            "count",
            "upsilon_convexity",
            "theorem44",
            "alexander_divisibility",
            "lspace_form"
        ]
    );
}

#[test]
fn report_worked_example_witness() {
    let (code, doc) = report_json("3*T(5,6)-T(2,5)-T(3,5)");
    assert_eq!(code, 1);
    assert_eq!(doc["verdict"], "OBSTRUCTED");
    assert_eq!(doc["normalized"], "3*T(5,6) - T(2,5) - T(3,5)");
    let up = check(&doc, "upsilon_convexity");
    assert_eq!(up["status"], "obstructed");
    assert_eq!(up["witness"]["t"], serde_json::json!([2, 3]));
    assert!(up["witness"]["jump"][0].as_i64().unwrap() < 0);
}

#[test]
fn report_alexander_witness() {
    let (code, doc) = report_json("2*T(4,5)-T(2,5)");
    assert_eq!(code, 1);
    let form = check(&doc, "lspace_form");
    assert_eq!(form["status"], "obstructed");
    assert_eq!(form["witness"]["exponent"], 2);
    let div = check(&doc, "alexander_divisibility");
    assert_eq!(div["status"], "pass");
    let coeffs = &div["witness"]["candidate"]["coefficients"];
    assert_eq!(coeffs.as_array().unwrap()[..3], [1, -1, -1]);
}

#[test]
fn report_is_deterministic() {
    let a = lspace(&["report", "3*T(5,6)-T(2,5)-T(3,5)", "--json"]);
    let b = lspace(&["report", "3 T(5,6) # -T(2,5) # -T(3,5)", "--json"]);
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_str(&stdout(o)).unwrap();
        v["input"] = Value::Null;
        v
    };
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(
        stdout(&a),
        stdout(&lspace(&["report", "3*T(5,6)-T(2,5)-T(3,5)", "--json"]))
    );
}

#[test]
fn upsilon_csv_for_trefoil() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.csv");
    let o = lspace(&["upsilon", "T(2,3)", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(&path).unwrap(),
        "t_num,t_den,value_num,value_den\n0,1,0,1\n1,1,-1,1\n2,1,0,1\n"
    );
}

#[test]
fn upsilon_derivative_csv_has_negative_jump_at_two_thirds() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.csv");
    let o = lspace(&[
        "upsilon",
        "3*T(5,6)-T(2,5)-T(3,5)",
        "--derivative",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("t_num,t_den,slope_num,slope_den,jump_num,jump_den")
    );
    let row: Vec<i64> = lines
        .map(|l| {
            l.split(',')
                .map(|x| x.parse().unwrap())
                .collect::<Vec<i64>>()
        })
        .find(|r| r[0] == 2 && r[1] == 3)
        .expect("row at t = 2/3");
    assert!(row[4] < 0 && row[5] > 0);
}

#[test]
fn upsilon_rejects_empty_expression() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.csv");
    let o = lspace(&["upsilon", "", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!path.exists());
}

#[test]
fn invariants_json() {
    let o = lspace(&["invariants", "3*T(5,6)-T(2,5)-T(3,5)", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["tau"], 24);
    assert_eq!(
        doc["fk_decomposition"],
        serde_json::json!([
            {"a": 5, "coefficient": 3},
            {"a": 3, "coefficient": -1},
            {"a": 2, "coefficient": -3}
        ])
    );
    let t56 = doc["summands"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["knot"] == "T(5,6)")
        .unwrap();
    assert_eq!(
        t56["alexander_exponents"],
        serde_json::json!([0, 1, 5, 7, 10, 13, 15, 19, 20])
    );
    let trefoil = lspace(&["invariants", "T(2,3)", "--json"]);
    let doc: Value = serde_json::from_str(&stdout(&trefoil)).unwrap();
    assert_eq!(
        doc["jump_profile"],
        serde_json::json!([{"c": 6, "jump": -2}])
    );
}

fn sweep(config: &str) -> (i32, String, Value) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("summary.json");
    let cfg = dir.path().join("sweep.cfg");
    fs::write(&cfg, format!("{config}\noutput: {}\n", out.display())).unwrap();
    let o = lspace(&["sweep", "-c", cfg.to_str().unwrap()]);
    let doc = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    (o.status.code().unwrap(), stdout(&o), doc)
}

#[test]
fn sweep_pairs() {
    let (code, text, doc) = sweep("bound_q: 6\nbound_mult: 2\nknot_count: 2");
    assert_eq!(code, 0);
    assert!(text.lines().any(|l| l == "violations: 0"));
    assert_eq!(doc["mode"], "assert");
    assert_eq!(doc["violations"], serde_json::json!([]));
    assert_eq!(doc["verdicts"]["NO_OBSTRUCTION_FOUND"], 0);
}

#[test]
fn sweep_singletons() {
    let (code, _, doc) = sweep("bound_q: 6\nbound_mult: 1\nknot_count: 1");
    assert_eq!(code, 0);
    assert_eq!(doc["instances"], 12);
    assert_eq!(doc["verdicts"]["TRIVIAL_LSPACE"], 6);
    assert_eq!(doc["verdicts"]["OBSTRUCTED"], 6);
}

#[test]
fn sweep_triples_report_only() {
    let (code, text, doc) = sweep("bound_q: 7\nbound_mult: 1\nknot_count: 3");
    assert_eq!(code, 0);
    assert_eq!(doc["mode"], "explore");
    let listed = doc["unobstructed"].as_array().unwrap().len();
    assert_eq!(doc["verdicts"]["NO_OBSTRUCTION_FOUND"], listed);
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with("unobstructed: "))
            .count(),
        listed
    );
}

#[test]
fn sweep_rejects_malformed_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    fs::write(&cfg, "bound_q = 6\n").unwrap();
    let o = lspace(&["sweep", "-c", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    let o = lspace(&[
        "sweep",
        "-c",
        dir.path().join("missing.cfg").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}
