use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperring"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

/// `ℤ_n{A}` as a table document, written out independently of the library.
fn zn_table(n: usize, a: &[usize]) -> Value {
    let hyp: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let mut s: Vec<usize> = a.iter().map(|r| x * r * y % n).collect();
                    s.sort();
                    s.dedup();
                    s
                })
                .collect()
        })
        .collect();
    json!({
        "kind": "table",
        "name": format!("T{n}"),
        "order": n,
        "zero": 0,
        "add": (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "neg": (0..n).map(|x| (n - x) % n).collect::<Vec<_>>(),
        "hyp": hyp,
    })
}

const R6: &str = "zn:6:2";

#[test]
fn validate_r6() {
    let o = run(&["validate", "--ring", R6, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["valid"], true);
    assert_eq!(v["strongly_distributive"], true);
}

#[test]
fn validate_reports_a_broken_cell() {
    let mut t = zn_table(6, &[2]);
    t["hyp"][1][1] = json!([4]);
    let path = scratch("broken.json", &t.to_string());
    let o = run(&["validate", "--ring", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json_of(&o);
    assert_eq!(v["valid"], false);
    assert!(v["witness"].is_array());
    assert_eq!(v["witness_genuine"], true);
}

#[test]
fn malformed_input_exits_2() {
    let path = scratch("garbage.json", "{\"kind\": \"table\", \"order\": ");
    assert_eq!(
        run(&["validate", "--ring", path.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let mut t = zn_table(3, &[1]);
    t["neg"] = json!([0, 2]);
    let path = scratch("short.json", &t.to_string());
    assert_eq!(
        run(&["validate", "--ring", path.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    assert_eq!(
        run(&["validate", "--ring", "zn:1:0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["classify", "--ring", R6, "--ideal", "0,9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["nil", "--ring", R6, "--alpha", "map:0,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn classify_examples() {
    let o = run(&[
        "classify", "--ring", R6, "--ideal", "0,3", "--alpha", "scale:3", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["alpha_prime"], true);

    let v = json_of(&run(&[
        "classify",
        "--ring",
        R6,
        "--ideal",
        "0,2,4",
        "--alpha",
        "{\"kind\":\"scale\",\"factor\":3}",
        "--json",
    ]));
    assert_eq!(v["alpha_prime"], false);
    assert_eq!(v["alpha_prime_witness"], json!([1, 1]));

    for alpha in ["id", "zero", "scale:3"] {
        let v = json_of(&run(&[
            "classify", "--ring", R6, "--ideal", "0,1", "--alpha", alpha, "--json",
        ]));
        assert_eq!(v["hyperideal"], false);
    }

    let o = run(&["classify", "--ring", R6, "--ideal", "gen:2"]);
    assert!(stdout(&o).contains("ideal: [0,2,4]\n"));
}

#[test]
fn bad_endomorphism_exits_1() {
    let o = run(&[
        "classify",
        "--ring",
        R6,
        "--ideal",
        "0,3",
        "--alpha",
        "map:0,2,4,0,2,4",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn radicals_and_nilradicals() {
    let v = json_of(&run(&[
        "radical",
        "--ring",
        R6,
        "--ideal",
        "{\"elements\":[0]}",
        "--json",
    ]));
    assert_eq!(v["radical"], json!([0, 3]));

    let v = json_of(&run(&["nil", "--ring", R6, "--alpha", "scale:3", "--json"]));
    assert_eq!(v["alpha_nilradical"], json!([0, 1, 2, 3, 4, 5]));

    let one = scratch("one.json", &zn_table(1, &[0]).to_string());
    let v = json_of(&run(&["nil", "--ring", one.to_str().unwrap(), "--json"]));
    assert_eq!(v["nilradical"], json!([0]));

    let v = json_of(&run(&[
        "alpharadical",
        "--ring",
        R6,
        "--ideal",
        "0",
        "--alpha",
        "id",
        "--json",
    ]));
    assert_eq!(v["alpha_radical"], json!([0, 3]));
}

#[test]
fn quotient_round_trips() {
    let q = run(&["quotient", "--ring", R6, "--ideal", "0,3"]);
    assert_eq!(q.status.code(), Some(0));
    let emitted = stdout(&q);
    assert_eq!(serde_json::from_str::<Value>(&emitted).unwrap()["order"], 3);
    let path = scratch("quotient.json", &emitted);
    let p = path.to_str().unwrap();
    assert_eq!(run(&["validate", "--ring", p]).status.code(), Some(0));
    assert_eq!(stdout(&run(&["validate", "--ring", p, "--emit"])), emitted);
}

#[test]
fn table_documents_round_trip() {
    for (n, a) in [(6, vec![2]), (12, vec![2, 3]), (8, vec![0, 2, 4, 6])] {
        let first = stdout(&run(&[
            "validate",
            "--ring",
            &format!("zn:{n}:{}", join(&a)),
            "--emit",
        ]));
        let path = scratch(&format!("rt{n}.json"), &first);
        let second = stdout(&run(&[
            "validate",
            "--ring",
            path.to_str().unwrap(),
            "--emit",
        ]));
        assert_eq!(first, second);
    }
}

fn join(a: &[usize]) -> String {
    a.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

#[test]
fn products() {
    let one = scratch("one_p.json", &zn_table(1, &[0]).to_string());
    let p = one.to_str().unwrap();
    let v: Value =
        serde_json::from_str(&stdout(&run(&["product", "--ring", p, "--with", p]))).unwrap();
    assert_eq!(v["order"], 1);

    let v: Value = serde_json::from_str(&stdout(&run(&[
        "product", "--ring", "zn:2:1", "--with", "zn:3:1",
    ])))
    .unwrap();
    assert_eq!(v["order"], 6);

    let o = run(&["product", "--ring", R6, "--with", R6, "--max-order", "10"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn endos_of_r6() {
    let v = json_of(&run(&["endos", "--ring", R6, "--json"]));
    assert_eq!(v["count"], 4);
    assert_eq!(v["endomorphisms"].as_array().unwrap().len(), 4);
}

#[test]
fn props_of_r6() {
    let v = json_of(&run(&["props", "--ring", R6, "--json"]));
    assert_eq!(v["nilradical"], json!([0, 3]));
    assert_eq!(v["hyperideals"].as_array().unwrap().len(), 4);
    assert_eq!(v["units"], Value::Null);
}

#[test]
fn verify_on_files() {
    let empty = scratch("empty.json", "{\"rings\": []}");
    let o = run(&["verify", "--corpus", empty.to_str().unwrap(), "--strict"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[]\n");

    let factor =
        |n: usize| json!({"kind": "zn_multiplier", "modulus": n, "multipliers": [1, n - 1]});
    let doc = json!({"products": [[factor(2), factor(3)], [factor(3), factor(4)]]});
    let path = scratch("products.json", &doc.to_string());
    let o = run(&[
        "verify",
        "--corpus",
        path.to_str().unwrap(),
        "--theorems",
        "T25,T26",
        "--strict",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let reports = json_of(&o);
    let reports = reports.as_array().unwrap();
    assert!(!reports.is_empty());
    for r in reports {
        assert!(
            r["status"] == "holds" || r["status"] == "hypotheses_not_met",
            "{r}"
        );
    }

    let bad = run(&[
        "verify",
        "--corpus",
        empty.to_str().unwrap(),
        "--theorems",
        "T99",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn default_verify_is_deterministic_and_ledgered() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let a = dir.join("default_a.json");
    let b = dir.join("default_b.json");
    let o1 = run(&[
        "verify",
        "--report",
        a.to_str().unwrap(),
        "--strict",
        "--jobs",
        "1",
    ]);
    let o2 = run(&[
        "verify",
        "--report",
        b.to_str().unwrap(),
        "--strict",
        "--jobs",
        "4",
    ]);
    assert_eq!(o1.status.code(), Some(0), "{}", stdout(&o1));
    assert_eq!(o2.status.code(), Some(0));
    let (ra, rb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert!(ra == rb, "reports differ");
    let summary = stdout(&o1);
    assert!(summary.contains("T11: holds="));
    assert!(!summary.contains("unexpected failure"));
    let text = String::from_utf8(ra).unwrap();
    assert!(text.contains("\"ledger\":\"kernel-bound-needs-injective-alpha\""));
    assert!(text.contains("\"ledger\":\"z8-scaled-3x-not-alpha-prime\""));
}

#[test]
fn corpus_summary() {
    let o = run(&["corpus", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert!(v["rings"].as_u64().unwrap() > 100);
    assert_eq!(v["claims"].as_array().unwrap().len(), 5);
}
