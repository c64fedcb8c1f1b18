use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hopf(args: &[&str]) -> Output {
    hopf_with_env(args, None)
}

fn hopf_with_env(args: &[&str], cap: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hopf"));
    cmd.args(args).env_remove("HOPF_CAP");
    if let Some(c) = cap {
        cmd.env("HOPF_CAP", c);
    }
    cmd.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

/// Writes `contents` to a fresh file under the target temp directory.
fn input_file(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn series(name: &str, kind: &str, coeffs: &[&str]) -> String {
    let body = serde_json::json!({ "kind": kind, "order": coeffs.len(), "coeffs": coeffs });
    input_file(name, &body.to_string())
        .to_string_lossy()
        .into_owned()
}

fn coeffs(v: &Value) -> Vec<String> {
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn convert_catalan_to_s() {
    let input = series(
        "catalan.json",
        "R",
        &["1", "2", "5", "14", "42", "132", "429", "1430"],
    );
    let o = hopf(&["convert", "--from", "r", "--to", "s", "--input", &input]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["kind"], "S");
    assert_eq!(coeffs(&v), ["1", "1", "1", "3", "7", "24", "72", "242"]);
}

#[test]
fn convert_s_to_r_small_example() {
    let input = series("s110.json", "S", &["1", "1", "0"]);
    let o = hopf(&["convert", "--from", "s", "--to", "r", "--input", &input]);
    assert_eq!(code(&o), 0);
    assert_eq!(coeffs(&stdout_json(&o)), ["1", "2", "4"]);
}

#[test]
fn convert_identity_copies() {
    let input = series("rr.json", "R", &["1", "2", "5/3"]);
    let o = hopf(&["convert", "--from", "r", "--to", "r", "--input", &input]);
    assert_eq!(code(&o), 0);
    assert_eq!(coeffs(&stdout_json(&o)), ["1", "2", "5/3"]);
}

#[test]
fn convert_truncates_to_order() {
    let input = series("trunc.json", "R", &["1", "2", "5", "14"]);
    let o = hopf(&[
        "convert", "--from", "r", "--to", "p", "--input", &input, "--order", "2",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(coeffs(&stdout_json(&o)), ["1", "1"]);
    let o = hopf(&[
        "convert", "--from", "r", "--to", "p", "--input", &input, "--order", "9",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn convert_non_integer_exponent_is_a_domain_error() {
    let input = series("half.json", "S", &["1/2"]);
    let o = hopf(&["convert", "--from", "s", "--to", "r", "--input", &input]);
    assert_eq!(code(&o), 3);
    assert!(!o.stderr.is_empty());
}

#[test]
fn convert_parse_errors_exit_2() {
    let bad = input_file("bad.json", "{not json")
        .to_string_lossy()
        .into_owned();
    assert_eq!(
        code(&hopf(&[
            "convert", "--from", "r", "--to", "s", "--input", &bad
        ])),
        2
    );
    let lower = input_file("lower.json", r#"{"kind":"r","order":1,"coeffs":["1"]}"#)
        .to_string_lossy()
        .into_owned();
    assert_eq!(
        code(&hopf(&[
            "convert", "--from", "r", "--to", "s", "--input", &lower
        ])),
        2
    );
    let input = series("mismatch.json", "S", &["1"]);
    assert_eq!(
        code(&hopf(&[
            "convert", "--from", "r", "--to", "s", "--input", &input
        ])),
        2
    );
    assert_eq!(
        code(&hopf(&[
            "convert", "--from", "x", "--to", "s", "--input", &input
        ])),
        2
    );
    assert_eq!(
        code(&hopf(&[
            "convert",
            "--from",
            "r",
            "--to",
            "s",
            "--input",
            "/no/such/file"
        ])),
        2
    );
}

#[test]
fn gate_exit_codes_and_verdicts() {
    let r124 = series("r124.json", "R", &["1", "2", "4"]);
    let o = hopf(&["gate", "--which", "nck", "--input", &r124]);
    assert_eq!(code(&o), 1);
    let v = stdout_json(&o);
    assert_eq!(v["pass"], false);
    assert_eq!(v["first_failure"], 3);
    assert_eq!(v["witness"], "-1");
    assert_eq!(
        code(&hopf(&["gate", "--which", "free-cofree", "--input", &r124])),
        0
    );

    let fact = series(
        "fact.json",
        "R",
        &["1", "2", "6", "24", "120", "720", "5040", "40320"],
    );
    let o = hopf(&["gate", "--which", "free-cofree", "--input", &fact]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["pass"], true);

    let cat = series(
        "cat.json",
        "R",
        &["1", "2", "5", "14", "42", "132", "429", "1430"],
    );
    assert_eq!(code(&hopf(&["gate", "--which", "nck", "--input", &cat])), 0);

    let bad = input_file("gate_bad.json", "[]")
        .to_string_lossy()
        .into_owned();
    assert_eq!(code(&hopf(&["gate", "--which", "nck", "--input", &bad])), 2);
}

#[test]
fn tables_match_golden_files() {
    for (which, golden) in [
        ("s", include_str!("../data/s_table.csv")),
        ("d", include_str!("../data/d_table.csv")),
    ] {
        let o = hopf(&["tables", "--which", which, "--max", "8"]);
        assert_eq!(code(&o), 0);
        assert_eq!(String::from_utf8(o.stdout).unwrap(), golden);
    }
}

#[test]
fn tables_rows_parse_as_csv() {
    let o = hopf(&["tables", "--which", "d"]);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["name", "n1", "n2", "n3", "n4", "n5", "n6", "n7", "n8"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    let find = |name: &str| rows.iter().find(|r| &r[0] == name).unwrap().clone();
    assert_eq!(
        find("NCQSym").iter().skip(1).collect::<Vec<_>>(),
        ["1", "1", "4", "28", "240", "2384", "26832", "337168"]
    );
    assert_eq!(&find("RPi")[8], "1518898380");
    assert_eq!(&find("RPi")[6], "456094");
}

#[test]
fn tables_shorter_and_out_of_range() {
    let o = hopf(&["tables", "--which", "s", "--max", "3"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("name,n1,n2,n3\n"));
    assert!(text.contains("FQSym,1,1,2\n"));
    assert_eq!(code(&hopf(&["tables", "--which", "s", "--max", "9"])), 3);
}

#[test]
fn nck_dims_default_decoration() {
    let o = hopf(&["nck", "--max-degree", "5", "dims"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["r"], serde_json::json!([1, 2, 5, 14, 42]));
    assert_eq!(v["p"], serde_json::json!([1, 1, 2, 5, 14]));
    assert_eq!(v["s"], serde_json::json!([1, 1, 1, 3, 7]));
}

#[test]
fn nck_dims_two_decorations() {
    let path = input_file(
        "two.json",
        r#"[{"label":"a","degree":1},{"label":"b","degree":1}]"#,
    );
    let o = hopf(&[
        "nck",
        "--max-degree",
        "3",
        "--decorations",
        path.to_str().unwrap(),
        "dims",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["r"], serde_json::json!([2, 8, 40]));
}

#[test]
fn nck_verify_passes() {
    let o = hopf(&["nck", "--max-degree", "5", "verify"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["degrees"].as_array().unwrap().len(), 5);
}

#[test]
fn nck_rejects_bad_decorations() {
    for (name, text) in [
        (
            "dup.json",
            r#"[{"label":"a","degree":1},{"label":"a","degree":2}]"#,
        ),
        ("zero.json", r#"[{"label":"a","degree":0}]"#),
        ("label.json", r#"[{"label":"1x","degree":1}]"#),
        ("garbage.json", "nope"),
    ] {
        let path = input_file(name, text);
        let o = hopf(&[
            "nck",
            "--max-degree",
            "2",
            "--decorations",
            path.to_str().unwrap(),
            "dims",
        ]);
        assert_eq!(code(&o), 2, "{name}");
    }
}

#[test]
fn degree_caps_and_override() {
    assert_eq!(code(&hopf(&["nck", "--max-degree", "8", "dims"])), 4);
    assert_eq!(code(&hopf(&["pairing", "--max-degree", "6", "build"])), 4);
    assert_eq!(
        code(&hopf_with_env(
            &["pairing", "--max-degree", "3", "build"],
            Some("2")
        )),
        4
    );
    assert_eq!(
        code(&hopf_with_env(
            &["nck", "--max-degree", "3", "dims"],
            Some("x")
        )),
        2
    );
    let o = hopf_with_env(&["nck", "--max-degree", "2", "dims"], Some("2"));
    assert_eq!(code(&o), 0);
}

#[test]
fn pairing_build_degree_one() {
    let o = hopf(&["pairing", "--max-degree", "1", "build"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["max_degree"], 1);
    assert_eq!(v["gram"]["1"], serde_json::json!([["1"]]));
    assert_eq!(v["basis"]["1"], serde_json::json!(["a"]));
}

#[test]
fn pairing_verify_and_adapt_pass() {
    let o = hopf(&["pairing", "--max-degree", "5", "verify"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["pass"], true);
    let o = hopf(&["pairing", "--max-degree", "4", "adapt"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["pass"], true);
    assert!(v["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .all(|d| d["block_form"] == true));
}

#[test]
fn outputs_are_deterministic() {
    let a = hopf(&["pairing", "--max-degree", "3", "build"]);
    let b = hopf(&["pairing", "--max-degree", "3", "build"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&hopf(&[])), 2);
    assert_eq!(code(&hopf(&["tables"])), 2);
    assert_eq!(code(&hopf(&["pairing", "--max-degree", "two", "build"])), 2);
}
