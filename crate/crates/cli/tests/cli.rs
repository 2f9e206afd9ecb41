use std::fs;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn mincode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mincode")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> Value {
    let out = mincode(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn err(args: &[&str]) -> (i32, Value) {
    let out = mincode(args);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

#[test]
fn field_description() {
    let v = ok(&["field", "--p", "2", "--m", "6"]);
    assert_eq!(v["modulus"], json!([1, 0, 0, 0, 0, 1, 1]));
    assert_eq!((v["p"].as_u64(), v["s"].as_u64(), v["m"].as_u64()), (Some(2), Some(1), Some(6)));
    let v = ok(&["field", "--q", "3", "--m", "4"]);
    assert_eq!(v["modulus"], json!([2, 0, 0, 1, 1]));
}

#[test]
fn weights_of_binary_code() {
    assert_eq!(ok(&["code-weights", "--q", "2", "--m", "6", "--N", "3"]), json!({"8": 21, "12": 42}));
    assert_eq!(ok(&["code-weights", "--q", "3", "--m", "4", "--N", "2"]), json!({"24": 40, "30": 40}));
}

#[test]
fn check_minimal_all_methods() {
    let v = ok(&["check-minimal", "--q", "3", "--m", "4", "--N", "2", "--method", "all"]);
    assert_eq!(v["exhaustive"]["verdict"], "minimal");
    assert_eq!(v["weight_ratio"]["ratio"], json!([24, 30]));
    assert_eq!(v["closed_form"]["theorem"], "3.3a");
}

#[test]
fn not_minimal_carries_witness() {
    let v = ok(&["check-minimal", "--q", "2", "--m", "4", "--N", "3"]);
    if v["verdict"] == "not_minimal" {
        let covering = v["witness"]["covering"].as_array().unwrap();
        let covered = v["witness"]["covered"].as_array().unwrap();
        assert!(covered.iter().zip(covering).all(|(b, a)| b == 0 || a != 0));
        assert_ne!(covering, covered);
    } else {
        assert!(v["witness"].is_null());
    }
}

#[test]
fn trace_and_enumeration_agree() {
    let a = ok(&["access", "--q", "3", "--m", "4", "--N", "2"]);
    let b = ok(&["access", "--q", "3", "--m", "4", "--N", "2", "--method", "trace"]);
    assert_eq!(a, b);
    assert_eq!(a["dictators"], json!([20]));
}

#[test]
fn error_kinds_and_exit_codes() {
    let cases: [(&[&str], i32, &str); 5] = [
        (&["code-build", "--q", "6", "--m", "2", "--N", "5"], 1, "not_prime_power"),
        (&["code-build", "--q", "2", "--m", "6", "--N", "5"], 1, "does_not_divide"),
        (&["access", "--q", "2", "--m", "2", "--N", "3"], 1, "no_participants"),
        (&["code-shorten", "--q", "2", "--m", "6", "--N", "3", "--steps", "3"], 1, "zero_column"),
        (&["code-build", "--q", "2", "--N", "3"], 2, "usage"),
    ];
    for (args, code, kind) in cases {
        let (c, v) = err(args);
        assert_eq!((c, v["error"]["kind"].as_str().unwrap()), (code, kind), "{args:?}");
    }
    assert_eq!(mincode(&["code-build", "--bogus"]).status.code(), Some(2));
}

#[test]
fn seeded_deal_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["deal", "--q", "3", "--m", "4", "--N", "2", "--secret", "2", "--seed", "11"];
    let first = mincode(&args);
    assert_eq!(first.stdout, mincode(&args).stdout);
    let deal: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(deal["shares"].as_object().unwrap().len(), 39);
    let path = dir.path().join("deal.json");
    fs::write(&path, &first.stdout).unwrap();
    let path = path.to_str().unwrap();

    let auth = ok(&["access", "--q", "3", "--m", "4", "--N", "2"])["sets"][0].clone();
    let coalition: Vec<String> = auth.as_array().unwrap().iter().map(|x| x.to_string()).collect();
    let coalition = coalition.join(",");
    let v = ok(&["reconstruct", "--q", "3", "--m", "4", "--N", "2", "--coalition", &coalition, "--shares-file", path]);
    assert_eq!(v["secret"], 2);

    let (c, v) =
        err(&["reconstruct", "--q", "3", "--m", "4", "--N", "2", "--coalition", "1,2", "--shares-file", path]);
    assert_eq!((c, v["error"]["kind"].as_str().unwrap()), (1, "not_authorized"));
}

#[test]
fn code_file_roundtrip_with_subfield() {
    let dir = tempfile::tempdir().unwrap();
    for (q, m, n) in [("4", "2", "3"), ("2", "6", "3"), ("9", "2", "4")] {
        let path = dir.path().join(format!("c{q}_{m}_{n}.json"));
        let p = path.to_str().unwrap();
        let out = mincode(&["code-build", "--q", q, "--m", m, "--N", n, "--output", p]);
        assert!(out.status.success() && out.stdout.is_empty());
        let from_file = ok(&["code-build", "--code-file", p]);
        assert_eq!(from_file, serde_json::from_str::<Value>(&fs::read_to_string(&path).unwrap()).unwrap());
        assert_eq!(
            ok(&["code-weights", "--code-file", p]),
            ok(&["code-weights", "--q", q, "--m", m, "--N", n])
        );
        assert_eq!(ok(&["check-minimal", "--code-file", p]), ok(&["check-minimal", "--q", q, "--m", m, "--N", n]));
    }
}

#[test]
fn request_file_matches_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("req.json");
    fs::write(&path, r#"{"command": "code-condense", "q": 3, "m": 4, "N": 2, "modulus": [2, 1, 1, 2, 1]}"#).unwrap();
    let v = ok(&["--request", path.to_str().unwrap()]);
    assert_eq!(v, ok(&["code-condense", "--q", "3", "--m", "4", "--N", "2", "--modulus", "2,1,1,2,1"]));
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(20), Some(4)));
    assert_eq!(v["provenance"]["type"], "condensed");
}
