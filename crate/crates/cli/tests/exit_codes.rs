use std::process::{Command, Output};

fn tlqkz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlqkz")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    tlqkz(args).status.code().unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("tlqkz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn usage_errors() {
    assert_eq!(code(&["solve", "--type", "E", "--rank", "3"]), 2);
    assert_eq!(code(&["solve", "--type", "C"]), 2);
    assert_eq!(code(&["solve", "--type", "D", "--rank", "4"]), 2);
    assert_eq!(code(&["solve", "--type", "C", "--rank", "9"]), 2);
    assert_eq!(code(&["special", "--type", "B", "--rank", "3"]), 2);
    assert_eq!(code(&["oracle", "--family", "nope", "--n", "3"]), 2);
    assert_eq!(code(&["verify", "/nonexistent/file.json"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn integrity_errors() {
    let bad = scratch("garbage.json");
    std::fs::write(&bad, "{\"header\": 3}").unwrap();
    assert_eq!(code(&["verify", bad.to_str().unwrap()]), 3);
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(code(&["special", "--from", bad.to_str().unwrap()]), 3);
}

#[test]
fn tampered_solution_fails_verification() {
    let path = scratch("c3.json");
    assert_eq!(code(&["solve", "--type", "C", "--rank", "3", "--out", path.to_str().unwrap()]), 0);
    let mut v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    // double every coefficient of one entry
    let terms = v["entries"][1]["terms"].as_array_mut().unwrap();
    for t in terms.iter_mut() {
        for c in t[1].as_array_mut().unwrap().iter_mut() {
            let s = c[1].as_str().unwrap().to_string();
            c[1] = serde_json::Value::String(format!("{}", s.parse::<i64>().unwrap() * 2));
        }
    }
    std::fs::write(&path, serde_json::to_vec(&v).unwrap()).unwrap();
    let out = tlqkz(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn left_pairing_relations_fail() {
    assert_eq!(code(&["relations", "--type", "D", "--rank", "5", "--d-pairing", "left"]), 1);
    assert_eq!(code(&["relations", "--type", "D", "--rank", "5"]), 0);
}

#[test]
fn column_orientation_is_rejected_by_hotta() {
    assert_eq!(code(&["multidegree", "--type", "A", "--rank", "4", "--hotta-orientation", "col"]), 1);
    assert_eq!(code(&["multidegree", "--type", "A", "--rank", "4"]), 0);
}

#[test]
fn formats() {
    let csv = String::from_utf8(tlqkz(&["special", "--type", "C", "--rank", "3", "--format", "csv"]).stdout).unwrap();
    assert!(csv.starts_with("pattern,value\n"));
    assert!(csv.ends_with("sum,2\nmax,1\n"));
    let json: serde_json::Value =
        serde_json::from_slice(&tlqkz(&["report", "--type", "D", "--rank", "3", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["failed"], 0);
    let out = scratch("table.txt");
    assert_eq!(code(&["oracle", "--n", "4", "--out", out.to_str().unwrap()]), 0);
    assert!(std::fs::read_to_string(out).unwrap().lines().count() == 5);
}
