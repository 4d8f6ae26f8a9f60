use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("peterweyl-cli-{}-{}", name, std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_peterweyl")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--group", "S3", "--family", "s3", "--lambda", "2", "--mu", "3"]).0, 0);
    assert_eq!(run(&["verify", "--group", "S3", "--family", "s3", "--lambda", "0", "--mu", "1", "--require", "m"]).0, 1);
    assert_eq!(run(&["verify", "--group", "S3"]).0, 2);
    assert_eq!(run(&["verify", "--group", "S3", "--p-file", "/nonexistent.json"]).0, 2);
    assert_eq!(run(&["decompose", "--group", "S3", "--family", "s3", "--lambda", "1", "--mu", "0"]).0, 3);
    assert_eq!(run(&["groups", "list"]).0, 0);
    assert_eq!(run(&["uq", "center", "--n", "2", "--check", "product"]).0, 0);
}

#[test]
fn artifact_file_matches_stdout() {
    let dir = scratch("out");
    let path = dir.join("verify.json");
    let args = ["verify", "--group", "S3", "--family", "s3", "--lambda", "1", "--mu", "1"];
    let (code, quiet) = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(code, 0);
    assert!(quiet.is_empty());
    let (_, stdout) = run(&args);
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let printed: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(file["result"], printed["result"]);
    assert_eq!(file["exit_code"], 0);
    assert_eq!(file["command"], "verify");
    assert_eq!(file["tool"]["name"], "peterweyl");
}

#[test]
fn emitted_solutions_reverify() {
    let dir = scratch("emit");
    let (code, _) = run(&[
        "search", "--group", "Z2xZ2", "--count", "200", "--expect", "solutions-found", "--emit-dir", dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(!files.is_empty());
    for f in files {
        let (code, out) = run(&["verify", "--group", "Z2xZ2", "--p-file", f.to_str().unwrap(), "--require", "injective"]);
        assert_eq!(code, 0, "{}: {}", f.display(), out);
    }
    let (code, _) = run(&["verify", "--group", "S3", "--p-file", dir.join("solution_000.json").to_str().unwrap()]);
    assert_eq!(code, 2);
}
