//! Driving the command-line front end in-process and re-verifying its output.

use peterweyl::cli::run;

fn main() {
    let dir = std::env::temp_dir().join("peterweyl-cli-example");
    let _ = std::fs::remove_dir_all(&dir);
    let emit = dir.to_string_lossy().to_string();
    let out = run(["peterweyl", "search", "--group", "Z2xZ2", "--count", "100", "--emit-dir", &emit, "--format", "text"]);
    print!("{}", out.stdout);
    let first = dir.join("solution_000.json").to_string_lossy().to_string();
    let out = run(["peterweyl", "verify", "--group", "Z2xZ2", "--p-file", &first, "--format", "text"]);
    print!("{}", out.stdout);
    println!("exit code {}", out.code);
}
