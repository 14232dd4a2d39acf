use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reeskit"))
}

fn script(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/scripts").join(name)
}

fn temp_script(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("reeskit-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn run_prints_the_failed_comparison() {
    let o = bin().arg("run").arg(script("dual_numbers.rk")).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("> rees M\n  ring: QQ[x] / (x^2)\n  variables: T\n  ideal: (x*T, T^2)\n"), "{out}");
    assert!(out.contains("result: no canonical map\n  witness: T^2\n"), "{out}");
}

#[test]
fn run_json_is_structured() {
    let o = bin().args(["run", "--json"]).arg(script("plane_blowup.rk")).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results[0]["command"], "charts R");
    assert_eq!(results[0]["output"]["charts"][0]["ideal"], "(x*u2 - y)");
    assert_eq!(results[2]["output"]["ideal"], "(y*T1 - x*T2)");
    assert!(v.get("error").is_none());
}

#[test]
fn every_example_script_runs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/scripts");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let o = bin().arg("run").arg(&path).output().unwrap();
        assert_eq!(o.status.code(), Some(0), "{}: {}", path.display(), String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn errors_exit_with_one_and_report_positions() {
    let path = temp_script("bad.rk", "ring A = QQ[x];\nrees M;\n");
    let o = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("2:6: undefined name 'M'"), "{err}");

    let o = bin().args(["run", "--json"]).arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["error"].as_str().unwrap().contains("undefined name"));

    let o = bin().args(["run", "/nonexistent/script.rk"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn engine_errors_are_reported() {
    let path = temp_script("flat.rk", "ring A = QQ[x];\nring B = QQ[x, y];\nmap f : A -> B { x -> x };\nmodule M = free A 1;\ninject M via f;\n");
    let o = bin().arg("run").arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("5:1"));
}

#[test]
fn verify_passes() {
    let o = bin().arg("verify").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all_passed: true"));
    let o = bin().args(["verify", "--json"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"][0]["output"]["all_passed"], true);
}

#[test]
fn repl_keeps_state_across_lines() {
    let mut child = bin().arg("repl").stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"ring A = QQ[x] / (x^2);\nmodule M = coker A\n  [[x]];\nrees M;\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ideal: (x*T, T^2)"));
}
