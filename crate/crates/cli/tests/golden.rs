use std::path::Path;
use std::process::Command;

struct Case {
    args: Vec<String>,
    stdout: Option<Vec<String>>,
    stderr: Option<String>,
    status: i32,
}

fn load() -> Vec<Case> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/cases.txt");
    let text = std::fs::read_to_string(&path).expect("golden file");
    let mut cases = Vec::new();
    let mut cur: Option<Case> = None;
    for line in text.lines() {
        if line.starts_with('#') || line.is_empty() {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ ") {
            cur = Some(Case {
                args: cmd.split_whitespace().map(String::from).collect(),
                stdout: Some(Vec::new()),
                stderr: None,
                status: 0,
            });
            continue;
        }
        let case = cur.as_mut().expect("line before `$`");
        if let Some(code) = line.strip_prefix("? ") {
            case.status = code.parse().expect("status");
            cases.push(cur.take().unwrap());
        } else if let Some(err) = line.strip_prefix("! ") {
            case.stderr = Some(err.to_string());
        } else if line == "..." {
            case.stdout = None;
        } else if let Some(out) = case.stdout.as_mut() {
            out.push(line.to_string());
        }
    }
    cases
}

fn run(args: &[String]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_wildlie"))
        .args(args)
        .output()
        .expect("run wildlie")
}

#[test]
fn golden_transcript() {
    let cases = load();
    assert!(cases.len() > 40);
    for case in &cases {
        let out = run(&case.args);
        let argv = case.args.join(" ");
        assert_eq!(out.status.code(), Some(case.status), "exit status of `{argv}`");
        let stdout = String::from_utf8_lossy(&out.stdout);
        if let Some(expected) = &case.stdout {
            let got: Vec<&str> = stdout.lines().collect();
            assert_eq!(got, *expected, "stdout of `{argv}`");
        }
        let stderr = String::from_utf8_lossy(&out.stderr);
        match &case.stderr {
            Some(first) => assert_eq!(stderr.lines().next(), Some(first.as_str()), "stderr of `{argv}`"),
            None => assert!(stderr.is_empty(), "unexpected stderr for `{argv}`: {stderr}"),
        }
    }
}

#[test]
fn check_output_is_deterministic() {
    let args: Vec<String> = ["check", "all", "--seed", "11", "--count", "8"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_lines_parse() {
    let args: Vec<String> = ["--json", "check", "all", "--count", "2"].iter().map(|s| s.to_string()).collect();
    let out = run(&args);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect();
    assert_eq!(lines.len(), 5);
    for v in &lines {
        assert_eq!(v["command"], "check");
        assert_eq!(v["result"]["ok"], true);
        assert!(v["canonical"].as_str().unwrap().starts_with("ok "));
    }
}
