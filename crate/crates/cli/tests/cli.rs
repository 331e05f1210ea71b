use std::process::{Command, Output};

const LOOP: &str = "vertices 1; arrows a: 1 -> 1;";
const A2: &str = "vertices 2; arrows a: 1 -> 2;";

fn necklace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_necklace")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bracket_examples() {
    let o = necklace(&["bracket", "--quiver", LOOP, "a", "a*"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "−1·e_1"), "{}", stdout(&o));
    for (p, q) in [("a", "a"), ("e_1", "a a*")] {
        let o = necklace(&["bracket", "--quiver", LOOP, p, q]);
        assert!(stdout(&o).lines().any(|l| l == "0"));
    }
}

#[test]
fn open_path_is_an_input_error() {
    let o = necklace(&["bracket", "--quiver", A2, "a a*", "a* a"]);
    assert_eq!(o.status.code(), Some(0));
    let o = necklace(&["bracket", "--quiver", A2, "a", "a a*"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains('1') && err.contains('2'), "{err}");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(necklace(&["bracket", "a", "a"]).status.code(), Some(2));
    assert_eq!(necklace(&["bracket", "--quiver", "vertices 1; arrows a: 1 -> 3;", "a", "a"]).status.code(), Some(2));
    assert_eq!(necklace(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(necklace(&["trace-compat", "--quiver", A2, "--alpha", "1"]).status.code(), Some(2));
}

#[test]
fn moment_check_is_lambda_independent() {
    let zero = necklace(&["moment-check", "--quiver", LOOP, "--lambda", "0", "--max-len", "6", "--format", "json"]);
    let one = necklace(&["moment-check", "--quiver", LOOP, "--lambda", "1", "--max-len", "6", "--format", "json"]);
    assert_eq!(zero.status.code(), Some(0));
    assert_eq!(stdout(&zero), stdout(&one));
    let r: serde_json::Value = serde_json::from_str(&stdout(&zero)).unwrap();
    assert_eq!(r["cases"], 38);
    assert_eq!(r["passes"], 38);
    let neg = necklace(&["moment-check", "--quiver", A2, "--lambda", "-1/2,3", "--max-len", "4"]);
    assert_eq!(neg.status.code(), Some(0));
    let trivial = necklace(&["moment-check", "--quiver", A2, "--max-len", "0", "--format", "json"]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&trivial)).unwrap();
    assert_eq!((r["cases"].as_u64(), r["passes"].as_u64()), (Some(2), Some(2)));
}

#[test]
fn trace_compat_reports() {
    let o = necklace(&["trace-compat", "--quiver", A2, "--alpha", "1,1", "--max-len", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["command"], "trace-compat");
    assert_eq!(r["failures"].as_array().unwrap().len(), 0);
    let empty = necklace(&["trace-compat", "--quiver", LOOP, "--alpha", "2", "--sample", "0", "--format", "json"]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&empty)).unwrap();
    assert_eq!((r["cases"].as_u64(), empty.status.code()), (Some(0), Some(0)));
}

#[test]
fn jacobi_test_runs() {
    let o = necklace(&["jacobi-test", "--quiver", LOOP, "--trials", "100", "--max-len", "5", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cases: 100  passes: 100  failures: 0"));
    assert!(stdout(&o).contains("seed: 9"));
    let none = necklace(&["jacobi-test", "--quiver", LOOP, "--trials", "0"]);
    assert!(stdout(&none).contains("cases: 0"));
}

#[test]
fn rep_info_layout() {
    let o = necklace(&["rep-info", "--quiver", A2, "--alpha", "1,2"]);
    let out = stdout(&o);
    assert!(out.contains("n = 3"));
    assert!(out.contains("Δ^1 = diag(1,0,0)"));
}

#[test]
fn reports_are_reproducible_and_round_trip() {
    let args = ["trace-compat", "--quiver", LOOP, "--alpha", "2", "--max-len", "4", "--sample", "20", "--seed", "5", "--format", "json"];
    let a = necklace(&args);
    let b = necklace(&args);
    assert_eq!(a.stdout, b.stdout);
    let report = necklace_core::verify::Report::from_json(&stdout(&a)).unwrap();
    assert_eq!(report.cases, 20);
    assert_eq!(report.seed, 5);
    assert_eq!(report.to_json().trim(), stdout(&a).trim());
}

#[test]
fn quiver_from_file() {
    let dir = std::env::temp_dir().join(format!("necklace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("loop.quiver");
    std::fs::write(&path, "# one loop\nvertices 1;\narrows a: 1 -> 1;\n").unwrap();
    let o = necklace(&["bracket", "--quiver", path.to_str().unwrap(), "a*", "a"]);
    assert!(stdout(&o).lines().any(|l| l == "1·e_1"), "{}", stdout(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}
