//! End-to-end tests of the compiled binary: every documented flag,
//! output format, and exit code, driven through real files and pipes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn flowshop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flowshop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("utf-8 stderr")
}

fn write_file(dir: &TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, content).expect("write instance file");
    path
}

fn path_arg(path: &Path) -> &str {
    path.to_str().expect("utf-8 path")
}

const TRIO: &str = "3\n1 4\n2 3\n3 5\n";
const TRIO_FRONT: &str = "retained,tardy,due_date\n3,0,13\n2,1,8\n1,2,5\n0,3,0\n";

#[test]
fn solve_emits_the_csv_front() {
    let dir = TempDir::new().unwrap();
    let input = write_file(&dir, "trio.txt", TRIO);
    let out = flowshop(&["solve", "--input", path_arg(&input)]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), TRIO_FRONT);
}

#[test]
fn both_solvers_emit_identical_bytes() {
    let dir = TempDir::new().unwrap();
    let input = write_file(&dir, "trio.txt", TRIO);
    let fast = flowshop(&["solve", "--input", path_arg(&input), "--solver", "fast"]);
    let quad = flowshop(&["solve", "--input", path_arg(&input), "--solver", "quadratic"]);
    assert_eq!(fast.status.code(), Some(0));
    assert_eq!(quad.status.code(), Some(0));
    assert_eq!(fast.stdout, quad.stdout);
    assert_eq!(stdout(&fast), TRIO_FRONT);

    // and on something big enough to exercise the tree paths
    let gen = flowshop(&["gen", "--n", "300", "--max-b", "40", "--seed", "11"]);
    let big = write_file(&dir, "big.txt", stdout(&gen));
    let fast = flowshop(&["solve", "--input", path_arg(&big)]);
    let quad = flowshop(&["solve", "--input", path_arg(&big), "--solver", "quadratic"]);
    assert_eq!(fast.status.code(), Some(0));
    assert_eq!(fast.stdout, quad.stdout);
}

#[test]
fn malformed_lines_exit_3_with_the_line_number() {
    let dir = TempDir::new().unwrap();
    let input = write_file(&dir, "bad.txt", "2\n1 2\n2 x\n");
    let out = flowshop(&["solve", "--input", path_arg(&input)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("line 3"), "stderr: {}", stderr(&out));
}

#[test]
fn invalid_instances_exit_2_naming_job_and_rule() {
    let dir = TempDir::new().unwrap();
    let input = write_file(&dir, "inverted.txt", "1\n3 2\n");
    let out = flowshop(&["solve", "--input", path_arg(&input)]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr(&out);
    assert!(msg.contains("job 1") && msg.contains("a <= b"), "stderr: {msg}");
}

#[test]
fn missing_files_exit_3() {
    let out = flowshop(&["solve", "--input", "/nonexistent/instance.txt"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_input_and_output_round_the_name_through() {
    let dir = TempDir::new().unwrap();
    let input = write_file(
        &dir,
        "trio.json",
        "{\"name\": \"trio\", \"jobs\": [[1, 4], [2, 3], [3, 5]]}\n",
    );
    let out = flowshop(&[
        "solve",
        "--input",
        path_arg(&input),
        "--format",
        "json",
        "--output",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let front: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
    assert_eq!(front["instance_name"], "trio");
    assert_eq!(front["n"], 3);
    assert_eq!(front["points"].as_array().unwrap().len(), 4);
    assert_eq!(front["points"][0]["due_date"], 13);
    assert_eq!(front["points"][3]["retained"], 0);
    assert_eq!(front["removal_order"].as_array().unwrap().len(), 3);
    assert!(front.get("trace").is_none());

    let broken = write_file(&dir, "broken.json", "{\"jobs\": [[1, 4], [2]]}\n");
    let out = flowshop(&["solve", "--input", path_arg(&broken), "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn trace_is_json_only() {
    let dir = TempDir::new().unwrap();
    let input = write_file(&dir, "trio.txt", TRIO);
    let refused = flowshop(&["solve", "--input", path_arg(&input), "--trace"]);
    assert_eq!(refused.status.code(), Some(2));

    let out = flowshop(&[
        "solve",
        "--input",
        path_arg(&input),
        "--output",
        "json",
        "--trace",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let front: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
    let trace = front["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 3);
    assert_eq!(trace[0]["iteration"], 1);
    assert_eq!(trace[0]["makespan_before"], 13);
}

#[test]
fn gen_is_deterministic_and_labeled() {
    let args = ["gen", "--n", "12", "--max-b", "9", "--seed", "42"];
    let one = flowshop(&args);
    let two = flowshop(&args);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    let body = stdout(&one);
    assert!(
        body.starts_with("# name: flowshop gen n=12 max-b=9 seed=42\n12\n"),
        "got {body:?}"
    );

    let other_seed = flowshop(&["gen", "--n", "12", "--max-b", "9", "--seed", "43"]);
    assert_ne!(one.stdout, other_seed.stdout);
}

#[test]
fn gen_max_b_one_yields_unit_jobs() {
    let out = flowshop(&["gen", "--n", "5", "--max-b", "1", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<&str> = stdout(&out).lines().collect();
    assert_eq!(&lines[2..], ["1 1"; 5]);
}

#[test]
fn gen_rejects_bad_parameters() {
    let out = flowshop(&["gen", "--n", "0", "--max-b", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = flowshop(&["gen", "--n", "4", "--max-b", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_output_solves_in_both_formats() {
    let dir = TempDir::new().unwrap();
    for seed in 0..25 {
        let seed = seed.to_string();
        let text = flowshop(&["gen", "--n", "30", "--max-b", "60", "--seed", &seed]);
        let text_path = write_file(&dir, "t.txt", stdout(&text));
        let solved = flowshop(&["solve", "--input", path_arg(&text_path)]);
        assert_eq!(solved.status.code(), Some(0), "seed {seed}");

        let json = flowshop(&[
            "gen", "--n", "30", "--max-b", "60", "--seed", &seed, "--format", "json",
        ]);
        let json_path = write_file(&dir, "t.json", stdout(&json));
        let solved_json = flowshop(&[
            "solve",
            "--input",
            path_arg(&json_path),
            "--format",
            "json",
        ]);
        assert_eq!(solved_json.status.code(), Some(0), "seed {seed}");
        // the same jobs, so the same front
        assert_eq!(solved.stdout, solved_json.stdout);
    }
}

#[test]
fn oracle_agrees_with_solve_on_small_instances() {
    let dir = TempDir::new().unwrap();
    let input = write_file(&dir, "trio.txt", TRIO);
    let oracle = flowshop(&["oracle", "--input", path_arg(&input)]);
    assert_eq!(oracle.status.code(), Some(0), "stderr: {}", stderr(&oracle));
    assert_eq!(stdout(&oracle), TRIO_FRONT);

    let single = write_file(&dir, "one.txt", "1\n4 9\n");
    let out = flowshop(&["oracle", "--input", path_arg(&single)]);
    assert_eq!(stdout(&out), "retained,tardy,due_date\n1,0,13\n0,1,0\n");
}

#[test]
fn oracle_guard_bounds_the_enumeration() {
    let dir = TempDir::new().unwrap();
    let body: String = format!("25\n{}", "2 3\n".repeat(25));
    let input = write_file(&dir, "big.txt", &body);
    let refused = flowshop(&["oracle", "--input", path_arg(&input)]);
    assert_eq!(refused.status.code(), Some(4));
    assert!(stderr(&refused).contains("25"), "stderr: {}", stderr(&refused));

    let fourteen = write_file(&dir, "mid.txt", &format!("14\n{}", "2 3\n".repeat(14)));
    let refused = flowshop(&["oracle", "--input", path_arg(&fourteen)]);
    assert_eq!(refused.status.code(), Some(4));
    let allowed = flowshop(&["oracle", "--input", path_arg(&fourteen), "--guard", "14"]);
    assert_eq!(allowed.status.code(), Some(0));
}

#[test]
fn bench_reports_medians_and_ratios() {
    let out = flowshop(&[
        "bench", "--sizes", "200,400", "--trials", "5", "--seed", "7", "--solver", "both",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let lines: Vec<&str> = stdout(&out).lines().collect();
    assert_eq!(lines[0], "size,solver,median_seconds,ratio_to_previous");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("200,fast,") && lines[1].ends_with(','));
    assert!(lines[2].starts_with("200,quadratic,") && lines[2].ends_with(','));
    assert!(lines[3].starts_with("400,fast,") && !lines[3].ends_with(','));
    assert!(lines[4].starts_with("400,quadratic,") && !lines[4].ends_with(','));
    assert!(!stderr(&out).is_empty());
}

#[test]
fn bench_rejects_bad_parameters() {
    let unsorted = flowshop(&["bench", "--sizes", "400,200", "--trials", "5"]);
    assert_eq!(unsorted.status.code(), Some(2));
    let few_trials = flowshop(&["bench", "--sizes", "100,200", "--trials", "3"]);
    assert_eq!(few_trials.status.code(), Some(2));
}
