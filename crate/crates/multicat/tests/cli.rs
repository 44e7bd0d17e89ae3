//! End-to-end checks of the binary: exit codes, byte-stable output, and the
//! documented formats.

use multicat::report::CountReport;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multicat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn poly_prints_golden_lines() {
    let out = run(&["poly", "--alpha", "2", "--which", "r"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x1*y + x1*z\n");

    let out = run(&["poly", "--alpha", "1", "--which", "r"]);
    assert_eq!(stdout(&out), "2*y + z\n");

    let out = run(&["poly", "--alpha", "4", "--which", "r,r_expanded"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], lines[1]);
}

#[test]
fn poly_expanded_needs_two_components() {
    let out = run(&["poly", "--alpha", "1", "--which", "r_expanded"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("alpha >= 2"));
}

#[test]
fn bound_json_reports_twenty() {
    let out = run(&[
        "--format",
        "json",
        "bound",
        "--sizes",
        "3,3",
        "--methods",
        "recurrence,formula",
    ]);
    assert!(out.status.success());
    let report: CountReport = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report.sizes, vec![3, 3]);
    assert_eq!(report.bound_recurrence, Some(20u32.into()));
    assert_eq!(report.bound_formula, Some(20u32.into()));
    assert_eq!(report.bound_bruteforce, None);
}

#[test]
fn bound_all_methods() {
    let out = run(&["bound", "--sizes", "3,3,3", "--methods", "all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("106"), "{text}");
}

#[test]
fn bound_rejects_size_below_two() {
    let out = run(&["bound", "--sizes", "1,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("at least 2"), "{}", stderr(&out));
}

#[test]
fn bound_csv_has_header() {
    let out = run(&["--format", "csv", "bound", "--sizes", "3,3"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CountReport::CSV_HEADER));
    assert!(lines.next().unwrap().contains("\"3,3\""));
}

#[test]
fn witness_component_files_coincide_across_families() {
    let dir_table = tmp_dir("witness_table2");
    let dir_pair = tmp_dir("witness_two_letter");
    let out = run(&[
        "witness",
        "--family",
        "table2",
        "--sizes",
        "3,3",
        "--out",
        dir_table.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&[
        "witness",
        "--family",
        "two_letter",
        "--sizes",
        "3,3",
        "--out",
        dir_pair.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    for name in ["a1.txt", "a2.txt"] {
        let left = std::fs::read(dir_table.join(name)).unwrap();
        let right = std::fs::read(dir_pair.join(name)).unwrap();
        assert_eq!(left, right, "{name} differs between families");
    }
    let manifest = std::fs::read_to_string(dir_table.join("manifest.txt")).unwrap();
    assert!(manifest.starts_with("# family=table2 alpha=2 sizes=3,3\n"));
    assert!(manifest.contains("a1.txt"));

    // written automata parse back to the advertised shape
    let text = std::fs::read_to_string(dir_pair.join("a1.txt")).unwrap();
    let dfa = multicat::format::parse_dfa(&text).unwrap();
    assert_eq!(dfa.state_count(), 3);
    assert_eq!(dfa.alphabet_size(), 2);
}

#[test]
fn witness_rejects_bad_arity() {
    let out = run(&["witness", "--family", "three_letter", "--sizes", "2,2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["witness", "--family", "tableX", "--sizes", "2,2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_json_attains() {
    let out = run(&[
        "--format",
        "json",
        "verify",
        "--family",
        "two_letter",
        "--sizes",
        "3,3",
    ]);
    assert!(out.status.success());
    let report: CountReport = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report.family.as_deref(), Some("two_letter"));
    assert_eq!(report.measured_sc, Some(20u32.into()));
    assert_eq!(report.attained, Some(true));
}

#[test]
fn verify_rejects_over_budget() {
    let out = run(&["verify", "--family", "two_letter", "--sizes", "12,12"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("budget"));

    let out = run(&[
        "verify",
        "--family",
        "two_letter",
        "--sizes",
        "12,12",
        "--budget",
        "24",
    ]);
    assert!(out.status.success());
}

#[test]
fn verify_output_is_deterministic_modulo_wall_time() {
    let args = [
        "--format",
        "json",
        "verify",
        "--family",
        "three_letter",
        "--sizes",
        "3,3,3",
    ];
    let mut first: CountReport = serde_json::from_str(stdout(&run(&args)).trim()).unwrap();
    let mut second: CountReport = serde_json::from_str(stdout(&run(&args)).trim()).unwrap();
    first.wall_time_ms = 0;
    second.wall_time_ms = 0;
    assert_eq!(first, second);
}

#[test]
fn witness_files_are_byte_identical_across_runs() {
    let dir_a = tmp_dir("witness_repeat_a");
    let dir_b = tmp_dir("witness_repeat_b");
    for dir in [&dir_a, &dir_b] {
        let out = run(&[
            "witness",
            "--family",
            "table1",
            "--sizes",
            "3,4,3",
            "--out",
            dir.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    for name in ["a1.txt", "a2.txt", "a3.txt", "manifest.txt"] {
        assert_eq!(
            std::fs::read(dir_a.join(name)).unwrap(),
            std::fs::read(dir_b.join(name)).unwrap(),
            "{name} not byte-stable"
        );
    }

    // the extra-letter family uses alpha + 1 letters
    let text = std::fs::read_to_string(dir_a.join("a2.txt")).unwrap();
    let dfa = multicat::format::parse_dfa(&text).unwrap();
    assert_eq!(dfa.alphabet_size(), 4);
    assert_eq!(dfa.state_count(), 4);
}

#[test]
fn grid_reports_misses_and_strict_exit() {
    // sizes 2..3 at two components: the (2,3) profile misses the bound
    let base = [
        "grid",
        "--family",
        "table2",
        "--alpha",
        "2..2",
        "--sizes",
        "2..3",
    ];
    let out = run(&base);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("3 attained, 1 missed"), "{text}");
    assert!(text.contains("counterexample: sizes=2,3"), "{text}");

    let mut strict = base.to_vec();
    strict.push("--strict");
    let out = run(&strict);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn grid_json_reports_parse() {
    let out = run(&[
        "--format",
        "json",
        "grid",
        "--family",
        "table1",
        "--alpha",
        "2..2",
        "--sizes",
        "3..4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut reports = 0;
    let mut saw_summary = false;
    for line in text.lines() {
        if line.contains("\"summary\"") {
            saw_summary = true;
            continue;
        }
        let report: CountReport = serde_json::from_str(line).unwrap();
        assert_eq!(report.attained, Some(true));
        reports += 1;
    }
    assert_eq!(reports, 4);
    assert!(saw_summary);
}
