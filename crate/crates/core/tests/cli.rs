use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn mpm(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpm"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("mpm runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const P3: &str = "p mpm 3 2\nv 1 1\nv 3 1\ne 1 2\ne 2 3\n";

fn workspace() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p3.txt"), P3).unwrap();
    dir
}

#[test]
fn solve_prints_score_and_pairs() {
    let dir = workspace();
    let out = mpm(&["solve", "p3.txt"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "s 1 0 1\nm 1 2\n");
}

#[test]
fn two_priority_set_overrides_file_priorities() {
    let dir = workspace();
    fs::write(dir.path().join("s.txt"), "3\n").unwrap();
    let out = mpm(&["solve", "p3.txt", "--two-priority", "s.txt"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "s 1 1 0\nm 2 3\n");
}

#[test]
fn verify_accepts_solve_output_and_rejects_overlaps() {
    let dir = workspace();
    let solved = mpm(&["solve", "p3.txt"], dir.path());
    fs::write(dir.path().join("good.txt"), &solved.stdout).unwrap();
    assert_eq!(
        mpm(&["verify", "p3.txt", "good.txt"], dir.path())
            .status
            .code(),
        Some(0)
    );

    fs::write(dir.path().join("bad.txt"), "s 1 1 0\nm 1 2\nm 2 3\n").unwrap();
    let out = mpm(&["verify", "p3.txt", "bad.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex 2"));

    fs::write(dir.path().join("wrong_score.txt"), "s 2 0 0\nm 1 2\n").unwrap();
    assert_eq!(
        mpm(&["verify", "p3.txt", "wrong_score.txt"], dir.path())
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn input_errors_exit_with_one() {
    let dir = workspace();
    assert_eq!(
        mpm(&["solve", "missing.txt"], dir.path()).status.code(),
        Some(1)
    );
    fs::write(dir.path().join("loop.txt"), "p mpm 2 1\ne 1 1\n").unwrap();
    let out = mpm(&["solve", "loop.txt"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("loop.txt"));
    assert_eq!(
        mpm(&["gen", "--n", "3", "--m", "4"], dir.path())
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn oracle_reports_budget_overrun_with_three() {
    let dir = workspace();
    let out = mpm(&["oracle", "p3.txt"], dir.path());
    assert_eq!(stdout(&out), "s 1 0 1\n");
    let big = mpm(&["gen", "--n", "14", "--m", "30"], dir.path());
    fs::write(dir.path().join("big.txt"), &big.stdout).unwrap();
    assert_eq!(
        mpm(&["oracle", "big.txt"], dir.path()).status.code(),
        Some(3)
    );
    let widened = mpm(
        &[
            "oracle",
            "big.txt",
            "--max-vertices",
            "14",
            "--max-edges",
            "30",
        ],
        dir.path(),
    );
    assert_eq!(widened.status.code(), Some(0));
}

#[test]
fn oracle_and_solve_agree_on_generated_graphs() {
    let dir = workspace();
    for seed in ["1", "2", "3", "4", "5"] {
        let g = mpm(
            &["gen", "--n", "10", "--m", "18", "--seed", seed],
            dir.path(),
        );
        fs::write(dir.path().join("g.txt"), &g.stdout).unwrap();
        let solved = stdout(&mpm(&["solve", "g.txt"], dir.path()));
        let oracle = stdout(&mpm(&["oracle", "g.txt"], dir.path()));
        assert_eq!(solved.lines().next(), oracle.lines().next(), "seed {seed}");
    }
}

#[test]
fn trace_writes_events_and_snapshots() {
    let dir = workspace();
    let out = mpm(&["trace", "p3.txt", "--dot-dir", "frames"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("dequeue i=1 u=1 v=2 case=odd-path\n"));
    assert!(text.contains("path i=1 vertices=1,2"));
    assert!(text.ends_with("s 1 0 1\nm 1 2\n"));
    let events = text
        .lines()
        .filter(|l| !l.starts_with("s ") && !l.starts_with("m "))
        .count();
    let frames = fs::read_dir(dir.path().join("frames")).unwrap().count();
    assert_eq!(frames, events);
    let first = fs::read_to_string(dir.path().join("frames/step-00001.dot")).unwrap();
    assert!(first.starts_with("graph"));
}

#[test]
fn solve_trace_and_dot_flags() {
    let dir = workspace();
    let out = mpm(
        &["solve", "p3.txt", "--trace", "--dot", "m.dot"],
        dir.path(),
    );
    assert_eq!(stdout(&out), "s 1 0 1\nm 1 2\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("exhausted i=1"));
    let dot = fs::read_to_string(dir.path().join("m.dot")).unwrap();
    assert!(dot.contains("penwidth=3"));
}

#[test]
fn bench_emits_one_record_per_size() {
    let dir = workspace();
    let out = mpm(&["bench", "--sizes", "20,40", "--repeats", "1"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with('#'));
    assert!(lines[1].starts_with("20 100 "));
    assert!(lines[2].starts_with("40 200 "));
}
