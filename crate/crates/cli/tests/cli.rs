use std::path::PathBuf;
use std::process::{Command, Output};
use toughham_cli::RunRecord;
use toughham_core::generators::chvatal_family;
use toughham_core::graph::{named, write_graph};
use toughham_core::Graph;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_toughham"))
}

fn graph_file(name: &str, g: &Graph) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toughham-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{name}.graph"));
    std::fs::write(&path, write_graph(g)).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn five_cycle_is_hamiltonian() {
    let f = graph_file("c5", &named::cycle(5));
    let out = bin().arg("prove").arg(&f).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let record = RunRecord::from_json_line(stdout(&out).trim()).unwrap();
    assert_eq!(record.outcome, "hamiltonian");
    assert_eq!(record.toughness, "1/1");
    assert_eq!(record.omega_trajectory, vec![1]);
}

#[test]
fn six_cycle_is_rejected_with_its_2k2() {
    let f = graph_file("c6", &named::cycle(6));
    let out = bin().arg("prove").arg(&f).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("{0, 1, 3, 4}"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
}

#[test]
fn chvatal_graph_has_no_two_factor_and_a_cut() {
    let g = chvatal_family(2).unwrap();
    let f = graph_file("chvatal2", &g);
    let trace = f.with_extension("jsonl");
    let out = bin()
        .arg("prove")
        .arg(&f)
        .arg("--trace")
        .arg(&trace)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
    let record = RunRecord::from_json_line(stdout(&out).trim()).unwrap();
    assert_eq!(record.outcome, "no_two_factor");
    assert_eq!(record.toughness, "6/5");
    let cut = record.witness.expect("cut attached");
    assert!(!cut.is_empty() && cut.iter().all(|&v| v < g.n()));
    assert!(std::fs::read_to_string(trace).unwrap().lines().count() >= 1);
}

#[test]
fn trace_goes_to_stderr_by_default() {
    let f = graph_file("k5", &named::complete(5));
    let out = bin().arg("prove").arg(&f).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    for line in stderr(&out).lines() {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}

#[test]
fn invariants_reports() {
    let out = bin()
        .arg("invariants")
        .arg(graph_file("inv-c6", &named::cycle(6)))
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.contains("toughness: 1/1"), "{text}");
    assert!(text.contains("independence: 3"));
    assert!(text.contains("2k2-free: false"));

    let text = stdout(
        &bin()
            .arg("invariants")
            .arg(graph_file("inv-k4", &named::complete(4)))
            .output()
            .unwrap(),
    );
    assert!(text.contains("toughness: inf"));
    assert!(text.contains("independence: 1"));
    assert!(text.contains("2k2-free: true"));

    let text = stdout(
        &bin()
            .arg("invariants")
            .arg(graph_file("inv-e3", &named::empty(3)))
            .output()
            .unwrap(),
    );
    assert!(text.contains("toughness: 0/1"));
    assert!(text.contains("2-factor: no"));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = std::env::temp_dir().join(format!("toughham-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.graph");
    std::fs::write(&path, "4 2\n0 1\n1 x\n").unwrap();
    let out = bin().arg("invariants").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn empty_search_range() {
    let out = bin()
        .args([
            "search", "--n-min", "9", "--n-max", "8", "--count", "10", "--seed", "1", "--tough",
            "3/2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("generated 0 in_band 0"));
}

#[test]
fn small_search_logs_every_graph() {
    let dir = std::env::temp_dir().join(format!("toughham-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let log = dir.join("search.jsonl");
    let _ = std::fs::remove_file(&log);
    let out = bin()
        .args([
            "search", "--n-min", "7", "--n-max", "8", "--count", "5", "--seed", "4", "--tough",
            "2/1", "--log",
        ])
        .arg(&log)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("hits 0"), "{text}");
    let lines = std::fs::read_to_string(&log).unwrap();
    let generated: usize = text.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert_eq!(lines.lines().count(), generated);
    for line in lines.lines() {
        RunRecord::from_json_line(line).unwrap();
    }
}

#[test]
fn unknown_suite_fails() {
    let out = bin().args(["suite", "proofs"]).output().unwrap();
    assert_ne!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn generators_suite_passes() {
    let out = bin()
        .args(["suite", "generators", "--instances", "50"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("suite generators: pass"));
}

#[test]
fn size_limit_from_environment() {
    let f = graph_file("k9", &named::complete(9));
    let out = bin()
        .arg("invariants")
        .arg(&f)
        .env("TOUGHHAM_SIZE_LIMIT", "toughness=5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", stdout(&out));
}
