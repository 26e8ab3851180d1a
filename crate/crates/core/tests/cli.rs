//! End-to-end runs of the `brkga` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_brkga");

const TSP: &str = "# five cities on a grid\n5\nCOORDS\n0 0\n10 0\n10 10\n0 10\n5 5\n";
const KNAPSACK2: &str = "6 10\n2 3 9\n3 4 1\n4 5 5\n5 8 2\n1 1 6\n6 7 7\n";

fn brkga(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn setup(dir: &Path, kind: &str, instance: &str, extra: &str) -> PathBuf {
    fs::write(dir.join("inst.txt"), instance).unwrap();
    let cfg = dir.join("run.ini");
    fs::write(
        &cfg,
        format!(
            "[problem]\nkind = {kind}\ninstance = inst.txt\n\n[brkga]\np = 20\np_e = 4\np_m = 3\nseed = 5\n\n[stop]\nmax_generations = 15\n{extra}"
        ),
    )
    .unwrap();
    cfg
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_writes_trace_and_best() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = setup(tmp.path(), "tsp", TSP, "");
    let out = tmp.path().join("out");
    let res = brkga(&["solve", s(&cfg), "--out-dir", s(&out), "--quiet"]);
    assert_eq!(res.status.code(), Some(0), "{}", String::from_utf8_lossy(&res.stderr));
    assert!(res.stderr.is_empty());
    let trace = fs::read_to_string(out.join("trace.csv")).unwrap();
    let lines: Vec<&str> = trace.lines().collect();
    assert_eq!(lines[0], "generation,best,mean,diversity,event");
    assert_eq!(lines.len(), 17);
    let best = fs::read_to_string(out.join("best.txt")).unwrap();
    let mut tour: Vec<usize> = best
        .lines()
        .nth(1)
        .unwrap()
        .split(' ')
        .map(|x| x.parse().unwrap())
        .collect();
    tour.sort_unstable();
    assert_eq!(tour, vec![0, 1, 2, 3, 4]);
}

#[test]
fn zero_generations_gives_header_and_one_record() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = setup(tmp.path(), "smtt", "3\n2 1\n3 4\n1 9\n", "");
    let text = fs::read_to_string(&cfg)
        .unwrap()
        .replace("max_generations = 15", "max_generations = 0");
    fs::write(&cfg, text).unwrap();
    let out = tmp.path().join("out");
    let res = brkga(&["solve", s(&cfg), "--out-dir", s(&out), "--quiet"]);
    assert_eq!(res.status.code(), Some(0));
    let trace = fs::read_to_string(out.join("trace.csv")).unwrap();
    assert_eq!(trace.lines().count(), 2);
    assert!(trace.lines().nth(1).unwrap().starts_with("0,"));
}

#[test]
fn same_seed_gives_identical_bytes_and_seed_flag_overrides() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = setup(
        tmp.path(),
        "tsp",
        TSP,
        "[brkga]\nislands = 2\nmigration_interval = 3\n[triggers]\nstall_shake = 2\nstall_reset = 5\nipr_interval = 4\n[control]\nmode = qlearning\n",
    );
    let run = |dir: &str, seed: &str| {
        let out = tmp.path().join(dir);
        let res = brkga(&["solve", s(&cfg), "--out-dir", s(&out), "--quiet", "--seed", seed]);
        assert_eq!(res.status.code(), Some(0), "{}", String::from_utf8_lossy(&res.stderr));
        fs::read(out.join("trace.csv")).unwrap()
    };
    let a = run("a", "9");
    let b = run("b", "9");
    let c = run("c", "10");
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn pareto_writes_archive() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = setup(tmp.path(), "knapsack", KNAPSACK2, "[pareto]\npi_islands = 2\npool_mix_interval = 5\n");
    let out = tmp.path().join("out");
    let res = brkga(&["pareto", s(&cfg), "--out-dir", s(&out), "--quiet"]);
    assert_eq!(res.status.code(), Some(0), "{}", String::from_utf8_lossy(&res.stderr));
    let tsv = fs::read_to_string(out.join("pareto.tsv")).unwrap();
    assert!(!tsv.is_empty());
    for line in tsv.lines() {
        assert_eq!(line.split('\t').count(), 2);
    }
}

#[test]
fn pareto_on_tsp_is_a_config_error() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = setup(tmp.path(), "tsp", TSP, "");
    let res = brkga(&["pareto", s(&cfg), "--out-dir", s(&tmp.path().join("o"))]);
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn sweep_writes_one_row_per_cell() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = setup(tmp.path(), "tsp", TSP, "");
    let grid = tmp.path().join("grid.txt");
    fs::write(&grid, "rho = 0.6, 0.8\np_m = 2, 3, 4\n").unwrap();
    let out = tmp.path().join("out");
    let res = brkga(&["sweep", s(&cfg), "--grid", s(&grid), "--out-dir", s(&out), "--quiet"]);
    assert_eq!(res.status.code(), Some(0), "{}", String::from_utf8_lossy(&res.stderr));
    let csv = fs::read_to_string(out.join("sweep.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "rho,p_m,best,generations");
    assert_eq!(lines.len(), 7);
    assert!(lines[1].starts_with("0.6,2,"));
    assert!(lines[6].starts_with("0.8,4,"));
}

#[test]
fn usage_and_config_errors_exit_1() {
    assert_eq!(brkga(&[]).status.code(), Some(1));
    assert_eq!(brkga(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(brkga(&["solve"]).status.code(), Some(1));

    let tmp = tempfile::tempdir().unwrap();
    let cfg = setup(tmp.path(), "tsp", TSP, "[brkga]\npopulation = 3\n");
    let res = brkga(&["solve", s(&cfg)]);
    assert_eq!(res.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&res.stderr).contains("population"));

    let cfg = setup(tmp.path(), "tsp", TSP, "[brkga]\np_e = 12\n");
    assert_eq!(brkga(&["solve", s(&cfg), "--quiet"]).status.code(), Some(1));

    let cfg = tmp.path().join("nostop.ini");
    fs::write(&cfg, "[problem]\nkind = tsp\ninstance = inst.txt\n").unwrap();
    assert_eq!(brkga(&["solve", s(&cfg)]).status.code(), Some(1));

    let cfg = setup(tmp.path(), "tsp", "3\nMATRIX\n0 1 2\n1 0 3\n", "");
    let res = brkga(&["solve", s(&cfg), "--quiet"]);
    assert_eq!(res.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&res.stderr).contains(":5:"));

    let res = Command::new(BIN)
        .args(["solve", s(&cfg)])
        .env("BRKGA_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn io_errors_exit_2() {
    let tmp = tempfile::tempdir().unwrap();
    let missing = tmp.path().join("absent.ini");
    assert_eq!(brkga(&["solve", s(&missing)]).status.code(), Some(2));

    let cfg = tmp.path().join("noinst.ini");
    fs::write(
        &cfg,
        "[problem]\nkind = tsp\ninstance = nowhere.txt\n[stop]\nmax_generations = 1\n",
    )
    .unwrap();
    assert_eq!(brkga(&["solve", s(&cfg)]).status.code(), Some(2));

    let cfg = setup(tmp.path(), "tsp", TSP, "");
    let blocker = tmp.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let res = brkga(&["solve", s(&cfg), "--out-dir", s(&blocker.join("sub")), "--quiet"]);
    assert_eq!(res.status.code(), Some(2));

    let grid = tmp.path().join("nogrid.txt");
    let res = brkga(&["sweep", s(&cfg), "--grid", s(&grid), "--quiet"]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn thread_budget_does_not_change_results() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = setup(tmp.path(), "tsp", TSP, "[brkga]\nislands = 3\n");
    let run = |dir: &str, threads: &str| {
        let out = tmp.path().join(dir);
        let res = Command::new(BIN)
            .args(["solve", s(&cfg), "--out-dir", s(&out), "--quiet"])
            .env("BRKGA_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(res.status.code(), Some(0));
        fs::read(out.join("trace.csv")).unwrap()
    };
    assert_eq!(run("one", "1"), run("four", "4"));
}
