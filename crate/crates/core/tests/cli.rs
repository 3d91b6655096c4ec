use std::path::Path;
use std::process::{Command, Output};

use cac_workbench::format;
use cac_workbench::format::AnyInstance;
use cac_workbench::model::{check_semi_hereditary, Solution};

fn workbench(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_workbench"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

#[test]
fn gen_perfect_binary_has_31_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let o = workbench(dir.path(), &["gen", "perfect-binary", "--depth", "4"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("TREE v1\n"));
    assert_eq!(text.lines().count() - 1, 31);
}

#[test]
fn gen_rt1k_has_5_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let o = workbench(dir.path(), &["gen", "rt1k", "--k", "2", "--f", "0,0,1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("CETREE v1"));
    assert_eq!(text.lines().count() - 1, 5);
}

#[test]
fn gen_one_bad_writes_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let o = workbench(
        dir.path(),
        &["gen", "one-bad", "--rounds", "3", "--depth", "10", "--out", "ob.set"],
    );
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("ob.set.cert.json").exists());
    match format::load(&dir.path().join("ob.set")).unwrap() {
        AnyInstance::Set(s) => assert!(s.try_certificate().is_some()),
        other => panic!("expected a set, got {}", other.kind()),
    }
}

#[test]
fn round_trip_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let families: &[&[&str]] = &[
        &["perfect-binary", "--depth", "3"],
        &["comb", "--depth", "5"],
        &["rt1k", "--k", "3", "--f", "0,1,2,1"],
        &["one-bad", "--rounds", "2", "--depth", "2"],
        &["random-tree", "--horizon", "10"],
        &["random-coloring", "--horizon", "8"],
        &["random-order", "--horizon", "8"],
        &["random-unary", "--horizon", "8"],
        &["random-approx", "--horizon", "32"],
    ];
    for (i, args) in families.iter().enumerate() {
        let file = format!("inst{i}");
        let mut full = vec!["gen"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", &file]);
        assert_eq!(code(&workbench(dir.path(), &full)), 0, "{args:?}");
        let path = dir.path().join(&file);
        let bytes = std::fs::read_to_string(&path).unwrap();
        let inst = format::load(&path).unwrap();
        assert_eq!(format::render(&inst), bytes, "{args:?}");
    }
}

#[test]
fn reduce_sher_instance_is_semi_hereditary() {
    let dir = tempfile::tempdir().unwrap();
    workbench(
        dir.path(),
        &["gen", "rt1k", "--k", "2", "--f", "0,0,1", "--out", "t.cetree"],
    );
    let o = workbench(
        dir.path(),
        &["reduce", "sher-instance", "t.cetree", "--out", "c.coloring"],
    );
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["soundness"], "pass");
    match format::load(&dir.path().join("c.coloring")).unwrap() {
        AnyInstance::Coloring(f) => assert!(check_semi_hereditary(&f, 1).is_none()),
        other => panic!("expected a coloring, got {}", other.kind()),
    }
}

#[test]
fn reduce_root_only_tree() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("e.cetree"), "CETREE v1 horizon=0\n0 -\n").unwrap();
    let o = workbench(dir.path(), &["reduce", "tcac-ce-to-tcac", "e.cetree"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "TREE v1\n-\n");
}

#[test]
fn reduce_type_mismatch_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    workbench(
        dir.path(),
        &["gen", "perfect-binary", "--depth", "2", "--out", "t.tree"],
    );
    let o = workbench(dir.path(), &["reduce", "sher-instance", "t.tree"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn solve_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    workbench(
        dir.path(),
        &["gen", "perfect-binary", "--depth", "4", "--out", "p.tree"],
    );
    let o = workbench(dir.path(), &["solve", "brute-antichain", "p.tree", "--out", "a.json"]);
    assert_eq!(code(&o), 0);
    let sol = format::load_solution(&dir.path().join("a.json")).unwrap();
    match sol {
        Solution::Antichain { nodes } => assert_eq!(nodes.len(), 16),
        other => panic!("expected an antichain, got {}", other.kind()),
    }
    assert_eq!(code(&workbench(dir.path(), &["verify", "p.tree", "a.json"])), 0);

    std::fs::write(
        dir.path().join("chain.json"),
        r#"{"kind":"antichain","nodes":[[0],[0,0]]}"#,
    )
    .unwrap();
    let o = workbench(dir.path(), &["verify", "p.tree", "chain.json"]);
    assert_eq!(code(&o), 1);
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["valid"], false);
}

#[test]
fn prob_sac_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    let o = workbench(dir.path(), &["solve", "prob-sac", "--rounds", "0"]);
    assert_eq!(code(&o), 0);

    workbench(
        dir.path(),
        &["gen", "one-bad", "--rounds", "6", "--depth", "2", "--out", "ob.set"],
    );
    let o = workbench(
        dir.path(),
        &[
            "solve", "prob-sac", "ob.set", "--seed", "7", "--rounds", "6", "--trace", "t.jsonl", "--out", "s.json",
        ],
    );
    let trace = std::fs::read_to_string(dir.path().join("t.jsonl")).unwrap();
    assert!(!trace.is_empty());
    let report: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    if code(&o) == 0 {
        assert_eq!(code(&workbench(dir.path(), &["verify", "ob.set", "s.json"])), 0);
    } else {
        assert!(report.to_string().contains("SEARCH_TIMEOUT") || report.to_string().contains("BAD_CHOICE_COLLAPSE"));
    }
}

#[test]
fn bench_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["bench", "one-bad", "--trials", "200", "--seed", "5"];
    let a = workbench(dir.path(), &args);
    let b = workbench(dir.path(), &args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("trial,seed,outcome,fail_round,antichain_size\n"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 201);
}

#[test]
fn bench_summary_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let o = workbench(
        dir.path(),
        &["bench", "one-bad", "--trials", "100", "--schedule", "n=3"],
    );
    assert!(stdout(&o).contains("bound=0.125"));
    let o = workbench(dir.path(), &["bench", "perfect-binary", "--trials", "100"]);
    assert!(stdout(&o).contains("failures=0 "));
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&workbench(dir.path(), &["bench", "one-bad", "--trials", "10"])), 2);
    assert_eq!(code(&workbench(dir.path(), &["solve", "nope"])), 2);
    assert_eq!(code(&workbench(dir.path(), &["gen", "no-such-family"])), 2);
    std::fs::write(dir.path().join("bad.tree"), "TREE v9\n").unwrap();
    assert_eq!(code(&workbench(dir.path(), &["verify", "bad.tree", "bad.tree"])), 2);
}
