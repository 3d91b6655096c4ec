//! Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cac_workbench::adversary::{movable_marker_tree, verify_requirements, Verdict};
use cac_workbench::format::AnyInstance;
use cac_workbench::gen;
use cac_workbench::harness::{cmd_bench, cmd_reduce, BenchConfig, ReduceOpts};
use cac_workbench::model::{check_semi_hereditary, PairColoring, Schedule, StagedTree, Str};
use cac_workbench::reductions::{
    path_to_antichain_binary, reduce_tac_to_tcac_ce, rt1k_instance, sher_instance, tcac_to_sher_tree, Soundness,
};
use cac_workbench::solvers::{bad_elements, brute_force_max_antichain, hyperimmunity_witnesses};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn bench(depth: usize, schedule: Schedule, seed: u64) -> Result<(usize, f64), String> {
    let cfg = BenchConfig {
        family: "one-bad".into(),
        depth: Some(depth),
        rounds: 6,
        schedule,
        trials: 2000,
        seed,
        advised: false,
    };
    let (_, s) = cmd_bench(&cfg, None).map_err(|e| e.to_string())?;
    Ok((s.failures, s.rate))
}

fn failure_rate_default() -> Check {
    let (k, rate) = bench(2, Schedule::Default, 1)?;
    let msg = format!("{k}/2000 failures, rate {rate:.4} (limit 0.534)");
    if rate <= 0.534 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn failure_rate_shifted() -> Check {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in 1..=3u32 {
        let (_, rate) = bench(2, Schedule::Shifted { n }, 1)?;
        let p = 0.5f64.powi(n as i32);
        let limit = p + 3.0 * (p / 2000.0).sqrt();
        ok &= rate <= limit;
        parts.push(format!("n={n} rate {rate:.4} (limit {limit:.4})"));
    }
    let msg = parts.join(", ");
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn source_for(name: &str, rng: &mut ChaCha8Rng) -> AnyInstance {
    match name {
        "path-to-antichain" => AnyInstance::Tree(gen::random_binary_staged_tree(rng, 6, 21).snapshot()),
        "rt1k-tree" => {
            let k = rng.gen_range(2..=4);
            AnyInstance::Unary(gen::random_unary(rng, k, 16))
        }
        "sac-to-tac" => AnyInstance::Set(gen::random_branching_set(rng)),
        "weak-homog-refine" | "sigma-tree" => AnyInstance::Coloring(gen::random_semi_hereditary(rng, 24, 1)),
        "semi-ancestry" => AnyInstance::Coloring(gen::random_coloring(rng, 2, 24)),
        "delta2-coloring" => AnyInstance::Approx(gen::random_approx(rng, 1, 24)),
        "order-to-coloring" => AnyInstance::Order(gen::random_order(rng, 24)),
        _ => AnyInstance::Staged(gen::random_staged_tree(rng, 8, 3, 24, 12)),
    }
}

const REDUCTIONS: [&str; 13] = [
    "path-to-antichain",
    "tac-to-tcac-ce",
    "rt1k-tree",
    "tcac-ce-to-tcac",
    "sac-to-tac",
    "ads-instance",
    "em-instance",
    "sher-instance",
    "weak-homog-refine",
    "sigma-tree",
    "delta2-coloring",
    "semi-ancestry",
    "order-to-coloring",
];

fn reduction_soundness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    for name in REDUCTIONS {
        for i in 0..500 {
            let source = source_for(name, &mut rng);
            let opts = ReduceOpts {
                seed: i,
                ..ReduceOpts::default()
            };
            let r = cmd_reduce(name, &source, None, opts).map_err(|e| format!("{name} #{i}: {e}"))?;
            if r.report.soundness != Soundness::Pass {
                return Err(format!("{name} #{i}: {:?}", r.report.counterexample));
            }
            checked += r.report.checked;
        }
    }
    Ok(format!(
        "13 reductions x 500 instances, {checked} target solutions mapped back"
    ))
}

fn sher_semi_hereditary() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..500 {
        let t = gen::random_staged_tree(&mut rng, 8, 3, 24, 12);
        let (f, _) = sher_instance(&t);
        if let Some(v) = check_semi_hereditary(&f, 1) {
            return Err(format!("tree {i}: triple {v:?}"));
        }
    }
    Ok("500 trees, all colorings semi-hereditary for color 1".into())
}

fn sigma_violation(f: &PairColoring, i: u8) -> Option<String> {
    let st = tcac_to_sher_tree(f, i).ok()?;
    let again = tcac_to_sher_tree(f, i).ok()?;
    if st != again {
        return Some("not deterministic".into());
    }
    for (n, sigma) in st.sigmas.iter().enumerate() {
        let s = sigma.items();
        if s.last() != Some(&(n as u64)) || s.windows(2).any(|w| w[0] >= w[1]) {
            return Some(format!("sigma_{n} = {sigma} not increasing to {n}"));
        }
        if s.windows(2).any(|w| f.color(w[0], w[1]) != i) {
            return Some(format!("sigma_{n} not weakly homogeneous"));
        }
        if (0..s[0]).any(|y| f.color(y, s[0]) != 1 - i) {
            return Some(format!("sigma_{n} extendable below its first entry"));
        }
        for w in s.windows(2) {
            if (w[0] + 1..w[1]).any(|y| f.color(w[0], y) != 1 - i && f.color(y, w[1]) != 1 - i) {
                return Some(format!("sigma_{n} extendable between {} and {}", w[0], w[1]));
            }
        }
        if !st.tree.contains(sigma) || sigma.proper_prefixes().any(|p| !st.tree.contains(&p)) {
            return Some(format!("sigma_{n} or a prefix missing from the tree"));
        }
    }
    if let Some((j, n)) = st.check_containment(f) {
        return Some(format!("sigma_{n} misses {j}"));
    }
    None
}

fn sigma_tree_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..500 {
        let f = gen::random_semi_hereditary(&mut rng, 24, 1);
        if tcac_to_sher_tree(&f, 1).is_err() {
            return Err(format!("coloring {k}: construction failed"));
        }
        if let Some(v) = sigma_violation(&f, 1) {
            return Err(format!("coloring {k}: {v}"));
        }
    }
    Ok("500 colorings: deterministic, increasing, weakly homogeneous, maximal, containing, closed".into())
}

fn partition_invariants() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut steps = 0;
    for i in 0..200 {
        let t = gen::random_staged_tree(&mut rng, 8, 3, 24, 12);
        let out = reduce_tac_to_tcac_ce(&t).map_err(|e| format!("tree {i}: {e}"))?;
        for step in &out.trace {
            steps += 1;
            let nodes = t.stage_nodes(step.stage);
            let owner: Vec<(&Str, Vec<&Str>)> = nodes
                .iter()
                .map(|rho| {
                    (
                        rho,
                        step.regions
                            .iter()
                            .filter(|(_, r)| r.contains(rho))
                            .map(|(k, _)| k)
                            .collect(),
                    )
                })
                .collect();
            if let Some((rho, _)) = owner.iter().find(|(_, o)| o.len() > 1) {
                return Err(format!("tree {i} stage {}: {rho} in several regions", step.stage));
            }
            for (a, oa) in &owner {
                for (b, ob) in &owner {
                    if !oa.is_empty() && !ob.is_empty() && oa[0] != ob[0] && !a.incomparable(b) {
                        return Err(format!(
                            "tree {i} stage {}: {a} and {b} comparable across regions",
                            step.stage
                        ));
                    }
                }
            }
        }
        let keys: Vec<&Str> = out.tree.iter().collect();
        for u in &keys {
            for v in &keys {
                if u.incomparable(v) && !out.map[*u].incomparable(&out.map[*v]) {
                    return Err(format!("tree {i}: {u} and {v} map to comparable nodes"));
                }
            }
        }
    }
    Ok(format!("200 trees, {steps} partition steps checked"))
}

fn rt1k_width() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..100 {
        let k = rng.gen_range(2..=4u8);
        let horizon = rng.gen_range(1..=20);
        let f = gen::random_unary(&mut rng, k, horizon);
        let snap = rt1k_instance(&f).snapshot();
        let a = brute_force_max_antichain(&snap).map_err(|e| format!("coloring {i}: {e}"))?;
        if a.len() > k as usize {
            return Err(format!("coloring {i}: antichain of size {} > k = {k}", a.len()));
        }
    }
    Ok("100 colorings, every maximum antichain of size at most k".into())
}

fn at_most_one_bad() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut with_bad = 0;
    for i in 0..500 {
        let p = gen::random_sac_pair(&mut rng).map_err(|e| format!("pair {i}: {e}"))?;
        let bad = bad_elements(&p.set, &p.chosen, &p.antichain).map_err(|e| e.to_string())?;
        if bad.len() > 1 {
            return Err(format!("pair {i}: {} bad elements", bad.len()));
        }
        with_bad += bad.len();
    }
    Ok(format!("500 pairs, {with_bad} with one bad element, none with more"))
}

fn markers_resolve() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut counts = [0usize; 2];
    for i in 0..200 {
        let count = rng.gen_range(1..=4);
        let a = gen::random_approx(&mut rng, count, 64);
        let (tree, trace) = movable_marker_tree(&a, 64).map_err(|e| format!("table {i}: {e}"))?;
        let verdicts = verify_requirements(&trace, &tree, &a);
        if verdicts != trace.verdicts {
            return Err(format!("table {i}: recomputed verdicts differ"));
        }
        for v in &verdicts {
            match v {
                Verdict::R { .. } => counts[0] += 1,
                Verdict::S { bound, found, .. } if found <= bound => counts[1] += 1,
                Verdict::S { bound, found, .. } => {
                    return Err(format!("table {i}: antichain {found} exceeds bound {bound}"))
                }
                Verdict::Unresolved { reason } => return Err(format!("table {i}: unresolved ({reason})")),
            }
        }
    }
    Ok(format!(
        "200 tables, {} R and {} S verdicts, none unresolved, all within bound",
        counts[0], counts[1]
    ))
}

fn witnesses() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..200 {
        let t: StagedTree = gen::random_binary_staged_tree(&mut rng, 8, 31);
        let snap = t.snapshot();
        let seq: Vec<Str> = snap.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        let w = hyperimmunity_witnesses(&t, &seq).map_err(|e| format!("tree {i}: {e}"))?;
        for (j, s) in seq.iter().enumerate() {
            let first = (0..=t.horizon()).find(|&st| t.stage_nodes(st).contains(s));
            if first != Some(w.t[j]) || w.l[j] != s.len() {
                return Err(format!("tree {i}: witness mismatch at {s}"));
            }
        }
        let leaf = snap.leaves().into_iter().max_by_key(Str::len).expect("a leaf");
        let path: Vec<Str> = (0..=leaf.len()).map(|n| leaf.prefix(n)).collect();
        let a = path_to_antichain_binary(&snap, &path).map_err(|e| format!("tree {i}: {e}"))?;
        let w = hyperimmunity_witnesses(&t, &a).map_err(|e| format!("tree {i}: {e}"))?;
        if let Some(n) = (0..a.len()).find(|&n| w.l[n] > n + 1) {
            return Err(format!("tree {i}: l({n}) = {} > {}", w.l[n], n + 1));
        }
    }
    Ok("200 trees, stages and lengths recomputed, path antichains dominated".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("failure rate, default schedule", failure_rate_default),
        ("failure rate, shifted schedules", failure_rate_shifted),
        ("reduction soundness", reduction_soundness),
        ("semi-hereditary colorings from trees", sher_semi_hereditary),
        ("sigma-tree properties", sigma_tree_properties),
        ("partition invariants", partition_invariants),
        ("rt1k antichain width", rt1k_width),
        ("at most one bad element", at_most_one_bad),
        ("marker requirements resolve", markers_resolve),
        ("hyperimmunity witnesses", witnesses),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(d) => println!("[PASS] {} {name}: {d} ({secs:.1}s)", i + 1),
            Err(d) => {
                failed += 1;
                println!("[FAIL] {} {name}: {d} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{}/10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
