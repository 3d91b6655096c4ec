//! Command implementations behind the `workbench` binary: generation,
//! reduction dispatch, solving, verification and the Monte Carlo bench.

use std::fmt::Write as _;
use std::path::PathBuf;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::adversary::{movable_marker_tree, ConstructionTrace};
use crate::error::{Error, Result};
use crate::format::{self, AnyInstance};
use crate::gen;
use crate::model::{
    validate_solution, BranchingSet, Family, FiniteTreeSnapshot, Schedule, Solution, Str, UnaryColoring, Violation,
};
use crate::reductions::*;
use crate::solvers::{advised_sac_solve, longest_chain, probabilistic_sac_solve, tree_max_antichain, SolverOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Exit code for an error: usage problems 2, horizon or certificate limits 3,
/// everything else (failed checks) 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::UnknownFamily(_) | Error::BadParams(_) | Error::TypeMismatch(_) | Error::Io(_) => {
            EXIT_USAGE
        }
        Error::HorizonTooSmall(_)
        | Error::NoCertificate(_)
        | Error::BudgetExhausted(_)
        | Error::SizeLimit { .. }
        | Error::AmbiguousAtHorizon(_)
        | Error::InfiniteBranching { .. }
        | Error::NotEnumerated(_) => EXIT_LIMIT,
        _ => EXIT_VERIFY,
    }
}

/// Parameters shared by the generators; unset fields take family defaults.
#[derive(Clone, Debug, Default)]
pub struct GenParams {
    pub depth: Option<usize>,
    pub k: Option<u64>,
    pub f: Option<Vec<u8>>,
    pub rounds: Option<usize>,
    pub schedule: Option<Schedule>,
    pub table: Option<PathBuf>,
    pub stages: Option<usize>,
    pub horizon: Option<usize>,
    pub nodes: Option<usize>,
    pub count: Option<usize>,
    pub color: Option<u8>,
    pub seed: u64,
}

pub struct Generated {
    pub instance: AnyInstance,
    pub trace: Option<ConstructionTrace>,
}

/// Families accepted by `gen`.
pub const FAMILIES: &[&str] = &[
    "perfect-binary",
    "comb",
    "k-path",
    "rt1k",
    "one-bad",
    "marker",
    "random-tree",
    "random-binary-tree",
    "random-unary",
    "random-coloring",
    "semi-hereditary",
    "random-order",
    "random-approx",
];

/// Splits `name:param`, the inline form of the main parameter.
fn split_spec(spec: &str) -> (&str, Option<&str>) {
    match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    }
}

fn parse_param<T: std::str::FromStr>(p: &str, what: &str) -> Result<T> {
    p.parse().map_err(|_| Error::BadParams(format!("bad {what} {p:?}")))
}

fn family_tree(family: Family, depth: usize) -> Result<FiniteTreeSnapshot> {
    let members = family.dfa()?.members_up_to(depth);
    Ok(FiniteTreeSnapshot::closure_of(
        members.into_iter().chain([Str::empty()]),
    ))
}

pub fn cmd_gen(spec: &str, p: &GenParams) -> Result<Generated> {
    let (name, inline) = split_spec(spec);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let horizon = p.horizon.unwrap_or(24);
    let plain = |instance| Ok(Generated { instance, trace: None });
    match name {
        "perfect-binary" => plain(AnyInstance::Tree(FiniteTreeSnapshot::perfect_binary(
            p.depth.unwrap_or(4),
        ))),
        "comb" => plain(AnyInstance::Tree(family_tree(Family::Comb, p.depth.unwrap_or(6))?)),
        "k-path" => {
            let k = match inline {
                Some(x) => parse_param(x, "k")?,
                None => p.k.unwrap_or(2),
            };
            plain(AnyInstance::Tree(family_tree(
                Family::KPath { k },
                p.depth.unwrap_or(6),
            )?))
        }
        "rt1k" => {
            let k: u8 = match inline {
                Some(x) => parse_param(x, "k")?,
                None => p.k.unwrap_or(2) as u8,
            };
            let f = match &p.f {
                Some(f) => UnaryColoring::new(k, f.clone())?,
                None => gen::random_unary(&mut rng, k, horizon),
            };
            plain(AnyInstance::Staged(rt1k_instance(&f)))
        }
        "one-bad" => {
            let rounds = match inline {
                Some(x) => parse_param(x, "rounds")?,
                None => p.rounds.unwrap_or(3),
            };
            let schedule = p.schedule.unwrap_or(Schedule::Default);
            plain(AnyInstance::Set(BranchingSet::one_bad(
                p.depth.unwrap_or(4),
                rounds,
                schedule,
            )))
        }
        "marker" => {
            let path = inline
                .map(PathBuf::from)
                .or_else(|| p.table.clone())
                .ok_or_else(|| Error::BadParams("marker needs an APPROX table".into()))?;
            let AnyInstance::Approx(a) = format::load(&path)? else {
                return Err(Error::TypeMismatch("marker needs an APPROX table".into()));
            };
            let stages = p.stages.unwrap_or(a.horizon() as usize);
            let (tree, trace) = movable_marker_tree(&a, stages)?;
            Ok(Generated {
                instance: AnyInstance::Staged(tree),
                trace: Some(trace),
            })
        }
        "random-tree" => plain(AnyInstance::Staged(gen::random_staged_tree(
            &mut rng,
            p.depth.unwrap_or(8),
            p.k.unwrap_or(3) as usize,
            p.nodes.unwrap_or(24),
            horizon,
        ))),
        "random-binary-tree" => plain(AnyInstance::Staged(gen::random_binary_staged_tree(
            &mut rng,
            p.depth.unwrap_or(8),
            p.nodes.unwrap_or(25),
        ))),
        "random-unary" => plain(AnyInstance::Unary(gen::random_unary(
            &mut rng,
            p.k.unwrap_or(2) as u8,
            horizon,
        ))),
        "random-coloring" => plain(AnyInstance::Coloring(gen::random_coloring(
            &mut rng,
            p.k.unwrap_or(2) as u8,
            horizon as u64,
        ))),
        "semi-hereditary" => plain(AnyInstance::Coloring(gen::random_semi_hereditary(
            &mut rng,
            horizon as u64,
            p.color.unwrap_or(1),
        ))),
        "random-order" => plain(AnyInstance::Order(gen::random_order(&mut rng, horizon))),
        "random-approx" => plain(AnyInstance::Approx(gen::random_approx(
            &mut rng,
            p.count.unwrap_or(2),
            horizon.max(16) as u64,
        ))),
        other => Err(Error::UnknownFamily(format!(
            "{other:?}; known: {}",
            FAMILIES.join(", ")
        ))),
    }
}

/// Options for reductions that need more than the instance.
#[derive(Clone, Copy, Debug)]
pub struct ReduceOpts {
    pub color: u8,
    pub e: usize,
    pub seed: u64,
}

impl Default for ReduceOpts {
    fn default() -> Self {
        ReduceOpts {
            color: 1,
            e: 0,
            seed: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReduceOutcome {
    pub target: AnyInstance,
    pub report: ReductionReport,
    pub mapped: Option<Solution>,
}

fn apply<R: Reduction>(
    r: &R,
    source: &R::Source,
    wrap: impl Fn(R::Target) -> AnyInstance,
    solution: Option<&Solution>,
    seed: u64,
) -> Result<ReduceOutcome> {
    let (target, ctx) = r.forward(source)?;
    let (report, mapped) = match solution {
        Some(sol) => {
            let report = check_solutions(r, source, &target, &ctx, std::slice::from_ref(sol))?;
            let mapped = r.backward(source, &target, &ctx, sol).ok().map(|m| m.solution);
            (report, mapped)
        }
        None => (run_reduction(r, source, seed)?, None),
    };
    Ok(ReduceOutcome {
        target: wrap(target),
        report,
        mapped,
    })
}

fn mismatch(name: &str, want: &str, got: &AnyInstance) -> Error {
    Error::TypeMismatch(format!("{name} takes a {want} instance, got {}", got.kind()))
}

/// Applies the named reduction; with `solution`, maps that target solution
/// back and checks it, otherwise checks the oracle's target solutions.
pub fn cmd_reduce(
    name: &str,
    source: &AnyInstance,
    solution: Option<&Solution>,
    opts: ReduceOpts,
) -> Result<ReduceOutcome> {
    use AnyInstance as I;
    let seed = opts.seed;
    match (name, source) {
        ("path-to-antichain", I::Tree(t)) => apply(&PathReduction, t, I::Tree, solution, seed),
        ("tac-to-tcac-ce", I::Staged(t)) => apply(&SplitTripleReduction, t, I::Tree, solution, seed),
        ("rt1k-tree", I::Unary(f)) => apply(&Rt1kReduction, f, I::Staged, solution, seed),
        ("tcac-ce-to-tcac", I::Staged(t)) => apply(&TimestampReduction, t, I::Tree, solution, seed),
        ("sac-to-tac", I::Set(s)) => apply(&SacTacReduction, s, I::Tree, solution, seed),
        ("ads-instance", I::Staged(t)) => apply(&AdsReduction, t, I::Order, solution, seed),
        ("em-instance", I::Staged(t)) => apply(&EmReduction, t, I::Coloring, solution, seed),
        ("sher-instance", I::Staged(t)) => apply(&SherReduction, t, I::Coloring, solution, seed),
        ("weak-homog-refine", I::Coloring(f)) => {
            let inst = WeakHomogInstance::new(f.clone(), opts.color)?;
            apply(&WeakHomogReduction, &inst, |t| I::Coloring(t.coloring), solution, seed)
        }
        ("sigma-tree", I::Coloring(f)) => {
            let inst = WeakHomogInstance::new(f.clone(), opts.color)?;
            apply(&SigmaTreeReduction, &inst, I::Tree, solution, seed)
        }
        ("delta2-coloring", I::Approx(a)) => {
            let inst = Delta2Instance::new(a.clone(), opts.e)?;
            apply(&Delta2Reduction, &inst, I::Coloring, solution, seed)
        }
        ("semi-ancestry", I::Coloring(f)) => apply(&SemiAncestryReduction, f, I::Coloring, solution, seed),
        ("order-to-coloring", I::Order(l)) => apply(&OrderReduction, l, I::Coloring, solution, seed),
        (n, other) if REDUCTION_NAMES.contains(&n) => Err(mismatch(n, source_kind(n), other)),
        (n, _) => Err(Error::BadParams(format!(
            "unknown reduction {n:?}; known: {}",
            REDUCTION_NAMES.join(", ")
        ))),
    }
}

/// The instance format a reduction reads.
pub fn source_kind(name: &str) -> &'static str {
    match name {
        "path-to-antichain" => "TREE",
        "rt1k-tree" => "UNARY",
        "sac-to-tac" => "SET",
        "weak-homog-refine" | "sigma-tree" | "semi-ancestry" => "COLORING",
        "delta2-coloring" => "APPROX",
        "order-to-coloring" => "ORDER",
        _ => "CETREE",
    }
}

pub const SOLVERS: &[&str] = &["brute-antichain", "brute-chain", "prob-sac", "advised-sac"];

#[derive(Clone, Copy, Debug)]
pub struct SolveOpts {
    pub rounds: usize,
    pub schedule: Schedule,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    /// The validated solution, absent when the solver failed.
    pub solution: Option<Solution>,
    pub run: Option<SolverOutcome>,
}

impl SolveOutcome {
    /// JSON report: solver outcome, failure reason and round.
    pub fn report(&self, solver: &str) -> serde_json::Value {
        let mut v = serde_json::json!({ "solver": solver });
        match &self.run {
            Some(SolverOutcome::Fail { reason, round, .. }) => {
                v["outcome"] = "fail".into();
                v["reason"] = reason.code().into();
                v["round"] = (*round).into();
            }
            _ => v["outcome"] = "success".into(),
        }
        if let Some(s) = &self.solution {
            v["size"] = s.size().into();
        }
        v
    }

    pub fn exit_code(&self) -> i32 {
        match &self.run {
            Some(SolverOutcome::Fail { reason, .. }) => match reason {
                crate::solvers::FailReason::SearchTimeout => EXIT_LIMIT,
                crate::solvers::FailReason::BadChoiceCollapse => EXIT_VERIFY,
            },
            _ => EXIT_OK,
        }
    }
}

fn tree_of(name: &str, inst: Option<&AnyInstance>) -> Result<FiniteTreeSnapshot> {
    match inst {
        Some(AnyInstance::Tree(t)) => Ok(t.clone()),
        Some(AnyInstance::Staged(t)) => Ok(t.snapshot()),
        Some(other) => Err(mismatch(name, "TREE or CETREE", other)),
        None => Err(Error::BadParams(format!("{name} needs an instance"))),
    }
}

pub fn cmd_solve(solver: &str, inst: Option<&AnyInstance>, opts: SolveOpts) -> Result<SolveOutcome> {
    let outcome = match solver {
        "brute-antichain" => SolveOutcome {
            solution: Some(Solution::antichain(tree_max_antichain(&tree_of(solver, inst)?))),
            run: None,
        },
        "brute-chain" => SolveOutcome {
            solution: Some(Solution::chain(longest_chain(
                &tree_of(solver, inst)?.iter().cloned().collect::<Vec<_>>(),
            ))),
            run: None,
        },
        "prob-sac" | "advised-sac" => {
            let set = match inst {
                Some(AnyInstance::Set(s)) => s,
                Some(other) => return Err(mismatch(solver, "SET", other)),
                None if opts.rounds == 0 => {
                    return Ok(SolveOutcome {
                        solution: Some(Solution::antichain([])),
                        run: None,
                    })
                }
                None => return Err(Error::BadParams(format!("{solver} needs a SET instance"))),
            };
            let run = if solver == "prob-sac" {
                probabilistic_sac_solve(set, opts.rounds, opts.schedule, opts.seed)?
            } else {
                advised_sac_solve(set, opts.rounds, opts.schedule, opts.seed)?
            };
            SolveOutcome {
                solution: run.antichain().map(|a| Solution::antichain(a.to_vec())),
                run: Some(run),
            }
        }
        other => {
            return Err(Error::BadParams(format!(
                "unknown solver {other:?}; known: {}",
                SOLVERS.join(", ")
            )))
        }
    };
    if let (Some(sol), Some(inst)) = (&outcome.solution, inst) {
        if let Some(v) = cmd_verify(inst, sol)? {
            return Err(Error::Unsound(format!("{solver} produced an invalid solution: {v}")));
        }
    }
    Ok(outcome)
}

/// `None` iff `sol` is a valid solution of `inst`.
pub fn cmd_verify(inst: &AnyInstance, sol: &Solution) -> Result<Option<Violation>> {
    let mut scratch = None;
    let target = inst
        .target(&mut scratch)
        .ok_or_else(|| Error::TypeMismatch(format!("{} instances have no solutions", inst.kind())))?;
    validate_solution(sol, target)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchConfig {
    /// `one-bad`, `perfect-binary` or `comb`.
    pub family: String,
    pub depth: Option<usize>,
    pub rounds: usize,
    pub schedule: Schedule,
    pub trials: usize,
    pub seed: u64,
    pub advised: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub trial: usize,
    pub seed: u64,
    pub outcome: String,
    pub fail_round: Option<usize>,
    pub antichain_size: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub trials: usize,
    pub failures: usize,
    pub rate: f64,
    pub wilson_lo: f64,
    pub wilson_hi: f64,
    pub bound: f64,
}

/// Wilson score interval for `k` successes in `n` trials.
pub fn wilson_interval(k: usize, n: usize, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let (n, p) = (n as f64, k as f64 / n as f64);
    let denom = 1.0 + z * z / n;
    let centre = (p + z * z / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// The bench set for `cfg`: deep enough for every scheduled round. A perfect
/// tree has a wide enough level two below the last exponent; a comb spends
/// about one level per antichain member.
pub fn bench_set(cfg: &BenchConfig) -> Result<BranchingSet> {
    let exps = (0..cfg.rounds).map(|k| cfg.schedule.exponent(k));
    match cfg.family.as_str() {
        "one-bad" => Ok(BranchingSet::one_bad(cfg.depth.unwrap_or(2), cfg.rounds, cfg.schedule)),
        "perfect-binary" => Ok(BranchingSet::perfect_binary(
            cfg.depth.unwrap_or(exps.max().unwrap_or(0) + 2),
        )),
        "comb" => Ok(BranchingSet::comb(
            cfg.depth.unwrap_or(exps.map(|e| 1 << e).sum::<usize>() + 2),
        )),
        other => Err(Error::UnknownFamily(format!(
            "{other:?}; bench families: one-bad, perfect-binary, comb"
        ))),
    }
}

/// Runs `trials` independent solves, trial `i` with seed `seed + i`, on a
/// pool of `workers` threads (default: all logical processors).
pub fn cmd_bench(cfg: &BenchConfig, workers: Option<usize>) -> Result<(Vec<BenchRow>, BenchSummary)> {
    if cfg.trials < 100 {
        return Err(Error::BadParams("bench needs at least 100 trials".into()));
    }
    let set = bench_set(cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .map_err(|e| Error::BadParams(e.to_string()))?;
    let rows = pool.install(|| {
        (0..cfg.trials)
            .into_par_iter()
            .map(|trial| {
                let seed = cfg.seed.wrapping_add(trial as u64);
                let run = if cfg.advised {
                    advised_sac_solve(&set, cfg.rounds, cfg.schedule, seed)?
                } else {
                    probabilistic_sac_solve(&set, cfg.rounds, cfg.schedule, seed)?
                };
                Ok(match run {
                    SolverOutcome::Success { antichain, .. } => BenchRow {
                        trial,
                        seed,
                        outcome: "SUCCESS".into(),
                        fail_round: None,
                        antichain_size: antichain.len(),
                    },
                    SolverOutcome::Fail { reason, round, .. } => BenchRow {
                        trial,
                        seed,
                        outcome: reason.code().into(),
                        fail_round: Some(round),
                        antichain_size: 0,
                    },
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let failures = rows.iter().filter(|r| r.fail_round.is_some()).count();
    let (wilson_lo, wilson_hi) = wilson_interval(failures, rows.len(), 1.96);
    let summary = BenchSummary {
        trials: rows.len(),
        failures,
        rate: failures as f64 / rows.len() as f64,
        wilson_lo,
        wilson_hi,
        bound: cfg.schedule.failure_bound(),
    };
    Ok((rows, summary))
}

/// CSV with the fixed columns and a trailing `# summary` comment line.
pub fn bench_csv(cfg: &BenchConfig, rows: &[BenchRow], s: &BenchSummary) -> String {
    let mut out = String::from("trial,seed,outcome,fail_round,antichain_size\n");
    for r in rows {
        let fail = r.fail_round.map(|x| x.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.trial, r.seed, r.outcome, fail, r.antichain_size
        );
    }
    let _ = writeln!(
        out,
        "# summary family={} rounds={} schedule={} trials={} failures={} rate={:.6} wilson_lo={:.6} wilson_hi={:.6} bound={}",
        cfg.family, cfg.rounds, cfg.schedule, s.trials, s.failures, s.rate, s.wilson_lo, s.wilson_hi, s.bound
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_examples() {
        let g = cmd_gen(
            "perfect-binary",
            &GenParams {
                depth: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(matches!(&g.instance, AnyInstance::Tree(t) if t.len() == 31));
        let p = GenParams {
            k: Some(2),
            f: Some(vec![0, 0, 1]),
            ..Default::default()
        };
        let g = cmd_gen("rt1k", &p).unwrap();
        assert!(matches!(&g.instance, AnyInstance::Staged(t) if t.len() == 5));
        let g = cmd_gen(
            "one-bad",
            &GenParams {
                rounds: Some(3),
                depth: Some(10),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(matches!(&g.instance, AnyInstance::Set(s) if s.plants().len() == 3));
        assert!(matches!(
            cmd_gen("nope", &GenParams::default()),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn reduce_dispatch() {
        let t = crate::model::StagedTree::all_at_stage_zero(&FiniteTreeSnapshot::chain(3));
        let out = cmd_reduce(
            "tcac-ce-to-tcac",
            &AnyInstance::Staged(t.clone()),
            None,
            ReduceOpts::default(),
        )
        .unwrap();
        assert_eq!(out.report.soundness, Soundness::Pass);
        let out = cmd_reduce("sher-instance", &AnyInstance::Staged(t), None, ReduceOpts::default()).unwrap();
        let AnyInstance::Coloring(f) = out.target else {
            panic!("coloring expected")
        };
        assert!(crate::model::check_semi_hereditary(&f, 1).is_none());
        let empty = crate::model::StagedTree::new(0, [(0, Str::empty())]).unwrap();
        let out = cmd_reduce(
            "tcac-ce-to-tcac",
            &AnyInstance::Staged(empty),
            None,
            ReduceOpts::default(),
        )
        .unwrap();
        assert!(matches!(out.target, AnyInstance::Tree(t) if t.len() == 1));
        let tree = AnyInstance::Tree(FiniteTreeSnapshot::perfect_binary(2));
        assert!(matches!(
            cmd_reduce("order-to-coloring", &tree, None, ReduceOpts::default()),
            Err(Error::TypeMismatch(_))
        ));
    }

    #[test]
    fn solve_and_verify() {
        let opts = SolveOpts {
            rounds: 0,
            schedule: Schedule::Default,
            seed: 7,
        };
        let t = AnyInstance::Tree(FiniteTreeSnapshot::perfect_binary(4));
        let out = cmd_solve("brute-antichain", Some(&t), opts).unwrap();
        assert_eq!(out.solution.as_ref().unwrap().size(), 16);
        let out = cmd_solve("prob-sac", None, opts).unwrap();
        assert_eq!(out.solution.unwrap().size(), 0);
        let chain = Solution::chain([Str::bits("0"), Str::bits("00")]);
        assert_eq!(cmd_verify(&t, &chain).unwrap(), None);
        let bogus = Solution::antichain([Str::bits("0"), Str::bits("00")]);
        assert!(cmd_verify(&t, &bogus).unwrap().is_some());
    }

    #[test]
    fn wilson() {
        let (lo, hi) = wilson_interval(50, 100, 1.96);
        assert!((lo - 0.404).abs() < 1e-3 && (hi - 0.596).abs() < 1e-3);
        assert_eq!(wilson_interval(0, 100, 1.96).0, 0.0);
    }

    #[test]
    fn bench_is_deterministic() {
        let cfg = BenchConfig {
            family: "perfect-binary".into(),
            depth: None,
            rounds: 2,
            schedule: Schedule::Shifted { n: 3 },
            trials: 100,
            seed: 11,
            advised: false,
        };
        let (rows, s) = cmd_bench(&cfg, Some(2)).unwrap();
        assert_eq!(s.failures, 0);
        let (rows2, s2) = cmd_bench(&cfg, Some(3)).unwrap();
        assert_eq!(bench_csv(&cfg, &rows, &s), bench_csv(&cfg, &rows2, &s2));
        assert!(bench_csv(&cfg, &rows, &s).contains("bound=0.125"));
    }
}
