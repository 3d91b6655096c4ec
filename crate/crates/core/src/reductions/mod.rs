//! Computable reductions between the tree, set, coloring and order problems.
//!
//! Each reduction maps a source instance forward to a target instance and
//! maps target solutions back. [`run_reduction`] draws target solutions from
//! the brute-force oracles, maps each back and validates it on the source.

mod ads_em;
mod binary;
mod ramsey;
mod sac_tac;
mod sher;
mod split_triple;
mod timestamp;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::model::{
    validate_solution, BranchingSet, FiniteTreeSnapshot, LinearOrderInstance, PairColoring, Solution, StagedTree,
    Target, UnaryColoring, Violation,
};

pub use ads_em::{
    ads_instance, ads_solution_extract, em_instance, em_solution_extract, sher_instance, sher_solution_extract,
    AdsReduction, EmReduction, PsiContext, SherReduction,
};
pub use binary::{
    path_to_antichain_binary, rt1k_instance, rt1k_solution_extract, stable_rt1k_tree, PathReduction, Rt1kReduction,
};
pub use ramsey::{
    delta2_coloring, delta2_solution_extract, order_to_coloring, semi_ancestry_extract, semi_hereditary_set_to_ads,
    Delta2Instance, Delta2Reduction, OrderReduction, SemiAncestryReduction,
};
pub use sac_tac::{sac_to_tac_tree, SacTacReduction, SacTree};
pub use sher::{
    tcac_to_sher_solution, tcac_to_sher_tree, weak_homog_refine, SigmaTree, SigmaTreeReduction, WeakHomogInstance,
    WeakHomogReduction,
};
pub use split_triple::{
    map_antichain_through_image, reduce_tac_to_tcac_ce, PartitionStep, Region, SplitTripleOutput, SplitTripleReduction,
};
pub use timestamp::{reduce_tcac_ce_to_tcac, timestamp_decode, TimestampReduction};

/// A problem instance: knows how to validate its own solutions.
pub trait Instance: Serialize {
    fn check(&self, sol: &Solution) -> Result<Option<Violation>>;

    fn horizon(&self) -> u64;

    /// Hex SHA-256 of the canonical JSON encoding.
    fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("instances serialize");
        hex::encode(Sha256::digest(bytes))
    }
}

impl Instance for FiniteTreeSnapshot {
    fn check(&self, sol: &Solution) -> Result<Option<Violation>> {
        validate_solution(sol, Target::Tree(self))
    }
    fn horizon(&self) -> u64 {
        self.depth() as u64
    }
}

impl Instance for StagedTree {
    fn check(&self, sol: &Solution) -> Result<Option<Violation>> {
        validate_solution(sol, Target::Tree(&self.snapshot()))
    }
    fn horizon(&self) -> u64 {
        StagedTree::horizon(self) as u64
    }
}

impl Instance for BranchingSet {
    fn check(&self, sol: &Solution) -> Result<Option<Violation>> {
        validate_solution(sol, Target::Set(self))
    }
    fn horizon(&self) -> u64 {
        self.depth() as u64
    }
}

impl Instance for PairColoring {
    fn check(&self, sol: &Solution) -> Result<Option<Violation>> {
        validate_solution(sol, Target::Coloring(self))
    }
    fn horizon(&self) -> u64 {
        PairColoring::horizon(self)
    }
}

impl Instance for LinearOrderInstance {
    fn check(&self, sol: &Solution) -> Result<Option<Violation>> {
        validate_solution(sol, Target::Order(self))
    }
    fn horizon(&self) -> u64 {
        LinearOrderInstance::horizon(self)
    }
}

impl Instance for UnaryColoring {
    fn check(&self, sol: &Solution) -> Result<Option<Violation>> {
        validate_solution(sol, Target::Unary(self))
    }
    fn horizon(&self) -> u64 {
        UnaryColoring::horizon(self)
    }
}

/// A solution mapped back to the source, with the horizon assumptions used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mapped {
    pub solution: Solution,
    pub assumptions: Vec<String>,
}

impl Mapped {
    pub fn exact(solution: Solution) -> Self {
        Mapped {
            solution,
            assumptions: Vec::new(),
        }
    }

    pub fn assuming(solution: Solution, assumption: impl Into<String>) -> Self {
        Mapped {
            solution,
            assumptions: vec![assumption.into()],
        }
    }
}

pub trait Reduction {
    type Source: Instance;
    type Target: Instance;
    type Context;

    fn name(&self) -> &'static str;

    fn forward(&self, source: &Self::Source) -> Result<(Self::Target, Self::Context)>;

    fn backward(
        &self,
        source: &Self::Source,
        target: &Self::Target,
        ctx: &Self::Context,
        sol: &Solution,
    ) -> Result<Mapped>;

    /// Target solutions from the exhaustive and greedy oracles.
    fn sample_target_solutions(&self, target: &Self::Target, rng: &mut ChaCha8Rng) -> Vec<Solution>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Soundness {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub target_solution: Solution,
    pub source_solution: Option<Solution>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub reduction: String,
    pub instance_digest: String,
    pub horizon: u64,
    pub assumptions: Vec<String>,
    pub soundness: Soundness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Number of target solutions mapped back and checked.
    pub checked: usize,
}

/// Maps `source` forward, then every oracle solution of the target back, and
/// validates each image on the source.
pub fn run_reduction<R: Reduction>(r: &R, source: &R::Source, seed: u64) -> Result<ReductionReport> {
    let (target, ctx) = r.forward(source)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let solutions = r.sample_target_solutions(&target, &mut rng);
    check_solutions(r, source, &target, &ctx, &solutions)
}

/// As [`run_reduction`] with caller-supplied target solutions.
pub fn check_solutions<R: Reduction>(
    r: &R,
    source: &R::Source,
    target: &R::Target,
    ctx: &R::Context,
    solutions: &[Solution],
) -> Result<ReductionReport> {
    let mut report = ReductionReport {
        reduction: r.name().to_string(),
        instance_digest: source.digest(),
        horizon: source.horizon(),
        assumptions: Vec::new(),
        soundness: Soundness::Pass,
        counterexample: None,
        checked: 0,
    };
    for sol in solutions {
        if let Some(v) = target.check(sol)? {
            return Err(Error::InvalidSolution(format!(
                "target oracle produced an invalid solution: {v}"
            )));
        }
        let fail = |source_solution, reason| Counterexample {
            target_solution: sol.clone(),
            source_solution,
            reason,
        };
        report.checked += 1;
        let mapped = match r.backward(source, target, ctx, sol) {
            Ok(m) => m,
            Err(Error::AmbiguousAtHorizon(msg)) => {
                push_unique(&mut report.assumptions, format!("ambiguous at horizon: {msg}"));
                continue;
            }
            Err(e) => {
                report.soundness = Soundness::Fail;
                report.counterexample = Some(fail(None, e.to_string()));
                break;
            }
        };
        for a in mapped.assumptions {
            push_unique(&mut report.assumptions, a);
        }
        match source.check(&mapped.solution) {
            Ok(None) => {}
            Ok(Some(v)) => {
                report.soundness = Soundness::Fail;
                report.counterexample = Some(fail(Some(mapped.solution), v.to_string()));
                break;
            }
            Err(e) => {
                report.soundness = Soundness::Fail;
                report.counterexample = Some(fail(Some(mapped.solution), e.to_string()));
                break;
            }
        }
    }
    Ok(report)
}

fn push_unique(list: &mut Vec<String>, item: String) {
    if !list.contains(&item) {
        list.push(item);
    }
}

/// Names accepted by the `reduce` subcommand.
pub const REDUCTION_NAMES: &[&str] = &[
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

/// Common oracle output for tree targets: exact or layered maximum antichain,
/// random maximal antichains, a longest chain and chains to random leaves.
pub(crate) fn tree_solutions(t: &FiniteTreeSnapshot, rng: &mut ChaCha8Rng, chains: bool) -> Vec<Solution> {
    use crate::solvers::brute;
    use rand::seq::SliceRandom;
    let nodes: Vec<_> = t.iter().cloned().collect();
    let mut out = vec![Solution::antichain(
        brute::max_antichain(&nodes, brute::EXACT_LIMIT).nodes,
    )];
    if let Ok(all) = brute::all_antichains(&nodes) {
        out.extend(all.into_iter().filter(|a| !a.is_empty()).map(Solution::antichain));
    } else {
        for _ in 0..16 {
            out.push(Solution::antichain(brute::random_maximal_antichain(&nodes, rng)));
        }
    }
    if chains {
        out.push(Solution::chain(brute::longest_chain(&nodes)));
        let leaves = t.leaves();
        for _ in 0..8 {
            if let Some(leaf) = leaves.choose(rng) {
                out.push(Solution::chain(brute::chain_below(&nodes, leaf)));
            }
        }
    }
    out
}
