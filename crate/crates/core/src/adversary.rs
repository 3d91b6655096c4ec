//! The movable-marker construction of a binary tree with no limit-computable
//! infinite antichain, the requirement audit, and hard families for the bench.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{phi_code_u64, phi_decode_u64, Approx2Sequence, BranchingSet, Schedule, StagedTree, Str};
use crate::solvers::max_antichain;

/// `sigma[e][s]` is the marker `σ_e^s`, `sigma_hat[e][s]` its tree-side
/// shadow `σ̂_e^s`. Entries for `s ≤ e` are unset (`None`, `ε`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkerState {
    pub sigma: Vec<Vec<Option<Str>>>,
    pub sigma_hat: Vec<Vec<Str>>,
}

impl MarkerState {
    fn new(count: usize, stages: usize) -> Self {
        MarkerState {
            sigma: vec![vec![None; stages + 1]; count],
            sigma_hat: vec![vec![Str::empty(); stages + 1]; count],
        }
    }

    /// Last stage at which `σ_e` or `σ̂_e` moved (0 if never).
    pub fn last_move(&self, e: usize) -> usize {
        (1..self.sigma[e].len())
            .rev()
            .find(|&s| self.sigma[e][s] != self.sigma[e][s - 1] || self.sigma_hat[e][s] != self.sigma_hat[e][s - 1])
            .unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    /// The limit marker lies in `A_e` but not in `T`.
    R { sigma: Str },
    /// The limit marker lies in `T` and every later node extends it. Any
    /// antichain of `A_e ∩ T` through `sigma` has at most `bound` members;
    /// `found` is the largest one the exact search produced.
    S { sigma: Str, bound: usize, found: usize },
    #[serde(rename = "UNRESOLVED")]
    Unresolved { reason: String },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::R { .. } => "R",
            Verdict::S { .. } => "S",
            Verdict::Unresolved { .. } => "UNRESOLVED",
        }
    }

    pub fn is_resolved(&self) -> bool {
        !matches!(self, Verdict::Unresolved { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub stages: usize,
    /// `τ_s` for `s = 1..=stages`.
    pub leaves: Vec<Str>,
    pub markers: MarkerState,
    /// First stage of the final-quarter window in which markers must be still.
    pub window_start: usize,
    /// Last marker movement over all requirements.
    pub stabilization_stage: usize,
    pub verdicts: Vec<Verdict>,
}

impl ConstructionTrace {
    /// `T_s` as a node set.
    pub fn snapshot(tree: &StagedTree, s: usize) -> BTreeSet<Str> {
        tree.stage_nodes(s)
    }

    /// JSON sidecar `{markers, verdicts, stabilization_stage}`.
    pub fn sidecar(&self) -> serde_json::Value {
        serde_json::json!({
            "markers": self.markers,
            "verdicts": self.verdicts,
            "stabilization_stage": self.stabilization_stage,
            "window_start": self.window_start,
            "leaves": self.leaves,
        })
    }
}

/// Members of `A_e[s]` with code below `s`, decoded, in code order.
fn window(a: &Approx2Sequence, e: usize, s: u64) -> Vec<Str> {
    (0..s.min(a.horizon()))
        .filter(|&x| a.approx(e, s, x))
        .filter_map(|x| phi_decode_u64(x).ok())
        .collect()
}

/// Runs the construction for `stages` steps without the stabilization check.
pub fn run_markers(a: &Approx2Sequence, stages: usize) -> (StagedTree, ConstructionTrace) {
    let count = a.count();
    let mut markers = MarkerState::new(count, stages);
    let mut nodes: BTreeSet<Str> = BTreeSet::from([Str::empty()]);
    let mut leaves_set: BTreeSet<Str> = BTreeSet::from([Str::empty()]);
    let mut entries = vec![(0, Str::empty())];
    let mut leaves = Vec::with_capacity(stages);
    for s in 1..=stages {
        let mut hat = Str::empty();
        for e in 0..s.min(count) {
            let sigma = window(a, e, s as u64)
                .into_iter()
                .find(|t| !nodes.contains(t) || hat.is_prefix_eq_of(t));
            if let Some(t) = sigma.as_ref().filter(|t| nodes.contains(t)) {
                hat = t.clone();
            }
            markers.sigma[e][s] = sigma;
            markers.sigma_hat[e][s] = hat.clone();
        }
        let tau = leaves_set
            .iter()
            .find(|l| hat.is_prefix_eq_of(l))
            .cloned()
            .expect("every tree node has a leaf above it");
        leaves_set.remove(&tau);
        for b in [0, 1] {
            let c = tau.child(b);
            nodes.insert(c.clone());
            leaves_set.insert(c.clone());
            entries.push((s, c));
        }
        leaves.push(tau);
    }
    let tree = StagedTree::new(stages, entries).expect("construction stays downward closed");
    let window_start = stages - stages / 4;
    let stabilization_stage = (0..count).map(|e| markers.last_move(e)).max().unwrap_or(0);
    let mut trace = ConstructionTrace {
        stages,
        leaves,
        markers,
        window_start,
        stabilization_stage,
        verdicts: Vec::new(),
    };
    trace.verdicts = verify_requirements(&trace, &tree, a);
    (tree, trace)
}

/// The construction with `T₀ = {ε}` and one leaf split per stage. Fails with
/// `HorizonTooSmall` when a marker still moves in the final quarter.
pub fn movable_marker_tree(a: &Approx2Sequence, stages: usize) -> Result<(StagedTree, ConstructionTrace)> {
    if let Some((e, x)) = a.check_stabilization() {
        return Err(Error::HorizonTooSmall(format!(
            "A_{e} still toggles {x} after half the horizon"
        )));
    }
    let (tree, trace) = run_markers(a, stages);
    if trace.stabilization_stage >= trace.window_start && trace.stabilization_stage > 0 {
        return Err(Error::HorizonTooSmall(format!(
            "a marker moved at stage {} of {stages}",
            trace.stabilization_stage
        )));
    }
    Ok((tree, trace))
}

/// Audits every requirement against the final tree.
pub fn verify_requirements(trace: &ConstructionTrace, tree: &StagedTree, a: &Approx2Sequence) -> Vec<Verdict> {
    let final_nodes = tree.stage_nodes(trace.stages);
    (0..a.count())
        .map(|e| {
            let moved = trace.markers.last_move(e);
            if moved >= trace.window_start && moved > 0 {
                return Verdict::Unresolved {
                    reason: format!("marker moved at stage {moved}"),
                };
            }
            let Some(sigma) = trace.markers.sigma[e][trace.stages].clone() else {
                return Verdict::Unresolved {
                    reason: "no candidate in the window".into(),
                };
            };
            let in_limit = phi_code_u64(&sigma).is_some_and(|x| a.limit(e, x));
            if !in_limit {
                return Verdict::Unresolved {
                    reason: format!("{sigma} is not in the limit of A_{e}"),
                };
            }
            if !final_nodes.contains(&sigma) {
                return Verdict::R { sigma };
            }
            let later_extend = tree
                .entries()
                .filter(|(_, st)| *st > moved)
                .all(|(n, _)| sigma.is_prefix_eq_of(n));
            if !later_extend {
                return Verdict::Unresolved {
                    reason: format!("a node added after stage {moved} avoids {sigma}"),
                };
            }
            let bound = 1 + tree.stage_nodes(moved).len();
            let others: Vec<Str> = (0..a.horizon())
                .filter(|&x| a.limit(e, x))
                .filter_map(|x| phi_decode_u64(x).ok())
                .filter(|t| final_nodes.contains(t) && t.incomparable(&sigma))
                .collect();
            let found = 1 + max_antichain(&others, 20).nodes.len();
            if found > bound {
                return Verdict::Unresolved {
                    reason: format!("antichain of size {found} through {sigma} exceeds {bound}"),
                };
            }
            Verdict::S { sigma, bound, found }
        })
        .collect()
}

/// One planted bad element per round, sized by the default schedule, with a
/// full binary cone of `depth` levels above the last plant.
pub fn one_bad_element_family(depth: usize, rounds: usize) -> BranchingSet {
    BranchingSet::one_bad(depth, rounds, Schedule::Default)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{bad_element, probabilistic_sac_solve, SolverOutcome};

    fn codes(strings: &[&str]) -> Vec<u64> {
        strings.iter().map(|s| phi_code_u64(&Str::bits(s)).unwrap()).collect()
    }

    fn static_sets(horizon: u64, sets: &[Vec<u64>]) -> Approx2Sequence {
        Approx2Sequence::from_fn(sets.len(), horizon, |e, _, x| sets[e].contains(&x))
    }

    #[test]
    fn everything_gives_s0() {
        let a = Approx2Sequence::from_fn(1, 40, |_, _, _| true);
        let (tree, trace) = movable_marker_tree(&a, 40).unwrap();
        assert_eq!(tree.len(), 81);
        assert_eq!(trace.markers.sigma[0][1], Some(Str::empty()));
        assert!(matches!(trace.verdicts[0], Verdict::S { ref sigma, .. } if sigma.is_empty()));
    }

    #[test]
    fn tree_grows_by_two() {
        let a = static_sets(32, &[codes(&["1", "01"])]);
        let (tree, trace) = run_markers(&a, 32);
        for s in 1..=32 {
            assert_eq!(tree.stage_nodes(s).len(), tree.stage_nodes(s - 1).len() + 2);
            let tau = &trace.leaves[s - 1];
            assert!(tree.stage_nodes(s - 1).contains(tau));
        }
        assert!(tree.snapshot().is_completely_branching());
    }

    #[test]
    fn stable_chain_resolves() {
        let a = static_sets(64, &[codes(&["0", "00", "000"])]);
        let (_, trace) = movable_marker_tree(&a, 64).unwrap();
        assert!(trace.verdicts[0].is_resolved(), "{:?}", trace.verdicts);
    }

    #[test]
    fn planted_antichain_outside_tree_gives_r() {
        let a = static_sets(64, &[codes(&["11", "101"]).into_iter().chain([7]).collect()]);
        let (_, trace) = movable_marker_tree(&a, 64).unwrap();
        assert_eq!(trace.verdicts[0].label(), "R");
    }

    #[test]
    fn two_sequences_resolve() {
        let a = static_sets(64, &[codes(&["0", "00", "000"]), codes(&["01", "10", "11"])]);
        let (_, trace) = movable_marker_tree(&a, 64).unwrap();
        assert!(trace.verdicts.iter().all(Verdict::is_resolved), "{:?}", trace.verdicts);
    }

    #[test]
    fn late_moves_rejected() {
        let a = Approx2Sequence::from_toggles(1, 16, [(0, 1, vec![2, 10])]).unwrap();
        assert!(matches!(movable_marker_tree(&a, 16), Err(Error::HorizonTooSmall(_))));
    }

    #[test]
    fn one_bad_family_plants() {
        let s = one_bad_element_family(8, 0);
        assert!(s.plants().is_empty());
        let s = one_bad_element_family(8, 1);
        assert_eq!(s.plants(), vec![Str::bits("00")]);
        let layer: Vec<Str> = s.members().iter().filter(|m| m.len() == 2).cloned().collect();
        assert_eq!(bad_element(&s, &[], &layer).unwrap(), Some(Str::bits("00")));
    }

    #[test]
    fn failure_is_choosing_a_plant() {
        let s = one_bad_element_family(2, 4);
        let plants = s.plants();
        for seed in 0..50 {
            let out = probabilistic_sac_solve(&s, 4, Schedule::Default, seed).unwrap();
            let chose_plant = out
                .trace()
                .iter()
                .any(|r| r.chosen.as_ref().is_some_and(|c| plants.contains(c)));
            assert_eq!(!out.is_success(), chose_plant, "seed {seed}");
            assert!(matches!(out, SolverOutcome::Success { .. }) || chose_plant);
        }
    }

    #[test]
    fn random_tables_resolve() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for i in 0..200 {
            let count = rng.gen_range(1..=4);
            let a = crate::gen::random_approx(&mut rng, count, 64);
            let (_, trace) = movable_marker_tree(&a, 64).unwrap_or_else(|e| panic!("table {i}: {e}"));
            assert!(
                trace.verdicts.iter().all(Verdict::is_resolved),
                "table {i}: {:?}",
                trace.verdicts
            );
        }
    }
}
