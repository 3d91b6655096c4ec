//! Seeded random instances for property suites, benches and the `gen` command.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{
    phi_decode_u64, Approx2Sequence, BranchingSet, LinearOrderInstance, PairColoring, Schedule, StagedTree, Str,
    UnaryColoring,
};
use crate::solvers::{find_antichain_of_size, SolverState};

/// A tree over ℕ: at most `max_nodes` nodes, depth ≤ `max_depth`, at most
/// `max_branching` children per node with labels below `max_branching + 2`.
/// Children appear no earlier than their parent; stages stay ≤ `horizon`.
pub fn random_staged_tree(
    rng: &mut ChaCha8Rng,
    max_depth: usize,
    max_branching: usize,
    max_nodes: usize,
    horizon: usize,
) -> StagedTree {
    let mut entries = vec![(0usize, Str::empty())];
    let mut frontier = vec![(0usize, Str::empty())];
    while let Some((stage, node)) = frontier.pop() {
        if node.len() >= max_depth {
            continue;
        }
        let mut labels: Vec<u64> = (0..max_branching as u64 + 2).collect();
        labels.shuffle(rng);
        let n = rng.gen_range(0..=max_branching);
        for &x in labels.iter().take(n) {
            if entries.len() >= max_nodes {
                break;
            }
            let s = (stage + rng.gen_range(0..=2)).min(horizon);
            let child = node.child(x);
            entries.push((s, child.clone()));
            frontier.insert(rng.gen_range(0..=frontier.len()), (s, child));
        }
    }
    StagedTree::new(horizon, entries)
        .expect("children never precede parents")
        .with_max_branching(max_branching)
}

/// A completely branching binary tree: leaves split at random until `max_nodes`
/// is reached, one split per stage.
pub fn random_binary_staged_tree(rng: &mut ChaCha8Rng, max_depth: usize, max_nodes: usize) -> StagedTree {
    let mut entries = vec![(0usize, Str::empty())];
    let mut leaves = vec![Str::empty()];
    let mut stage = 0;
    while entries.len() + 2 <= max_nodes {
        let open: Vec<usize> = (0..leaves.len()).filter(|&i| leaves[i].len() < max_depth).collect();
        let Some(&i) = open.choose(rng) else { break };
        let leaf = leaves.swap_remove(i);
        stage += 1;
        for b in [0, 1] {
            entries.push((stage, leaf.child(b)));
            leaves.push(leaf.child(b));
        }
    }
    StagedTree::new(stage, entries).expect("splits extend leaves")
}

pub fn random_unary(rng: &mut ChaCha8Rng, k: u8, horizon: usize) -> UnaryColoring {
    UnaryColoring::new(k, (0..horizon).map(|_| rng.gen_range(0..k)).collect()).expect("colors in range")
}

pub fn random_coloring(rng: &mut ChaCha8Rng, k: u8, horizon: u64) -> PairColoring {
    PairColoring::from_fn(k, horizon, |_, _| rng.gen_range(0..k)).expect("k ≥ 2")
}

pub fn random_order(rng: &mut ChaCha8Rng, horizon: usize) -> LinearOrderInstance {
    let mut ranks: Vec<usize> = (0..horizon).collect();
    ranks.shuffle(rng);
    LinearOrderInstance::from_ranks(ranks).expect("a permutation")
}

/// `f(x, y) = color` iff `x` is an ancestor of `y` in a random tree on
/// `0..horizon` whose parents precede their children; semi-hereditary for
/// `color`. A little noise is added on pairs that keep the property.
pub fn random_semi_hereditary(rng: &mut ChaCha8Rng, horizon: u64, color: u8) -> PairColoring {
    let mut parent: Vec<Option<u64>> = vec![None];
    for y in 1..horizon {
        parent.push(rng.gen_bool(0.8).then(|| rng.gen_range(0..y)));
    }
    let ancestor = |x: u64, y: u64| {
        let mut cur = parent[y as usize];
        while let Some(p) = cur {
            if p == x {
                return true;
            }
            cur = parent[p as usize];
        }
        false
    };
    PairColoring::from_fn(2, horizon, |x, y| if ancestor(x, y) { color } else { 1 - color }).expect("two colors")
}

/// Up to `count` limit-computable sets of codes below `horizon / 2`, all
/// toggling before `horizon / 2`. Each set keeps a random decodable member and
/// a non-binary one, so the finite window never runs out of candidates.
pub fn random_approx(rng: &mut ChaCha8Rng, count: usize, horizon: u64) -> Approx2Sequence {
    let half = horizon / 2;
    let decodable: Vec<u64> = (0..half).filter(|&x| phi_decode_u64(x).is_ok()).collect();
    let escapes: Vec<u64> = decodable
        .iter()
        .copied()
        .filter(|&x| phi_decode_u64(x).is_ok_and(|s| !s.is_binary()))
        .collect();
    let mut entries = Vec::new();
    for e in 0..count {
        let forced = [
            *decodable.choose(rng).expect("ε has code 0"),
            *escapes.choose(rng).expect("horizon of at least 16"),
        ];
        for x in 0..half {
            let member = forced.contains(&x) || rng.gen_bool(0.25);
            let flips = rng.gen_range(0..=3usize);
            let mut stages: Vec<u64> = (0..flips).map(|_| rng.gen_range(0..half.max(1))).collect();
            stages.sort_unstable();
            stages.dedup();
            if (stages.len() % 2 == 1) != member {
                if member {
                    stages.push(half.saturating_sub(1));
                    stages.dedup();
                    if stages.len().is_multiple_of(2) {
                        stages.retain(|&s| s != half.saturating_sub(1));
                    }
                } else {
                    stages.pop();
                }
            }
            if !stages.is_empty() {
                entries.push((e, x, stages));
            }
        }
    }
    Approx2Sequence::from_toggles(count, horizon, entries).expect("entries inside the table")
}

/// A certified completely branching family picked at random from the catalog.
pub fn random_branching_set(rng: &mut ChaCha8Rng) -> BranchingSet {
    match rng.gen_range(0..3) {
        0 => BranchingSet::perfect_binary(rng.gen_range(3..=5)),
        1 => BranchingSet::comb(rng.gen_range(4..=10)),
        _ => {
            let schedule = if rng.gen_bool(0.5) {
                Schedule::Default
            } else {
                Schedule::Shifted {
                    n: rng.gen_range(1..=2),
                }
            };
            BranchingSet::one_bad(rng.gen_range(1..=3), rng.gen_range(1..=3), schedule)
        }
    }
}

/// A set `S`, earlier choices keeping `S_k` infinite, and an antichain
/// `A ⊆ S_k`, as seen by the solver at round `k`.
#[derive(Clone, Debug)]
pub struct SacPair {
    pub set: BranchingSet,
    pub chosen: Vec<Str>,
    pub antichain: Vec<Str>,
}

pub fn random_sac_pair(rng: &mut ChaCha8Rng) -> Result<SacPair> {
    for _ in 0..64 {
        let set = random_branching_set(rng);
        let mut state = SolverState::new(&set, Schedule::Default);
        let rounds = rng.gen_range(0..=2);
        let mut ok = true;
        for _ in 0..rounds {
            let size = rng.gen_range(2..=4);
            let Ok(a) = find_antichain_of_size(&set, state.stream(), size, Some(usize::MAX)) else {
                ok = false;
                break;
            };
            let good: Vec<Str> = a
                .into_iter()
                .filter(|s| {
                    let mut c = state.chosen().to_vec();
                    c.push(s.clone());
                    set.restricted_infinite(&c)
                })
                .collect();
            match good.choose(rng) {
                Some(s) => state.choose(s.clone()),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok || !set.restricted_infinite(state.chosen()) {
            continue;
        }
        let size = rng.gen_range(2..=6);
        if let Ok(antichain) = find_antichain_of_size(&set, state.stream(), size, Some(usize::MAX)) {
            let chosen = state.chosen().to_vec();
            return Ok(SacPair { set, chosen, antichain });
        }
    }
    Err(Error::BudgetExhausted("no antichain found in 64 random sets".into()))
}
