//! Homogeneous sets for semi-hereditary colorings: refining weakly
//! homogeneous sequences, and the tree of maximal weakly homogeneous strings.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{tree_solutions, Instance, Mapped, Reduction};
use crate::error::{Error, Result};
use crate::model::{
    semi_hereditary_on, validate_solution, FiniteTreeSnapshot, PairColoring, Solution, Str, Target, Violation,
};

/// A coloring that is semi-hereditary for `color`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakHomogInstance {
    pub coloring: PairColoring,
    pub color: u8,
}

impl WeakHomogInstance {
    pub fn new(coloring: PairColoring, color: u8) -> Result<Self> {
        let all: Vec<u64> = (0..coloring.horizon()).collect();
        if let Some((x, y, z)) = semi_hereditary_on(&coloring, color, &all) {
            return Err(Error::NotSemiHereditary(x, y, z));
        }
        Ok(WeakHomogInstance { coloring, color })
    }
}

impl Instance for WeakHomogInstance {
    fn check(&self, sol: &Solution) -> Result<Option<Violation>> {
        validate_solution(sol, Target::Coloring(&self.coloring))
    }
    fn horizon(&self) -> u64 {
        self.coloring.horizon()
    }
}

/// A homogeneous subsequence of a weakly homogeneous sequence. Each element
/// is of type 1 (all later colors `i`) or type 2 (a cut after which colors are
/// `1−i`). When type-2 elements reach the second half of the sequence, the
/// greedy `1−i` subsequence is returned, otherwise the type-1 elements.
pub fn weak_homog_refine(f: &PairColoring, color: u8, seq: &[u64]) -> Result<Mapped> {
    if let Some(w) = seq.windows(2).find(|w| w[0] >= w[1] || f.color(w[0], w[1]) != color) {
        return Err(Error::NotWeaklyHomogeneous(w[0], w[1]));
    }
    if let Some((x, y, z)) = semi_hereditary_on(f, color, seq) {
        return Err(Error::NotSemiHereditary(x, y, z));
    }
    let n = seq.len();
    let type2: Vec<usize> = (0..n)
        .filter(|&j| seq[j + 1..].iter().any(|&y| f.color(seq[j], y) != color))
        .collect();
    let persists = type2.iter().any(|&p| 2 * (p + 1) >= n.saturating_sub(1));
    if persists {
        let mut chosen: Vec<u64> = Vec::new();
        for &y in seq {
            if chosen.iter().all(|&x| f.color(x, y) != color) {
                chosen.push(y);
            }
        }
        return Ok(Mapped::assuming(
            Solution::Homogeneous {
                color: 1 - color,
                set: chosen,
            },
            "type-2 elements persist to the horizon",
        ));
    }
    let set: Vec<u64> = (0..n).filter(|j| !type2.contains(j)).map(|j| seq[j]).collect();
    Ok(Mapped::assuming(
        Solution::Homogeneous { color, set },
        "elements with no other color before the horizon are type 1",
    ))
}

/// Random weakly homogeneous sequences for `color`, plus a longest one.
fn weak_sequences(f: &PairColoring, color: u8, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let h = f.horizon();
    let mut out = Vec::new();
    if h == 0 {
        return out;
    }
    // longest by dynamic programming over the last element
    let mut len = vec![1usize; h as usize];
    let mut prev = vec![None; h as usize];
    for y in 0..h {
        for x in 0..y {
            if f.color(x, y) == color && len[x as usize] + 1 > len[y as usize] {
                len[y as usize] = len[x as usize] + 1;
                prev[y as usize] = Some(x);
            }
        }
    }
    let mut cur = (0..h).max_by_key(|&y| len[y as usize]).unwrap();
    let mut best = vec![cur];
    while let Some(p) = prev[cur as usize] {
        best.push(p);
        cur = p;
    }
    best.reverse();
    out.push(best);
    for _ in 0..16 {
        let mut seq = vec![rng.gen_range(0..h)];
        for y in seq[0] + 1..h {
            if f.color(*seq.last().unwrap(), y) == color && rng.gen_bool(0.6) {
                seq.push(y);
            }
        }
        out.push(seq);
    }
    out
}

/// The weakly homogeneous sequence problem for a semi-hereditary coloring.
pub struct WeakHomogReduction;

impl Reduction for WeakHomogReduction {
    type Source = WeakHomogInstance;
    type Target = WeakHomogInstance;
    type Context = ();

    fn name(&self) -> &'static str {
        "weak-homog-refine"
    }

    fn forward(&self, source: &WeakHomogInstance) -> Result<(WeakHomogInstance, ())> {
        Ok((source.clone(), ()))
    }

    fn backward(&self, source: &WeakHomogInstance, _: &WeakHomogInstance, _: &(), sol: &Solution) -> Result<Mapped> {
        match sol {
            Solution::WeaklyHomogeneous { color, seq } if *color == source.color => {
                weak_homog_refine(&source.coloring, source.color, seq)
            }
            other => Err(Error::TypeMismatch(format!(
                "expected a weakly homogeneous sequence for color {}, got {}",
                source.color,
                other.kind()
            ))),
        }
    }

    fn sample_target_solutions(&self, target: &WeakHomogInstance, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        weak_sequences(&target.coloring, target.color, rng)
            .into_iter()
            .map(|seq| Solution::WeaklyHomogeneous {
                color: target.color,
                seq,
            })
            .collect()
    }
}

/// The tree of the strings `σ_n` built by backward greedy search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTree {
    pub tree: FiniteTreeSnapshot,
    /// `sigmas[n] = σ_n`, increasing with last entry `n`.
    pub sigmas: Vec<Str>,
    pub color: u8,
}

impl SigmaTree {
    /// `σ_n` contains every `j < n` with `f(j, n) = i`; returns a violation.
    pub fn check_containment(&self, f: &PairColoring) -> Option<(u64, u64)> {
        for (n, s) in self.sigmas.iter().enumerate() {
            let n = n as u64;
            if let Some(j) = (0..n).find(|&j| f.color(j, n) == self.color && !s.items().contains(&j)) {
                return Some((j, n));
            }
        }
        None
    }
}

/// `σ_n` ends in `n`; each earlier entry is the largest `j` below the current
/// first entry `s₀` with `f(j, s₀) = i`.
pub fn tcac_to_sher_tree(f: &PairColoring, color: u8) -> Result<SigmaTree> {
    let all: Vec<u64> = (0..f.horizon()).collect();
    if let Some((x, y, z)) = semi_hereditary_on(f, color, &all) {
        return Err(Error::NotSemiHereditary(x, y, z));
    }
    let sigmas: Vec<Str> = (0..f.horizon())
        .map(|n| {
            let mut entries = vec![n];
            let mut s0 = n;
            while let Some(j) = (0..s0).rev().find(|&j| f.color(j, s0) == color) {
                entries.push(j);
                s0 = j;
            }
            entries.reverse();
            Str::new(entries)
        })
        .collect();
    let tree = FiniteTreeSnapshot::closure_of(sigmas.iter().cloned());
    Ok(SigmaTree { tree, sigmas, color })
}

/// A chain gives the weakly homogeneous entries of its deepest node; an
/// antichain `{σ_{n_j}}` gives `{n_j}`, homogeneous for `1−i`.
pub fn tcac_to_sher_solution(st: &SigmaTree, sol: &Solution) -> Result<Solution> {
    let nodes = sol
        .nodes()
        .ok_or_else(|| Error::TypeMismatch(format!("expected a tree solution, got {}", sol.kind())))?;
    if let Some(bad) = nodes.iter().find(|n| !st.tree.contains(n)) {
        return Err(Error::InvalidSolution(format!("{bad} is not a node of the tree")));
    }
    if let Some(v) = validate_solution(sol, Target::Tree(&st.tree))? {
        return Err(Error::InvalidSolution(v.to_string()));
    }
    match sol {
        Solution::Antichain { .. } => {
            let mut set: Vec<u64> = nodes.iter().filter_map(Str::last).collect();
            set.sort_unstable();
            Ok(Solution::Homogeneous {
                color: 1 - st.color,
                set,
            })
        }
        _ => {
            let deepest = nodes.iter().max_by_key(|n| n.len()).cloned().unwrap_or_else(Str::empty);
            Ok(Solution::WeaklyHomogeneous {
                color: st.color,
                seq: deepest.items().to_vec(),
            })
        }
    }
}

/// The homogeneous set problem for a semi-hereditary coloring, through the
/// chain/antichain problem on the `σ_n` tree.
pub struct SigmaTreeReduction;

impl Reduction for SigmaTreeReduction {
    type Source = WeakHomogInstance;
    type Target = FiniteTreeSnapshot;
    type Context = SigmaTree;

    fn name(&self) -> &'static str {
        "sigma-tree"
    }

    fn forward(&self, source: &WeakHomogInstance) -> Result<(FiniteTreeSnapshot, SigmaTree)> {
        let st = tcac_to_sher_tree(&source.coloring, source.color)?;
        Ok((st.tree.clone(), st))
    }

    fn backward(
        &self,
        source: &WeakHomogInstance,
        _: &FiniteTreeSnapshot,
        st: &SigmaTree,
        sol: &Solution,
    ) -> Result<Mapped> {
        match tcac_to_sher_solution(st, sol)? {
            Solution::WeaklyHomogeneous { seq, .. } => weak_homog_refine(&source.coloring, source.color, &seq),
            other => Ok(Mapped::exact(other)),
        }
    }

    fn sample_target_solutions(&self, target: &FiniteTreeSnapshot, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        tree_solutions(target, rng, true)
    }
}
