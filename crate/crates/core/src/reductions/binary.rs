//! Binary-tree reductions: paths to antichains in completely branching trees,
//! and trees built from colorings of single points.

use rand_chacha::ChaCha8Rng;

use super::{tree_solutions, Mapped, Reduction};
use crate::error::{Error, Result};
use crate::model::{FiniteTreeSnapshot, Solution, StagedTree, Str, UnaryColoring};

/// The siblings of the nodes along `path`: `{σ·(1−i) : σ·i ⪯ last}`.
pub fn path_to_antichain_binary(t: &FiniteTreeSnapshot, path: &[Str]) -> Result<Vec<Str>> {
    let Some(top) = path.iter().max_by_key(|s| s.len()) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::with_capacity(top.len());
    for j in 1..=top.len() {
        let sibling = top
            .prefix(j)
            .flip_last()
            .ok_or_else(|| Error::NotCompletelyBranching(top.prefix(j)))?;
        if !t.contains(&sibling) {
            return Err(Error::NotCompletelyBranching(top.prefix(j)));
        }
        out.push(sibling);
    }
    Ok(out)
}

/// Antichains of a completely branching binary tree from chains or antichains.
pub struct PathReduction;

impl Reduction for PathReduction {
    type Source = FiniteTreeSnapshot;
    type Target = FiniteTreeSnapshot;
    type Context = ();

    fn name(&self) -> &'static str {
        "path-to-antichain"
    }

    fn forward(&self, source: &FiniteTreeSnapshot) -> Result<(FiniteTreeSnapshot, ())> {
        if !source.is_completely_branching() {
            let bad = source
                .iter()
                .find(|s| s.flip_last().is_some_and(|b| !source.contains(&b)) || !s.is_binary())
                .cloned()
                .unwrap_or_else(Str::empty);
            return Err(Error::NotCompletelyBranching(bad));
        }
        Ok((source.clone(), ()))
    }

    fn backward(&self, source: &FiniteTreeSnapshot, _: &FiniteTreeSnapshot, _: &(), sol: &Solution) -> Result<Mapped> {
        match sol {
            Solution::Antichain { nodes } => Ok(Mapped::exact(Solution::antichain(nodes.clone()))),
            Solution::Chain { nodes } | Solution::Path { nodes } => Ok(Mapped::exact(Solution::antichain(
                path_to_antichain_binary(source, nodes)?,
            ))),
            other => Err(Error::TypeMismatch(format!(
                "expected a tree solution, got {}",
                other.kind()
            ))),
        }
    }

    fn sample_target_solutions(&self, target: &FiniteTreeSnapshot, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        tree_solutions(target, rng, true)
    }
}

/// `T₀ = {0^i : i < k}`; stage `s+1` adds `0^{f(s)}·1^{m+1}`, where `m` counts
/// the earlier points of color `f(s)`.
pub fn rt1k_instance(f: &UnaryColoring) -> StagedTree {
    let k = f.num_colors() as usize;
    let mut entries: Vec<(usize, Str)> = (0..k).map(|i| (0, Str::new(vec![0; i]))).collect();
    let mut seen = vec![0usize; k];
    for (s, &c) in f.values().iter().enumerate() {
        let c = c as usize;
        seen[c] += 1;
        let mut node = vec![0; c];
        node.extend(std::iter::repeat_n(1, seen[c]));
        entries.push((s + 1, Str::new(node)));
    }
    StagedTree::new(f.values().len(), entries).expect("prefixes enumerated earlier")
}

/// A node `0^c·1^m` yields the first `m` points of color `c`. Chains use their
/// deepest node, antichains the node with the most ones.
pub fn rt1k_solution_extract(f: &UnaryColoring, sol: &Solution) -> Result<Solution> {
    let nodes = sol
        .nodes()
        .ok_or_else(|| Error::TypeMismatch(format!("expected a tree solution, got {}", sol.kind())))?;
    let ones = |s: &Str| s.items().iter().filter(|&&b| b == 1).count();
    let best = match sol {
        Solution::Antichain { .. } => nodes.iter().max_by_key(|s| ones(s)),
        _ => nodes.iter().max_by_key(|s| s.len()),
    };
    let Some(node) = best else {
        return Ok(Solution::Homogeneous {
            color: 0,
            set: Vec::new(),
        });
    };
    let m = ones(node);
    let c = node.len() - m;
    if c >= f.num_colors() as usize {
        return Err(Error::DomainMismatch(format!("{node} is not a node of the tree")));
    }
    let class = f.class(c as u8);
    if class.len() < m {
        return Err(Error::DomainMismatch(format!("{node} is not a node of the tree")));
    }
    Ok(Solution::Homogeneous {
        color: c as u8,
        set: class[..m].to_vec(),
    })
}

pub struct Rt1kReduction;

impl Reduction for Rt1kReduction {
    type Source = UnaryColoring;
    type Target = StagedTree;
    type Context = ();

    fn name(&self) -> &'static str {
        "rt1k-tree"
    }

    fn forward(&self, source: &UnaryColoring) -> Result<(StagedTree, ())> {
        Ok((rt1k_instance(source), ()))
    }

    fn backward(&self, source: &UnaryColoring, _: &StagedTree, _: &(), sol: &Solution) -> Result<Mapped> {
        Ok(Mapped::exact(rt1k_solution_extract(source, sol)?))
    }

    fn sample_target_solutions(&self, target: &StagedTree, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        tree_solutions(&target.snapshot(), rng, true)
    }
}

/// Increasing strings `σ` such that, below `max σ`, exactly the points of the
/// color of `max σ` occur in `σ`. Every antichain has at most `k` elements.
pub fn stable_rt1k_tree(f: &UnaryColoring) -> FiniteTreeSnapshot {
    let values = f.values();
    let nodes =
        (0..values.len()).map(|x| Str::new((0..=x as u64).filter(|&y| values[y as usize] == values[x]).collect()));
    FiniteTreeSnapshot::closure_of(nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{run_reduction, Soundness};
    use crate::solvers::brute;

    #[test]
    fn flips_along_path() {
        let t = FiniteTreeSnapshot::perfect_binary(2);
        let path = [Str::empty(), Str::bits("0"), Str::bits("01")];
        assert_eq!(
            path_to_antichain_binary(&t, &path).unwrap(),
            vec![Str::bits("1"), Str::bits("00")]
        );
        let report = run_reduction(&PathReduction, &t, 4).unwrap();
        assert_eq!(report.soundness, Soundness::Pass);
    }

    #[test]
    fn missing_sibling() {
        let t = FiniteTreeSnapshot::closure_of([Str::bits("00"), Str::bits("1")]);
        assert!(matches!(
            path_to_antichain_binary(&t, &[Str::bits("00")]),
            Err(Error::NotCompletelyBranching(_))
        ));
    }

    #[test]
    fn rt1k_tree_shape() {
        let f = UnaryColoring::new(2, vec![0, 1, 1, 0, 1]).unwrap();
        let t = rt1k_instance(&f);
        let snap = t.snapshot();
        assert!(snap.contains(&Str::bits("11")));
        assert!(snap.contains(&Str::bits("0111")));
        assert!(!snap.contains(&Str::bits("111")));
        assert_eq!(t.first_stage(&Str::bits("0")), Some(0));
        assert_eq!(t.first_stage(&Str::bits("1")), Some(1));
        let sol = Solution::chain([
            Str::empty(),
            Str::bits("0"),
            Str::bits("01"),
            Str::bits("011"),
            Str::bits("0111"),
        ]);
        assert_eq!(
            rt1k_solution_extract(&f, &sol).unwrap(),
            Solution::Homogeneous {
                color: 1,
                set: vec![1, 2, 4]
            }
        );
        let report = run_reduction(&Rt1kReduction, &f, 2).unwrap();
        assert_eq!(report.soundness, Soundness::Pass);
    }

    #[test]
    fn stable_tree_antichains_bounded() {
        let f = UnaryColoring::new(1, vec![0; 4]).unwrap();
        let t = stable_rt1k_tree(&f);
        assert_eq!(brute::brute_force_longest_chain(&t).len(), 5);
        assert_eq!(brute::brute_force_max_antichain(&t).unwrap().len(), 1);
        let f = UnaryColoring::new(2, vec![0, 1, 0, 1, 0, 1]).unwrap();
        let t = stable_rt1k_tree(&f);
        assert_eq!(brute::brute_force_max_antichain(&t).unwrap().len(), 2);
    }
}
