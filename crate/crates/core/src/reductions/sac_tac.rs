//! A tree over ℕ whose nodes code ≺-successor walks through a branching set.

use rand_chacha::ChaCha8Rng;

use super::{tree_solutions, Mapped, Reduction};
use crate::error::{Error, Result};
use crate::model::{binary_from_index, binary_index, is_prefix, BranchingSet, FiniteTreeSnapshot, Solution, Str};

/// The coded tree with its decoding map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SacTree {
    pub tree: FiniteTreeSnapshot,
}

impl SacTree {
    /// The string coded by the last entry of `node`.
    pub fn decode(&self, node: &Str) -> Result<Str> {
        if !self.tree.contains(node) {
            return Err(Error::BadCode(format!("{node} is not a node of the coded tree")));
        }
        let last = node
            .last()
            .ok_or_else(|| Error::BadCode("the root codes no string".into()))?;
        Ok(binary_from_index(last))
    }
}

/// Nodes `⟨c₀, …, c_k⟩` where `c_j` codes `τ_j ∈ S`, `τ₀` is ≺-minimal in `S`
/// and each `τ_{j+1}` is an immediate `S`-successor of `τ_j`.
pub fn sac_to_tac_tree(s: &BranchingSet) -> Result<SacTree> {
    let members = s.members();
    let code = |t: &Str| binary_index(t).ok_or_else(|| Error::BadCode(format!("{t} has no binary index")));
    let immediate =
        |lo: &Str, hi: &Str| is_prefix(lo, hi) && !members.iter().any(|m| is_prefix(lo, m) && is_prefix(m, hi));
    let mut nodes = vec![Str::empty()];
    let mut frontier: Vec<(Str, Str)> = Vec::new();
    for t in members {
        if !members.iter().any(|m| is_prefix(m, t)) {
            frontier.push((Str::new(vec![code(t)?]), t.clone()));
        }
    }
    while let Some((node, last)) = frontier.pop() {
        for t in members.iter().filter(|m| immediate(&last, m)) {
            frontier.push((node.child(code(t)?), t.clone()));
        }
        nodes.push(node);
    }
    Ok(SacTree {
        tree: FiniteTreeSnapshot::new(nodes)?,
    })
}

pub struct SacTacReduction;

impl Reduction for SacTacReduction {
    type Source = BranchingSet;
    type Target = FiniteTreeSnapshot;
    type Context = SacTree;

    fn name(&self) -> &'static str {
        "sac-to-tac"
    }

    fn forward(&self, source: &BranchingSet) -> Result<(FiniteTreeSnapshot, SacTree)> {
        let t = sac_to_tac_tree(source)?;
        Ok((t.tree.clone(), t))
    }

    fn backward(&self, _: &BranchingSet, _: &FiniteTreeSnapshot, ctx: &SacTree, sol: &Solution) -> Result<Mapped> {
        let decode = |nodes: &[Str]| {
            nodes
                .iter()
                .filter(|n| !n.is_empty())
                .map(|n| ctx.decode(n))
                .collect::<Result<Vec<_>>>()
        };
        match sol {
            Solution::Antichain { nodes } => Ok(Mapped::exact(Solution::antichain(decode(nodes)?))),
            Solution::Chain { nodes } | Solution::Path { nodes } => Ok(Mapped::exact(Solution::chain(decode(nodes)?))),
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Family;
    use crate::reductions::{run_reduction, Soundness};

    fn set(members: &[&str]) -> BranchingSet {
        BranchingSet::generate(
            Family::Finite {
                members: members.iter().map(|m| Str::bits(m)).collect(),
            },
            4,
        )
        .unwrap()
    }

    #[test]
    fn immediate_successor_codes() {
        let s = set(&["0", "1", "00", "01"]);
        let t = sac_to_tac_tree(&s).unwrap();
        let (c0, c00) = (
            binary_index(&Str::bits("0")).unwrap(),
            binary_index(&Str::bits("00")).unwrap(),
        );
        let node = Str::new(vec![c0, c00]);
        assert!(t.tree.contains(&node));
        assert_eq!(t.decode(&node).unwrap(), Str::bits("00"));
        assert_eq!(t.tree.len(), 5);
        assert!(matches!(t.decode(&Str::new(vec![c00])), Err(Error::BadCode(_))));
    }

    #[test]
    fn flat_set() {
        let t = sac_to_tac_tree(&set(&["0", "1"])).unwrap();
        assert_eq!(t.tree.depth(), 1);
        assert_eq!(t.tree.len(), 3);
    }

    #[test]
    fn perfect_binary_round_trip() {
        let s = BranchingSet::perfect_binary(3);
        let report = run_reduction(&SacTacReduction, &s, 11).unwrap();
        assert_eq!(report.soundness, Soundness::Pass);
    }
}
