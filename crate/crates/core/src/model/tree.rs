use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{phi_code, Str};
use crate::error::{Error, Result};

/// A finite, downward-closed set of strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteTreeSnapshot {
    nodes: BTreeSet<Str>,
}

impl FiniteTreeSnapshot {
    /// Checks downward closure. An empty node set is accepted and denotes the
    /// empty tree.
    pub fn new(nodes: impl IntoIterator<Item = Str>) -> Result<Self> {
        let nodes: BTreeSet<Str> = nodes.into_iter().collect();
        for s in &nodes {
            if let Some(p) = s.parent() {
                if !nodes.contains(&p) {
                    return Err(Error::InvalidInstance(format!(
                        "tree not downward closed: {s} present but {p} missing"
                    )));
                }
            }
        }
        Ok(FiniteTreeSnapshot { nodes })
    }

    /// The downward closure of the given strings (ε always included).
    pub fn closure_of(strings: impl IntoIterator<Item = Str>) -> Self {
        let mut nodes = BTreeSet::new();
        nodes.insert(Str::empty());
        for s in strings {
            for p in s.proper_prefixes() {
                nodes.insert(p);
            }
            nodes.insert(s);
        }
        FiniteTreeSnapshot { nodes }
    }

    /// Full binary tree with all strings of length at most `depth`.
    pub fn perfect_binary(depth: usize) -> Self {
        let mut nodes = BTreeSet::new();
        let mut level = vec![Str::empty()];
        for d in 0..=depth {
            nodes.extend(level.iter().cloned());
            if d < depth {
                level = level.iter().flat_map(|s| [s.child(0), s.child(1)]).collect();
            }
        }
        FiniteTreeSnapshot { nodes }
    }

    /// ε, ⟨0⟩, ⟨0,0⟩, … up to `len` entries.
    pub fn chain(len: usize) -> Self {
        FiniteTreeSnapshot::closure_of([Str::new(vec![0; len])])
    }

    pub fn contains(&self, s: &Str) -> bool {
        self.nodes.contains(s)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Str> {
        self.nodes.iter()
    }

    pub fn nodes(&self) -> &BTreeSet<Str> {
        &self.nodes
    }

    /// Immediate children of `s`, in increasing order of the last entry.
    pub fn children(&self, s: &Str) -> Vec<Str> {
        let mut out: Vec<Str> = self
            .nodes
            .range(s.clone()..)
            .skip_while(|t| *t == s)
            .take_while(|t| t.len() > s.len() && t.items().starts_with(s.items()))
            .filter(|t| t.len() == s.len() + 1)
            .cloned()
            .collect();
        out.sort_by_key(|t| t.last());
        out
    }

    pub fn leaves(&self) -> Vec<Str> {
        self.nodes
            .iter()
            .filter(|s| self.children(s).is_empty())
            .cloned()
            .collect()
    }

    pub fn depth(&self) -> usize {
        self.nodes.iter().map(Str::len).max().unwrap_or(0)
    }

    pub fn is_binary(&self) -> bool {
        self.nodes.iter().all(Str::is_binary)
    }

    /// Every non-leaf binary node has both children.
    pub fn is_completely_branching(&self) -> bool {
        self.is_binary()
            && self.nodes.iter().all(|s| {
                let kids = self.children(s);
                kids.is_empty() || kids.len() == 2
            })
    }
}

/// A monotone stage-indexed enumeration of strings, observed up to `horizon`.
///
/// Each node records the first stage at which it is enumerated; `T[s]` is the
/// set of nodes with first stage `≤ s`. Only the union over all stages needs
/// to be downward closed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StagedTree {
    horizon: usize,
    #[serde(with = "stage_pairs")]
    first_stage: BTreeMap<Str, usize>,
    /// Declared bound on the number of immediate children of any node.
    max_branching: Option<usize>,
}

impl StagedTree {
    pub fn new(horizon: usize, entries: impl IntoIterator<Item = (usize, Str)>) -> Result<Self> {
        let mut first_stage: BTreeMap<Str, usize> = BTreeMap::new();
        for (stage, s) in entries {
            if stage > horizon {
                return Err(Error::InvalidInstance(format!(
                    "{s} enumerated at stage {stage} beyond horizon {horizon}"
                )));
            }
            first_stage
                .entry(s)
                .and_modify(|old| *old = (*old).min(stage))
                .or_insert(stage);
        }
        for s in first_stage.keys() {
            if let Some(p) = s.parent() {
                if !first_stage.contains_key(&p) {
                    return Err(Error::InvalidInstance(format!(
                        "enumeration not downward closed at horizon: {s} present but {p} missing"
                    )));
                }
            }
        }
        Ok(StagedTree {
            horizon,
            first_stage,
            max_branching: None,
        })
    }

    /// Every node of `tree` enumerated at stage 0.
    pub fn all_at_stage_zero(tree: &FiniteTreeSnapshot) -> Self {
        StagedTree {
            horizon: 0,
            first_stage: tree.iter().map(|s| (s.clone(), 0)).collect(),
            max_branching: None,
        }
    }

    /// Node σ enumerated at stage |σ|.
    pub fn by_length(tree: &FiniteTreeSnapshot) -> Self {
        StagedTree {
            horizon: tree.depth(),
            first_stage: tree.iter().map(|s| (s.clone(), s.len())).collect(),
            max_branching: None,
        }
    }

    pub fn with_max_branching(mut self, bound: usize) -> Self {
        self.max_branching = Some(bound);
        self
    }

    pub fn max_branching(&self) -> Option<usize> {
        self.max_branching
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn len(&self) -> usize {
        self.first_stage.len()
    }

    pub fn is_empty(&self) -> bool {
        self.first_stage.is_empty()
    }

    pub fn first_stage(&self, s: &Str) -> Option<usize> {
        self.first_stage.get(s).copied()
    }

    pub fn contains_at(&self, s: &Str, stage: usize) -> bool {
        self.first_stage(s).is_some_and(|t| t <= stage)
    }

    /// `T[s]`.
    pub fn stage_nodes(&self, stage: usize) -> BTreeSet<Str> {
        self.first_stage
            .iter()
            .filter(|(_, &t)| t <= stage)
            .map(|(s, _)| s.clone())
            .collect()
    }

    /// Nodes first enumerated exactly at `stage`.
    pub fn new_at(&self, stage: usize) -> Vec<Str> {
        self.first_stage
            .iter()
            .filter(|(_, &t)| t == stage)
            .map(|(s, _)| s.clone())
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Str, usize)> {
        self.first_stage.iter().map(|(s, &t)| (s, t))
    }

    /// The union of all stages up to the horizon.
    pub fn snapshot(&self) -> FiniteTreeSnapshot {
        FiniteTreeSnapshot {
            nodes: self.first_stage.keys().cloned().collect(),
        }
    }

    /// All nodes in order of apparition; same-stage nodes by increasing
    /// `phi_code`. Each entry carries its first stage and code.
    pub fn apparition_order(&self) -> Vec<(usize, BigUint, Str)> {
        let mut out: Vec<(usize, BigUint, Str)> = self
            .first_stage
            .iter()
            .map(|(s, &t)| (t, phi_code(s), s.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        out
    }

    /// Number of distinct immediate children per node at the horizon.
    pub fn widest_node(&self) -> Option<(Str, usize)> {
        let mut counts: BTreeMap<Str, usize> = BTreeMap::new();
        for s in self.first_stage.keys() {
            if let Some(p) = s.parent() {
                *counts.entry(p).or_default() += 1;
            }
        }
        counts
            .into_iter()
            .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)))
    }
}

/// `(node, stage)` pairs, since JSON map keys must be strings.
mod stage_pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::Str;

    pub fn serialize<S: Serializer>(map: &BTreeMap<Str, usize>, s: S) -> Result<S::Ok, S::Error> {
        map.iter().collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Str, usize>, D::Error> {
        Ok(Vec::<(Str, usize)>::deserialize(d)?.into_iter().collect())
    }
}
