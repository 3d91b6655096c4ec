//! Antichains of a c.e. tree from antichains of a completely branching binary
//! tree built by repeatedly splitting regions along split triples.

use std::collections::{BTreeMap, BTreeSet};

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{tree_solutions, Mapped, Reduction};
use crate::error::{Error, Result};
use crate::model::{phi_code, FiniteTreeSnapshot, Solution, SplitTriple, StagedTree, Str};

/// `{ρ : ρ ⪰ root and ρ ⊥ e for every exclusion e}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub root: Str,
    pub exclusions: Vec<Str>,
}

impl Region {
    pub fn contains(&self, rho: &Str) -> bool {
        self.root.is_prefix_eq_of(rho) && self.exclusions.iter().all(|e| e.incomparable(rho))
    }
}

/// One split: triple found at `stage` inside the region of `sigma`, new leaves
/// hung below `tau`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStep {
    pub stage: usize,
    pub triple: SplitTriple,
    pub sigma: Str,
    pub tau: Str,
    /// Regions right after this split.
    pub regions: BTreeMap<Str, Region>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitTripleOutput {
    pub tree: FiniteTreeSnapshot,
    /// Image of every node of the binary tree in the source tree.
    pub map: BTreeMap<Str, Str>,
    pub regions: BTreeMap<Str, Region>,
    pub trace: Vec<PartitionStep>,
}

/// Builds the completely branching binary tree and its image map. Each split
/// is followed by a partition check; the incomparability property of the map
/// is verified at the end.
pub fn reduce_tac_to_tcac_ce(t: &StagedTree) -> Result<SplitTripleOutput> {
    let mut s: BTreeSet<Str> = BTreeSet::from([Str::empty()]);
    let mut map = BTreeMap::from([(Str::empty(), Str::empty())]);
    let mut regions = BTreeMap::from([(
        Str::empty(),
        Region {
            root: Str::empty(),
            exclusions: Vec::new(),
        },
    )]);
    let mut trace = Vec::new();
    for stage in 0..=t.horizon() {
        let nodes = t.stage_nodes(stage);
        let kids = children_map(&nodes);
        if let Some(bound) = t.max_branching() {
            if let Some((node, c)) = kids.iter().find(|(_, c)| c.len() > bound) {
                return Err(Error::InfiniteBranching {
                    node: node.clone(),
                    children: c.len(),
                    bound,
                    antichain: c.iter().map(|&n| node.child(n)).collect(),
                });
            }
        }
        let mut mus: Vec<&Str> = kids.iter().filter(|(_, c)| c.len() >= 2).map(|(m, _)| m).collect();
        mus.sort_by_cached_key(|m| phi_code(m));
        loop {
            let found = mus.iter().find_map(|mu| {
                regions
                    .iter()
                    .find(|(_, r)| r.contains(mu))
                    .map(|(sigma, _)| ((*mu).clone(), sigma.clone()))
            });
            let Some((mu, sigma)) = found else { break };
            let c = &kids[&mu];
            let triple = SplitTriple {
                mu: mu.clone(),
                n0: c[0],
                n1: c[1],
            };
            let mut tau = sigma.clone();
            while s.contains(&tau.child(0)) {
                tau = tau.child(0);
            }
            for (i, n) in [(0, triple.n0), (1, triple.n1)] {
                let leaf = tau.child(i);
                let image = mu.child(n);
                s.insert(leaf.clone());
                map.insert(leaf.clone(), image.clone());
                regions.insert(
                    leaf,
                    Region {
                        root: image,
                        exclusions: Vec::new(),
                    },
                );
            }
            let r = regions.get_mut(&sigma).expect("region of sigma");
            r.exclusions.push(mu.child(triple.n0));
            r.exclusions.push(mu.child(triple.n1));
            trace.push(PartitionStep {
                stage,
                triple,
                sigma,
                tau,
                regions: regions.clone(),
            });
            check_partition(&nodes, &regions, &trace)?;
        }
    }
    check_star(&s, &map)?;
    Ok(SplitTripleOutput {
        tree: FiniteTreeSnapshot::new(s)?,
        map,
        regions,
        trace,
    })
}

/// Sorted child labels of each node present in `nodes`.
fn children_map(nodes: &BTreeSet<Str>) -> BTreeMap<Str, Vec<u64>> {
    let mut out: BTreeMap<Str, Vec<u64>> = BTreeMap::new();
    for n in nodes {
        if let (Some(p), Some(last)) = (n.parent(), n.last()) {
            out.entry(p).or_default().push(last);
        }
    }
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}

/// Regions are disjoint and pairwise incomparable; uncovered nodes lie below
/// a used split point.
fn check_partition(nodes: &BTreeSet<Str>, regions: &BTreeMap<Str, Region>, trace: &[PartitionStep]) -> Result<()> {
    let mut owner: BTreeMap<&Str, &Str> = BTreeMap::new();
    for rho in nodes {
        let mut holders = regions.iter().filter(|(_, r)| r.contains(rho)).map(|(s, _)| s);
        match (holders.next(), holders.next()) {
            (Some(a), Some(b)) => {
                return Err(Error::Unsound(format!("{rho} lies in the regions of {a} and {b}")));
            }
            (Some(a), None) => {
                owner.insert(rho, a);
            }
            _ => {
                if !trace.iter().any(|st| rho.is_prefix_eq_of(&st.triple.mu)) {
                    return Err(Error::Unsound(format!("{rho} is in no region and was not excluded")));
                }
            }
        }
    }
    let owned: Vec<(&Str, &Str)> = owner.into_iter().collect();
    for (i, (a, ra)) in owned.iter().enumerate() {
        for (b, rb) in &owned[i + 1..] {
            if ra != rb && !a.incomparable(b) {
                return Err(Error::Unsound(format!(
                    "{a} (region {ra}) and {b} (region {rb}) are comparable"
                )));
            }
        }
    }
    Ok(())
}

fn check_star(s: &BTreeSet<Str>, map: &BTreeMap<Str, Str>) -> Result<()> {
    let nodes: Vec<&Str> = s.iter().collect();
    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[i + 1..] {
            if a.incomparable(b) && !map[*a].incomparable(&map[*b]) {
                return Err(Error::Unsound(format!(
                    "{a} and {b} are incomparable but their images {} and {} are not",
                    map[*a], map[*b]
                )));
            }
        }
    }
    Ok(())
}

/// Images of an antichain of the binary tree; an antichain of the source.
pub fn map_antichain_through_image(a: &[Str], map: &BTreeMap<Str, Str>) -> Result<Vec<Str>> {
    a.iter()
        .map(|s| map.get(s).cloned().ok_or_else(|| Error::UnmappedNode(s.clone())))
        .collect()
}

/// Antichain problem on a c.e. tree to the antichain problem on a completely
/// branching binary tree.
pub struct SplitTripleReduction;

impl Reduction for SplitTripleReduction {
    type Source = StagedTree;
    type Target = FiniteTreeSnapshot;
    type Context = SplitTripleOutput;

    fn name(&self) -> &'static str {
        "tac-to-tcac-ce"
    }

    fn forward(&self, source: &StagedTree) -> Result<(FiniteTreeSnapshot, SplitTripleOutput)> {
        let out = reduce_tac_to_tcac_ce(source)?;
        Ok((out.tree.clone(), out))
    }

    fn backward(
        &self,
        _: &StagedTree,
        _: &FiniteTreeSnapshot,
        ctx: &SplitTripleOutput,
        sol: &Solution,
    ) -> Result<Mapped> {
        match sol {
            Solution::Antichain { nodes } => Ok(Mapped::exact(Solution::antichain(map_antichain_through_image(
                nodes, &ctx.map,
            )?))),
            other => Err(Error::TypeMismatch(format!(
                "expected an antichain, got {}",
                other.kind()
            ))),
        }
    }

    fn sample_target_solutions(&self, target: &FiniteTreeSnapshot, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        tree_solutions(target, rng, false)
    }
}
