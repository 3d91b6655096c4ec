//! Certified sets of binary strings.
//!
//! Every catalog family is a regular language over `{0, 1}`, so questions about
//! its infinite extent ("is `{τ ∈ X : τ ⊥ σ}` infinite?", "is the tree stable?")
//! have exact answers computed on a small automaton.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{phi_code, sort_by_phi, Str};
use crate::error::{Error, Result};

/// Deterministic automaton over `{0, 1}`; missing transitions go to an implicit
/// dead state. State 0 is the start state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryDfa {
    next: Vec<[Option<usize>; 2]>,
    accept: Vec<bool>,
    /// `infinite[q]`: infinitely many accepted strings pass through `q`'s future.
    #[serde(skip)]
    infinite: Vec<bool>,
}

impl BinaryDfa {
    fn build(next: Vec<[Option<usize>; 2]>, accept: Vec<bool>) -> Self {
        let mut dfa = BinaryDfa {
            next,
            accept,
            infinite: Vec::new(),
        };
        dfa.infinite = dfa.compute_infinite();
        dfa
    }

    /// Builds from a transition table, `next[q][b]`, and the accepting flags.
    pub fn new(next: Vec<[Option<usize>; 2]>, accept: Vec<bool>) -> Result<Self> {
        if next.is_empty() || next.len() != accept.len() {
            return Err(Error::BadParams("automaton needs matching, nonempty tables".into()));
        }
        if next.iter().flatten().flatten().any(|&q| q >= next.len()) {
            return Err(Error::BadParams("transition to unknown state".into()));
        }
        Ok(BinaryDfa::build(next, accept))
    }

    /// The finite language `strings`, which must be binary.
    pub fn from_finite<'a>(strings: impl IntoIterator<Item = &'a Str>) -> Self {
        let mut next: Vec<[Option<usize>; 2]> = vec![[None, None]];
        let mut accept = vec![false];
        for s in strings {
            let mut q = 0;
            for &b in s.items() {
                let b = b as usize;
                assert!(b <= 1, "finite language must be binary");
                q = match next[q][b] {
                    Some(r) => r,
                    None => {
                        next.push([None, None]);
                        accept.push(false);
                        let r = next.len() - 1;
                        next[q][b] = Some(r);
                        r
                    }
                };
            }
            accept[q] = true;
        }
        BinaryDfa::build(next, accept)
    }

    /// `{prefix · β : |β| ≥ min_extra}`.
    pub fn cone(prefix: &Str, min_extra: usize) -> Self {
        let mut next = Vec::new();
        let mut accept = Vec::new();
        for (i, &b) in prefix.items().iter().enumerate() {
            let mut row = [None, None];
            row[b as usize] = Some(i + 1);
            next.push(row);
            accept.push(false);
        }
        for j in 0..=min_extra {
            let q = next.len();
            let r = if j == min_extra { q } else { q + 1 };
            next.push([Some(r), Some(r)]);
            accept.push(j == min_extra);
        }
        BinaryDfa::build(next, accept)
    }

    /// Language union, by the product construction.
    pub fn union(&self, other: &BinaryDfa) -> BinaryDfa {
        let mut index: HashMap<(Option<usize>, Option<usize>), usize> = HashMap::new();
        let mut next = Vec::new();
        let mut accept = Vec::new();
        let mut queue = VecDeque::new();
        let start = (Some(0), Some(0));
        index.insert(start, 0);
        next.push([None, None]);
        accept.push(false);
        queue.push_back(start);
        while let Some((a, b)) = queue.pop_front() {
            let q = index[&(a, b)];
            accept[q] = a.is_some_and(|a| self.accept[a]) || b.is_some_and(|b| other.accept[b]);
            for bit in 0..2 {
                let pair = (a.and_then(|a| self.next[a][bit]), b.and_then(|b| other.next[b][bit]));
                if pair == (None, None) {
                    continue;
                }
                let r = *index.entry(pair).or_insert_with(|| {
                    next.push([None, None]);
                    accept.push(false);
                    queue.push_back(pair);
                    next.len() - 1
                });
                next[q][bit] = Some(r);
            }
        }
        BinaryDfa::build(next, accept)
    }

    pub fn num_states(&self) -> usize {
        self.next.len()
    }

    fn compute_infinite(&self) -> Vec<bool> {
        let n = self.next.len();
        // co-reachable: can reach an accepting state
        let mut useful = self.accept.clone();
        loop {
            let mut changed = false;
            for q in 0..n {
                if !useful[q] && self.next[q].iter().flatten().any(|&r| useful[r]) {
                    useful[q] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        // states on a cycle inside the useful part
        let succ = |q: usize| {
            self.next[q]
                .iter()
                .flatten()
                .copied()
                .filter(|&r| useful[r])
                .collect::<Vec<_>>()
        };
        let mut on_cycle = vec![false; n];
        for q in (0..n).filter(|&q| useful[q]) {
            let mut seen = vec![false; n];
            let mut stack = succ(q);
            while let Some(r) = stack.pop() {
                if r == q {
                    on_cycle[q] = true;
                    break;
                }
                if !seen[r] {
                    seen[r] = true;
                    stack.extend(succ(r));
                }
            }
        }
        let mut inf = on_cycle;
        loop {
            let mut changed = false;
            for q in 0..n {
                if useful[q] && !inf[q] && succ(q).iter().any(|&r| inf[r]) {
                    inf[q] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        inf
    }

    fn ensure_infinite_table(&self) -> std::borrow::Cow<'_, [bool]> {
        if self.infinite.len() == self.next.len() {
            std::borrow::Cow::Borrowed(&self.infinite)
        } else {
            std::borrow::Cow::Owned(self.compute_infinite())
        }
    }

    pub fn state_after(&self, s: &Str) -> Option<usize> {
        let mut q = 0;
        for &b in s.items() {
            if b > 1 {
                return None;
            }
            q = self.next[q][b as usize]?;
        }
        Some(q)
    }

    pub fn accepts(&self, s: &Str) -> bool {
        self.state_after(s).is_some_and(|q| self.accept[q])
    }

    /// The language is infinite.
    pub fn is_infinite(&self) -> bool {
        self.ensure_infinite_table()[0]
    }

    /// Infinitely many members extend `s` (or equal it).
    pub fn cone_infinite(&self, s: &Str) -> bool {
        let inf = self.ensure_infinite_table();
        self.state_after(s).is_some_and(|q| inf[q])
    }

    /// Infinitely many members lie outside every cone `{τ : a ⪯ τ}`, `a ∈ avoid`.
    pub fn infinite_avoiding(&self, avoid: &[Str]) -> bool {
        let inf = self.ensure_infinite_table();
        if avoid.iter().any(|a| a.is_empty()) {
            return false;
        }
        if avoid.is_empty() {
            return inf[0];
        }
        // trie of the binary parts of `avoid`; `end` marks an excluded cone
        let mut kids: Vec<[Option<usize>; 2]> = vec![[None, None]];
        let mut end = vec![false];
        for a in avoid {
            let mut node = 0;
            for &x in a.items() {
                if x > 1 || end[node] {
                    break;
                }
                node = match kids[node][x as usize] {
                    Some(c) => c,
                    None => {
                        kids.push([None, None]);
                        end.push(false);
                        kids[node][x as usize] = Some(kids.len() - 1);
                        kids.len() - 1
                    }
                };
            }
            if a.items().iter().all(|&x| x <= 1) {
                end[node] = true;
            }
        }
        let mut stack = vec![(0usize, 0usize)];
        while let Some((node, q)) = stack.pop() {
            for (&r, &kid) in self.next[q].iter().zip(&kids[node]) {
                let Some(r) = r else { continue };
                match kid {
                    Some(c) if end[c] => {}
                    Some(c) => stack.push((c, r)),
                    None if inf[r] => return true,
                    None => {}
                }
            }
        }
        false
    }

    /// Members of length `1..=max_len` (ε excluded), by length then `phi_code`.
    pub fn members_up_to(&self, max_len: usize) -> Vec<Str> {
        let mut out = Vec::new();
        let mut level: Vec<(Str, usize)> = vec![(Str::empty(), 0)];
        for _ in 0..max_len {
            let mut next_level = Vec::new();
            for (s, q) in &level {
                for b in 0..2u64 {
                    if let Some(r) = self.next[*q][b as usize] {
                        next_level.push((s.child(b), r));
                    }
                }
            }
            let mut accepted: Vec<Str> = next_level
                .iter()
                .filter(|(_, r)| self.accept[*r])
                .map(|(s, _)| s.clone())
                .collect();
            sort_by_phi(&mut accepted);
            out.extend(accepted);
            level = next_level;
            if level.is_empty() {
                break;
            }
        }
        out
    }

    /// Whether `σ·0 ∈ L ⟺ σ·1 ∈ L` for every binary σ.
    pub fn is_completely_branching(&self) -> bool {
        self.reachable().into_iter().all(|q| {
            let a = self.next[q][0].is_some_and(|r| self.accept[r]);
            let b = self.next[q][1].is_some_and(|r| self.accept[r]);
            a == b
        })
    }

    /// Whether `L` is closed under prefixes (and contains ε when nonempty).
    pub fn is_prefix_closed(&self) -> bool {
        let reach = self.reachable();
        reach.iter().all(|&q| {
            self.accept[q] || {
                let mut seen = BTreeSet::new();
                let mut stack = vec![q];
                let mut ok = true;
                while let Some(r) = stack.pop() {
                    if self.accept[r] {
                        ok = false;
                        break;
                    }
                    if seen.insert(r) {
                        stack.extend(self.next[r].iter().flatten().copied());
                    }
                }
                ok
            }
        })
    }

    fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.next.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(q) = stack.pop() {
            for &r in self.next[q].iter().flatten() {
                if !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                }
            }
        }
        (0..self.next.len()).filter(|&q| seen[q]).collect()
    }

    /// Searches for a member σ with infinitely many members above it and
    /// infinitely many members incomparable with it. `None` means every member
    /// falls in one of the two stable classes.
    pub fn unstable_witness(&self) -> Option<Str> {
        let inf = self.ensure_infinite_table();
        // BFS over (state, "infinitely many members already branch off") pairs.
        type Node = (usize, bool);
        let mut parent: BTreeMap<Node, Option<(Node, u64)>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        parent.insert((0, false), None);
        queue.push_back((0, false));
        while let Some((q, f)) = queue.pop_front() {
            if f && self.accept[q] && inf[q] {
                let mut bits = Vec::new();
                let mut cur = (q, f);
                while let Some(Some((prev, b))) = parent.get(&cur) {
                    bits.push(*b);
                    cur = *prev;
                }
                bits.reverse();
                return Some(Str::new(bits));
            }
            for b in 0..2usize {
                let Some(r) = self.next[q][b] else { continue };
                let off = self.next[q][1 - b].is_some_and(|o| inf[o]);
                let key = (r, f || off);
                if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(key) {
                    e.insert(Some(((q, f), b as u64)));
                    queue.push_back(key);
                }
            }
        }
        None
    }
}

/// Antichain size schedule for the randomized solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Schedule {
    /// `k ↦ 2^{k+2}`
    Default,
    /// `k ↦ 2^{n+k+1}`
    Shifted { n: u32 },
}

impl Schedule {
    pub fn size(&self, k: usize) -> usize {
        1usize << self.exponent(k)
    }

    /// `log₂` of the round-`k` size.
    pub fn exponent(&self, k: usize) -> usize {
        match self {
            Schedule::Default => k + 2,
            Schedule::Shifted { n } => *n as usize + k + 1,
        }
    }

    /// `∑_k 1/size(k)`, the failure bound of the randomized construction.
    pub fn failure_bound(&self) -> f64 {
        match self {
            Schedule::Default => 0.5,
            Schedule::Shifted { n } => 0.5f64.powi(*n as i32),
        }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        match spec {
            "default" => Ok(Schedule::Default),
            _ => spec
                .strip_prefix("n=")
                .or_else(|| spec.strip_prefix("shifted:"))
                .and_then(|n| n.parse().ok())
                .map(|n| Schedule::Shifted { n })
                .ok_or_else(|| Error::BadParams(format!("unknown schedule {spec:?}"))),
        }
    }
}

impl std::fmt::Display for Schedule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Schedule::Default => f.write_str("default"),
            Schedule::Shifted { n } => write!(f, "n={n}"),
        }
    }
}

/// Catalog of rule-based families of binary strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// All nonempty binary strings.
    PerfectBinary,
    /// A spine `0ⁿ` with a tooth `0ⁿ·1` at every level; nonempty strings only.
    Comb,
    /// `{0ⁱ : i < k} ∪ {0ⁱ·1ᵐ : i < k, m ≥ 1}`: k disjoint infinite paths.
    KPath { k: u64 },
    /// The limit of the RT¹ₖ tree of the coloring `prefix · period^ω`.
    Rt1k { k: u8, prefix: Vec<u8>, period: Vec<u8> },
    /// Layers of sizes `schedule(0), schedule(1), …` stacked above a chain of
    /// planted elements, then a full cone above the last plant.
    OneBad { rounds: usize, schedule: Schedule },
    /// A finite set, listed explicitly.
    Finite { members: Vec<Str> },
}

impl Family {
    pub fn id(&self) -> &'static str {
        match self {
            Family::PerfectBinary => "perfect-binary",
            Family::Comb => "comb",
            Family::KPath { .. } => "k-path",
            Family::Rt1k { .. } => "rt1k",
            Family::OneBad { .. } => "one-bad",
            Family::Finite { .. } => "finite",
        }
    }

    /// The automaton recognizing the family.
    pub fn dfa(&self) -> Result<BinaryDfa> {
        Ok(match self {
            Family::PerfectBinary => BinaryDfa::cone(&Str::empty(), 1),
            Family::Comb => {
                // states: 0 start, 1 on spine, 2 tooth
                BinaryDfa::build(
                    vec![[Some(1), Some(2)], [Some(1), Some(2)], [None, None]],
                    vec![false, true, true],
                )
            }
            Family::KPath { k } => {
                if *k == 0 {
                    return Err(Error::BadParams("k-path needs k ≥ 1".into()));
                }
                let mut dfa = BinaryDfa::from_finite(&[Str::empty()]);
                for i in 0..*k {
                    let zeros = Str::new(vec![0; i as usize]);
                    dfa = dfa.union(&BinaryDfa::from_finite(std::slice::from_ref(&zeros)));
                    dfa = dfa.union(&ones_after(&zeros));
                }
                dfa
            }
            Family::Rt1k { k, prefix, period } => {
                if *k == 0 || period.is_empty() || prefix.iter().chain(period).any(|c| c >= k) {
                    return Err(Error::BadParams(
                        "rt1k family needs colors below k and a nonempty period".into(),
                    ));
                }
                let mut finite: Vec<Str> = (0..*k as usize).map(|i| Str::new(vec![0; i])).collect();
                let mut dfa = BinaryDfa::from_finite(&finite);
                for c in 0..*k {
                    let stem = Str::new(vec![0; c as usize]);
                    if period.contains(&c) {
                        dfa = dfa.union(&ones_after(&stem));
                    } else {
                        let count = prefix.iter().filter(|&&x| x == c).count();
                        for m in 1..=count {
                            let mut items = stem.items().to_vec();
                            items.extend(std::iter::repeat_n(1, m));
                            finite.push(Str::new(items));
                        }
                    }
                }
                dfa.union(&BinaryDfa::from_finite(&finite))
            }
            Family::OneBad { rounds, schedule } => {
                let mut dfa = BinaryDfa::from_finite(&[]);
                let mut plant = Str::empty();
                for k in 0..*rounds {
                    let m = schedule.exponent(k);
                    dfa = dfa.union(&exact_layer(&plant, m));
                    plant = plant.concat(&Str::new(vec![0; m]));
                }
                dfa.union(&BinaryDfa::cone(&plant, 1))
            }
            Family::Finite { members } => {
                if members.iter().any(|s| !s.is_binary()) {
                    return Err(Error::BadParams("finite family must be binary".into()));
                }
                BinaryDfa::from_finite(members)
            }
        })
    }

    /// The planted bad elements, for families that have them.
    pub fn plants(&self) -> Vec<Str> {
        match self {
            Family::OneBad { rounds, schedule } => {
                let mut out = Vec::new();
                let mut plant = Str::empty();
                for k in 0..*rounds {
                    plant = plant.concat(&Str::new(vec![0; schedule.exponent(k)]));
                    out.push(plant.clone());
                }
                out
            }
            _ => Vec::new(),
        }
    }

    /// Length of the deepest plant, 0 if none.
    pub fn plant_depth(&self) -> usize {
        self.plants().last().map_or(0, Str::len)
    }
}

fn ones_after(stem: &Str) -> BinaryDfa {
    let mut next = Vec::new();
    let mut accept = Vec::new();
    for (i, &b) in stem.items().iter().enumerate() {
        let mut row = [None, None];
        row[b as usize] = Some(i + 1);
        next.push(row);
        accept.push(false);
    }
    let q = next.len();
    next.push([None, Some(q + 1)]);
    accept.push(false);
    next.push([None, Some(q + 1)]);
    accept.push(true);
    BinaryDfa::build(next, accept)
}

/// `{prefix · β : |β| = m}`.
fn exact_layer(prefix: &Str, m: usize) -> BinaryDfa {
    let mut next = Vec::new();
    let mut accept = Vec::new();
    for (i, &b) in prefix.items().iter().enumerate() {
        let mut row = [None, None];
        row[b as usize] = Some(i + 1);
        next.push(row);
        accept.push(false);
    }
    for j in 0..=m {
        let q = next.len();
        next.push(if j == m {
            [None, None]
        } else {
            [Some(q + 1), Some(q + 1)]
        });
        accept.push(j == m);
    }
    BinaryDfa::build(next, accept)
}

/// A completely branching set of binary strings, materialized up to `depth`,
/// with the family it was generated from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingSet {
    family: Family,
    depth: usize,
    #[serde(skip)]
    members: Vec<Str>,
    #[serde(skip)]
    dfa: Option<BinaryDfa>,
}

impl BranchingSet {
    /// Materializes the family to `depth` and checks complete branching.
    pub fn generate(family: Family, depth: usize) -> Result<Self> {
        let dfa = family.dfa()?;
        if !dfa.is_completely_branching() {
            return Err(Error::InvalidInstance(format!(
                "family {} is not completely branching",
                family.id()
            )));
        }
        let members = dfa.members_up_to(depth);
        Ok(BranchingSet {
            family,
            depth,
            members,
            dfa: Some(dfa),
        })
    }

    pub fn perfect_binary(depth: usize) -> Self {
        BranchingSet::generate(Family::PerfectBinary, depth).expect("perfect binary family")
    }

    pub fn comb(depth: usize) -> Self {
        BranchingSet::generate(Family::Comb, depth).expect("comb family")
    }

    /// The hard family for the randomized solver: `rounds` layers sized by
    /// `schedule`, each with one planted bad element, topped by `depth` levels
    /// of a full binary cone.
    pub fn one_bad(depth: usize, rounds: usize, schedule: Schedule) -> Self {
        let family = Family::OneBad { rounds, schedule };
        let total = family.plant_depth() + depth;
        BranchingSet::generate(family, total).expect("one-bad family")
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Members in stream order: by length, then `phi_code`.
    pub fn members(&self) -> &[Str] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Str) -> bool {
        s.len() <= self.depth && !s.is_empty() && self.certificate().accepts(s)
    }

    pub fn try_certificate(&self) -> Option<&BinaryDfa> {
        self.dfa.as_ref()
    }

    pub fn certificate(&self) -> &BinaryDfa {
        self.dfa.as_ref().expect("branching set without certificate")
    }

    /// Rebuilds the derived fields after deserialization.
    pub fn rehydrate(self) -> Result<Self> {
        BranchingSet::generate(self.family, self.depth)
    }

    pub fn plants(&self) -> Vec<Str> {
        self.family.plants()
    }

    /// `{τ ∈ X : σ ⊥ τ, |τ| > |σ|}` is infinite.
    pub fn restricted_infinite(&self, chosen: &[Str]) -> bool {
        self.certificate().infinite_avoiding(chosen)
    }
}

/// Canonical ordering helper: sort by length, then `phi_code`.
pub fn stream_order(strings: &mut [Str]) {
    strings.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| phi_code(a).cmp(&phi_code(b))));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_binary_is_unstable_and_branching() {
        let dfa = Family::PerfectBinary.dfa().unwrap();
        assert!(dfa.is_completely_branching());
        assert!(dfa.unstable_witness().is_some());
        assert!(dfa.infinite_avoiding(&[Str::bits("0")]));
        assert!(!dfa.infinite_avoiding(&[Str::bits("0"), Str::bits("1")]));
    }

    #[test]
    fn comb_is_stable() {
        let dfa = Family::Comb.dfa().unwrap();
        assert!(dfa.is_completely_branching());
        assert_eq!(dfa.unstable_witness(), None);
        // the spine node has nothing longer and incomparable
        assert!(!dfa.infinite_avoiding(&[Str::bits("00")]));
        assert!(dfa.infinite_avoiding(&[Str::bits("001")]));
    }

    #[test]
    fn k_path_tree() {
        let dfa = Family::KPath { k: 2 }.dfa().unwrap();
        assert!(dfa.is_prefix_closed());
        assert!(dfa.accepts(&Str::bits("0111")));
        assert!(dfa.accepts(&Str::bits("111")));
        assert!(!dfa.accepts(&Str::bits("00")));
    }

    #[test]
    fn one_bad_layers() {
        let set = BranchingSet::one_bad(2, 2, Schedule::Default);
        // layer 0: 4 strings of length 2, layer 1: 8 strings of length 5, cone of 2 levels
        assert_eq!(set.len(), 4 + 8 + 2 + 4);
        assert_eq!(set.plants(), vec![Str::bits("00"), Str::bits("00000")]);
        assert_eq!(set.members()[0], Str::bits("00"));
        assert!(!set.restricted_infinite(&[Str::bits("00")]));
        assert!(set.restricted_infinite(&[Str::bits("01")]));
    }

    #[test]
    fn rt1k_limit_language() {
        let dfa = Family::Rt1k {
            k: 2,
            prefix: vec![1],
            period: vec![0],
        }
        .dfa()
        .unwrap();
        assert!(dfa.is_prefix_closed());
        assert!(dfa.accepts(&Str::bits("111")));
        assert!(dfa.accepts(&Str::bits("01")));
        assert!(!dfa.accepts(&Str::bits("011")));
        assert!(dfa.unstable_witness().is_none());
    }

    #[test]
    fn finite_members_order() {
        let dfa = BinaryDfa::from_finite(&[Str::bits("1"), Str::bits("0"), Str::bits("10")]);
        assert_eq!(
            dfa.members_up_to(3),
            vec![Str::bits("0"), Str::bits("1"), Str::bits("10")]
        );
        assert!(!dfa.is_infinite());
    }

    #[test]
    fn schedule_sizes() {
        assert_eq!(Schedule::Default.size(0), 4);
        assert_eq!(Schedule::Shifted { n: 3 }.size(0), 16);
        assert_eq!(Schedule::Shifted { n: 3 }.failure_bound(), 0.125);
        assert_eq!(Schedule::parse("n=2").unwrap(), Schedule::Shifted { n: 2 });
    }
}
