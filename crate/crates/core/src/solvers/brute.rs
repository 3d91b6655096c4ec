//! Exhaustive and greedy oracles used to cross-check everything else.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::model::{
    check_transitive_on, is_prefix, semi_ancestral_on, semi_hereditary_on, FiniteTreeSnapshot, LinearOrderInstance,
    PairColoring, Str,
};

/// Default node limit for the exact antichain search.
pub const EXACT_LIMIT: usize = 24;

/// An antichain found by an oracle, with whether it is known to be maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntichainResult {
    pub nodes: Vec<Str>,
    /// `true`: maximum size; `false`: maximal only.
    pub exact: bool,
}

/// Maximum antichain by exhaustive search over the comparability graph.
pub fn brute_force_max_antichain(t: &FiniteTreeSnapshot) -> Result<Vec<Str>> {
    max_antichain_exact(&t.iter().cloned().collect::<Vec<_>>(), EXACT_LIMIT)
}

/// Maximum antichain of a finite tree: its leaves, since the root-to-leaf
/// paths cover the tree by as many chains.
pub fn tree_max_antichain(t: &FiniteTreeSnapshot) -> Vec<Str> {
    t.leaves()
}

/// Exact search up to `limit` strings, otherwise a maximal antichain built
/// from the widest level of the height layering.
pub fn max_antichain(strings: &[Str], limit: usize) -> AntichainResult {
    match max_antichain_exact(strings, limit) {
        Ok(nodes) => AntichainResult { nodes, exact: true },
        Err(_) => AntichainResult {
            nodes: layered_antichain(strings),
            exact: false,
        },
    }
}

/// Maximum antichain among `strings` (any finite set, not necessarily a tree).
pub fn max_antichain_exact(strings: &[Str], limit: usize) -> Result<Vec<Str>> {
    let n = strings.len();
    if n > limit.min(64) {
        return Err(Error::SizeLimit {
            size: n,
            limit: limit.min(64),
        });
    }
    // comparable[i]: bitmask of strings comparable with i
    let comparable: Vec<u64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && !strings[i].incomparable(&strings[j]))
                .fold(0u64, |m, j| m | (1 << j))
        })
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0u64;
    independent_search(&comparable, 0, all, &mut best);
    Ok((0..n)
        .filter(|&i| best & (1 << i) != 0)
        .map(|i| strings[i].clone())
        .collect())
}

fn independent_search(conflict: &[u64], chosen: u64, candidates: u64, best: &mut u64) {
    if candidates == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let bit = 1u64 << v;
    // with v
    independent_search(conflict, chosen | bit, candidates & !bit & !conflict[v], best);
    // without v; pointless if v has no conflicts among the candidates
    if conflict[v] & candidates != 0 {
        independent_search(conflict, chosen, candidates & !bit, best);
    }
}

/// Widest level of the height layering (height = longest chain below within
/// the set), extended greedily to a maximal antichain.
pub fn layered_antichain(strings: &[Str]) -> Vec<Str> {
    let heights = chain_heights(strings);
    let top = heights.iter().copied().max().unwrap_or(0);
    let mut best_level = 0;
    let mut best_count = 0;
    for h in 0..=top {
        let c = heights.iter().filter(|&&x| x == h).count();
        if c > best_count {
            best_count = c;
            best_level = h;
        }
    }
    let mut out: Vec<Str> = strings
        .iter()
        .zip(&heights)
        .filter(|(_, &h)| h == best_level)
        .map(|(s, _)| s.clone())
        .collect();
    for s in strings {
        if out.iter().all(|t| t.incomparable(s)) {
            out.push(s.clone());
        }
    }
    out
}

/// `heights[i]`: number of strings strictly below `strings[i]` on a longest chain.
fn chain_heights(strings: &[Str]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..strings.len()).collect();
    order.sort_by_key(|&i| strings[i].len());
    let mut h = vec![0usize; strings.len()];
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[..k] {
            if is_prefix(&strings[j], &strings[i]) {
                h[i] = h[i].max(h[j] + 1);
            }
        }
    }
    h
}

/// Longest chain of the tree.
pub fn brute_force_longest_chain(t: &FiniteTreeSnapshot) -> Vec<Str> {
    longest_chain(&t.iter().cloned().collect::<Vec<_>>())
}

/// Longest ≺-chain among `strings`, shortest element first.
pub fn longest_chain(strings: &[Str]) -> Vec<Str> {
    let mut order: Vec<usize> = (0..strings.len()).collect();
    order.sort_by(|&a, &b| {
        strings[a]
            .len()
            .cmp(&strings[b].len())
            .then_with(|| strings[a].cmp(&strings[b]))
    });
    let mut len = vec![1usize; strings.len()];
    let mut prev = vec![None; strings.len()];
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[..k] {
            if is_prefix(&strings[j], &strings[i]) && len[j] + 1 > len[i] {
                len[i] = len[j] + 1;
                prev[i] = Some(j);
            }
        }
    }
    let Some(mut cur) = order
        .iter()
        .copied()
        .max_by(|&a, &b| len[a].cmp(&len[b]).then_with(|| b.cmp(&a)))
    else {
        return Vec::new();
    };
    let mut out = vec![strings[cur].clone()];
    while let Some(p) = prev[cur] {
        out.push(strings[p].clone());
        cur = p;
    }
    out.reverse();
    out
}

/// A maximal antichain built greedily in a random order.
pub fn random_maximal_antichain(strings: &[Str], rng: &mut impl Rng) -> Vec<Str> {
    let mut order: Vec<&Str> = strings.iter().collect();
    order.shuffle(rng);
    let mut out: Vec<Str> = Vec::new();
    for s in order {
        if out.iter().all(|t| t.incomparable(s)) {
            out.push(s.clone());
        }
    }
    out
}

/// Every antichain of `strings` (including ∅); only for very small sets.
pub fn all_antichains(strings: &[Str]) -> Result<Vec<Vec<Str>>> {
    const LIMIT: usize = 16;
    if strings.len() > LIMIT {
        return Err(Error::SizeLimit {
            size: strings.len(),
            limit: LIMIT,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << strings.len()) {
        let picked: Vec<&Str> = (0..strings.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| &strings[i])
            .collect();
        let ok = picked
            .iter()
            .enumerate()
            .all(|(i, a)| picked[i + 1..].iter().all(|b| a.incomparable(b)));
        if ok {
            out.push(picked.into_iter().cloned().collect());
        }
    }
    Ok(out)
}

/// A root-to-node chain: the node and all its prefixes that are in `strings`.
pub fn chain_below(strings: &[Str], top: &Str) -> Vec<Str> {
    let mut out: Vec<Str> = strings.iter().filter(|s| s.is_prefix_eq_of(top)).cloned().collect();
    out.sort_by_key(Str::len);
    out
}

/// Largest set homogeneous for `color`, by exhaustive clique search.
pub fn max_homogeneous(f: &PairColoring, color: u8) -> Vec<u64> {
    let n = f.horizon() as usize;
    assert!(n <= 64, "exact homogeneous search is limited to 64 points");
    let adj: Vec<u64> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| y != x && f.color(x as u64, y as u64) == color)
                .fold(0u64, |m, y| m | (1 << y))
        })
        .collect();
    let mut best = 0u64;
    clique_search(&adj, 0, if n == 64 { u64::MAX } else { (1u64 << n) - 1 }, &mut best);
    (0..n as u64).filter(|&x| best & (1 << x) != 0).collect()
}

fn clique_search(adj: &[u64], chosen: u64, candidates: u64, best: &mut u64) {
    if candidates == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let bit = 1u64 << v;
    clique_search(adj, chosen | bit, candidates & adj[v], best);
    clique_search(adj, chosen, candidates & !bit, best);
}

/// A maximal set homogeneous for `color`, grown greedily in a random order.
pub fn random_homogeneous(f: &PairColoring, color: u8, rng: &mut impl Rng) -> Vec<u64> {
    let mut order: Vec<u64> = (0..f.horizon()).collect();
    order.shuffle(rng);
    let mut set: Vec<u64> = Vec::new();
    for x in order {
        if set.iter().all(|&y| f.color(x, y) == color) {
            set.push(x);
        }
    }
    set.sort_unstable();
    set
}

/// A property of finite sets of naturals checked on triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleProperty {
    Transitive,
    SemiAncestral(u8),
    SemiHereditary(u8),
}

impl TripleProperty {
    pub fn holds(&self, f: &PairColoring, set: &[u64]) -> bool {
        match self {
            TripleProperty::Transitive => check_transitive_on(f, set).is_none(),
            TripleProperty::SemiAncestral(i) => semi_ancestral_on(f, *i, set).is_none(),
            TripleProperty::SemiHereditary(i) => semi_hereditary_on(f, *i, set).is_none(),
        }
    }
}

/// A maximal set with `prop`, grown greedily in a random order.
pub fn random_maximal_set(f: &PairColoring, prop: TripleProperty, rng: &mut impl Rng) -> Vec<u64> {
    let mut order: Vec<u64> = (0..f.horizon()).collect();
    order.shuffle(rng);
    let mut set: Vec<u64> = Vec::new();
    for x in order {
        let pos = set.partition_point(|&y| y < x);
        set.insert(pos, x);
        if !prop.holds(f, &set) {
            set.remove(pos);
        }
    }
    set
}

/// Largest set with `prop` by exhaustive subset search; horizon ≤ 16.
pub fn max_set_exact(f: &PairColoring, prop: TripleProperty) -> Result<Vec<u64>> {
    let n = f.horizon() as usize;
    if n > 16 {
        return Err(Error::SizeLimit { size: n, limit: 16 });
    }
    let mut best: Vec<u64> = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize <= best.len() {
            continue;
        }
        let set: Vec<u64> = (0..n as u64).filter(|&x| mask & (1 << x) != 0).collect();
        if prop.holds(f, &set) {
            best = set;
        }
    }
    Ok(best)
}

/// Longest sequence increasing in ℕ and increasing (`ascending`) or
/// decreasing in the order.
pub fn longest_monotone(l: &LinearOrderInstance, ascending: bool) -> Vec<u64> {
    let n = l.horizon() as usize;
    let mut len = vec![1usize; n];
    let mut prev = vec![None; n];
    for y in 0..n {
        for x in 0..y {
            if l.lt(x as u64, y as u64) == ascending && len[x] + 1 > len[y] {
                len[y] = len[x] + 1;
                prev[y] = Some(x);
            }
        }
    }
    let Some(mut cur) = (0..n).max_by(|&a, &b| len[a].cmp(&len[b]).then_with(|| b.cmp(&a))) else {
        return Vec::new();
    };
    let mut out = vec![cur as u64];
    while let Some(p) = prev[cur] {
        out.push(p as u64);
        cur = p;
    }
    out.reverse();
    out
}

/// A maximal monotone sequence grown greedily from a random start.
pub fn random_monotone(l: &LinearOrderInstance, ascending: bool, rng: &mut impl Rng) -> Vec<u64> {
    let n = l.horizon();
    if n == 0 {
        return Vec::new();
    }
    let mut seq = vec![rng.gen_range(0..n)];
    for y in seq[0] + 1..n {
        if l.lt(*seq.last().unwrap(), y) == ascending && rng.gen_bool(0.7) {
            seq.push(y);
        }
    }
    seq
}

#[cfg(test)]
mod tests {

    #[test]
    fn leaves_match_exhaustive_search() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let t = crate::gen::random_staged_tree(&mut rng, 5, 3, 18, 4).snapshot();
            assert_eq!(
                tree_max_antichain(&t).len(),
                brute_force_max_antichain(&t).unwrap().len()
            );
        }
    }

    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn full_tree_depth_three() {
        let t = FiniteTreeSnapshot::perfect_binary(3);
        assert_eq!(brute_force_max_antichain(&t).unwrap().len(), 8);
        assert_eq!(brute_force_longest_chain(&t).len(), 4);
    }

    #[test]
    fn chain_of_five() {
        let t = FiniteTreeSnapshot::chain(4);
        assert_eq!(t.len(), 5);
        assert_eq!(brute_force_max_antichain(&t).unwrap().len(), 1);
        assert_eq!(brute_force_longest_chain(&t).len(), 5);
    }

    #[test]
    fn exact_limit_enforced() {
        let t = FiniteTreeSnapshot::perfect_binary(5);
        assert!(matches!(brute_force_max_antichain(&t), Err(Error::SizeLimit { .. })));
        let r = max_antichain(&t.iter().cloned().collect::<Vec<_>>(), 24);
        assert!(!r.exact);
        assert_eq!(r.nodes.len(), 32);
    }

    #[test]
    fn exact_matches_subset_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let strings: Vec<Str> = (0..rng.gen_range(1..12))
                .map(|_| Str::new((0..rng.gen_range(0..4)).map(|_| rng.gen_range(0..2)).collect()))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            let best = all_antichains(&strings)
                .unwrap()
                .into_iter()
                .map(|a| a.len())
                .max()
                .unwrap();
            assert_eq!(max_antichain_exact(&strings, 24).unwrap().len(), best);
        }
    }

    #[test]
    fn homogeneous_and_monotone() {
        let f = PairColoring::constant(8, 1);
        assert_eq!(max_homogeneous(&f, 1).len(), 8);
        assert!(max_homogeneous(&f, 0).len() <= 1);
        let l = LinearOrderInstance::reverse(6);
        assert_eq!(longest_monotone(&l, false), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(longest_monotone(&l, true).len(), 1);
    }

    #[test]
    fn greedy_sets_have_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = PairColoring::from_fn(2, 12, |x, y| ((x * 7 + y * 3) % 5 < 2) as u8).unwrap();
        for prop in [
            TripleProperty::Transitive,
            TripleProperty::SemiAncestral(1),
            TripleProperty::SemiHereditary(0),
        ] {
            let s = random_maximal_set(&f, prop, &mut rng);
            assert!(prop.holds(&f, &s));
            let best = max_set_exact(&f, prop).unwrap();
            assert!(best.len() >= s.len());
        }
    }
}
