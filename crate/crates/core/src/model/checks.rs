use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::solution::find_triple;
use super::{phi_code, BinaryDfa, FiniteTreeSnapshot, LimitCertificate, PairColoring, Str};
use crate::error::{Error, Result};

/// `σ·0 ∈ X ⟺ σ·1 ∈ X` for every binary σ; non-binary members fail.
pub fn is_completely_branching(x: &BTreeSet<Str>) -> bool {
    x.iter().all(|s| match s.flip_last() {
        Some(sibling) => x.contains(&sibling),
        None => s.is_empty(),
    })
}

/// `(μ, n₀, n₁)` with `n₀ < n₁` and `μ, μ·n₀, μ·n₁ ∈ T`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SplitTriple {
    pub mu: Str,
    pub n0: u64,
    pub n1: u64,
}

/// All split triples with `μ ∈ within`, ordered by `phi_code(μ)`, then `n₀`, `n₁`.
pub fn find_split_triples<'a>(t: &FiniteTreeSnapshot, within: impl IntoIterator<Item = &'a Str>) -> Vec<SplitTriple> {
    let mut mus: Vec<&Str> = within.into_iter().filter(|m| t.contains(m)).collect();
    mus.sort_by_cached_key(|m| phi_code(m));
    mus.dedup();
    let mut out = Vec::new();
    for mu in mus {
        let kids: Vec<u64> = t.children(mu).iter().filter_map(Str::last).collect();
        for (a, &n0) in kids.iter().enumerate() {
            for &n1 in &kids[a + 1..] {
                out.push(SplitTriple { mu: mu.clone(), n0, n1 });
            }
        }
    }
    out
}

/// First `x < y < z` with `f(x,z) = f(y,z) = i` but `f(x,y) ≠ i`.
pub fn check_semi_hereditary(f: &PairColoring, i: u8) -> Option<(u64, u64, u64)> {
    semi_hereditary_on(f, i, &(0..f.horizon()).collect::<Vec<_>>())
}

/// As `check_semi_hereditary`, restricted to pairs from `set` (increasing).
pub fn semi_hereditary_on(f: &PairColoring, i: u8, set: &[u64]) -> Option<(u64, u64, u64)> {
    find_triple(set, |x, y, z| {
        f.color(x, z) == i && f.color(y, z) == i && f.color(x, y) != i
    })
    .map(|t| (t[0], t[1], t[2]))
}

/// First `x < y < z` with `f(x,y) = f(x,z) = i` but `f(y,z) ≠ i`.
pub fn check_semi_ancestry(f: &PairColoring, i: u8) -> Option<(u64, u64, u64)> {
    semi_ancestral_on(f, i, &(0..f.horizon()).collect::<Vec<_>>())
}

pub fn semi_ancestral_on(f: &PairColoring, i: u8, set: &[u64]) -> Option<(u64, u64, u64)> {
    find_triple(set, |x, y, z| {
        f.color(x, y) == i && f.color(x, z) == i && f.color(y, z) != i
    })
    .map(|t| (t[0], t[1], t[2]))
}

/// First `x < y < z` in `set` with `f(x,y) = f(y,z) ≠ f(x,z)`.
pub fn check_transitive_on(f: &PairColoring, set: &[u64]) -> Option<(u64, u64, u64)> {
    find_triple(set, |x, y, z| {
        f.color(x, y) == f.color(y, z) && f.color(x, z) != f.color(x, y)
    })
    .map(|t| (t[0], t[1], t[2]))
}

/// Exact description of an infinite tree, enough to decide stability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TreeCertificate {
    /// A binary tree given by a regular language.
    Language(BinaryDfa),
    /// The σₙ-tree of a coloring with the given limit certificate, for `color`.
    SigmaTree { limit: LimitCertificate, color: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableTreeVerdict {
    pub stable: bool,
    /// A node with infinitely many comparable and infinitely many incomparable nodes.
    pub witness: Option<Str>,
}

/// Every node either is eventually incomparable with all later nodes, or
/// eventually comparable with them.
pub fn check_stable_tree(cert: &TreeCertificate) -> Result<StableTreeVerdict> {
    match cert {
        TreeCertificate::Language(dfa) => {
            if !dfa.is_prefix_closed() {
                return Err(Error::InvalidInstance("language is not a tree".into()));
            }
            let witness = dfa.unstable_witness();
            Ok(StableTreeVerdict {
                stable: witness.is_none(),
                witness,
            })
        }
        TreeCertificate::SigmaTree { limit, .. } => match limit {
            // With constant rows, past `start` every σₙ is σ_{g(n)}·n where g(n)
            // is the largest j < n whose row has the tree color. The nodes then
            // form one spine with finitely many nodes hanging below each spine
            // node, so every node is stable.
            LimitCertificate::EventuallyPeriodic { pattern, .. }
                if pattern.iter().all(|r| r.iter().all(|&c| c == r[0])) =>
            {
                Ok(StableTreeVerdict {
                    stable: true,
                    witness: None,
                })
            }
            _ => Err(Error::NoCertificate(
                "σₙ-tree stability is only decided for eventually periodic stable colorings".into(),
            )),
        },
    }
}

/// How `check_stability_of_coloring` may decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StabilityMode {
    Exact,
    /// Column `x < H/2` counts as stable if constant on `[H/2, H)`.
    TailWindow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub stable: bool,
    pub exact: bool,
    /// A column without a limit.
    pub witness: Option<u64>,
    pub note: String,
}

/// Every column `f(x, ·)` has a limit.
pub fn check_stability_of_coloring(f: &PairColoring, mode: StabilityMode) -> Result<StabilityReport> {
    match mode {
        StabilityMode::Exact => {
            let cert = f
                .certificate()
                .ok_or_else(|| Error::NoCertificate("coloring carries no limit certificate".into()))?;
            let (witness, note) = match cert {
                LimitCertificate::EventuallyPeriodic { period, .. } => (
                    (0..*period).find(|&x| cert.limit(x) == Some(None)),
                    "exact: eventually periodic certificate".to_string(),
                ),
                LimitCertificate::Columns(cols) => (
                    (0..cols.len() as u64).find(|&x| cert.limit(x) == Some(None)),
                    format!("exact on the {} certified columns", cols.len()),
                ),
            };
            Ok(StabilityReport {
                stable: witness.is_none(),
                exact: true,
                witness,
                note,
            })
        }
        StabilityMode::TailWindow => {
            let h = f.horizon();
            let lo = h / 2;
            let witness = (0..lo).find(|&x| {
                let c = f.color(x, lo.max(x + 1));
                (lo.max(x + 1)..h).any(|y| f.color(x, y) != c)
            });
            Ok(StabilityReport {
                stable: witness.is_none(),
                exact: false,
                witness,
                note: format!("stable within tail window [{lo}, {h})"),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Family;

    #[test]
    fn completely_branching_examples() {
        let set = |xs: &[&str]| xs.iter().map(|s| Str::bits(s)).collect::<BTreeSet<_>>();
        assert!(is_completely_branching(&set(&["0", "1"])));
        assert!(!is_completely_branching(&set(&["0"])));
        assert!(is_completely_branching(&set(&["0", "1", "10", "11"])));
    }

    #[test]
    fn split_triples() {
        let t = FiniteTreeSnapshot::closure_of([Str::bits("0"), Str::bits("1")]);
        assert_eq!(
            find_split_triples(&t, t.iter()),
            vec![SplitTriple {
                mu: Str::empty(),
                n0: 0,
                n1: 1
            }]
        );
        let chain = FiniteTreeSnapshot::chain(4);
        assert!(find_split_triples(&chain, chain.iter()).is_empty());
        let full = FiniteTreeSnapshot::perfect_binary(2);
        assert_eq!(find_split_triples(&full, full.iter()).len(), 3);
    }

    #[test]
    fn semi_heredity_examples() {
        assert_eq!(check_semi_hereditary(&PairColoring::constant(6, 1), 1), None);
        let f = PairColoring::from_fn(2, 3, |x, y| if (x, y) == (0, 1) { 0 } else { 1 }).unwrap();
        assert_eq!(check_semi_hereditary(&f, 1), Some((0, 1, 2)));
    }

    #[test]
    fn semi_ancestry_examples() {
        assert_eq!(check_semi_ancestry(&PairColoring::constant(6, 0), 0), None);
        let f = PairColoring::from_fn(2, 3, |x, y| if (x, y) == (1, 2) { 0 } else { 1 }).unwrap();
        assert_eq!(check_semi_ancestry(&f, 1), Some((0, 1, 2)));
    }

    #[test]
    fn stable_tree_examples() {
        let comb = TreeCertificate::Language(
            Family::Comb
                .dfa()
                .unwrap()
                .union(&BinaryDfa::from_finite(&[Str::empty()])),
        );
        assert!(check_stable_tree(&comb).unwrap().stable);
        let full = TreeCertificate::Language(BinaryDfa::cone(&Str::empty(), 0));
        let v = check_stable_tree(&full).unwrap();
        assert!(!v.stable);
        assert!(v.witness.is_some());
    }

    #[test]
    fn coloring_stability_examples() {
        let zero = PairColoring::constant(10, 0);
        assert!(check_stability_of_coloring(&zero, StabilityMode::Exact).unwrap().stable);
        let alt = PairColoring::from_fn(2, 10, |_, y| (y % 2) as u8)
            .unwrap()
            .with_certificate(LimitCertificate::EventuallyPeriodic {
                start: 0,
                period: 2,
                pattern: vec![vec![0, 1], vec![0, 1]],
            });
        let r = check_stability_of_coloring(&alt, StabilityMode::Exact).unwrap();
        assert!(!r.stable);
        assert_eq!(r.witness, Some(0));
        let r = check_stability_of_coloring(&alt, StabilityMode::TailWindow).unwrap();
        assert!(!r.stable && !r.exact);
        let bare = PairColoring::from_fn(2, 4, |_, _| 0).unwrap();
        assert!(matches!(
            check_stability_of_coloring(&bare, StabilityMode::Exact),
            Err(Error::NoCertificate(_))
        ));
    }
}
