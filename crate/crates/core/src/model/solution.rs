use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_prefix, BranchingSet, FiniteTreeSnapshot, LinearOrderInstance, PairColoring, Str, UnaryColoring};
use crate::error::{Error, Result};

/// A solution to one of the chain/antichain or Ramsey-type statements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Solution {
    /// Strictly ≺-increasing.
    Chain { nodes: Vec<Str> },
    /// Pairwise ⊥.
    Antichain { nodes: Vec<Str> },
    /// Starts at ε, each node an immediate extension of the previous one.
    Path { nodes: Vec<Str> },
    /// Every pair has `color`.
    Homogeneous { color: u8, set: Vec<u64> },
    /// Increasing in ℕ and in `<_L`.
    Ascending { seq: Vec<u64> },
    /// Increasing in ℕ, decreasing in `<_L`.
    Descending { seq: Vec<u64> },
    /// Increasing, consecutive pairs have `color`.
    WeaklyHomogeneous { color: u8, seq: Vec<u64> },
    /// Transitive for every color: `f(x,y) = f(y,z) = c ⟹ f(x,z) = c`.
    Transitive { set: Vec<u64> },
    /// The coloring restricted to `set` has semi-ancestry for `color`.
    SemiAncestral { color: u8, set: Vec<u64> },
    /// The coloring restricted to `set` is semi-hereditary for `color`.
    SemiHereditary { color: u8, set: Vec<u64> },
}

impl Solution {
    pub fn kind(&self) -> &'static str {
        match self {
            Solution::Chain { .. } => "chain",
            Solution::Antichain { .. } => "antichain",
            Solution::Path { .. } => "path",
            Solution::Homogeneous { .. } => "homogeneous",
            Solution::Ascending { .. } => "ascending",
            Solution::Descending { .. } => "descending",
            Solution::WeaklyHomogeneous { .. } => "weakly-homogeneous",
            Solution::Transitive { .. } => "transitive",
            Solution::SemiAncestral { .. } => "semi-ancestral",
            Solution::SemiHereditary { .. } => "semi-hereditary",
        }
    }

    pub fn antichain(nodes: impl IntoIterator<Item = Str>) -> Self {
        Solution::Antichain {
            nodes: nodes.into_iter().collect(),
        }
    }

    pub fn chain(nodes: impl IntoIterator<Item = Str>) -> Self {
        Solution::Chain {
            nodes: nodes.into_iter().collect(),
        }
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        match self {
            Solution::Chain { nodes } | Solution::Antichain { nodes } | Solution::Path { nodes } => nodes.len(),
            Solution::Homogeneous { set, .. }
            | Solution::Transitive { set }
            | Solution::SemiAncestral { set, .. }
            | Solution::SemiHereditary { set, .. } => set.len(),
            Solution::Ascending { seq } | Solution::Descending { seq } | Solution::WeaklyHomogeneous { seq, .. } => {
                seq.len()
            }
        }
    }

    pub fn nodes(&self) -> Option<&[Str]> {
        match self {
            Solution::Chain { nodes } | Solution::Antichain { nodes } | Solution::Path { nodes } => Some(nodes),
            _ => None,
        }
    }

    pub fn numbers(&self) -> Option<&[u64]> {
        match self {
            Solution::Homogeneous { set, .. }
            | Solution::Transitive { set }
            | Solution::SemiAncestral { set, .. }
            | Solution::SemiHereditary { set, .. } => Some(set),
            Solution::Ascending { seq } | Solution::Descending { seq } | Solution::WeaklyHomogeneous { seq, .. } => {
                Some(seq)
            }
            _ => None,
        }
    }
}

/// What a solution is checked against.
#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    Tree(&'a FiniteTreeSnapshot),
    Set(&'a BranchingSet),
    Coloring(&'a PairColoring),
    Order(&'a LinearOrderInstance),
    Unary(&'a UnaryColoring),
}

/// The witness that a solution fails its defining property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Violation {
    Strings { reason: String, witness: Vec<Str> },
    Numbers { reason: String, witness: Vec<u64> },
}

impl Violation {
    fn strings(reason: &str, witness: Vec<Str>) -> Self {
        Violation::Strings {
            reason: reason.to_string(),
            witness,
        }
    }

    fn numbers(reason: &str, witness: Vec<u64>) -> Self {
        Violation::Numbers {
            reason: reason.to_string(),
            witness,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Strings { reason, witness } => {
                let w: Vec<String> = witness.iter().map(Str::to_string).collect();
                write!(f, "{reason}: ({})", w.join(", "))
            }
            Violation::Numbers { reason, witness } => {
                let w: Vec<String> = witness.iter().map(u64::to_string).collect();
                write!(f, "{reason}: ({})", w.join(", "))
            }
        }
    }
}

/// Checks `sol` against `target`. `Ok(None)` means valid; `Ok(Some(v))` carries
/// the violating pair or triple. Mismatched kinds and out-of-domain elements
/// are errors.
pub fn validate_solution(sol: &Solution, target: Target<'_>) -> Result<Option<Violation>> {
    match (sol, target) {
        (Solution::Chain { nodes } | Solution::Antichain { nodes } | Solution::Path { nodes }, Target::Tree(t)) => {
            if let Some(s) = nodes.iter().find(|s| !t.contains(s)) {
                return Err(Error::DomainMismatch(format!("{s} is not in the tree")));
            }
            Ok(check_strings(sol))
        }
        (Solution::Chain { nodes } | Solution::Antichain { nodes }, Target::Set(x)) => {
            if let Some(s) = nodes.iter().find(|s| !x.contains(s)) {
                return Err(Error::DomainMismatch(format!("{s} is not in the set")));
            }
            Ok(check_strings(sol))
        }
        (Solution::Ascending { seq } | Solution::Descending { seq }, Target::Order(l)) => {
            if let Some(&x) = seq.iter().find(|&&x| x >= l.horizon()) {
                return Err(Error::DomainMismatch(format!(
                    "{x} outside order horizon {}",
                    l.horizon()
                )));
            }
            let want_lt = matches!(sol, Solution::Ascending { .. });
            for w in seq.windows(2) {
                if w[0] >= w[1] {
                    return Ok(Some(Violation::numbers("not increasing in ℕ", w.to_vec())));
                }
                if l.lt(w[0], w[1]) != want_lt {
                    return Ok(Some(Violation::numbers("not monotone in the order", w.to_vec())));
                }
            }
            Ok(None)
        }
        (Solution::Homogeneous { color, set }, Target::Unary(u)) => {
            if let Some(&x) = set.iter().find(|&&x| x >= u.horizon()) {
                return Err(Error::DomainMismatch(format!(
                    "{x} outside coloring horizon {}",
                    u.horizon()
                )));
            }
            if let Some(w) = set.windows(2).find(|w| w[0] >= w[1]) {
                return Ok(Some(Violation::numbers("not strictly increasing", w.to_vec())));
            }
            Ok(set
                .iter()
                .find(|&&x| u.color(x) != *color)
                .map(|&x| Violation::numbers("element of the wrong color", vec![x])))
        }
        (_, Target::Coloring(f)) if sol.numbers().is_some() => {
            let nums = sol.numbers().unwrap();
            if let Some(&x) = nums.iter().find(|&&x| x >= f.horizon()) {
                return Err(Error::DomainMismatch(format!(
                    "{x} outside coloring horizon {}",
                    f.horizon()
                )));
            }
            if matches!(sol, Solution::Ascending { .. } | Solution::Descending { .. }) {
                return Err(Error::TypeMismatch("sequences are checked against an order".into()));
            }
            Ok(check_numbers(sol, f))
        }
        _ => Err(Error::TypeMismatch(format!(
            "cannot check a {} solution against this instance",
            sol.kind()
        ))),
    }
}

fn check_strings(sol: &Solution) -> Option<Violation> {
    match sol {
        Solution::Chain { nodes } => nodes
            .windows(2)
            .find(|w| !is_prefix(&w[0], &w[1]))
            .map(|w| Violation::strings("not a strict prefix chain", w.to_vec())),
        Solution::Path { nodes } => {
            if nodes.first().is_some_and(|s| !s.is_empty()) {
                return Some(Violation::strings(
                    "path does not start at the root",
                    vec![nodes[0].clone()],
                ));
            }
            nodes
                .windows(2)
                .find(|w| !(is_prefix(&w[0], &w[1]) && w[1].len() == w[0].len() + 1))
                .map(|w| Violation::strings("not an immediate extension", w.to_vec()))
        }
        Solution::Antichain { nodes } => {
            for (i, a) in nodes.iter().enumerate() {
                for b in &nodes[i + 1..] {
                    if !a.incomparable(b) {
                        return Some(Violation::strings("comparable pair", vec![a.clone(), b.clone()]));
                    }
                }
            }
            None
        }
        _ => unreachable!("string solutions only"),
    }
}

fn check_numbers(sol: &Solution, f: &PairColoring) -> Option<Violation> {
    let nums = sol.numbers().unwrap();
    let strictly_increasing = |xs: &[u64]| xs.windows(2).find(|w| w[0] >= w[1]).map(|w| w.to_vec());
    if let Some(w) = strictly_increasing(nums) {
        return Some(Violation::numbers("not strictly increasing", w));
    }
    match sol {
        Solution::Homogeneous { color, set } => {
            for (i, &x) in set.iter().enumerate() {
                for &y in &set[i + 1..] {
                    if f.color(x, y) != *color {
                        return Some(Violation::numbers("pair of the wrong color", vec![x, y]));
                    }
                }
            }
            None
        }
        Solution::WeaklyHomogeneous { color, seq } => seq
            .windows(2)
            .find(|w| f.color(w[0], w[1]) != *color)
            .map(|w| Violation::numbers("consecutive pair of the wrong color", w.to_vec())),
        Solution::Transitive { set } => find_triple(set, |x, y, z| {
            let (a, b, c) = (f.color(x, y), f.color(y, z), f.color(x, z));
            a == b && c != a
        })
        .map(|t| Violation::numbers("not transitive", t)),
        Solution::SemiAncestral { color, set } => find_triple(set, |x, y, z| {
            f.color(x, y) == *color && f.color(x, z) == *color && f.color(y, z) != *color
        })
        .map(|t| Violation::numbers("semi-ancestry fails", t)),
        Solution::SemiHereditary { color, set } => find_triple(set, |x, y, z| {
            f.color(x, z) == *color && f.color(y, z) == *color && f.color(x, y) != *color
        })
        .map(|t| Violation::numbers("semi-heredity fails", t)),
        _ => unreachable!("number solutions only"),
    }
}

/// First `x < y < z` in `set` (given increasing) with `bad(x, y, z)`.
pub(crate) fn find_triple(set: &[u64], mut bad: impl FnMut(u64, u64, u64) -> bool) -> Option<Vec<u64>> {
    for k in 2..set.len() {
        for j in 1..k {
            for i in 0..j {
                if bad(set[i], set[j], set[k]) {
                    return Some(vec![set[i], set[j], set[k]]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_in_binary_tree() {
        let t = FiniteTreeSnapshot::perfect_binary(2);
        let sol = Solution::antichain([Str::bits("0"), Str::bits("1")]);
        assert_eq!(validate_solution(&sol, Target::Tree(&t)).unwrap(), None);
    }

    #[test]
    fn broken_chain_reports_pair() {
        let t = FiniteTreeSnapshot::perfect_binary(2);
        let sol = Solution::chain([Str::bits("0"), Str::bits("01"), Str::bits("1")]);
        let v = validate_solution(&sol, Target::Tree(&t)).unwrap().unwrap();
        assert_eq!(
            v,
            Violation::strings("not a strict prefix chain", vec![Str::bits("01"), Str::bits("1")])
        );
    }

    #[test]
    fn homogeneous_against_constant() {
        let f = PairColoring::constant(5, 1);
        let sol = Solution::Homogeneous {
            color: 1,
            set: vec![0, 1, 2],
        };
        assert_eq!(validate_solution(&sol, Target::Coloring(&f)).unwrap(), None);
        let sol = Solution::Homogeneous {
            color: 0,
            set: vec![0, 1],
        };
        assert!(validate_solution(&sol, Target::Coloring(&f)).unwrap().is_some());
    }

    #[test]
    fn out_of_domain() {
        let t = FiniteTreeSnapshot::perfect_binary(1);
        let sol = Solution::antichain([Str::bits("00")]);
        assert!(matches!(
            validate_solution(&sol, Target::Tree(&t)),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn descending_against_reverse_order() {
        let l = LinearOrderInstance::reverse(5);
        let sol = Solution::Descending { seq: vec![0, 2, 4] };
        assert_eq!(validate_solution(&sol, Target::Order(&l)).unwrap(), None);
        let sol = Solution::Ascending { seq: vec![0, 2] };
        assert!(validate_solution(&sol, Target::Order(&l)).unwrap().is_some());
    }

    #[test]
    fn serde_shape() {
        let sol = Solution::antichain([Str::bits("0")]);
        let json = serde_json::to_string(&sol).unwrap();
        assert_eq!(json, r#"{"kind":"antichain","nodes":[[0]]}"#);
        assert_eq!(serde_json::from_str::<Solution>(&json).unwrap(), sol);
    }
}
