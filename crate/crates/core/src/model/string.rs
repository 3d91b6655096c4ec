use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite sequence of naturals. The empty string is `Str::empty()`.
///
/// Ordering is lexicographic on the entries (shorter prefixes first); this is
/// only used for deterministic container ordering, not for any of the
/// orders the constructions reason about.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Str(Vec<u64>);

impl Str {
    pub fn empty() -> Self {
        Str(Vec::new())
    }

    pub fn new(items: Vec<u64>) -> Self {
        Str(items)
    }

    /// Builds a string from a `0`/`1` character pattern, e.g. `Str::bits("0110")`.
    /// Characters other than `0` and `1` are ignored.
    pub fn bits(pattern: &str) -> Self {
        Str(pattern
            .chars()
            .filter_map(|c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })
            .collect())
    }

    pub fn items(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.0.get(i).copied()
    }

    pub fn last(&self) -> Option<u64> {
        self.0.last().copied()
    }

    /// `self · x`
    pub fn child(&self, x: u64) -> Str {
        let mut v = self.0.clone();
        v.push(x);
        Str(v)
    }

    /// `self · other`
    pub fn concat(&self, other: &Str) -> Str {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Str(v)
    }

    /// The prefix of length `n` (clamped to the string length).
    pub fn prefix(&self, n: usize) -> Str {
        Str(self.0[..n.min(self.len())].to_vec())
    }

    /// The immediate predecessor, `None` for ε.
    pub fn parent(&self) -> Option<Str> {
        if self.is_empty() {
            None
        } else {
            Some(self.prefix(self.len() - 1))
        }
    }

    /// All proper prefixes, shortest first (ε included for nonempty strings).
    pub fn proper_prefixes(&self) -> impl Iterator<Item = Str> + '_ {
        (0..self.len()).map(move |n| self.prefix(n))
    }

    /// Same string with the last entry replaced by `1 - last`. Only meaningful
    /// on nonempty binary strings.
    pub fn flip_last(&self) -> Option<Str> {
        let last = self.last()?;
        if last > 1 {
            return None;
        }
        let mut v = self.0.clone();
        *v.last_mut().unwrap() = 1 - last;
        Some(Str(v))
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&x| x <= 1)
    }

    /// Strict prefix relation `self ≺ other`.
    pub fn is_prefix_of(&self, other: &Str) -> bool {
        is_prefix(self, other)
    }

    /// Reflexive prefix relation `self ⪯ other`.
    pub fn is_prefix_eq_of(&self, other: &Str) -> bool {
        is_prefix_eq(self, other)
    }

    pub fn incomparable(&self, other: &Str) -> bool {
        incomparable(self, other)
    }

    /// Position of the first disagreement, if any within the common length.
    pub fn first_difference(&self, other: &Str) -> Option<usize> {
        self.0.iter().zip(other.0.iter()).position(|(a, b)| a != b)
    }
}

impl From<Vec<u64>> for Str {
    fn from(v: Vec<u64>) -> Self {
        Str(v)
    }
}

impl From<&[u64]> for Str {
    fn from(v: &[u64]) -> Self {
        Str(v.to_vec())
    }
}

impl<const N: usize> From<[u64; N]> for Str {
    fn from(v: [u64; N]) -> Self {
        Str(v.to_vec())
    }
}

impl fmt::Debug for Str {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Str {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        f.write_str("⟨")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("⟩")
    }
}

/// `σ ≺ τ`: σ is a proper prefix of τ.
pub fn is_prefix(sigma: &Str, tau: &Str) -> bool {
    sigma.len() < tau.len() && tau.0.starts_with(&sigma.0)
}

/// `σ ⪯ τ`.
pub fn is_prefix_eq(sigma: &Str, tau: &Str) -> bool {
    sigma.len() <= tau.len() && tau.0.starts_with(&sigma.0)
}

/// `σ ⊥ τ`: neither is a prefix of the other.
pub fn incomparable(sigma: &Str, tau: &Str) -> bool {
    !is_prefix_eq(sigma, tau) && !is_prefix_eq(tau, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_examples() {
        assert!(is_prefix(&Str::empty(), &Str::from([3])));
        assert!(!is_prefix(&Str::from([1, 2]), &Str::from([1, 2])));
        assert!(is_prefix(&Str::from([1]), &Str::from([1, 0, 5])));
        assert!(is_prefix_eq(&Str::from([1, 2]), &Str::from([1, 2])));
    }

    #[test]
    fn incomparable_examples() {
        assert!(incomparable(&Str::from([0]), &Str::from([1])));
        let s = Str::from([4, 4]);
        assert!(!incomparable(&s, &s));
        assert!(!incomparable(&Str::from([0, 1]), &Str::from([0])));
    }

    #[test]
    fn exactly_one_relation_small_alphabet() {
        // all strings up to length 6 over {0..3} is 5461 strings; pairs would be
        // ~30M, so check all pairs up to length 4 here and the full range in the
        // property suite.
        let strings = all_strings(4, 4);
        for a in &strings {
            for b in &strings {
                let n = [is_prefix_eq(a, b), is_prefix(b, a), incomparable(a, b)]
                    .iter()
                    .filter(|&&x| x)
                    .count();
                assert_eq!(n, 1, "{a} vs {b}");
            }
        }
    }

    fn all_strings(max_len: usize, alphabet: u64) -> Vec<Str> {
        let mut out = vec![Str::empty()];
        let mut frontier = vec![Str::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for s in &frontier {
                for x in 0..alphabet {
                    next.push(s.child(x));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn flip_and_display() {
        assert_eq!(Str::bits("01").flip_last(), Some(Str::bits("00")));
        assert_eq!(Str::empty().flip_last(), None);
        assert_eq!(Str::empty().to_string(), "ε");
        assert_eq!(Str::from([1, 0]).to_string(), "⟨1,0⟩");
    }
}
