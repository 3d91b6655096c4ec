use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact limit information for a coloring of pairs, supplied by the generator
/// that built it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitCertificate {
    /// For all `x < y` with `y ≥ start`: `f(x, y) = pattern[x mod period][y mod period]`.
    EventuallyPeriodic {
        start: u64,
        period: u64,
        pattern: Vec<Vec<u8>>,
    },
    /// Per-column limit colors; `None` marks a column without a limit.
    Columns(Vec<Option<u8>>),
}

impl LimitCertificate {
    /// `Some(Some(c))` if column `x` has limit `c`, `Some(None)` if it has no
    /// limit, `None` if the certificate does not cover `x`.
    pub fn limit(&self, x: u64) -> Option<Option<u8>> {
        match self {
            LimitCertificate::EventuallyPeriodic { period, pattern, .. } => {
                let row = &pattern[(x % period) as usize];
                let first = row[0];
                Some(row.iter().all(|&c| c == first).then_some(first))
            }
            LimitCertificate::Columns(cols) => cols.get(x as usize).copied(),
        }
    }
}

/// A coloring of pairs `{x, y}` with `x < y < horizon` into `num_colors` colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairColoring {
    num_colors: u8,
    horizon: u64,
    /// Row-major lower triangle: entry for `x < y` lives at `y(y−1)/2 + x`.
    table: Vec<u8>,
    certificate: Option<LimitCertificate>,
}

fn tri(x: u64, y: u64) -> usize {
    (y * (y - 1) / 2 + x) as usize
}

impl PairColoring {
    pub fn from_fn(num_colors: u8, horizon: u64, mut f: impl FnMut(u64, u64) -> u8) -> Result<Self> {
        if num_colors < 2 {
            return Err(Error::BadParams("a pair coloring needs at least 2 colors".into()));
        }
        let mut table = Vec::with_capacity((horizon * horizon.saturating_sub(1) / 2) as usize);
        for y in 1..horizon {
            for x in 0..y {
                let c = f(x, y);
                if c >= num_colors {
                    return Err(Error::InvalidInstance(format!(
                        "color {c} at ({x}, {y}) out of range k={num_colors}"
                    )));
                }
                table.push(c);
            }
        }
        Ok(PairColoring {
            num_colors,
            horizon,
            table,
            certificate: None,
        })
    }

    pub fn constant(horizon: u64, color: u8) -> Self {
        PairColoring::from_fn(2.max(color + 1), horizon, |_, _| color)
            .expect("constant coloring")
            .with_certificate(LimitCertificate::EventuallyPeriodic {
                start: 0,
                period: 1,
                pattern: vec![vec![color]],
            })
    }

    pub fn with_certificate(mut self, cert: LimitCertificate) -> Self {
        self.certificate = Some(cert);
        self
    }

    pub fn certificate(&self) -> Option<&LimitCertificate> {
        self.certificate.as_ref()
    }

    pub fn num_colors(&self) -> u8 {
        self.num_colors
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    /// Color of the pair `{x, y}`; order of arguments does not matter.
    ///
    /// Panics if `x == y` or either is outside the horizon.
    pub fn color(&self, x: u64, y: u64) -> u8 {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        assert!(a != b && b < self.horizon, "pair ({x}, {y}) outside coloring domain");
        self.table[tri(a, b)]
    }

    /// Restriction to `[0, horizon)`.
    pub fn truncate(&self, horizon: u64) -> PairColoring {
        let h = horizon.min(self.horizon);
        PairColoring {
            num_colors: self.num_colors,
            horizon: h,
            table: self.table[..(h * h.saturating_sub(1) / 2) as usize].to_vec(),
            certificate: self.certificate.clone(),
        }
    }

    /// `1 − f` for 2-colorings.
    pub fn complement(&self) -> PairColoring {
        PairColoring {
            num_colors: self.num_colors,
            horizon: self.horizon,
            table: self.table.iter().map(|&c| 1 - c.min(1)).collect(),
            certificate: None,
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64, u8)> + '_ {
        (1..self.horizon).flat_map(move |y| (0..y).map(move |x| (x, y, self.table[tri(x, y)])))
    }
}

/// A coloring `x ↦ color` of `[0, horizon)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnaryColoring {
    num_colors: u8,
    values: Vec<u8>,
}

impl UnaryColoring {
    pub fn new(num_colors: u8, values: Vec<u8>) -> Result<Self> {
        if num_colors == 0 {
            return Err(Error::BadParams("need at least one color".into()));
        }
        if let Some((x, c)) = values.iter().enumerate().find(|(_, &c)| c >= num_colors) {
            return Err(Error::InvalidInstance(format!(
                "color {c} at {x} out of range k={num_colors}"
            )));
        }
        Ok(UnaryColoring { num_colors, values })
    }

    pub fn num_colors(&self) -> u8 {
        self.num_colors
    }

    pub fn horizon(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn color(&self, x: u64) -> u8 {
        self.values[x as usize]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// `{x < horizon : f(x) = c}` in increasing order.
    pub fn class(&self, c: u8) -> Vec<u64> {
        (0..self.horizon()).filter(|&x| self.color(x) == c).collect()
    }
}

/// A strict total order on `[0, horizon)`, stored by rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearOrderInstance {
    rank: Vec<usize>,
}

impl LinearOrderInstance {
    /// `ranks[x]` is the position of `x`; must be a permutation of `0..n`.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ranks.len()];
        for &r in &ranks {
            if r >= ranks.len() || seen[r] {
                return Err(Error::InvalidInstance("ranks are not a permutation".into()));
            }
            seen[r] = true;
        }
        Ok(LinearOrderInstance { rank: ranks })
    }

    /// Elements listed from `<_L`-least to greatest.
    pub fn from_sequence(seq: &[u64]) -> Result<Self> {
        let mut ranks = vec![usize::MAX; seq.len()];
        for (pos, &x) in seq.iter().enumerate() {
            let slot = ranks
                .get_mut(x as usize)
                .ok_or_else(|| Error::InvalidInstance(format!("{x} outside horizon")))?;
            *slot = pos;
        }
        LinearOrderInstance::from_ranks(ranks)
    }

    /// Builds the order from `x <_L y` facts, taking the transitive closure and
    /// checking that the result is a strict total order on `[0, horizon)`.
    pub fn from_relation(horizon: usize, facts: &[(u64, u64)]) -> Result<Self> {
        let n = horizon;
        let mut lt = vec![vec![false; n]; n];
        for &(x, y) in facts {
            let (x, y) = (x as usize, y as usize);
            if x >= n || y >= n {
                return Err(Error::InvalidInstance(format!("fact ({x}, {y}) outside horizon {n}")));
            }
            lt[x][y] = true;
        }
        #[allow(clippy::needless_range_loop)]
        for k in 0..n {
            for i in 0..n {
                if lt[i][k] {
                    for j in 0..n {
                        if lt[k][j] {
                            lt[i][j] = true;
                        }
                    }
                }
            }
        }
        for (i, row) in lt.iter().enumerate() {
            if row[i] {
                return Err(Error::InvalidInstance(format!("order has a cycle through {i}")));
            }
            for j in (i + 1)..n {
                if !row[j] && !lt[j][i] {
                    return Err(Error::InvalidInstance(format!("{i} and {j} are unordered")));
                }
            }
        }
        let ranks = (0..n).map(|i| (0..n).filter(|&j| lt[j][i]).count()).collect();
        LinearOrderInstance::from_ranks(ranks)
    }

    pub fn standard(horizon: usize) -> Self {
        LinearOrderInstance {
            rank: (0..horizon).collect(),
        }
    }

    pub fn reverse(horizon: usize) -> Self {
        LinearOrderInstance {
            rank: (0..horizon).rev().collect(),
        }
    }

    pub fn horizon(&self) -> u64 {
        self.rank.len() as u64
    }

    pub fn lt(&self, x: u64, y: u64) -> bool {
        self.rank[x as usize] < self.rank[y as usize]
    }

    pub fn rank(&self, x: u64) -> usize {
        self.rank[x as usize]
    }

    /// Elements from least to greatest.
    pub fn sequence(&self) -> Vec<u64> {
        let mut seq = vec![0u64; self.rank.len()];
        for (x, &r) in self.rank.iter().enumerate() {
            seq[r] = x as u64;
        }
        seq
    }

    /// Covering pairs `x <_L y` with nothing in between.
    pub fn transitive_reduction(&self) -> Vec<(u64, u64)> {
        self.sequence().windows(2).map(|w| (w[0], w[1])).collect()
    }
}

/// Stage approximations `A_e[s]` of a finite family of sets of naturals.
///
/// Stored as toggle stages: `x ∈ A_e[s]` iff an odd number of toggles of
/// `(e, x)` happen at stages `≤ s`. Stages and elements range over
/// `[0, horizon)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Approx2Sequence {
    count: usize,
    horizon: u64,
    toggles: Vec<BTreeMap<u64, Vec<u64>>>,
}

impl Approx2Sequence {
    pub fn from_fn(count: usize, horizon: u64, mut member: impl FnMut(usize, u64, u64) -> bool) -> Self {
        let mut toggles = vec![BTreeMap::new(); count];
        for (e, map) in toggles.iter_mut().enumerate() {
            for x in 0..horizon {
                let mut prev = false;
                let mut flips = Vec::new();
                for s in 0..horizon {
                    let now = member(e, s, x);
                    if now != prev {
                        flips.push(s);
                        prev = now;
                    }
                }
                if !flips.is_empty() {
                    map.insert(x, flips);
                }
            }
        }
        Approx2Sequence {
            count,
            horizon,
            toggles,
        }
    }

    /// Builds from explicit toggle lists `(e, x, stages)`.
    pub fn from_toggles(
        count: usize,
        horizon: u64,
        entries: impl IntoIterator<Item = (usize, u64, Vec<u64>)>,
    ) -> Result<Self> {
        let mut toggles = vec![BTreeMap::new(); count];
        for (e, x, mut stages) in entries {
            if e >= count || x >= horizon || stages.iter().any(|&s| s >= horizon) {
                return Err(Error::InvalidInstance(format!("toggle entry ({e}, {x}) outside table")));
            }
            stages.sort_unstable();
            stages.dedup();
            if !stages.is_empty() {
                toggles[e].insert(x, stages);
            }
        }
        Ok(Approx2Sequence {
            count,
            horizon,
            toggles,
        })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    /// `x ∈ A_e[s]`; stages past the horizon read the last stage.
    pub fn approx(&self, e: usize, s: u64, x: u64) -> bool {
        match self.toggles[e].get(&x) {
            None => false,
            Some(flips) => flips.iter().take_while(|&&t| t <= s).count() % 2 == 1,
        }
    }

    /// Membership at the last stage, taken as the limit.
    pub fn limit(&self, e: usize, x: u64) -> bool {
        self.approx(e, self.horizon.saturating_sub(1), x)
    }

    /// Elements that are ever members at some stage, in increasing order.
    pub fn support(&self, e: usize) -> impl Iterator<Item = u64> + '_ {
        self.toggles[e].keys().copied()
    }

    pub fn toggles(&self, e: usize) -> impl Iterator<Item = (u64, &[u64])> + '_ {
        self.toggles[e].iter().map(|(&x, v)| (x, v.as_slice()))
    }

    /// Last stage at which `(e, x)` changes, if ever.
    pub fn settle_stage(&self, e: usize, x: u64) -> u64 {
        self.toggles[e].get(&x).and_then(|v| v.last().copied()).unwrap_or(0)
    }

    /// Checks that every `x < horizon/2` stops changing before stage `horizon/2`.
    /// Returns the first `(e, x)` that violates it.
    pub fn check_stabilization(&self) -> Option<(usize, u64)> {
        let half = self.horizon / 2;
        for e in 0..self.count {
            for (&x, flips) in &self.toggles[e] {
                if x < half && flips.iter().any(|&s| s >= half) {
                    return Some((e, x));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_coloring_is_symmetric_lookup() {
        let f = PairColoring::from_fn(2, 5, |x, y| ((x + y) % 2) as u8).unwrap();
        assert_eq!(f.color(1, 4), 1);
        assert_eq!(f.color(4, 1), 1);
        assert_eq!(f.pairs().count(), 10);
    }

    #[test]
    fn periodic_certificate_limits() {
        let cert = LimitCertificate::EventuallyPeriodic {
            start: 0,
            period: 2,
            pattern: vec![vec![0, 1], vec![0, 1]],
        };
        assert_eq!(cert.limit(0), Some(None));
        let cert = LimitCertificate::EventuallyPeriodic {
            start: 0,
            period: 1,
            pattern: vec![vec![1]],
        };
        assert_eq!(cert.limit(7), Some(Some(1)));
    }

    #[test]
    fn order_from_reduction_is_closed() {
        let l = LinearOrderInstance::from_relation(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(l.sequence(), vec![2, 0, 3, 1]);
        assert!(l.lt(2, 1));
        assert!(LinearOrderInstance::from_relation(3, &[(0, 1)]).is_err());
        assert!(LinearOrderInstance::from_relation(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn approx_toggles() {
        let a = Approx2Sequence::from_fn(1, 8, |_, s, x| x % 2 == 0 || s < 2);
        assert!(a.approx(0, 0, 3));
        assert!(!a.approx(0, 5, 3));
        assert!(a.limit(0, 4));
        assert_eq!(a.check_stabilization(), None);
    }
}
