//! Homogeneous sets and monotone sequences from sets with semi-ancestry or
//! semi-heredity.

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ads_em::recurs;
use super::{Instance, Mapped, Reduction};
use crate::error::{Error, Result};
use crate::model::{
    semi_ancestral_on, semi_hereditary_on, validate_solution, Approx2Sequence, LinearOrderInstance, PairColoring,
    Solution, Target, UnaryColoring, Violation,
};
use crate::solvers::brute::{self, TripleProperty};

/// One set of a uniform sequence of approximations; solutions are subsets of
/// the limit set or of its complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta2Instance {
    pub approx: Approx2Sequence,
    pub e: usize,
}

impl Delta2Instance {
    pub fn new(approx: Approx2Sequence, e: usize) -> Result<Self> {
        if e >= approx.count() {
            return Err(Error::BadParams(format!(
                "index {e} out of range ({} sets)",
                approx.count()
            )));
        }
        if let Some((bad, x)) = approx.check_stabilization() {
            return Err(Error::HorizonTooSmall(format!(
                "set {bad} still changes at {x} in the second half of the horizon"
            )));
        }
        Ok(Delta2Instance { approx, e })
    }

    /// Limit membership as a 2-coloring of points.
    pub fn limit_coloring(&self) -> UnaryColoring {
        let values = (0..self.approx.horizon())
            .map(|x| self.approx.limit(self.e, x) as u8)
            .collect();
        UnaryColoring::new(2, values).expect("two colors")
    }
}

impl Instance for Delta2Instance {
    fn check(&self, sol: &Solution) -> Result<Option<Violation>> {
        validate_solution(sol, Target::Unary(&self.limit_coloring()))
    }
    fn horizon(&self) -> u64 {
        self.approx.horizon()
    }
}

/// `f(x, y) = 1` iff `x ∈ A_e[y]`.
pub fn delta2_coloring(a: &Approx2Sequence, e: usize) -> Result<PairColoring> {
    if e >= a.count() {
        return Err(Error::BadParams(format!("index {e} out of range ({} sets)", a.count())));
    }
    PairColoring::from_fn(2, a.horizon(), |x, y| a.approx(e, y, x) as u8)
}

/// Reads limits off the column of `z = max B`, which must lie in the second
/// half of the horizon; only points below the half are used. The first `x`
/// whose column value is `i` gives `{x} ∪ {y : f(x, y) = i}`, all of limit
/// value `i`; if there is none, every point has limit `1−i`.
pub fn delta2_solution_extract(inst: &Delta2Instance, f: &PairColoring, sol: &Solution) -> Result<Mapped> {
    let Solution::SemiAncestral { color, set } = sol else {
        return Err(Error::TypeMismatch(format!(
            "expected a semi-ancestral set, got {}",
            sol.kind()
        )));
    };
    let i = *color;
    if let Some((x, y, z)) = semi_ancestral_on(f, i, set) {
        return Err(Error::NotSemiAncestral(x, y, z));
    }
    let half = inst.approx.horizon() / 2;
    let Some(&z) = set.last().filter(|&&z| z >= half) else {
        return Err(Error::AmbiguousAtHorizon(format!(
            "no element of the set in the second half [{half}, {})",
            inst.approx.horizon()
        )));
    };
    let lows: Vec<u64> = set.iter().copied().filter(|&x| x < half && x < z).collect();
    let assumption = format!("limits read at stage {z}");
    match lows.iter().position(|&x| f.color(x, z) == i) {
        None => Ok(Mapped::assuming(
            Solution::Homogeneous {
                color: 1 - i,
                set: lows,
            },
            assumption,
        )),
        Some(p) => {
            let x0 = lows[p];
            let mut out = vec![x0];
            out.extend(lows[p + 1..].iter().copied().filter(|&y| f.color(x0, y) == i));
            Ok(Mapped::assuming(
                Solution::Homogeneous { color: i, set: out },
                assumption,
            ))
        }
    }
}

pub struct Delta2Reduction;

impl Reduction for Delta2Reduction {
    type Source = Delta2Instance;
    type Target = PairColoring;
    type Context = ();

    fn name(&self) -> &'static str {
        "delta2-coloring"
    }

    fn forward(&self, source: &Delta2Instance) -> Result<(PairColoring, ())> {
        Ok((delta2_coloring(&source.approx, source.e)?, ()))
    }

    fn backward(&self, source: &Delta2Instance, f: &PairColoring, _: &(), sol: &Solution) -> Result<Mapped> {
        delta2_solution_extract(source, f, sol)
    }

    fn sample_target_solutions(&self, f: &PairColoring, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        triple_property_solutions(f, rng, TripleProperty::SemiAncestral, |color, set| {
            Solution::SemiAncestral { color, set }
        })
    }
}

/// Maximal sets with a color-indexed triple property, for both colors.
fn triple_property_solutions(
    f: &PairColoring,
    rng: &mut ChaCha8Rng,
    prop: impl Fn(u8) -> TripleProperty,
    wrap: impl Fn(u8, Vec<u64>) -> Solution,
) -> Vec<Solution> {
    let mut out = Vec::new();
    for color in 0..2 {
        if let Ok(set) = brute::max_set_exact(f, prop(color)) {
            out.push(wrap(color, set));
        }
        for _ in 0..8 {
            out.push(wrap(color, brute::random_maximal_set(f, prop(color), rng)));
        }
    }
    out
}

/// If some `a` has an `i`-colored partner in the final third of `B`, all its
/// `i`-colored partners form a homogeneous set. Otherwise the elements whose
/// final-third colors are all `1−i` are thinned greedily to a `1−i`-homogeneous set.
pub fn semi_ancestry_extract(f: &PairColoring, i: u8, b: &[u64]) -> Result<Mapped> {
    if let Some((x, y, z)) = semi_ancestral_on(f, i, b) {
        return Err(Error::NotSemiAncestral(x, y, z));
    }
    let n = b.len();
    for (p, &a) in b.iter().enumerate() {
        let partners: Vec<usize> = (p + 1..n).filter(|&q| f.color(a, b[q]) == i).collect();
        if recurs(&partners, n) {
            return Ok(Mapped::assuming(
                Solution::Homogeneous {
                    color: i,
                    set: partners.iter().map(|&q| b[q]).collect(),
                },
                format!("{a} has {i}-colored partners up to the horizon"),
            ));
        }
    }
    let tail_start = (2 * n).div_ceil(3);
    let mut chosen: Vec<u64> = Vec::new();
    for (p, &y) in b.iter().enumerate() {
        let tail_other = b[tail_start.max(p + 1)..].iter().all(|&z| f.color(y, z) != i);
        if tail_other && chosen.iter().all(|&x| f.color(x, y) != i) {
            chosen.push(y);
        }
    }
    Ok(Mapped::assuming(
        Solution::Homogeneous {
            color: 1 - i,
            set: chosen,
        },
        "every element has limit color 1-i",
    ))
}

/// Homogeneous sets of a 2-coloring from sets with semi-ancestry.
pub struct SemiAncestryReduction;

impl Reduction for SemiAncestryReduction {
    type Source = PairColoring;
    type Target = PairColoring;
    type Context = ();

    fn name(&self) -> &'static str {
        "semi-ancestry"
    }

    fn forward(&self, source: &PairColoring) -> Result<(PairColoring, ())> {
        if source.num_colors() != 2 {
            return Err(Error::BadParams("semi-ancestry needs a 2-coloring".into()));
        }
        Ok((source.clone(), ()))
    }

    fn backward(&self, source: &PairColoring, _: &PairColoring, _: &(), sol: &Solution) -> Result<Mapped> {
        match sol {
            Solution::SemiAncestral { color, set } => semi_ancestry_extract(source, *color, set),
            other => Err(Error::TypeMismatch(format!(
                "expected a semi-ancestral set, got {}",
                other.kind()
            ))),
        }
    }

    fn sample_target_solutions(&self, f: &PairColoring, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        triple_property_solutions(f, rng, TripleProperty::SemiAncestral, |color, set| {
            Solution::SemiAncestral { color, set }
        })
    }
}

/// `f(x, y) = 1` iff the order and ℕ agree on `x < y`.
pub fn order_to_coloring(l: &LinearOrderInstance) -> PairColoring {
    PairColoring::from_fn(2, l.horizon(), |x, y| l.lt(x, y) as u8).expect("two colors")
}

fn monotone(color: u8, seq: Vec<u64>) -> Solution {
    if color == 1 {
        Solution::Ascending { seq }
    } else {
        Solution::Descending { seq }
    }
}

/// If elements with a later `1−i` partner recur to the horizon, a sequence
/// with consecutive colors `1−i` is built by induction; otherwise the elements
/// whose later colors are all `i`. Color 1 is ascending, color 0 descending.
pub fn semi_hereditary_set_to_ads(f: &PairColoring, i: u8, h: &[u64]) -> Result<Solution> {
    if let Some((x, y, z)) = semi_hereditary_on(f, i, h) {
        return Err(Error::NotSemiHereditaryOnH(x, y, z));
    }
    let n = h.len();
    let bad: Vec<usize> = (0..n)
        .filter(|&p| h[p + 1..].iter().any(|&y| f.color(h[p], y) != i))
        .collect();
    if recurs(&bad, n.saturating_sub(1)) {
        let mut seq: Vec<u64> = Vec::new();
        for &x in h {
            if seq.last().is_none_or(|&l| f.color(l, x) != i) {
                seq.push(x);
            }
        }
        return Ok(monotone(1 - i, seq));
    }
    let good: Vec<u64> = (0..n).filter(|p| !bad.contains(p)).map(|p| h[p]).collect();
    Ok(monotone(i, good))
}

/// Monotone sequences of an order from sets that are semi-hereditary for the
/// agreement coloring.
pub struct OrderReduction;

impl Reduction for OrderReduction {
    type Source = LinearOrderInstance;
    type Target = PairColoring;
    type Context = ();

    fn name(&self) -> &'static str {
        "order-to-coloring"
    }

    fn forward(&self, source: &LinearOrderInstance) -> Result<(PairColoring, ())> {
        Ok((order_to_coloring(source), ()))
    }

    fn backward(&self, _: &LinearOrderInstance, f: &PairColoring, _: &(), sol: &Solution) -> Result<Mapped> {
        match sol {
            Solution::SemiHereditary { color, set } => Ok(Mapped::assuming(
                semi_hereditary_set_to_ads(f, *color, set)?,
                "pairs of the other color recur to the horizon iff observed in the final third",
            )),
            other => Err(Error::TypeMismatch(format!(
                "expected a semi-hereditary set, got {}",
                other.kind()
            ))),
        }
    }

    fn sample_target_solutions(&self, f: &PairColoring, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        triple_property_solutions(f, rng, TripleProperty::SemiHereditary, |color, set| {
            Solution::SemiHereditary { color, set }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::check_transitive_on;
    use crate::reductions::{run_reduction, Soundness};

    #[test]
    fn delta2_evaluates_membership() {
        let empty = Approx2Sequence::from_fn(1, 8, |_, _, _| false);
        assert!(delta2_coloring(&empty, 0).unwrap().pairs().all(|(_, _, c)| c == 0));
        let evens = Approx2Sequence::from_fn(1, 8, |_, _, x| x % 2 == 0);
        let f = delta2_coloring(&evens, 0).unwrap();
        assert_eq!(f.color(2, 5), 1);
        assert_eq!(f.color(3, 5), 0);
        assert!(matches!(delta2_coloring(&evens, 1), Err(Error::BadParams(_))));
    }

    #[test]
    fn delta2_round_trip() {
        // x joins at stage x + 2 when x is a multiple of 3
        let a = Approx2Sequence::from_fn(1, 24, |_, s, x| x % 3 == 0 && s >= x + 2);
        let inst = Delta2Instance::new(a, 0).unwrap();
        let report = run_reduction(&Delta2Reduction, &inst, 2).unwrap();
        assert_eq!(report.soundness, Soundness::Pass, "{report:?}");
    }

    #[test]
    fn semi_ancestry_constant() {
        let f = PairColoring::constant(6, 1);
        let m = semi_ancestry_extract(&f, 1, &[0, 2, 3, 5]).unwrap();
        assert_eq!(
            m.solution,
            Solution::Homogeneous {
                color: 1,
                set: vec![2, 3, 5]
            }
        );
        let f = PairColoring::constant(6, 0);
        let m = semi_ancestry_extract(&f, 1, &[0, 1, 2, 3, 4, 5]).unwrap();
        let Solution::Homogeneous { color, set } = &m.solution else {
            panic!()
        };
        assert_eq!(*color, 0);
        assert_eq!(set.len(), 6);
        let g = PairColoring::from_fn(2, 10, |x, y| ((x + y) % 3 == 0) as u8).unwrap();
        assert_eq!(
            run_reduction(&SemiAncestryReduction, &g, 7).unwrap().soundness,
            Soundness::Pass
        );
    }

    #[test]
    fn order_colorings() {
        assert!(order_to_coloring(&LinearOrderInstance::standard(5))
            .pairs()
            .all(|(_, _, c)| c == 1));
        let rev = LinearOrderInstance::reverse(6);
        let f = order_to_coloring(&rev);
        assert!(f.pairs().all(|(_, _, c)| c == 0));
        let all: Vec<u64> = (0..6).collect();
        assert!(check_transitive_on(&f, &all).is_none());
        let sol = semi_hereditary_set_to_ads(&f, 1, &all).unwrap();
        assert!(matches!(&sol, Solution::Descending { seq } if seq.len() >= 3));
        assert_eq!(validate_solution(&sol, Target::Order(&rev)).unwrap(), None);
        let std = LinearOrderInstance::standard(5);
        let g = order_to_coloring(&std);
        assert_eq!(
            semi_hereditary_set_to_ads(&g, 1, &[0, 1, 2, 3, 4]).unwrap(),
            Solution::Ascending {
                seq: vec![0, 1, 2, 3, 4]
            }
        );
    }

    #[test]
    fn order_round_trip() {
        let l = LinearOrderInstance::from_sequence(&[3, 0, 5, 1, 4, 2, 7, 6]).unwrap();
        assert_eq!(
            run_reduction(&OrderReduction, &l, 3).unwrap().soundness,
            Soundness::Pass
        );
    }
}
