//! Orders and colorings on the ψ enumeration of a c.e. tree.

use rand_chacha::ChaCha8Rng;

use super::{Mapped, Reduction};
use crate::error::{Error, Result};
use crate::model::{
    check_transitive_on, cmp_lt0, is_prefix, psi_enumeration, LinearOrderInstance, PairColoring, Solution, StagedTree,
    Str,
};
use crate::solvers::brute;

/// The ψ enumeration a target instance is indexed by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiContext {
    pub psi: Vec<Str>,
}

impl PsiContext {
    fn node(&self, x: u64) -> Result<Str> {
        self.psi
            .get(x as usize)
            .cloned()
            .ok_or_else(|| Error::DomainMismatch(format!("{x} is not a ψ index (length {})", self.psi.len())))
    }

    fn nodes(&self, xs: &[u64]) -> Result<Vec<Str>> {
        xs.iter().map(|&x| self.node(x)).collect()
    }
}

/// Observed events recur to the horizon when one lies in the final third.
pub(crate) fn recurs(positions: &[usize], len: usize) -> bool {
    positions.iter().any(|&p| 3 * (p + 1) > 2 * len)
}

/// ψ indices ordered by `<₀` on their nodes.
pub fn ads_instance(t: &StagedTree) -> (LinearOrderInstance, PsiContext) {
    let psi = psi_enumeration(t);
    let mut idx: Vec<u64> = (0..psi.len() as u64).collect();
    idx.sort_by(|&a, &b| cmp_lt0(&psi[a as usize], &psi[b as usize]));
    let order = LinearOrderInstance::from_sequence(&idx).expect("a permutation");
    (order, PsiContext { psi })
}

/// Incomparable consecutive steps give an antichain (the later node of each
/// step when descending, the earlier when ascending); otherwise the tail after
/// the last such step is a chain.
pub fn ads_solution_extract(ctx: &PsiContext, sol: &Solution) -> Result<Mapped> {
    let (seq, ascending) = match sol {
        Solution::Ascending { seq } => (seq, true),
        Solution::Descending { seq } => (seq, false),
        other => {
            return Err(Error::TypeMismatch(format!(
                "expected a monotone sequence, got {}",
                other.kind()
            )))
        }
    };
    if seq.len() < 2 {
        return Err(Error::AmbiguousAtHorizon(format!("sequence of length {}", seq.len())));
    }
    let nodes = ctx.nodes(seq)?;
    let steps: Vec<usize> = (0..nodes.len() - 1)
        .filter(|&i| nodes[i].incomparable(&nodes[i + 1]))
        .collect();
    if recurs(&steps, nodes.len() - 1) {
        let h = steps.iter().map(|&i| nodes[if ascending { i } else { i + 1 }].clone());
        return Ok(Mapped::assuming(
            Solution::antichain(h),
            "incomparable steps recur to the horizon",
        ));
    }
    let start = steps.last().map_or(0, |&i| i + 1);
    Ok(Mapped::assuming(
        Solution::chain(nodes[start..].to_vec()),
        "consecutive nodes comparable from the last incomparable step on",
    ))
}

pub struct AdsReduction;

impl Reduction for AdsReduction {
    type Source = StagedTree;
    type Target = LinearOrderInstance;
    type Context = PsiContext;

    fn name(&self) -> &'static str {
        "ads-instance"
    }

    fn forward(&self, source: &StagedTree) -> Result<(LinearOrderInstance, PsiContext)> {
        Ok(ads_instance(source))
    }

    fn backward(&self, _: &StagedTree, _: &LinearOrderInstance, ctx: &PsiContext, sol: &Solution) -> Result<Mapped> {
        ads_solution_extract(ctx, sol)
    }

    fn sample_target_solutions(&self, target: &LinearOrderInstance, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        let mut out = vec![
            Solution::Ascending {
                seq: brute::longest_monotone(target, true),
            },
            Solution::Descending {
                seq: brute::longest_monotone(target, false),
            },
        ];
        for _ in 0..12 {
            out.push(Solution::Ascending {
                seq: brute::random_monotone(target, true, rng),
            });
            out.push(Solution::Descending {
                seq: brute::random_monotone(target, false, rng),
            });
        }
        out
    }
}

/// `f(x, y) = 1` iff `ψ(x) ≺ ψ(y)`, for `x < y`.
pub fn em_instance(t: &StagedTree) -> (PairColoring, PsiContext) {
    let psi = psi_enumeration(t);
    let f = PairColoring::from_fn(2, psi.len() as u64, |x, y| {
        is_prefix(&psi[x as usize], &psi[y as usize]) as u8
    })
    .expect("two colors");
    (f, PsiContext { psi })
}

/// The same coloring; it is semi-hereditary for color 1.
pub fn sher_instance(t: &StagedTree) -> (PairColoring, PsiContext) {
    em_instance(t)
}

/// Color-0 consecutive pairs give the antichain `ψ{s_j : f(s_j, s_{j+1}) = 0}`;
/// otherwise the tail after the last such pair is a chain.
pub fn em_solution_extract(f: &PairColoring, ctx: &PsiContext, sol: &Solution) -> Result<Mapped> {
    let Solution::Transitive { set } = sol else {
        return Err(Error::TypeMismatch(format!(
            "expected a transitive set, got {}",
            sol.kind()
        )));
    };
    if let Some((x, y, z)) = check_transitive_on(f, set) {
        return Err(Error::NotTransitive(x, y, z));
    }
    if set.len() < 2 {
        return Ok(Mapped::exact(Solution::chain(ctx.nodes(set)?)));
    }
    let zeros: Vec<usize> = (0..set.len() - 1)
        .filter(|&j| f.color(set[j], set[j + 1]) == 0)
        .collect();
    if recurs(&zeros, set.len() - 1) {
        let a: Vec<u64> = zeros.iter().map(|&j| set[j]).collect();
        return Ok(Mapped::assuming(
            Solution::antichain(ctx.nodes(&a)?),
            "color-0 steps recur to the horizon",
        ));
    }
    let start = zeros.last().map_or(0, |&j| j + 1);
    Ok(Mapped::assuming(
        Solution::chain(ctx.nodes(&set[start..])?),
        "consecutive colors are 1 from the last color-0 step on",
    ))
}

/// Color 0 gives the antichain `ψ(H)`, color 1 the chain `ψ(H)`.
pub fn sher_solution_extract(f: &PairColoring, ctx: &PsiContext, sol: &Solution) -> Result<Solution> {
    let Solution::Homogeneous { color, set } = sol else {
        return Err(Error::TypeMismatch(format!(
            "expected a homogeneous set, got {}",
            sol.kind()
        )));
    };
    for (i, &x) in set.iter().enumerate() {
        if let Some(&y) = set[i + 1..].iter().find(|&&y| f.color(x, y) != *color) {
            return Err(Error::NotHomogeneous(x, y));
        }
    }
    let nodes = ctx.nodes(set)?;
    Ok(if *color == 0 {
        Solution::antichain(nodes)
    } else {
        Solution::chain(nodes)
    })
}

pub struct EmReduction;

impl Reduction for EmReduction {
    type Source = StagedTree;
    type Target = PairColoring;
    type Context = PsiContext;

    fn name(&self) -> &'static str {
        "em-instance"
    }

    fn forward(&self, source: &StagedTree) -> Result<(PairColoring, PsiContext)> {
        Ok(em_instance(source))
    }

    fn backward(&self, _: &StagedTree, f: &PairColoring, ctx: &PsiContext, sol: &Solution) -> Result<Mapped> {
        em_solution_extract(f, ctx, sol)
    }

    fn sample_target_solutions(&self, f: &PairColoring, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        let prop = brute::TripleProperty::Transitive;
        let mut out: Vec<Solution> = (0..16)
            .map(|_| Solution::Transitive {
                set: brute::random_maximal_set(f, prop, rng),
            })
            .collect();
        if let Ok(set) = brute::max_set_exact(f, prop) {
            out.push(Solution::Transitive { set });
        }
        out
    }
}

pub struct SherReduction;

impl Reduction for SherReduction {
    type Source = StagedTree;
    type Target = PairColoring;
    type Context = PsiContext;

    fn name(&self) -> &'static str {
        "sher-instance"
    }

    fn forward(&self, source: &StagedTree) -> Result<(PairColoring, PsiContext)> {
        Ok(sher_instance(source))
    }

    fn backward(&self, _: &StagedTree, f: &PairColoring, ctx: &PsiContext, sol: &Solution) -> Result<Mapped> {
        Ok(Mapped::exact(sher_solution_extract(f, ctx, sol)?))
    }

    fn sample_target_solutions(&self, f: &PairColoring, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        homogeneous_solutions(f, rng)
    }
}

/// Maximum homogeneous sets of both colors (when small) and random maximal ones.
pub(crate) fn homogeneous_solutions(f: &PairColoring, rng: &mut ChaCha8Rng) -> Vec<Solution> {
    let mut out = Vec::new();
    for color in 0..f.num_colors() {
        if f.horizon() <= 40 {
            out.push(Solution::Homogeneous {
                color,
                set: brute::max_homogeneous(f, color),
            });
        }
        for _ in 0..8 {
            out.push(Solution::Homogeneous {
                color,
                set: brute::random_homogeneous(f, color, rng),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{check_semi_hereditary, FiniteTreeSnapshot};
    use crate::reductions::{run_reduction, Soundness};

    fn tree(nodes: &[&[u64]]) -> StagedTree {
        StagedTree::by_length(&FiniteTreeSnapshot::closure_of(
            nodes.iter().map(|n| Str::new(n.to_vec())),
        ))
    }

    #[test]
    fn ads_order_on_siblings() {
        let t = tree(&[&[0], &[1]]);
        let (l, ctx) = ads_instance(&t);
        let i0 = ctx.psi.iter().position(|s| *s == Str::new(vec![0])).unwrap() as u64;
        let i1 = ctx.psi.iter().position(|s| *s == Str::new(vec![1])).unwrap() as u64;
        assert!(l.lt(i0, i1));
    }

    #[test]
    fn ads_descending_siblings() {
        let ctx = PsiContext {
            psi: vec![Str::new(vec![3]), Str::new(vec![2]), Str::new(vec![1])],
        };
        let m = ads_solution_extract(&ctx, &Solution::Descending { seq: vec![0, 1, 2] }).unwrap();
        assert_eq!(m.solution, Solution::antichain([Str::new(vec![2]), Str::new(vec![1])]));
        let t = tree(&[&[1], &[2, 5], &[3, 0], &[3, 1, 1]]);
        let report = run_reduction(&AdsReduction, &t, 5).unwrap();
        assert_eq!(report.soundness, Soundness::Pass);
    }

    #[test]
    fn ads_chain() {
        let t = StagedTree::by_length(&FiniteTreeSnapshot::chain(2));
        let (_, ctx) = ads_instance(&t);
        let m = ads_solution_extract(&ctx, &Solution::Ascending { seq: vec![0, 1, 2] }).unwrap();
        assert_eq!(m.solution, Solution::chain(ctx.psi.clone()));
        assert!(matches!(
            ads_solution_extract(&ctx, &Solution::Ascending { seq: vec![0] }),
            Err(Error::AmbiguousAtHorizon(_))
        ));
    }

    #[test]
    fn em_on_chain_and_flat() {
        let (f, _) = em_instance(&StagedTree::by_length(&FiniteTreeSnapshot::chain(4)));
        assert!(f.pairs().all(|(_, _, c)| c == 1));
        let (f, ctx) = em_instance(&tree(&[&[0], &[1], &[2], &[3]]));
        assert!(f.pairs().all(|(x, _, c)| c == 0 || ctx.psi[x as usize].is_empty()));
        assert!(check_semi_hereditary(&f, 1).is_none());
    }

    #[test]
    fn em_and_sher_round_trip() {
        let t = tree(&[&[0, 0], &[0, 1, 1], &[1], &[2, 0], &[2, 1]]);
        for r in [
            run_reduction(&EmReduction, &t, 3).unwrap(),
            run_reduction(&SherReduction, &t, 3).unwrap(),
        ] {
            assert_eq!(r.soundness, Soundness::Pass, "{r:?}");
        }
    }

    #[test]
    fn em_all_zero_steps() {
        let (f, ctx) = em_instance(&tree(&[&[0], &[1], &[2]]));
        let set: Vec<u64> = (1..ctx.psi.len() as u64).collect();
        let m = em_solution_extract(&f, &ctx, &Solution::Transitive { set: set.clone() }).unwrap();
        assert_eq!(m.solution.size(), set.len() - 1);
    }

    #[test]
    fn sher_not_homogeneous() {
        let (f, ctx) = em_instance(&tree(&[&[0, 0], &[1]]));
        let bad = Solution::Homogeneous {
            color: 1,
            set: (0..ctx.psi.len() as u64).collect(),
        };
        assert!(matches!(
            sher_solution_extract(&f, &ctx, &bad),
            Err(Error::NotHomogeneous(..))
        ));
    }
}
