//! A c.e. tree as a computable tree: each entry carries the stage at which
//! its prefix was enumerated.

use rand_chacha::ChaCha8Rng;

use super::{tree_solutions, Mapped, Reduction};
use crate::error::{Error, Result};
use crate::model::{pair, unpair, FiniteTreeSnapshot, Solution, StagedTree, Str};

/// `n₀…n_k ↦ ⟨n₀,s₀⟩…⟨n_k,s_k⟩` with `s_j` the first stage of `n₀…n_j`.
pub fn reduce_tcac_ce_to_tcac(t: &StagedTree) -> Result<FiniteTreeSnapshot> {
    let nodes = t
        .entries()
        .map(|(s, _)| timestamp_encode(t, s))
        .collect::<Result<Vec<_>>>()?;
    FiniteTreeSnapshot::new(nodes)
}

fn timestamp_encode(t: &StagedTree, s: &Str) -> Result<Str> {
    (1..=s.len())
        .map(|j| {
            let stage = t
                .first_stage(&s.prefix(j))
                .ok_or_else(|| Error::NotEnumerated(s.prefix(j)))?;
            Ok(pair(s.items()[j - 1], stage as u64))
        })
        .collect::<Result<Vec<u64>>>()
        .map(Str::new)
}

/// Drops the stage components; fails on strings that are not minimal-stage codes.
pub fn timestamp_decode(t: &StagedTree, coded: &Str) -> Result<Str> {
    let decoded = Str::new(coded.items().iter().map(|&z| unpair(z).0).collect());
    if timestamp_encode(t, &decoded).ok().as_ref() != Some(coded) {
        return Err(Error::BadCode(format!("{coded} is not a stage-stamped node")));
    }
    Ok(decoded)
}

pub struct TimestampReduction;

impl Reduction for TimestampReduction {
    type Source = StagedTree;
    type Target = FiniteTreeSnapshot;
    type Context = ();

    fn name(&self) -> &'static str {
        "tcac-ce-to-tcac"
    }

    fn forward(&self, source: &StagedTree) -> Result<(FiniteTreeSnapshot, ())> {
        Ok((reduce_tcac_ce_to_tcac(source)?, ()))
    }

    fn backward(&self, source: &StagedTree, _: &FiniteTreeSnapshot, _: &(), sol: &Solution) -> Result<Mapped> {
        let decode = |nodes: &[Str]| {
            nodes
                .iter()
                .map(|s| timestamp_decode(source, s))
                .collect::<Result<Vec<_>>>()
        };
        match sol {
            Solution::Chain { nodes } => Ok(Mapped::exact(Solution::chain(decode(nodes)?))),
            Solution::Antichain { nodes } => Ok(Mapped::exact(Solution::antichain(decode(nodes)?))),
            other => Err(Error::TypeMismatch(format!(
                "expected a chain or antichain, got {}",
                other.kind()
            ))),
        }
    }

    fn sample_target_solutions(&self, target: &FiniteTreeSnapshot, rng: &mut ChaCha8Rng) -> Vec<Solution> {
        tree_solutions(target, rng, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{run_reduction, Soundness};

    #[test]
    fn stamps_and_decodes() {
        let t = StagedTree::new(
            5,
            [(0, Str::empty()), (0, Str::new(vec![0])), (3, Str::new(vec![0, 0]))],
        )
        .unwrap();
        let coded = reduce_tcac_ce_to_tcac(&t).unwrap();
        let want = Str::new(vec![pair(0, 0), pair(0, 3)]);
        assert!(coded.contains(&want));
        assert_eq!(timestamp_decode(&t, &want).unwrap(), Str::new(vec![0, 0]));
        assert!(matches!(
            timestamp_decode(&t, &Str::new(vec![pair(0, 1)])),
            Err(Error::BadCode(_))
        ));
        let report = run_reduction(&TimestampReduction, &t, 0).unwrap();
        assert_eq!(report.soundness, Soundness::Pass);
    }

    #[test]
    fn isomorphic_shape() {
        let t = StagedTree::by_length(&FiniteTreeSnapshot::perfect_binary(3));
        let coded = reduce_tcac_ce_to_tcac(&t).unwrap();
        assert_eq!(coded.len(), t.len());
        assert_eq!(coded.leaves().len(), 8);
    }
}
