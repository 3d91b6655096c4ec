//! Witness functions of an antichain listed as a sequence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{StagedTree, Str};

/// `t(n)`: first stage of `σ_n`; `ℓ(n)`: length of `σ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperimmunityWitnesses {
    pub t: Vec<usize>,
    pub l: Vec<usize>,
}

pub fn hyperimmunity_witnesses(tree: &StagedTree, seq: &[Str]) -> Result<HyperimmunityWitnesses> {
    let t = seq
        .iter()
        .map(|s| tree.first_stage(s).ok_or_else(|| Error::NotEnumerated(s.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(HyperimmunityWitnesses {
        t,
        l: seq.iter().map(Str::len).collect(),
    })
}
