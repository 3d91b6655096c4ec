use super::{phi_code, StagedTree, Str};

/// One output of the ψ enumeration, with the stage it was read at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiEntry {
    pub stage: usize,
    pub node: Str,
}

/// ψ(0), ψ(1), …: nodes in order of apparition (same-stage ties by increasing
/// `phi_code`), keeping only those whose code exceeds every code kept so far.
pub fn psi_enumeration(t: &StagedTree) -> Vec<Str> {
    psi_with_stages(t).into_iter().map(|e| e.node).collect()
}

pub fn psi_with_stages(t: &StagedTree) -> Vec<PsiEntry> {
    let mut out = Vec::new();
    let mut max = None;
    for (stage, code, node) in t.apparition_order() {
        if max.as_ref().is_none_or(|m| &code > m) {
            max = Some(code);
            out.push(PsiEntry { stage, node });
        }
    }
    out
}

/// Index of `node` in the ψ enumeration, if it was kept.
pub fn psi_index(psi: &[Str], node: &Str) -> Option<usize> {
    let code = phi_code(node);
    // codes increase along ψ
    psi.binary_search_by(|s| phi_code(s).cmp(&code)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apparition_order_example() {
        let t = StagedTree::new(2, [(0, Str::empty()), (1, Str::from([0])), (2, Str::from([1]))]).unwrap();
        assert_eq!(psi_enumeration(&t), vec![Str::empty(), Str::from([0]), Str::from([1])]);
    }

    #[test]
    fn late_small_code_is_skipped() {
        let t = StagedTree::new(2, [(0, Str::empty()), (1, Str::from([1])), (2, Str::from([0]))]).unwrap();
        // φ(⟨0⟩) = 1 < φ(⟨1⟩) = 3
        assert_eq!(psi_enumeration(&t), vec![Str::empty(), Str::from([1])]);
        assert_eq!(psi_index(&psi_enumeration(&t), &Str::from([1])), Some(1));
    }

    #[test]
    fn single_node() {
        let t = StagedTree::new(0, [(0, Str::empty())]).unwrap();
        assert_eq!(psi_enumeration(&t), vec![Str::empty()]);
    }
}
