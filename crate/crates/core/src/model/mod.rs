//! Strings, trees, colorings and the structural checks shared by every other
//! module.

mod branching;
mod checks;
mod code;
mod coloring;
mod order;
mod psi;
mod solution;
mod string;
mod tree;

pub use branching::{stream_order, BinaryDfa, BranchingSet, Family, Schedule};
pub use checks::{
    check_semi_ancestry, check_semi_hereditary, check_stability_of_coloring, check_stable_tree, check_transitive_on,
    find_split_triples, is_completely_branching, semi_ancestral_on, semi_hereditary_on, SplitTriple, StabilityMode,
    StabilityReport, StableTreeVerdict, TreeCertificate,
};
pub use code::{
    binary_from_index, binary_index, nth_prime, pair, phi_cmp, phi_code, phi_code_u64, phi_decode, phi_decode_u64,
    sort_by_phi, unpair,
};
pub use coloring::{Approx2Sequence, LimitCertificate, LinearOrderInstance, PairColoring, UnaryColoring};
pub use order::{cmp_lt0, order_lt0};
pub use psi::{psi_enumeration, psi_index, psi_with_stages, PsiEntry};
pub use solution::{validate_solution, Solution, Target, Violation};
pub use string::{incomparable, is_prefix, is_prefix_eq, Str};
pub use tree::{FiniteTreeSnapshot, StagedTree};
