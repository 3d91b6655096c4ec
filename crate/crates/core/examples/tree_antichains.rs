//! Chains and antichains in small trees: exact search, the leaf shortcut, and
//! turning a path of a binary tree into an antichain of siblings.

use cac_workbench::model::{FiniteTreeSnapshot, Str};
use cac_workbench::reductions::path_to_antichain_binary;
use cac_workbench::solvers::{brute_force_longest_chain, brute_force_max_antichain, tree_max_antichain};

fn show(xs: &[Str]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> cac_workbench::Result<()> {
    let tree = FiniteTreeSnapshot::perfect_binary(3);
    println!("perfect binary tree of depth 3: {} nodes", tree.len());

    let exact = brute_force_max_antichain(&tree)?;
    println!("max antichain (exact): {} nodes: {}", exact.len(), show(&exact));
    println!("max antichain (leaves): {} nodes", tree_max_antichain(&tree).len());

    let chain = brute_force_longest_chain(&tree);
    println!("longest chain: {}", show(&chain));

    let path: Vec<Str> = (0..=3).map(|n| Str::new(vec![1; n])).collect();
    let siblings = path_to_antichain_binary(&tree, &path)?;
    println!("path {} gives antichain {}", show(&path), show(&siblings));
    Ok(())
}
