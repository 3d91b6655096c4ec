//! Building a tree against a table of limit-computable sets: each requirement
//! ends either with its marker removed or with the set defeated.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cac_workbench::adversary::{movable_marker_tree, Verdict};
use cac_workbench::gen::random_approx;

fn main() -> cac_workbench::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let table = random_approx(&mut rng, 3, 64);
    let (tree, trace) = movable_marker_tree(&table, 64)?;
    println!(
        "{} stages, {} nodes, markers settled by stage {}",
        trace.stages,
        tree.snapshot().len(),
        trace.stabilization_stage
    );
    for (e, v) in trace.verdicts.iter().enumerate() {
        match v {
            Verdict::R { sigma } => println!("A_{e}: marker {sigma} left the tree"),
            Verdict::S { sigma, bound, found } => {
                println!("A_{e}: defeated at {sigma}, antichain {found} within bound {bound}")
            }
            Verdict::Unresolved { reason } => println!("A_{e}: unresolved ({reason})"),
        }
    }
    Ok(())
}
