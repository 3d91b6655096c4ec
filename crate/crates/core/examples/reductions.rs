//! Applying reductions to a staged tree and checking that every oracle
//! solution of the target maps back to a valid source solution.

use cac_workbench::model::{check_semi_hereditary, StagedTree, Str};
use cac_workbench::reductions::{
    reduce_tac_to_tcac_ce, reduce_tcac_ce_to_tcac, run_reduction, sher_instance, EmReduction, SherReduction,
    SplitTripleReduction, TimestampReduction,
};

fn main() -> cac_workbench::Result<()> {
    let tree = StagedTree::new(
        4,
        [
            (0, Str::empty()),
            (0, Str::new(vec![0])),
            (1, Str::new(vec![2])),
            (2, Str::new(vec![0, 1])),
            (2, Str::new(vec![0, 3])),
            (3, Str::new(vec![2, 0])),
            (4, Str::new(vec![2, 5])),
        ],
    )?;

    let coded = reduce_tcac_ce_to_tcac(&tree)?;
    println!("timestamp coding: {} nodes, depth {}", coded.len(), coded.depth());

    let split = reduce_tac_to_tcac_ce(&tree)?;
    println!(
        "binary image: {} nodes after {} splits",
        split.tree.len(),
        split.trace.len()
    );
    for (b, s) in &split.map {
        println!("  {b} -> {s}");
    }

    let (f, _) = sher_instance(&tree);
    println!(
        "coloring on {} points, semi-hereditary: {}",
        f.horizon(),
        check_semi_hereditary(&f, 1).is_none()
    );

    for report in [
        run_reduction(&TimestampReduction, &tree, 1)?,
        run_reduction(&SplitTripleReduction, &tree, 1)?,
        run_reduction(&EmReduction, &tree, 1)?,
        run_reduction(&SherReduction, &tree, 1)?,
    ] {
        println!(
            "{:<16} {:?} ({} solutions checked)",
            report.reduction, report.soundness, report.checked
        );
    }
    Ok(())
}
