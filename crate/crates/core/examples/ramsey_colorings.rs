//! Pair colorings: homogeneous sets, the coloring of a linear order, and the
//! tree of weakly homogeneous strings of a semi-hereditary coloring.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cac_workbench::gen::{random_order, random_semi_hereditary};
use cac_workbench::reductions::{order_to_coloring, tcac_to_sher_tree};
use cac_workbench::solvers::{longest_monotone, max_homogeneous};

fn main() -> cac_workbench::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);

    let order = random_order(&mut rng, 16);
    println!("order: {:?}", order.sequence());
    let f = order_to_coloring(&order);
    for c in 0..2 {
        println!("  homogeneous for {c}: {:?}", max_homogeneous(&f, c));
    }
    println!("  ascending run: {:?}", longest_monotone(&order, true));

    let g = random_semi_hereditary(&mut rng, 12, 1);
    let st = tcac_to_sher_tree(&g, 1)?;
    println!("sigma tree: {} nodes", st.tree.len());
    for (n, s) in st.sigmas.iter().enumerate() {
        println!("  sigma_{n} = {s}");
    }
    Ok(())
}
