//! The randomized antichain solver on the one-bad family, with and without
//! certificate advice, printing the per-round trace.

use cac_workbench::model::{BranchingSet, Schedule};
use cac_workbench::solvers::{advised_sac_solve, probabilistic_sac_solve, SolverOutcome};

fn report(label: &str, out: &SolverOutcome) {
    match out {
        SolverOutcome::Success { antichain, .. } => println!("{label}: success, antichain of size {}", antichain.len()),
        SolverOutcome::Fail { reason, round, .. } => println!("{label}: {} in round {round}", reason.code()),
    }
    for r in out.trace() {
        let chosen = r.chosen.as_ref().map_or("-".to_string(), |s| s.to_string());
        println!("  k={} |A|={} bad={:?} chosen={chosen}", r.k, r.a_size, r.bad_present);
    }
}

fn main() -> cac_workbench::Result<()> {
    let set = BranchingSet::one_bad(2, 4, Schedule::Default);
    println!("one-bad set: {} members up to depth {}", set.len(), set.depth());
    for seed in 0..4 {
        report(
            &format!("seed {seed} random"),
            &probabilistic_sac_solve(&set, 4, Schedule::Default, seed)?,
        );
    }
    report("seed 0 advised", &advised_sac_solve(&set, 4, Schedule::Default, 0)?);
    Ok(())
}
