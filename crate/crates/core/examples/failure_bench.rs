//! Monte Carlo estimate of the solver's failure rate under each schedule,
//! with Wilson intervals and the theoretical bound.

use cac_workbench::harness::{cmd_bench, BenchConfig};
use cac_workbench::model::Schedule;

fn main() -> cac_workbench::Result<()> {
    println!(
        "{:<10} {:>8} {:>8} {:>18} {:>8}",
        "schedule", "trials", "rate", "95% interval", "bound"
    );
    for schedule in [
        Schedule::Default,
        Schedule::Shifted { n: 2 },
        Schedule::Shifted { n: 3 },
    ] {
        let cfg = BenchConfig {
            family: "one-bad".into(),
            depth: None,
            rounds: 6,
            schedule,
            trials: 500,
            seed: 1,
            advised: false,
        };
        let (_, s) = cmd_bench(&cfg, None)?;
        println!(
            "{:<10} {:>8} {:>8.4} {:>8.4}..{:<8.4} {:>8}",
            schedule.to_string(),
            s.trials,
            s.rate,
            s.wilson_lo,
            s.wilson_hi,
            s.bound
        );
    }
    Ok(())
}
