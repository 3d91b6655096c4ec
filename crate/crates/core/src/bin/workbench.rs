use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cac_workbench::format::{self, AnyInstance};
use cac_workbench::harness::{self, BenchConfig, GenParams, ReduceOpts, SolveOpts};
use cac_workbench::model::{Schedule, Solution};
use cac_workbench::Result;

#[derive(Parser)]
#[command(
    name = "workbench",
    version,
    about = "Generate, reduce, solve, verify and bench chain/antichain instances"
)]
struct Cli {
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true)]
    horizon: Option<usize>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report format (bench only; default csv).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write an instance from a catalog family (`name` or `name:param`).
    Gen {
        family: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        k: Option<u64>,
        /// Unary coloring values, comma separated.
        #[arg(long, value_delimiter = ',')]
        f: Option<Vec<u8>>,
        #[arg(long)]
        rounds: Option<usize>,
        #[arg(long)]
        schedule: Option<String>,
        /// APPROX table for the marker family.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long)]
        stages: Option<usize>,
        #[arg(long)]
        nodes: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        color: Option<u8>,
    },
    /// Apply a reduction; with --solution, map a target solution back.
    Reduce {
        name: String,
        instance: PathBuf,
        #[arg(long)]
        solution: Option<PathBuf>,
        /// Where to write the mapped source solution.
        #[arg(long)]
        mapped: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        color: u8,
        #[arg(long, default_value_t = 0)]
        e: usize,
    },
    /// Run a solver and write its validated solution.
    Solve {
        solver: String,
        instance: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        rounds: usize,
        #[arg(long, default_value = "default")]
        schedule: String,
        /// JSON-lines solver trace.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check a solution against an instance.
    Verify { instance: PathBuf, solution: PathBuf },
    /// Monte Carlo failure rate of the randomized solver.
    Bench {
        family: String,
        #[arg(long, default_value_t = 2000)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        rounds: usize,
        #[arg(long, default_value = "default")]
        schedule: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        advised: bool,
        #[arg(long, env = "WORKBENCH_WORKERS")]
        workers: Option<usize>,
    },
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn run(cli: Cli) -> Result<i32> {
    let out = cli.out.as_deref();
    match cli.cmd {
        Cmd::Gen {
            family,
            depth,
            k,
            f,
            rounds,
            schedule,
            table,
            stages,
            nodes,
            count,
            color,
        } => {
            let params = GenParams {
                depth,
                k,
                f,
                rounds,
                schedule: schedule.as_deref().map(Schedule::parse).transpose()?,
                table,
                stages,
                horizon: cli.horizon,
                nodes,
                count,
                color,
                seed: cli.seed,
            };
            let g = harness::cmd_gen(&family, &params)?;
            match out {
                Some(p) => {
                    format::save(p, &g.instance)?;
                    if let Some(trace) = &g.trace {
                        let mut side = p.as_os_str().to_owned();
                        side.push(".trace.json");
                        std::fs::write(side, json(&trace.sidecar()))?;
                    }
                }
                None => print!("{}", format::render(&g.instance)),
            }
            Ok(harness::EXIT_OK)
        }
        Cmd::Reduce {
            name,
            instance,
            solution,
            mapped,
            color,
            e,
        } => {
            let source = format::load(&instance)?;
            let sol = solution.as_deref().map(format::load_solution).transpose()?;
            let opts = ReduceOpts {
                color,
                e,
                seed: cli.seed,
            };
            let r = harness::cmd_reduce(&name, &source, sol.as_ref(), opts)?;
            match out {
                Some(p) => format::save(p, &r.target)?,
                None => print!("{}", format::render(&r.target)),
            }
            let mut report = serde_json::to_value(&r.report).expect("report serializes");
            if let Some(m) = &r.mapped {
                match &mapped {
                    Some(p) => format::save_solution(p, m)?,
                    None => report["mapped"] = serde_json::to_value(m).expect("solution serializes"),
                }
            }
            let text = json(&report);
            if out.is_some() {
                print!("{text}");
            } else {
                eprint!("{text}");
            }
            Ok(match r.report.soundness {
                cac_workbench::reductions::Soundness::Pass => harness::EXIT_OK,
                cac_workbench::reductions::Soundness::Fail => harness::EXIT_VERIFY,
            })
        }
        Cmd::Solve {
            solver,
            instance,
            rounds,
            schedule,
            trace,
        } => {
            let inst: Option<AnyInstance> = instance.as_deref().map(format::load).transpose()?;
            let opts = SolveOpts {
                rounds,
                schedule: Schedule::parse(&schedule)?,
                seed: cli.seed,
            };
            let r = harness::cmd_solve(&solver, inst.as_ref(), opts)?;
            if let (Some(p), Some(run)) = (&trace, &r.run) {
                std::fs::write(p, run.trace_jsonl())?;
            }
            if let Some(sol) = &r.solution {
                emit(out, &json(sol))?;
            }
            eprint!("{}", json(&r.report(&solver)));
            Ok(r.exit_code())
        }
        Cmd::Verify { instance, solution } => {
            let inst = format::load(&instance)?;
            let sol: Solution = format::load_solution(&solution)?;
            let violation = harness::cmd_verify(&inst, &sol)?;
            let report = serde_json::json!({ "valid": violation.is_none(), "violation": violation });
            emit(out, &json(&report))?;
            Ok(if violation.is_none() {
                harness::EXIT_OK
            } else {
                harness::EXIT_VERIFY
            })
        }
        Cmd::Bench {
            family,
            trials,
            rounds,
            schedule,
            depth,
            advised,
            workers,
        } => {
            let cfg = BenchConfig {
                family,
                depth,
                rounds,
                schedule: Schedule::parse(&schedule)?,
                trials,
                seed: cli.seed,
                advised,
            };
            let (rows, summary) = harness::cmd_bench(&cfg, workers)?;
            let text = match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => harness::bench_csv(&cfg, &rows, &summary),
                Format::Json => json(&serde_json::json!({ "config": cfg, "summary": summary, "rows": rows })),
            };
            emit(out, &text)?;
            Ok(harness::EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let report = serde_json::json!({ "error": e.code(), "message": e.to_string() });
            eprintln!("{report}");
            ExitCode::from(harness::exit_code(&e) as u8)
        }
    }
}
