//! Text formats: render instances, parse them back, and drive the same
//! commands the `workbench` binary exposes.

use cac_workbench::format::{self, AnyInstance};
use cac_workbench::harness::{cmd_gen, cmd_solve, cmd_verify, GenParams, SolveOpts};
use cac_workbench::model::Schedule;

fn main() -> cac_workbench::Result<()> {
    let params = GenParams {
        k: Some(2),
        f: Some(vec![0, 0, 1]),
        ..GenParams::default()
    };
    let g = cmd_gen("rt1k", &params)?;
    let text = format::render(&g.instance);
    print!("{text}");
    assert_eq!(format::render(&format::parse(&text, None)?), text);

    let tree = cmd_gen(
        "perfect-binary",
        &GenParams {
            depth: Some(2),
            ..GenParams::default()
        },
    )?
    .instance;
    let opts = SolveOpts {
        rounds: 0,
        schedule: Schedule::Default,
        seed: 1,
    };
    let solved = cmd_solve("brute-antichain", Some(&tree), opts)?;
    let sol = solved.solution.expect("a solution");
    println!("{}", serde_json::to_string(&sol).expect("serializes"));
    println!("valid: {}", cmd_verify(&tree, &sol)?.is_none());
    if let AnyInstance::Tree(t) = &tree {
        println!("tree has {} nodes", t.len());
    }
    Ok(())
}
