//! The principal 3-block of `S₃`: two vertices, one arrow each way, paths
//! of length 3 vanish.
//!
//!     cargo run --example symmetric_group_s3 > s3.dot

use twisted_block::instances;
use twisted_block::pipeline::{Instance, Options};
use twisted_block::problem::Problem;
use twisted_block::report::present;

fn main() -> twisted_block::Result<()> {
    let inst = Instance::build(Problem::from_file(instances::ks3())?, Options::default())?;
    let q = &inst.presentation;
    for a in &q.arrows {
        eprintln!(
            "a_{} : {} -> {}",
            a.kind + 1,
            q.vertices[a.source].label,
            q.vertices[a.target].label
        );
    }
    for r in &q.powers {
        eprintln!(
            "path of length {} from {} is zero",
            r.length, q.vertices[r.vertex].label
        );
    }
    let report = present(&inst, true)?;
    eprintln!(
        "dim = {}, verdict {}",
        report.dimensions.span.unwrap_or(0),
        report.verdict.passed
    );
    print!("{}", report.to_dot());
    Ok(())
}
