//! `(C₂)⁴ ⋊ C₃²` read from a problem file. Four loops at one vertex with
//! `wᵢ² = 0`; prints the table of `q_ij`.
//!
//!     cargo run --example elementary_two_group [problems/c2_4_c3_2.toml]

use std::path::PathBuf;

use twisted_block::pipeline::{Instance, Options};
use twisted_block::problem;
use twisted_block::report::present;

fn main() -> twisted_block::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems/c2_4_c3_2.toml")
        });
    let inst = Instance::build(problem::parse(&path)?, Options::default())?;
    let report = present(&inst, true)?;
    println!("{} over {}", path.display(), report.field.name);
    for (v, table) in report.q_matrix.iter().enumerate() {
        println!("vertex {}", inst.presentation.vertices[v].label);
        for row in table {
            let cells: Vec<String> = row.iter().map(|s| format!("{:>6}", s.field)).collect();
            println!("  {}", cells.join(""));
        }
    }
    println!("power lengths {:?}", report.power_lengths);
    println!(
        "basic {} x matrix part {} = {}",
        report.dimensions.span.unwrap_or(0),
        report.dimensions.matrix_part,
        report.dimensions.algebra
    );
    Ok(())
}
