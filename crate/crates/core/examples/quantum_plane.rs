//! `P = C₅²` with `L = C₄²` acting diagonally and a nondegenerate form:
//! the block is `Mat₄` over the quantum plane `w₂w₁ = q w₁w₂`, `wᵢ⁵ = 0`.
//!
//!     cargo run --example quantum_plane

use twisted_block::instances;
use twisted_block::pipeline::{Instance, Options};
use twisted_block::problem::Problem;
use twisted_block::report::present;

fn main() -> twisted_block::Result<()> {
    let problem = Problem::from_file(instances::quantum_plane())?;
    let inst = Instance::build(problem, Options::default())?;
    let report = present(&inst, true)?;
    print!("{}", report.to_text());

    let c = &inst.presentation.commutations[0];
    println!();
    let f = &inst.field;
    println!(
        "q = {} = {} in {}",
        c.q,
        f.display(f.embed(&c.q)?),
        f.name()
    );
    println!(
        "{} = {} x {}",
        inst.ta.dim(),
        report.dimensions.span.unwrap_or(0),
        report.dimensions.matrix_part
    );
    Ok(())
}
