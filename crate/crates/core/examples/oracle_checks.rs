//! Brute-force checks that share no code with the construction: centers,
//! radicals and Wedderburn blocks from structure constants, and the
//! dimension of the bare presentation by rewriting.
//!
//!     cargo run --release --example oracle_checks

use twisted_block::instances;
use twisted_block::pipeline::{Instance, Options};
use twisted_block::problem::Problem;

fn main() -> twisted_block::Result<()> {
    for (name, file) in instances::golden() {
        let inst = Instance::build(Problem::from_file(file)?, Options::default())?;
        let r = inst.oracle()?;
        println!("{name} over {}", inst.field.name());
        for c in &r.checks {
            println!(
                "  {:<5} {:<36} {} | {}",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.expected,
                c.computed
            );
        }
        for s in &r.skipped {
            println!("  skip  {s}");
        }
        for n in &r.notes {
            println!("  note  {n}");
        }
    }
    Ok(())
}
