//! Corrupting a `q`, dropping a power relation, or corrupting `β` makes
//! the corresponding check fail.
//!
//!     cargo run --example fault_injection

use twisted_block::instances;
use twisted_block::pipeline::{Fault, Instance, Options};
use twisted_block::problem::Problem;

fn main() -> twisted_block::Result<()> {
    for fault in [
        None,
        Some(Fault::QPerturbation),
        Some(Fault::OmitPowerRelation),
        Some(Fault::CorruptBeta),
    ] {
        let problem = Problem::from_file(instances::quantum_plane())?;
        let inst = Instance::build(
            problem,
            Options {
                fault,
                ..Options::default()
            },
        )?;
        let relations = inst.verify()?.check();
        let twist = inst.frobenius()?.check();
        println!("{fault:?}");
        println!(
            "  relations: {}",
            relations.map_or_else(|e| e.to_string(), |_| "pass".into())
        );
        println!(
            "  twist:     {}",
            twist.map_or_else(|e| e.to_string(), |_| "pass".into())
        );
    }
    Ok(())
}
