//! The semilinear isomorphism `kG̃e ≅ ^(p²)(kG̃e)` for a few instances,
//! and what happens when the coboundary `β` is corrupted.
//!
//!     cargo run --release --example frobenius_twist

use twisted_block::instances::{self, Bounds};
use twisted_block::pipeline::{Instance, Level, Options};
use twisted_block::problem::Problem;

fn main() -> twisted_block::Result<()> {
    let mut files: Vec<(String, _)> = instances::golden()
        .into_iter()
        .map(|(n, f)| (n.to_string(), f))
        .collect();
    for (k, f) in instances::random(11, 4, &Bounds::default())
        .into_iter()
        .enumerate()
    {
        files.push((format!("random {k}"), f));
    }
    for (name, file) in files {
        let inst = Instance::build(
            Problem::from_file(file)?,
            Options {
                level: Level::Quick,
                ..Options::default()
            },
        )?;
        let r = inst.frobenius()?;
        let bad = inst.frobenius_with(true)?;
        println!(
            "{name:<14} {:<10} single twist {:<5} second twist {:<5} pairs {:>7}  corrupted: {}",
            r.field,
            r.single_twist_autfrob,
            r.passed(),
            r.pairs_checked,
            bad.check()
                .err()
                .map_or("not detected".into(), |e| e.to_string())
        );
    }
    Ok(())
}
