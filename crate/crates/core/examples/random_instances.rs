//! Seeded random instances over p = 2, 3, 5, each built, verified and
//! twisted.
//!
//!     cargo run --release --example random_instances [seed] [count]

use std::time::Instant;

use twisted_block::instances::{self, Bounds};
use twisted_block::pipeline::{Instance, Level, Options};
use twisted_block::problem::Problem;

fn main() -> twisted_block::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let t = Instant::now();
    let mut failures = 0;
    for (k, file) in instances::random(seed, count, &Bounds::default())
        .into_iter()
        .enumerate()
    {
        let inst = Instance::build(
            Problem::from_file(file)?,
            Options {
                level: Level::Quick,
                ..Options::default()
            },
        )?;
        let v = inst.verify()?;
        let f = inst.frobenius()?;
        let ok = v.passed() && f.passed();
        failures += usize::from(!ok);
        println!(
            "{k:>3} p={} |P|={:<4} L={:<10} {:<8} vertices {:<3} arrows {:<3} basic {:<4} Mat_{:<2} {}",
            inst.problem.p(),
            inst.p_order(),
            format!("{:?}", inst.problem.l().orders()),
            inst.field.name(),
            inst.presentation.vertices.len(),
            inst.presentation.arrows.len(),
            inst.expected_basic_dimension(),
            inst.matrix_degree(),
            if ok { "ok" } else { "FAIL" }
        );
    }
    println!(
        "{count} instances, {failures} failures, {:.1} s",
        t.elapsed().as_secs_f64()
    );
    Ok(())
}
