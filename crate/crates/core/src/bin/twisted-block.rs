use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twisted_block::pipeline::{Fault, Instance, Level, Options};
use twisted_block::report::present;
use twisted_block::{problem, Error};

#[derive(Parser)]
#[command(
    name = "twisted-block",
    version,
    about = "Quivers and Frobenius twists of twisted group algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    QPerturbation,
    OmitPowerRelation,
    CorruptBeta,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the quiver presentation with all verdicts.
    Present {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check the relations, the tensor decomposition and the class-2 characters.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "full")]
        level: LevelArg,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Build and check the isomorphism with the second Frobenius twist.
    Frobenius {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Run the brute-force checks.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn load(
    file: &Path,
    level: Level,
    seed: Option<u64>,
    fault: Option<FaultArg>,
) -> Result<Instance, Error> {
    let fault = fault.map(|f| match f {
        FaultArg::QPerturbation => Fault::QPerturbation,
        FaultArg::OmitPowerRelation => Fault::OmitPowerRelation,
        FaultArg::CorruptBeta => Fault::CorruptBeta,
    });
    Instance::build(problem::parse(file)?, Options { level, seed, fault })
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn verdict(failure: Option<String>) -> ExitCode {
    match failure {
        None => {
            println!("PASS");
            ExitCode::SUCCESS
        }
        Some(f) => {
            println!("FAIL: {f}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Present {
            file,
            dot,
            json,
            seed,
        } => {
            let inst = load(&file, Level::Full, seed, None)?;
            let rep = present(&inst, true)?;
            print!("{}", rep.to_text());
            if let Some(p) = dot {
                write(&p, &rep.to_dot())?;
            }
            if let Some(p) = json {
                write(&p, &rep.to_json())?;
            }
            Ok(verdict(rep.verdict.first_failure))
        }
        Cmd::Verify {
            file,
            level,
            seed,
            inject_fault,
        } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let inst = load(&file, level, seed, inject_fault)?;
            let v = inst.verify()?;
            println!("eigenbasis     {}", ok(v.eigenbasis.passed()));
            println!(
                "matrix part    {} (dim {})",
                ok(v.matrix_part.passed()),
                v.matrix_part.dimension
            );
            println!("class-2        {}", ok(v.class2.passed()));
            println!(
                "relations      {} ({} commutation, {} power, span {})",
                ok(v.relations.passed()),
                v.relations.commutation_relations,
                v.relations.power_relations,
                v.relations.span_rank
            );
            println!(
                "tensor         {} ({} x {} = {})",
                ok(v.tensor.passed()),
                v.tensor.basic_dimension,
                v.tensor.matrix_dimension,
                v.tensor.algebra_dimension
            );
            Ok(verdict(v.check().err().map(|e| e.to_string())))
        }
        Cmd::Frobenius {
            file,
            seed,
            inject_fault,
        } => {
            let inst = load(&file, Level::Full, seed, inject_fault)?;
            let r = inst.frobenius()?;
            println!("field          {}", r.field);
            println!("autfrob        {}", ok(r.autfrob));
            for (c, (t, how)) in r.tau.iter().zip(&r.tau_search).enumerate() {
                println!("tau[{}]         {:?} via {:?}", c + 1, t, how);
            }
            println!("automorphism   {}", ok(r.automorphism));
            println!(
                "multiplicative {} on {} basis pairs",
                ok(r.multiplicative),
                r.pairs_checked
            );
            println!("semilinear     {}", ok(r.semilinear));
            Ok(verdict(r.check().err().map(|e| e.to_string())))
        }
        Cmd::Oracle { file, json } => {
            let inst = load(&file, Level::Full, None, None)?;
            let r = inst.oracle()?;
            for c in &r.checks {
                println!(
                    "{:<5} {}: expected {}, computed {}",
                    ok(c.pass),
                    c.name,
                    c.expected,
                    c.computed
                );
            }
            for s in &r.skipped {
                println!("skip  {s}");
            }
            for n in &r.notes {
                println!("note  {n}");
            }
            if let Some(p) = json {
                write(
                    &p,
                    &(serde_json::to_string_pretty(&r).expect("report serializes") + "\n"),
                )?;
            }
            Ok(verdict(r.first_failure().map(|c| c.name.clone())))
        }
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
