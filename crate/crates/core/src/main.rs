//! Command-line frontend.
//!
//! Exit codes: 0 on success (and verification pass), 1 on verification
//! failure, 2 on usage, parse, or size-guard errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use muxrot::angles::thetas_from_phis;
use muxrot::files::{format_circuit, parse_angles, parse_circuit};
use muxrot::gray::{lazy_ordering, BitWord};
use muxrot::synth::{cancel_adjacent, emit_naive, emit_optimized, gate_counts, natural_order};
use muxrot::verify::verify_circuit;

#[derive(Parser)]
#[command(
    name = "muxrot",
    version,
    about = "Multiplexed y-rotation circuit synthesis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    /// Lazy (Gray-code) ordering of the rotation terms.
    Lazy,
    /// Ascending integer ordering.
    Natural,
}

#[derive(Subcommand)]
enum Command {
    /// Print the lazy ordering for width m: the flip sequence on one
    /// comma-separated line, then one code word per line.
    Gray {
        /// Word width, 1..=30.
        #[arg(short)]
        m: u32,
    },
    /// Read an angles file and write the synthesized circuit.
    Synth {
        /// Angles file (control-basis, radians).
        #[arg(long)]
        angles: PathBuf,
        /// Term ordering.
        #[arg(long, value_enum, default_value_t = Order::Lazy)]
        order: Order,
        /// Skip the CNOT cancellation pass.
        #[arg(long)]
        no_cancel: bool,
        /// Output circuit file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a circuit file against the target matrix of an angles file.
    Verify {
        /// Angles file the circuit should implement.
        #[arg(long)]
        angles: PathBuf,
        /// Circuit file to check.
        #[arg(long)]
        circuit: PathBuf,
        /// Largest accepted entry difference.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Gray { m } => {
            let ordering = lazy_ordering(m)?;
            let flips: Vec<String> = ordering.flips().iter().map(u32::to_string).collect();
            println!("{}", flips.join(","));
            for code in ordering.codes() {
                println!("{code}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Synth {
            angles,
            order,
            no_cancel,
            out,
        } => {
            let phis = parse_angles(&fs::read_to_string(&angles)?)?;
            let thetas = thetas_from_phis(&phis)?;
            let m = thetas.width();
            let cancel = !no_cancel;
            let circuit = match (order, cancel) {
                (Order::Lazy, true) => emit_optimized(&thetas)?,
                (Order::Lazy, false) => {
                    let codes = if m == 0 {
                        vec![BitWord::zero(0)]
                    } else {
                        lazy_ordering(m)?.codes().to_vec()
                    };
                    emit_naive(&thetas, &codes)?
                }
                (Order::Natural, cancel) => {
                    let naive = emit_naive(&thetas, &natural_order(m))?;
                    if cancel {
                        cancel_adjacent(&naive)?
                    } else {
                        naive
                    }
                }
            };
            let counts = gate_counts(&circuit);
            eprintln!("rotations={} cnots={}", counts.rotations, counts.cnots);
            let text = format_circuit(&circuit);
            match out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            angles,
            circuit,
            tol,
        } => {
            let phis = parse_angles(&fs::read_to_string(&angles)?)?;
            let parsed = parse_circuit(&fs::read_to_string(&circuit)?)?;
            let report = verify_circuit(&phis, &parsed, tol)?;
            println!("max_abs_diff={:e}", report.max_abs_diff);
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
