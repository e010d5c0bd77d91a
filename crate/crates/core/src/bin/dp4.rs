use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dp4_lagrange::cli::{error_json, run, Command, InputForm, RunConfig};

#[derive(Parser)]
#[command(name = "dp4", version, about = "Exact checks for the cotangent fibration of a quartic del Pezzo surface")]
struct Args {
    #[command(subcommand)]
    verb: Verb,
    /// JSON config with one of "theta", "points" or "ab"
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Add the symbolic tier where available
    #[arg(long, global = true)]
    symbolic: bool,
    /// Add the line tangency tier where available
    #[arg(long, global = true)]
    tangency: bool,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// Kernel of the constraint system
    Sections {
        /// Plane forms only
        #[arg(long)]
        plane_only: bool,
    },
    /// Involutivity certificate
    Verify {
        /// Certify a deliberately corrupted basis
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Quadric pencil, normalization and line combinatorics
    Pencil,
    /// Fibers and discriminant of a pencil member
    Probe,
    /// The five special directions and their witnesses
    SpecialDirections,
    /// Match special directions with singular pencil members
    Dictionary,
    /// Every check, in order
    Pipeline,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (cmd, plane_only, corrupt) = match args.verb {
        Verb::Sections { plane_only } => (Command::Sections, plane_only, false),
        Verb::Verify { corrupt } => (Command::Verify, false, corrupt),
        Verb::Pencil => (Command::Pencil, false, false),
        Verb::Probe => (Command::Probe, false, false),
        Verb::SpecialDirections => (Command::SpecialDirections, false, false),
        Verb::Dictionary => (Command::Dictionary, false, false),
        Verb::Pipeline => (Command::Pipeline, false, false),
    };
    let (doc, code) = match args.config.as_deref().map(InputForm::load).transpose() {
        Ok(input) => {
            let cfg = RunConfig {
                input: input.unwrap_or_else(InputForm::default_theta),
                seed: args.seed,
                symbolic: args.symbolic,
                tangency: args.tangency,
                plane_only,
                corrupt,
                output_path: args.out.clone(),
            };
            run(cmd, &cfg)
        }
        Err(e) => (error_json(cmd.name(), &e), e.exit_code()),
    };
    let text = serde_json::to_string_pretty(&doc).expect("json") + "\n";
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code as u8)
}
