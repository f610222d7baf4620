use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use g2core::cli::{cmd_check, cmd_classify, cmd_roots, cmd_table, CliError, TableKind};
use g2core::numerics::DEFAULT_PRECISION;

#[derive(Parser)]
#[command(name = "g2", version, about = "Exact computations with the Lie algebra G2")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root system of a Dynkin type such as G2 or A3
    Roots { type_name: String },
    /// Orbit of a 3-form on a 7-dimensional space, read from a JSON file
    Classify {
        path: PathBuf,
        /// Also build an explicit frame taking the form to its representative
        #[arg(long)]
        witness: bool,
        /// Decimal digits for the witness computation
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: u32,
    },
    /// Multiplication tables: fano, split-octonion, g2-structure-constants
    Table { kind: String },
    /// Run the verification suite
    Check {
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the timed JSON report here
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cmd: Cmd) -> Result<String, CliError> {
    match cmd {
        Cmd::Roots { type_name } => cmd_roots(&type_name),
        Cmd::Classify { path, witness, precision } => {
            let text = std::fs::read_to_string(&path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            cmd_classify(&text, witness, precision)
        }
        Cmd::Table { kind } => cmd_table(kind.parse::<TableKind>()?),
        Cmd::Check { filter, seed, out } => cmd_check(&filter, seed, out.as_deref()),
    }
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
    match run(args.cmd) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::CheckFailed { stdout, .. } = &e {
                print!("{stdout}");
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
