use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use projrep::rep::RepJson;
use projrep::Error;
use projrep_cli::{
    cmd_chartab, cmd_check, cmd_classes, cmd_irreps, load_inputs, Mode, Settings, Strategy,
};

#[derive(Parser)]
#[command(
    name = "projrep",
    version,
    about = "Character tables and irreps of projective representations"
)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Tolerance for the floating-point pipelines.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Refuse groups with more elements than this.
    #[arg(long, global = true, default_value_t = projrep::group::DEFAULT_MAX_ORDER)]
    max_group_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Group JSON: {"cayley": [[...]]} or {"permutations": [[...]]}.
    group: PathBuf,
    /// Cocycle JSON: {"root_order": N, "exponents": [[...]]}. Trivial if omitted.
    cocycle: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List conjugacy classes and which are regular.
    Classes {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Compute the character table.
    Chartab {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Write JSON here and print the table; otherwise JSON goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute matrices for every irreducible representation.
    Irreps {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Strategy::Regular)]
        strategy: Strategy,
        /// Faithful starting representation for the iterative strategy.
        #[arg(long)]
        pi: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run all pipelines and cross-check them.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
}

fn emit(json: String, pretty: String, out: Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => {
            std::fs::write(&path, json)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            print!("{pretty}");
        }
        None => print!("{json}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let settings = Settings {
        seed: cli.seed,
        tol: cli.tol,
        max_group_order: cli.max_group_order,
    };
    let load = |input: &Input| load_inputs(&input.group, input.cocycle.as_deref(), &settings);
    match cli.command {
        Command::Classes { input, json } => {
            print!("{}", cmd_classes(&*load(&input)?, json)?);
        }
        Command::Chartab { input, mode, out } => {
            let (json, pretty) = cmd_chartab(&*load(&input)?, mode, &settings)?;
            emit(json, pretty, out)?;
        }
        Command::Irreps {
            input,
            strategy,
            pi,
            out,
        } => {
            let mult = load(&input)?;
            let pi = match pi {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    Some(serde_json::from_str::<RepJson>(&text)?)
                }
                None => None,
            };
            let (json, summary) = cmd_irreps(&mult, strategy, pi.as_ref(), &settings)?;
            emit(json, summary, out)?;
        }
        Command::Check { input, json } => {
            // Validate the cocycle up front so a corrupted file is reported
            // with its own exit code rather than as a failed check.
            let mult = match load(&input) {
                Err(Error::Cocycle(e)) => {
                    println!("[FAIL] cocycle identity {e}");
                    return Err(Error::Cocycle(e));
                }
                other => other?,
            };
            let report = cmd_check(&mult, &settings);
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                print!("{report}");
            }
            if !report.passed() {
                return Ok(ExitCode::from(4));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
