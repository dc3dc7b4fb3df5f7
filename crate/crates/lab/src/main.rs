use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lklab::commands::{self, ColorMode, Common, Format, Output, VerifyInput};
use lklab::config::budget_from_env;
use lklab::dimacs::FamilySpec;
use lklab::LabError;

/// Verification lab for local Kneser graphs.
///
/// Exit codes: 0 all checks pass, 1 a theorem check failed, 2 usage or input
/// error, 3 only budget overruns. Solver budgets can be overridden with
/// LKLAB_BUDGET, e.g. LKLAB_BUDGET="alpha=500,psi=12".
#[derive(Parser)]
#[command(name = "lklab", version)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout when absent); for `construct`, the file prefix.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Include timestamp and wall time in reports.
    #[arg(long, global = true, value_enum, default_value_t = Toggle::On)]
    timestamp: Toggle,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Random,
    Projection,
    Exact,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write `<prefix>.dimacs` and `<prefix>.labels`.
    Construct {
        #[command(subcommand)]
        family: FamilyArg,
    },
    /// Run the verification grid, or the checks for one saved instance.
    Verify {
        /// Largest ground set in the grid.
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// A DIMACS file written by `construct`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Label sidecar (defaults to the input with extension `labels`).
        #[arg(long, requires = "input")]
        labels: Option<PathBuf>,
    },
    /// Color U_t(n, r).
    Color {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value_t = ModeArg::Random)]
        mode: ModeArg,
        /// Independent Las Vegas runs (random mode).
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
    /// Exact local chromatic number of U_t(n, r) against r - 2t + 2.
    Psi {
        #[command(flatten)]
        triple: Triple,
    },
    /// Tabulate chromatic upper bounds over comma-separated parameter lists.
    Bounds {
        #[arg(short, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        #[arg(short, value_delimiter = ',', required = true)]
        r: Vec<u64>,
        #[arg(short, value_delimiter = ',', required = true)]
        t: Vec<u64>,
    },
}

#[derive(Args)]
struct Triple {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    r: usize,
    #[arg(short)]
    t: usize,
}

#[derive(Subcommand)]
enum FamilyArg {
    /// KG(m, n).
    Kneser {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
    },
    /// U(n, r).
    LocalComplete {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
    },
    /// U_t(n, r).
    LocalKneser {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        t: usize,
    },
}

fn run(cli: Cli) -> Result<Output, LabError> {
    let common = Common {
        seed: cli.seed,
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        },
        timestamps: cli.timestamp == Toggle::On,
    };
    let budget = budget_from_env()?;
    match cli.command {
        Command::Construct { family } => {
            let spec = match family {
                FamilyArg::Kneser { m, n } => FamilySpec::Kneser { m, n },
                FamilyArg::LocalComplete { n, r } => FamilySpec::LocalComplete { n, r },
                FamilyArg::LocalKneser { n, r, t } => FamilySpec::LocalKneser { n, r, t },
            };
            commands::construct(spec, cli.out.as_deref(), common)
        }
        Command::Verify {
            n_max,
            input,
            labels,
        } => {
            let input = input.as_deref().map(|graph| VerifyInput {
                graph,
                labels: labels.as_deref(),
            });
            commands::verify(n_max, input, common, budget)
        }
        Command::Color {
            triple,
            mode,
            trials,
        } => {
            let mode = match mode {
                ModeArg::Random => ColorMode::Random,
                ModeArg::Projection => ColorMode::Projection,
                ModeArg::Exact => ColorMode::Exact,
            };
            commands::color((triple.n, triple.r, triple.t), mode, trials, common, budget)
        }
        Command::Psi { triple } => commands::psi((triple.n, triple.r, triple.t), common, budget),
        Command::Bounds { n, r, t } => commands::bounds(&n, &r, &t, common),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Construct { .. } => None,
        _ => cli.out.clone(),
    };
    match run(cli) {
        Ok(output) => {
            let written = match &out {
                Some(path) => {
                    std::fs::write(path, &output.text).map_err(|e| LabError::io(path.display(), e))
                }
                None => {
                    print!("{}", output.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(output.status.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
