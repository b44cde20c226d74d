use std::io;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use truncated_reflection::runner::{
    dump_level, execute, Command, Options, Outcome, DEFAULT_EULER_MAX_N, DEFAULT_MAX_DETAIL_TERMS,
    DEFAULT_SERIES_ORDER,
};

#[derive(Parser)]
#[command(
    name = "reflection-verify",
    version,
    about = "Exact checks for truncated reflection algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Top,
}

#[derive(Subcommand)]
enum Top {
    /// Run a group of checks.
    Verify {
        #[command(subcommand)]
        what: Verify,
        #[command(flatten)]
        flags: Flags,
    },
    /// Print the canonical dump of one tower level.
    Dump {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        level: u8,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Euler product identity for n = 0..=max-n.
    Euler {
        #[arg(long, default_value_t = DEFAULT_EULER_MAX_N as u16, value_parser = clap::value_parser!(u16).range(0..=200))]
        max_n: u16,
    },
    /// Yang-Baxter equation for the R-matrix.
    YangBaxter,
    /// RLL relations and L(x)L(-x).
    Rll,
    /// Reflection equation, recursions and extraction at one level.
    Tower {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        level: u8,
    },
    /// Serre, Higgs, center and Hahn checks at level 1.
    Hahn,
    /// Relations and central elements at level 2.
    N2,
    /// Everything except level 3.
    All {
        /// Order of the generating-function series check.
        #[arg(long, default_value_t = DEFAULT_SERIES_ORDER as u16, value_parser = clap::value_parser!(u16).range(2..=60))]
        series_order: u16,
    },
}

#[derive(Args)]
struct Flags {
    /// Newline-delimited JSON records.
    #[arg(long, global = true)]
    json: bool,
    /// Stop after the first failing check.
    #[arg(long, global = true)]
    fail_fast: bool,
    /// Exit with status 3 if the checks take longer than this.
    #[arg(long, global = true)]
    time_budget_seconds: Option<f64>,
    /// Residual terms shown in a failing record.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DETAIL_TERMS)]
    max_detail_terms: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Top::Dump { level } => match dump_level(level.into()) {
            Ok(text) => {
                print!("{text}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Top::Verify { what, flags } => {
            let command = match what {
                Verify::Euler { max_n } => Command::Euler {
                    max_n: max_n.into(),
                },
                Verify::YangBaxter => Command::YangBaxter,
                Verify::Rll => Command::Rll,
                Verify::Tower { level } => Command::Tower {
                    level: level.into(),
                },
                Verify::Hahn => Command::Hahn,
                Verify::N2 => Command::N2,
                Verify::All { series_order } => Command::All {
                    series_order: series_order.into(),
                },
            };
            let time_budget = match flags.time_budget_seconds {
                Some(s) if !(s.is_finite() && s >= 0.0) => {
                    eprintln!("error: --time-budget-seconds must be a non-negative number");
                    return ExitCode::from(2);
                }
                s => s.map(Duration::from_secs_f64),
            };
            let options = Options {
                fail_fast: flags.fail_fast,
                max_detail_terms: flags.max_detail_terms,
                time_budget,
                json: flags.json,
            };
            match execute(command, &options, &mut io::stdout().lock()) {
                // exit immediately so a timed-out worker does not linger
                Ok(outcome) => {
                    if options.json && outcome == Outcome::BudgetExceeded {
                        eprintln!("time budget exceeded");
                    }
                    std::process::exit(outcome.exit_code())
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
