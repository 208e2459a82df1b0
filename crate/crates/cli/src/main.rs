//! `harmpack`: check, transform, solve, generate and render harmonic
//! periodic schedules and their ruled packings.
//!
//! Exit codes: 0 feasible/success, 1 infeasible, 2 invalid input,
//! 3 internal oracle disagreement, 4 search budget exceeded.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use harmpack::solvers::{ShelfMode, DEFAULT_ORACLE_BUDGET};

#[derive(Parser, Debug)]
#[command(name = "harmpack", version, about = "Harmonic periodic scheduling as ruled 2D packing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a schedule or packing against an instance.
    Check {
        instance: PathBuf,
        solution: PathBuf,
        /// Also run the timeline simulation and fail with exit 3 on disagreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Map a schedule to its packing or a packing to its schedule.
    Transform {
        instance: PathBuf,
        solution: PathBuf,
        /// Target kind; defaults to the opposite of the input.
        #[arg(long, value_enum)]
        to: Option<Kind>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a solver and write its solution.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Ffdh)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = ShelfArg::FirstFit)]
        shelf_mode: ShelfArg,
        /// Largest raw search space the exact modes may enumerate.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u64,
        /// Machine width for `bins`; defaults to the instance's w.
        #[arg(long)]
        machine_width: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a seeded random instance.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        /// Comma-separated radix chain, e.g. `2,3,2`.
        #[arg(long, value_delimiter = ',', required = true)]
        radices: Vec<u64>,
        #[arg(long)]
        w: u64,
        #[arg(long)]
        p_max: u64,
        #[arg(long, default_value_t = 0.0)]
        window_probability: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a packing or a schedule timeline as SVG.
    Render {
        instance: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Schedule,
    Packing,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Ffdh,
    Exact,
    Windows,
    Bins,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ShelfArg {
    FirstFit,
    NextFit,
}

impl From<ShelfArg> for ShelfMode {
    fn from(s: ShelfArg) -> Self {
        match s {
            ShelfArg::FirstFit => ShelfMode::FirstFit,
            ShelfArg::NextFit => ShelfMode::NextFit,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(commands::EXIT_INVALID)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    let result = match cli.command {
        Command::Check {
            instance,
            solution,
            oracle,
        } => commands::check(&instance, &solution, oracle),
        Command::Transform {
            instance,
            solution,
            to,
            out,
        } => commands::transform(&instance, &solution, to, out.as_deref()),
        Command::Solve {
            instance,
            mode,
            shelf_mode,
            budget,
            machine_width,
            out,
        } => commands::solve(
            &instance,
            mode,
            shelf_mode.into(),
            budget,
            machine_width,
            out.as_deref(),
        ),
        Command::Gen {
            seed,
            n,
            radices,
            w,
            p_max,
            window_probability,
            out,
        } => commands::gen(seed, n, radices, w, p_max, window_probability, out.as_deref()),
        Command::Render {
            instance,
            solution,
            out,
        } => commands::render(&instance, &solution, &out),
    };

    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
