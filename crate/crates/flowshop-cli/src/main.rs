//! Command line front end for the flowshop library.
//!
//! Four subcommands: `solve` emits the Pareto front of an instance file,
//! `gen` writes reproducible random instances, `oracle` cross-checks
//! small instances against the brute force, and `bench` times the
//! solvers over a size series. Ground-truth output (CSV, JSON) goes to
//! stdout; anything meant for humans goes to stderr.
//!
//! Exit codes: 0 success, 2 invalid instance or parameters, 3 I/O or
//! parse failure, 4 brute-force guard exceeded.

mod bench;
mod front;
mod gen;
mod instance_io;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flowshop::{brute_force_front, quadratic, solve, Instance, OracleError, ValidationError};

use crate::instance_io::ParseError;

#[derive(Parser)]
#[command(name = "flowshop", version, about = "Ordered two-machine flow shop: full Pareto front of (common due date, tardy jobs)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print its Pareto front
    Solve {
        /// Instance file to read
        #[arg(long)]
        input: PathBuf,
        /// How the input file is encoded
        #[arg(long, value_enum, default_value_t = InstanceFormat::Text)]
        format: InstanceFormat,
        /// How to serialize the front
        #[arg(long, value_enum, default_value_t = FrontFormat::Csv)]
        output: FrontFormat,
        /// Include the per-iteration removal trace (JSON output only)
        #[arg(long)]
        trace: bool,
        /// Which solver to run; both emit identical fronts
        #[arg(long, value_enum, default_value_t = SolverKind::Fast)]
        solver: SolverKind,
    },
    /// Generate a random instance and print it
    Gen {
        /// Number of jobs, at least 1
        #[arg(long)]
        n: usize,
        /// Upper bound for second-machine times; b is uniform on [1, max-b]
        /// and a uniform on [1, b]
        #[arg(long = "max-b")]
        max_b: u32,
        /// Generator seed; identical parameters reproduce identical bytes
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output encoding
        #[arg(long, value_enum, default_value_t = InstanceFormat::Text)]
        format: InstanceFormat,
    },
    /// Brute-force front of a small instance (text form input)
    Oracle {
        /// Instance file to read
        #[arg(long)]
        input: PathBuf,
        /// Largest n the enumeration will accept (default 12, hard cap 20)
        #[arg(long)]
        guard: Option<usize>,
    },
    /// Time the solvers over a series of sizes and report medians
    Bench {
        /// Comma-separated instance sizes, strictly ascending
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Solves per size; the reported time is their median
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Seed for the instance generator
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Which solver(s) to time
        #[arg(long, value_enum, default_value_t = BenchSolver::Fast)]
        solver: BenchSolver,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InstanceFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FrontFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolverKind {
    Fast,
    Quadratic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchSolver {
    Fast,
    Quadratic,
    Both,
}

/// Anything that stops a command, paired with the process exit code it
/// maps to.
enum Failure {
    /// Exit 2: the instance or the flag values are semantically wrong.
    Invalid(String),
    /// Exit 3: unreadable file or unparseable bytes.
    Io(String),
    /// Exit 4: brute force refused an instance over its guard.
    Guard(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Io(_) => 3,
            Failure::Guard(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Invalid(m) | Failure::Io(m) | Failure::Guard(m) => f.write_str(m),
        }
    }
}

impl From<ValidationError> for Failure {
    fn from(e: ValidationError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            OracleError::Invalid(inner) => inner.into(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            input,
            format,
            output,
            trace,
            solver,
        } => cmd_solve(&input, format, output, trace, solver),
        Command::Gen {
            n,
            max_b,
            seed,
            format,
        } => cmd_gen(n, max_b, seed, format),
        Command::Oracle { input, guard } => cmd_oracle(&input, guard),
        Command::Bench {
            sizes,
            trials,
            seed,
            solver,
        } => cmd_bench(&sizes, trials, seed, solver),
    }
}

fn read_instance(path: &Path, format: InstanceFormat) -> Result<Instance, Failure> {
    let src = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let instance = match format {
        InstanceFormat::Text => instance_io::parse_text(&src)?,
        InstanceFormat::Json => instance_io::parse_json(&src)?,
    };
    Ok(instance)
}

fn cmd_solve(
    input: &Path,
    format: InstanceFormat,
    output: FrontFormat,
    trace: bool,
    solver: SolverKind,
) -> Result<(), Failure> {
    if trace && output == FrontFormat::Csv {
        return Err(Failure::Invalid(
            "--trace has no CSV form, use --output json".into(),
        ));
    }
    let instance = read_instance(input, format)?;
    let result = match solver {
        SolverKind::Fast => solve(&instance)?,
        SolverKind::Quadratic => quadratic(&instance)?,
    };
    match output {
        FrontFormat::Csv => print!("{}", front::csv_front(&result.points)),
        FrontFormat::Json => println!(
            "{}",
            front::json_front(instance.name.as_deref(), instance.n(), &result, trace)
        ),
    }
    Ok(())
}

fn cmd_gen(n: usize, max_b: u32, seed: u64, format: InstanceFormat) -> Result<(), Failure> {
    if n < 1 {
        return Err(Failure::Invalid("--n must be at least 1".into()));
    }
    if max_b < 1 {
        return Err(Failure::Invalid("--max-b must be at least 1".into()));
    }
    let instance = gen::generated_instance(n, max_b, seed);
    match format {
        InstanceFormat::Text => print!("{}", instance_io::emit_text(&instance)),
        InstanceFormat::Json => println!("{}", instance_io::emit_json(&instance)),
    }
    Ok(())
}

fn cmd_oracle(input: &Path, guard: Option<usize>) -> Result<(), Failure> {
    let instance = read_instance(input, InstanceFormat::Text)?;
    // points come back ascending in retained; the front prints n down to 0
    let mut points = brute_force_front(&instance, guard)?;
    points.reverse();
    print!("{}", front::csv_front(&points));
    Ok(())
}

fn cmd_bench(sizes: &[usize], trials: usize, seed: u64, solver: BenchSolver) -> Result<(), Failure> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::Invalid("--sizes must be strictly ascending".into()));
    }
    if sizes.iter().any(|&s| s < 1) {
        return Err(Failure::Invalid("--sizes entries must be at least 1".into()));
    }
    if trials < 5 {
        return Err(Failure::Invalid(
            "--trials must be at least 5 for a stable median".into(),
        ));
    }
    bench::run(sizes, trials, seed, solver);
    Ok(())
}
