mod commands;
mod document;
mod rackfile;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rackhom::homology::{AlgebraicTheory, CoefficientSpec, Theory};

use rackfile::Convention;

#[derive(Debug)]
pub enum CliError {
    /// Bad input or flags; exit status 2.
    Usage(String),
    /// A mathematical check failed; exit status 1.
    Math(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "rackhom", version, about = "Exact homology and cohomology of finite racks and quandles")]
struct Cli {
    /// Largest chain group size the tool will build.
    #[arg(long, global = true, env = "RACKHOM_BASIS_BUDGET", default_value_t = 1_000_000)]
    basis_budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Rack file: {"size": n, "op": [[...]]} with op[x][y] = x ▷ y.
    path: PathBuf,
    /// Overrides the file's "convention" field.
    #[arg(long)]
    convention: Option<Convention>,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "rack")]
    theory: Theory,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    /// Z or Z/m.
    #[arg(long, default_value = "Z")]
    coeff: CoefficientSpec,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Checks the rack axioms, and idempotence with --quandle.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        quandle: bool,
    },
    /// Prints a standard rack file: trivial N, dihedral N, alexander N T,
    /// conjugation-s3, conjugation-q8.
    Family {
        name: String,
        params: Vec<i64>,
    },
    /// Homology in degrees 0..=max-degree.
    Homology(ComputeArgs),
    /// Cohomology in degrees 0..=max-degree.
    Cohomology(ComputeArgs),
    /// The second cohomology group with explicit cocycle representatives.
    Cocycles {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "quandle")]
        theory: AlgebraicTheory,
        #[arg(long)]
        coeff: CoefficientSpec,
    },
    /// Quillen cohomology D^n next to the cohomology group H^(n+1) it equals.
    Quillen {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "quandle")]
        theory: AlgebraicTheory,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[arg(long, default_value = "Z")]
        coeff: CoefficientSpec,
    },
    /// Runs the acceptance checks over the built-in corpus.
    VerifyPaper,
    /// Applies the free rack operation to two elements written `w : g`.
    FreeOp {
        x: String,
        y: String,
        /// Work in the free quandle.
        #[arg(long)]
        quandle: bool,
        /// Apply the inverse action.
        #[arg(long)]
        inverse: bool,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let budget = cli.basis_budget;
    match cli.command {
        Command::Check { input, quandle } => commands::check(&input.path, input.convention, quandle),
        Command::Family { name, params } => commands::family(&name, &params),
        Command::Homology(a) => commands::homology(&a.input.path, a.input.convention, a.theory, a.max_degree, a.coeff, budget, false),
        Command::Cohomology(a) => commands::homology(&a.input.path, a.input.convention, a.theory, a.max_degree, a.coeff, budget, true),
        Command::Cocycles { input, theory, coeff } => commands::cocycles(&input.path, input.convention, theory, coeff, budget),
        Command::Quillen { input, theory, max_degree, coeff } => {
            commands::quillen(&input.path, input.convention, theory, max_degree, coeff, budget)
        }
        Command::VerifyPaper => commands::verify_paper(),
        Command::FreeOp { x, y, quandle, inverse } => commands::free_op(&x, &y, quandle, inverse),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (CliError::Usage(msg) | CliError::Math(msg)) = &e;
            eprintln!("error: {msg}");
            ExitCode::from(e.exit_code())
        }
    }
}
