mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Exact decompositions and verifications for the surface Lie algebra and
/// its derivations.
#[derive(Parser, Debug)]
#[command(name = "symplie", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a module into irreducible Sp(2g)-representations.
    Decompose(DecomposeArgs),
    /// Run named verifications.
    Verify(VerifyArgs),
    /// Print dimension tables.
    Dims(DimsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleName {
    /// Degree piece of the free Lie algebra.
    #[value(name = "L")]
    Lie,
    /// Degree piece of the surface Lie algebra.
    #[value(name = "p")]
    P,
    /// Degree-n derivations.
    #[value(name = "der")]
    Der,
    /// Outer derivations.
    #[value(name = "outder")]
    OutDer,
    #[value(name = "sym2lambda2")]
    Sym2Lambda2,
    /// Exterior power of H of the given degree.
    #[value(name = "lambda_k")]
    LambdaK,
    /// Hom(H, p(degree+1)).
    #[value(name = "hom")]
    Hom,
}

#[derive(clap::Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long, default_value_t = 3)]
    pub g: usize,
    #[arg(long)]
    pub module: ModuleName,
    #[arg(long, default_value_t = 1)]
    pub degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Claim id, or "all".
    #[arg(long, default_value = "all")]
    pub claim: String,
    /// Genera, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "3")]
    pub g: Vec<usize>,
    /// Largest degree for dims-oracle (defaults to the degree cap).
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Flip the orientation of the twist curves.
    #[arg(long)]
    pub inverse_twist: bool,
    /// Include wall-clock times; output is then no longer reproducible.
    #[arg(long)]
    pub timing: bool,
}

#[derive(clap::Args, Debug)]
pub struct DimsArgs {
    #[arg(long, default_value_t = 3)]
    pub g: usize,
    #[arg(long, default_value_t = 5)]
    pub max_degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Decompose(a) => commands::decompose(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Dims(a) => commands::dims(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
