//! `f1points`: counting tables, Weyl and Tits group data, Bruhat censuses and
//! matrix evaluations from the command line.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "f1points", version, about = "Graded F_1-points of Chevalley groups, computed exactly")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "pretty")]
    format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on enumerated points; larger requests fail with exit code 3 or
    /// fall back to closed formulas.
    #[arg(long, global = true, env = "F1POINTS_BUDGET", default_value_t = f1points::gadgets::DEFAULT_POINT_BUDGET)]
    budget: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct TypeArg {
    /// Root system, e.g. A2, G2, A3:adjoint, A1xA1, or a Cartan matrix as JSON.
    #[arg(value_name = "TYPE")]
    pub positional: Option<String>,

    /// Same as the positional TYPE.
    #[arg(long = "type", value_name = "TYPE", conflicts_with = "positional")]
    pub flag: Option<String>,
}

impl TypeArg {
    pub fn get(&self) -> Option<&str> {
        self.positional.as_deref().or(self.flag.as_deref())
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the roots with heights and coroot forms.
    Roots {
        #[command(flatten)]
        ty: TypeArg,
    },
    /// List the Weyl group with reduced words, lengths and inversion sets.
    Weyl {
        #[command(flatten)]
        ty: TypeArg,
    },
    /// The extended Weyl group N_{D,eps}.
    Tits(commands::TitsArgs),
    /// Graded point counts of a gadget against its counting polynomial.
    Count(commands::CountArgs),
    /// Bruhat decomposition over a finite field (type A).
    Bruhat(commands::BruhatArgs),
    /// Matrices e_G(x) of the graded points (type A).
    Eval(commands::EvalArgs),
    /// Run the invariant suite; exits non-zero if any check fails.
    Verify,
}

/// Errors caused by the command line rather than the computation.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// What a command produced: text plus whether it counts as success.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let format = if cli.json { Format::Json } else { cli.format };
    let budget = cli.budget;
    match cli.command {
        Command::Roots { ty } => commands::roots(&ty, format),
        Command::Weyl { ty } => commands::weyl(&ty, format),
        Command::Tits(args) => commands::tits(&args, format, budget),
        Command::Count(args) => commands::count(&args, format, budget),
        Command::Bruhat(args) => commands::bruhat(&args, format, budget),
        Command::Eval(args) => commands::eval(&args, budget),
        Command::Verify => commands::verify(format, budget),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<f1points::Error>() {
        Some(f1points::Error::BudgetExceeded { .. }) => 3,
        Some(f1points::Error::Parse(_) | f1points::Error::Invalid(_) | f1points::Error::Unsupported(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
