use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use contact_symmetry_cli::{run, Command, Format, RunConfig};

/// Exact checks of symmetries, harmonic curvature and Weyl structures on
/// parabolic contact algebras.
#[derive(Parser)]
#[command(name = "csym", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Algebra spec such as `sl:n=2`, `su:p=1,q=1`, `sp:n=1` or `so:p=1,q=1`
    #[arg(long = "alg", global = true)]
    alg: Option<String>,
    /// Number of random samples per check
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    /// Seed for every sampled value
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// List the basis (index, degree, label, matrix) before the report
    #[arg(long, global = true)]
    print_basis: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the contact grading axioms
    Verify,
    /// Sample symmetry candidates at the origin
    Symmetries {
        /// Only sample candidates with Z2 = 0
        #[arg(long)]
        involutive_only: bool,
    },
    /// Harmonic curvature components by homogeneity and type
    Harmonic,
    /// Obstruction coefficient and uniqueness verdict for a U1 in g1
    Obstruction {
        /// Comma-separated rationals in the g1 basis order shown by --print-basis
        #[arg(long, allow_hyphen_values = true)]
        u1: String,
    },
    /// Run every check over the built-in algebra list, or over --alg
    Report,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut config = RunConfig::new(Command::Verify);
    config.command = match cli.command {
        Cmd::Verify => Command::Verify,
        Cmd::Symmetries { involutive_only } => {
            config.involutive_only = involutive_only;
            Command::Symmetries
        }
        Cmd::Harmonic => Command::Harmonic,
        Cmd::Obstruction { u1 } => {
            config.u1 = Some(u1);
            Command::Obstruction
        }
        Cmd::Report => Command::Report,
    };
    config.algebra = cli.common.alg;
    config.samples = cli.common.samples;
    config.seed = cli.common.seed;
    config.print_basis = cli.common.print_basis;
    config.format = if cli.common.json {
        Format::Json
    } else {
        Format::Text
    };
    let code = run(
        &config,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code)
}
