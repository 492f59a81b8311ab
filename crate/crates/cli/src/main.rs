//! `wharf`: exact computations with weak Hopf algebras and their partial
//! actions, driven by JSON input files.
//!
//! Every subcommand prints a deterministic line-oriented report (see
//! [`report::RunReport`]) and exits 0 exactly when everything it loaded,
//! built, and verified passed.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "wharf", version, about = "Exact weak Hopf algebra computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the weak Hopf axioms and the structural lemma suite
    VerifyWha {
        /// Weak Hopf algebra file, or a groupoid file taken through its
        /// groupoid algebra
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the groupoid algebra of a finite groupoid, verify it, and
    /// optionally write it out as a weak Hopf algebra file
    GroupoidAlgebra {
        /// Groupoid file
        #[arg(long)]
        input: PathBuf,
        /// Destination for the weak Hopf algebra file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the partial action axioms, symmetry, globality, and the
    /// derived identities
    CheckPaction {
        /// Action file
        #[arg(long)]
        input: PathBuf,
        /// Also print the nonzero action values
        #[arg(long)]
        emit_tables: bool,
    },
    /// Classify the partial actions of a groupoid algebra on the ground
    /// field and cross-check them against the subgroup oracle
    ClassifyGround {
        /// Groupoid file
        #[arg(long)]
        input: PathBuf,
        /// Largest isotropy group the subgroup enumeration accepts
        #[arg(long, default_value_t = 16)]
        oracle_bound: usize,
    },
    /// Build the smash product and its unital corner
    Smash {
        /// Action file
        #[arg(long)]
        input: PathBuf,
        /// Also print the smash multiplication table
        #[arg(long)]
        emit_tables: bool,
    },
    /// Build and verify the standard globalization
    Globalize {
        /// Action file
        #[arg(long)]
        input: PathBuf,
        /// Also print the embedding of A into B
        #[arg(long)]
        emit_tables: bool,
    },
    /// Build the Morita context linking the partial smash product with the
    /// smash product of the globalization
    Morita {
        /// Action file
        #[arg(long)]
        input: PathBuf,
    },
    /// Convert a groupoid action to an algebra action and back, checking
    /// that both composites reproduce their input exactly
    Roundtrip {
        /// Groupoid action file
        #[arg(long)]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match &cli.command {
        Command::VerifyWha { input } => commands::verify_wha(input),
        Command::GroupoidAlgebra { input, out } => {
            commands::groupoid_algebra_cmd(input, out.as_deref())
        }
        Command::CheckPaction { input, emit_tables } => commands::check_paction(input, *emit_tables),
        Command::ClassifyGround { input, oracle_bound } => {
            commands::classify_ground(input, *oracle_bound)
        }
        Command::Smash { input, emit_tables } => commands::smash(input, *emit_tables),
        Command::Globalize { input, emit_tables } => commands::globalize(input, *emit_tables),
        Command::Morita { input } => commands::morita(input),
        Command::Roundtrip { input } => commands::roundtrip(input),
    };
    print!("{}", report.render());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
