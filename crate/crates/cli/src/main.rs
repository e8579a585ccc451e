mod commands;
mod output;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hyperring_core::Error;

#[derive(Parser)]
#[command(
    name = "hyperring",
    version,
    about = "Finite multiplicative hyperrings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by the ring-level commands.
#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Ring document (file or inline JSON) or `zn:N:a,b,..`.
    #[arg(long)]
    pub ring: String,
    /// Emit JSON instead of `key: value` lines.
    #[arg(long)]
    pub json: bool,
    /// Order cap for enumerations and products.
    #[arg(long, value_name = "N")]
    pub max_order: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms and print the structure record.
    Validate {
        #[command(flatten)]
        common: Common,
        /// On success print the table document instead of the record.
        #[arg(long)]
        emit: bool,
    },
    /// Structure record plus zero divisors, nilradical, units and hyperideals.
    Props {
        #[command(flatten)]
        common: Common,
    },
    /// Classify a subset against every ideal predicate.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        /// Endomorphism; defaults to the identity.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Prime radical and D-set of a hyperideal.
    Radical {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
    },
    /// α-radical of a subset.
    Alpharadical {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        alpha: String,
    },
    /// Nilradical, or the α-nilradical when `--alpha` is given.
    Nil {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Emit R/I as a table document.
    Quotient {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
    },
    /// Emit R × S as a table document.
    Product {
        #[command(flatten)]
        common: Common,
        /// Second factor.
        #[arg(long = "with", value_name = "RING")]
        other: String,
    },
    /// List the good endomorphisms.
    Endos {
        #[command(flatten)]
        common: Common,
    },
    /// Run the theorem catalog over a corpus.
    Verify {
        #[command(flatten)]
        run: CorpusArgs,
        /// Comma-separated theorem ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        /// Write the report here instead of stdout.
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
        /// Exit 3 on any failure outside the known-discrepancy ledger.
        #[arg(long)]
        strict: bool,
        /// Worker threads; the report does not depend on it.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Summarize a corpus.
    Corpus {
        #[command(flatten)]
        run: CorpusArgs,
    },
}

#[derive(Args, Clone, Debug)]
pub struct CorpusArgs {
    /// `default` or a corpus document.
    #[arg(long, default_value = "default")]
    pub corpus: String,
    #[arg(long)]
    pub json: bool,
    /// Largest ring order whose hyperideals are enumerated.
    #[arg(long, value_name = "N")]
    pub max_order: Option<usize>,
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or structurally malformed input.
    Parse(String),
    /// Well-formed input that fails a mathematical check.
    Semantic(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Malformed(_) | Error::ForeignElement(_) | Error::BadModulus(_) => {
                CliError::Parse(e.to_string())
            }
            Error::EmptyMultiplierSet => CliError::Parse(e.to_string()),
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

/// What a command produced and how the process should exit.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    use commands as c;
    match cli.command {
        Command::Validate { common, emit } => c::validate(&common, emit),
        Command::Props { common } => c::props(&common).map(Outcome::ok),
        Command::Classify {
            common,
            ideal,
            alpha,
        } => c::classify(&common, &ideal, alpha.as_deref()).map(Outcome::ok),
        Command::Radical { common, ideal } => c::radical(&common, &ideal).map(Outcome::ok),
        Command::Alpharadical {
            common,
            ideal,
            alpha,
        } => c::alpharadical(&common, &ideal, &alpha).map(Outcome::ok),
        Command::Nil { common, alpha } => c::nil(&common, alpha.as_deref()).map(Outcome::ok),
        Command::Quotient { common, ideal } => c::quotient(&common, &ideal).map(Outcome::ok),
        Command::Product { common, other } => c::product(&common, &other).map(Outcome::ok),
        Command::Endos { common } => c::endos(&common).map(Outcome::ok),
        Command::Verify {
            run,
            theorems,
            report,
            strict,
            jobs,
        } => c::verify(&run, &theorems, report.as_deref(), strict, jobs),
        Command::Corpus { run } => c::corpus(&run).map(Outcome::ok),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::from(out.code)
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Semantic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
