//! Command-line pipeline: ingest a corpus, mine definitions and hyponymies
//! for a term, and write tables, graphs and evaluation reports.

pub mod commands;
pub mod config;
pub mod error;
pub mod outputs;
pub mod pipeline;
pub mod staging;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::{Artifact, CompareArgs, EvalArgs, InduceArgs, DEFINE_ARTIFACTS};
pub use config::{ConfigArgs, RunConfig};
pub use error::CliError;
pub use outputs::Locale;

#[derive(Debug, Parser)]
#[command(name = "defminer", version, about = "Mine genus-differentia definitions and hyponymies from abstracts")]
pub struct Cli {
    /// Config file of `key = value` lines; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write decimals with a comma and use `;` as the CSV delimiter.
    #[arg(long, global = true)]
    pub decimal_comma: bool,
    #[command(flatten)]
    pub settings: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load and tag the corpus; writes sentences.conllu and ingest.json.
    Ingest,
    /// Full run: definitions, hyponymies, statistics, graphs and a manifest.
    Define,
    /// Hyponym and synonym tables only.
    Hyponyms,
    /// Genus and feature distributions, co-occurrence and the literature profile.
    Stats,
    /// Ontology graph as DOT and GraphML.
    Ontology,
    /// Definition similarity network and its clusters.
    Network,
    /// Precision report for rule sets and the selected set.
    Eval(EvalArgs),
    /// Side-by-side comparison of two or more terms.
    Compare(CompareArgs),
    /// Definitor and genus statistics from known definitions.
    Induce(InduceArgs),
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let cfg = RunConfig::resolve(cli.config.as_deref(), &cli.settings)?;
    let locale = Locale {
        decimal_comma: cli.decimal_comma,
    };
    use Artifact::*;
    match &cli.command {
        Command::Ingest => commands::cmd_ingest(&cfg),
        Command::Define => commands::cmd_pipeline("define", &cfg, locale, DEFINE_ARTIFACTS),
        Command::Hyponyms => commands::cmd_pipeline("hyponyms", &cfg, locale, &[Hyponyms, Synonyms]),
        Command::Stats => commands::cmd_pipeline("stats", &cfg, locale, &[Genera, Features, Cooccurrence, Profile]),
        Command::Ontology => commands::cmd_pipeline("ontology", &cfg, locale, &[Ontology]),
        Command::Network => commands::cmd_pipeline("network", &cfg, locale, &[Network]),
        Command::Eval(args) => commands::cmd_eval(&cfg, args, locale),
        Command::Compare(args) => commands::cmd_compare(&cfg, args, locale),
        Command::Induce(args) => commands::cmd_induce(&cfg, args),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status: 0 success, 1 usage, 2 data error, 3 internal or output error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match std::panic::catch_unwind(|| execute(&cli)) {
        Ok(Ok(msg)) => {
            println!("{msg}");
            0
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
        Err(_) => {
            eprintln!("error: internal failure");
            3
        }
    }
}
