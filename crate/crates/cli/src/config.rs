use std::path::{Path, PathBuf};

use clap::Args;
use serde::Serialize;

use crate::error::CliError;
use defminer_core::analytics::DEFAULT_MIN_COOCCURRENCE;
use defminer_core::evaluation::DEFAULT_PRECISION_FLOOR;
use defminer_core::CorpusFormat;

/// Run settings. Every field can come from a `key = value` config file and
/// be overridden by the flag of the same name.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub corpus_path: Option<PathBuf>,
    /// `jsonl` or `csv`; guessed from the corpus extension when unset.
    pub corpus_format: Option<String>,
    pub conllu_path: Option<PathBuf>,
    pub term: Option<String>,
    pub rule_catalog_path: Option<PathBuf>,
    pub stopword_path: Option<PathBuf>,
    #[serde(skip)]
    pub output_dir: Option<PathBuf>,
    pub min_cooccurrence: usize,
    pub network_min_weight: usize,
    pub cluster_threshold: usize,
    pub precision_floor: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            corpus_path: None,
            corpus_format: None,
            conllu_path: None,
            term: None,
            rule_catalog_path: None,
            stopword_path: None,
            output_dir: None,
            min_cooccurrence: DEFAULT_MIN_COOCCURRENCE,
            network_min_weight: 2,
            cluster_threshold: 2,
            precision_floor: DEFAULT_PRECISION_FLOOR,
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct ConfigArgs {
    /// Corpus of abstracts (.jsonl or .csv).
    #[arg(long, global = true, visible_alias = "corpus", alias = "corpus_path")]
    pub corpus_path: Option<PathBuf>,
    /// Corpus format; guessed from the extension when omitted.
    #[arg(long = "format", global = true, alias = "corpus_format", value_parser = ["jsonl", "csv"])]
    pub corpus_format: Option<String>,
    /// Pre-tagged sentences in CoNLL-U.
    #[arg(long, global = true, visible_alias = "conllu", alias = "conllu_path")]
    pub conllu_path: Option<PathBuf>,
    /// Term to define.
    #[arg(long, global = true)]
    pub term: Option<String>,
    /// Rule catalog TSV; the built-in catalog when omitted.
    #[arg(long, global = true, alias = "rule_catalog_path")]
    pub rule_catalog_path: Option<PathBuf>,
    /// Stopword list, one word per line; the built-in English list when omitted.
    #[arg(long, global = true, alias = "stopword_path")]
    pub stopword_path: Option<PathBuf>,
    /// Directory for output files; created if missing.
    #[arg(long, global = true, alias = "output_dir")]
    pub output_dir: Option<PathBuf>,
    /// Smallest pair count kept in cooccurrence.csv [default: 2].
    #[arg(long, global = true, alias = "min_cooccurrence")]
    pub min_cooccurrence: Option<usize>,
    /// Shared words needed for a network edge [default: 2].
    #[arg(long, global = true, alias = "network_min_weight")]
    pub network_min_weight: Option<usize>,
    /// Edge weight needed to join a cluster [default: 2].
    #[arg(long, global = true, alias = "cluster_threshold")]
    pub cluster_threshold: Option<usize>,
    /// Lowest weighted precision a rule set may have to be selected [default: 0.65].
    #[arg(long, global = true, alias = "precision_floor")]
    pub precision_floor: Option<f64>,
}

fn parse_number<T: std::str::FromStr>(value: &str, key: &str) -> Result<T, String> {
    value
        .parse()
        .map_err(|_| format!("{key}: {value:?} is not a valid number"))
}

impl RunConfig {
    fn set(&mut self, key: &str, value: &str, base: &Path) -> Result<(), String> {
        let path = || Some(base.join(value));
        match key.replace('-', "_").as_str() {
            "corpus_path" => self.corpus_path = path(),
            "corpus_format" | "format" => {
                CorpusFormat::parse(value).map_err(|e| e.to_string())?;
                self.corpus_format = Some(value.to_ascii_lowercase());
            }
            "conllu_path" => self.conllu_path = path(),
            "term" => self.term = Some(value.to_string()),
            "rule_catalog_path" => self.rule_catalog_path = path(),
            "stopword_path" => self.stopword_path = path(),
            "output_dir" => self.output_dir = path(),
            "min_cooccurrence" => self.min_cooccurrence = parse_number(value, key)?,
            "network_min_weight" => self.network_min_weight = parse_number(value, key)?,
            "cluster_threshold" => self.cluster_threshold = parse_number(value, key)?,
            "precision_floor" => self.precision_floor = parse_number(value, key)?,
            other => return Err(format!("unknown key {other:?}")),
        }
        Ok(())
    }

    /// Applies a config file. Relative paths are taken from the file's directory.
    pub fn apply_file_text(&mut self, text: &str, path: &Path) -> Result<(), CliError> {
        let base = path.parent().unwrap_or(Path::new(""));
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: String| CliError::Config {
                path: path.to_path_buf(),
                line: i + 1,
                reason,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err("expected key = value".into()))?;
            self.set(key.trim(), value.trim(), base).map_err(err)?;
        }
        Ok(())
    }

    pub fn apply_args(&mut self, args: &ConfigArgs) {
        macro_rules! take {
            ($($f:ident),*) => {$(
                if let Some(v) = &args.$f {
                    self.$f = Some(v.clone());
                }
            )*};
        }
        take!(corpus_path, corpus_format, conllu_path, term, rule_catalog_path, stopword_path, output_dir);
        if let Some(v) = args.min_cooccurrence {
            self.min_cooccurrence = v;
        }
        if let Some(v) = args.network_min_weight {
            self.network_min_weight = v;
        }
        if let Some(v) = args.cluster_threshold {
            self.cluster_threshold = v;
        }
        if let Some(v) = args.precision_floor {
            self.precision_floor = v;
        }
    }

    /// Defaults, then the config file if any, then flags.
    pub fn resolve(config_file: Option<&Path>, args: &ConfigArgs) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = config_file {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Config {
                path: path.to_path_buf(),
                line: 0,
                reason: e.to_string(),
            })?;
            cfg.apply_file_text(&text, path)?;
        }
        cfg.apply_args(args);
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks thresholds and that every configured input file exists.
    pub fn validate(&self) -> Result<(), CliError> {
        for (key, v) in [
            ("min_cooccurrence", self.min_cooccurrence),
            ("network_min_weight", self.network_min_weight),
            ("cluster_threshold", self.cluster_threshold),
        ] {
            if v < 1 {
                return Err(CliError::Usage(format!("{key} must be at least 1, got {v}")));
            }
        }
        if !(self.precision_floor > 0.0 && self.precision_floor <= 1.0) {
            return Err(CliError::Usage(format!(
                "precision_floor must be in (0, 1], got {}",
                self.precision_floor
            )));
        }
        for (key, path) in [
            ("corpus_path", &self.corpus_path),
            ("conllu_path", &self.conllu_path),
            ("rule_catalog_path", &self.rule_catalog_path),
            ("stopword_path", &self.stopword_path),
        ] {
            if let Some(p) = path {
                if !p.is_file() {
                    return Err(CliError::MissingPath { key, path: p.clone() });
                }
            }
        }
        if self.term.as_deref().is_some_and(|t| t.trim().is_empty()) {
            return Err(CliError::Usage("term is empty".into()));
        }
        Ok(())
    }

    pub fn require_term(&self) -> Result<&str, CliError> {
        self.term
            .as_deref()
            .ok_or_else(|| CliError::Usage("term is not set (use --term or a config file)".into()))
    }

    pub fn require_corpus(&self) -> Result<&Path, CliError> {
        self.corpus_path
            .as_deref()
            .ok_or_else(|| CliError::Usage("corpus_path is not set (use --corpus-path or a config file)".into()))
    }

    pub fn corpus_format(&self, corpus: &Path) -> CorpusFormat {
        self.corpus_format
            .as_deref()
            .and_then(|f| CorpusFormat::parse(f).ok())
            .unwrap_or_else(|| CorpusFormat::from_path(corpus))
    }

    pub fn require_output_dir(&self) -> Result<&Path, CliError> {
        self.output_dir
            .as_deref()
            .ok_or_else(|| CliError::Usage("output_dir is not set (use --output-dir or a config file)".into()))
    }
}
