use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::Args;
use serde::Serialize;

use defminer_core::evaluation::table_report;
use defminer_core::extraction::Diagnostics;
use defminer_core::{
    evaluate_rule_set, export_graph, induce_rule_statistics, rank_and_select, Candidate, EvaluationSummary,
    GoldSet, GraphFormat, Lexicon, Term,
};

use crate::config::RunConfig;
use crate::error::{CliError, StageExt};
use crate::outputs::{self, json, Locale};
use crate::pipeline::{analyze, load_inputs, Analysis, Inputs};
use crate::staging::Staging;

/// Output groups a pipeline command can write.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Artifact {
    Definitions,
    Hyponyms,
    Synonyms,
    Genera,
    Features,
    Cooccurrence,
    Ontology,
    Network,
    Profile,
}

pub const DEFINE_ARTIFACTS: &[Artifact] = &[
    Artifact::Definitions,
    Artifact::Hyponyms,
    Artifact::Synonyms,
    Artifact::Genera,
    Artifact::Features,
    Artifact::Cooccurrence,
    Artifact::Ontology,
    Artifact::Network,
    Artifact::Profile,
];

#[derive(Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    term: String,
    config: &'a RunConfig,
    corpus_checksum: &'a str,
    catalog_checksum: &'a str,
    stopword_checksum: &'a str,
    conllu_sentences: usize,
    heuristic_sentences: usize,
    counts: BTreeMap<&'static str, usize>,
    diagnostics: &'a Diagnostics,
    ontology_diagnostics: &'a [String],
    catalog_warnings: &'a [String],
    files: Vec<String>,
    created_unix: u64,
}

#[derive(Serialize)]
struct ClustersOut<'a> {
    threshold: usize,
    cohesion: f64,
    components: &'a [Vec<String>],
    nodes: &'a [defminer_core::graphs::NetworkNode],
}

fn stage_artifacts(
    staging: &mut Staging,
    a: &Analysis,
    which: &[Artifact],
    locale: Locale,
    counts: &mut BTreeMap<&'static str, usize>,
) -> Result<(), CliError> {
    let ex = &a.extraction;
    for art in which {
        match art {
            Artifact::Definitions => {
                staging.write("definitions.csv", outputs::definitions_csv(locale, &ex.definitions))?;
                counts.insert("definitions", ex.definitions.len());
            }
            Artifact::Hyponyms => {
                staging.write("hyponyms.csv", outputs::hyponyms_csv(locale, &ex.hyponyms))?;
                counts.insert("hyponyms", ex.hyponyms.len());
            }
            Artifact::Synonyms => {
                staging.write("synonyms.csv", outputs::synonyms_csv(locale, &ex.synonyms))?;
                counts.insert("synonyms", ex.synonyms.len());
            }
            Artifact::Genera => {
                staging.write("genera.csv", outputs::freq_csv(locale, "genus", &a.genera))?;
                counts.insert("genera", a.genera.len());
            }
            Artifact::Features => {
                staging.write("features.csv", outputs::freq_csv(locale, "feature", &a.features))?;
                counts.insert("features", a.features.len());
            }
            Artifact::Cooccurrence => {
                staging.write("cooccurrence.csv", outputs::cooccurrence_csv(locale, &a.cooccurrence))?;
                counts.insert("cooccurrence", a.cooccurrence.pairs.len());
            }
            Artifact::Ontology => {
                staging.write("ontology.dot", export_graph(&a.ontology, GraphFormat::Dot))?;
                staging.write("ontology.graphml", export_graph(&a.ontology, GraphFormat::Graphml))?;
                counts.insert("ontology_nodes", a.ontology.node_count());
                counts.insert("ontology_edges", a.ontology.edge_count());
            }
            Artifact::Network => {
                staging.write("network.csv", export_graph(&a.network, GraphFormat::Csv))?;
                staging.write(
                    "clusters.json",
                    json(&ClustersOut {
                        threshold: a.clustering.threshold,
                        cohesion: a.clustering.cohesion,
                        components: &a.clustering.components,
                        nodes: a.network.nodes(),
                    }),
                )?;
                counts.insert("network_nodes", a.network.node_count());
                counts.insert("network_edges", a.network.edge_count());
                counts.insert("clusters", a.clustering.components.len());
            }
            Artifact::Profile => {
                staging.write("profile.json", json(&a.profile))?;
            }
        }
    }
    Ok(())
}

fn unix_now() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

/// Runs extraction and analysis for the configured term and writes `which`
/// plus `run_manifest.json`. Nothing is left in the output directory if any
/// step fails.
pub fn cmd_pipeline(command: &str, cfg: &RunConfig, locale: Locale, which: &[Artifact]) -> Result<String, CliError> {
    let term = cfg.require_term()?;
    let out = cfg.require_output_dir()?;
    let inputs = load_inputs(cfg)?;
    let a = analyze(&inputs, term, cfg)?;
    let mut staging = Staging::new(out)?;
    let mut counts = BTreeMap::new();
    stage_artifacts(&mut staging, &a, which, locale, &mut counts)?;
    let manifest = Manifest {
        tool: "defminer",
        version: env!("CARGO_PKG_VERSION"),
        command,
        term: a.term.text(),
        config: cfg,
        corpus_checksum: &inputs.corpus_checksum,
        catalog_checksum: inputs.catalog.checksum(),
        stopword_checksum: inputs.stopwords.checksum(),
        conllu_sentences: inputs.conllu_sentences,
        heuristic_sentences: inputs.heuristic_sentences,
        counts,
        diagnostics: &a.extraction.diagnostics,
        ontology_diagnostics: a.ontology.diagnostics(),
        catalog_warnings: inputs.catalog.warnings(),
        files: Vec::new(),
        created_unix: unix_now(),
    };
    let mut files: Vec<String> = Vec::new();
    for art in which {
        files.extend(artifact_files(*art).iter().map(|s| s.to_string()));
    }
    files.push("run_manifest.json".into());
    let manifest = Manifest { files, ..manifest };
    staging.write("run_manifest.json", json(&manifest))?;
    staging.commit()?;
    let ex = &a.extraction;
    Ok(format!(
        "{command}: {} definitions, {} hyponymies, {} synonyms for {:?} -> {}",
        ex.definitions.len(),
        ex.hyponyms.len(),
        ex.synonyms.len(),
        a.term.text(),
        out.display()
    ))
}

pub fn artifact_files(a: Artifact) -> &'static [&'static str] {
    match a {
        Artifact::Definitions => &["definitions.csv"],
        Artifact::Hyponyms => &["hyponyms.csv"],
        Artifact::Synonyms => &["synonyms.csv"],
        Artifact::Genera => &["genera.csv"],
        Artifact::Features => &["features.csv"],
        Artifact::Cooccurrence => &["cooccurrence.csv"],
        Artifact::Ontology => &["ontology.dot", "ontology.graphml"],
        Artifact::Network => &["network.csv", "clusters.json"],
        Artifact::Profile => &["profile.json"],
    }
}

#[derive(Serialize)]
struct IngestReport<'a> {
    documents: usize,
    sentences: usize,
    conllu_sentences: usize,
    heuristic_sentences: usize,
    corpus_checksum: &'a str,
}

pub fn cmd_ingest(cfg: &RunConfig) -> Result<String, CliError> {
    let out = cfg.require_output_dir()?;
    let inputs = load_inputs(cfg)?;
    let mut staging = Staging::new(out)?;
    staging.write("sentences.conllu", defminer_core::corpus_io::write_conllu(&inputs.sentences))?;
    let report = IngestReport {
        documents: inputs.corpus.len(),
        sentences: inputs.sentences.len(),
        conllu_sentences: inputs.conllu_sentences,
        heuristic_sentences: inputs.heuristic_sentences,
        corpus_checksum: &inputs.corpus_checksum,
    };
    staging.write("ingest.json", json(&report))?;
    staging.commit()?;
    Ok(format!(
        "ingest: {} documents, {} sentences ({} from CoNLL-U) -> {}",
        report.documents,
        report.sentences,
        report.conllu_sentences,
        out.display()
    ))
}

#[derive(Debug, Clone, Default, Args)]
pub struct EvalArgs {
    /// Gold labels CSV (doc_id,fingerprint,relevant); rule sets are run over the corpus.
    #[arg(long, conflicts_with = "counts")]
    pub gold: Option<PathBuf>,
    /// Per-observation counts CSV with "<set> retrieved" and "<set> relevant" columns.
    #[arg(long)]
    pub counts: Option<PathBuf>,
    /// Rule set as NAME=RULE_ID[,RULE_ID...]; repeat for each set.
    #[arg(long = "rule-set")]
    pub rule_sets: Vec<String>,
    /// Observation term; repeat for several. Defaults to the configured term.
    #[arg(long = "observation")]
    pub observations: Vec<String>,
    /// Treat the rule sets as mutually exclusive alternatives.
    #[arg(long)]
    pub exclusive: bool,
}

fn parse_rule_set(spec: &str) -> Result<(String, Vec<String>), CliError> {
    let (name, ids) = match spec.split_once('=') {
        Some((n, ids)) => (n.trim(), ids),
        None => (spec.trim(), spec),
    };
    let ids: Vec<String> = ids
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if name.is_empty() || ids.is_empty() {
        return Err(CliError::Usage(format!("bad rule set {spec:?}; expected NAME=RULE_ID[,RULE_ID...]")));
    }
    Ok((name.to_string(), ids))
}

/// Reads per-observation counts. The delimiter is `;` when the header has no comma.
pub fn parse_counts(text: &str) -> Result<Vec<EvaluationSummary>, CliError> {
    let data = |reason: String| CliError::Data {
        stage: "load counts",
        reason,
    };
    let header_line = text.lines().next().unwrap_or("");
    let delimiter = if !header_line.contains(',') && header_line.contains(';') {
        b';'
    } else {
        b','
    };
    let mut r = csv::ReaderBuilder::new().delimiter(delimiter).from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| data(e.to_string()))?.clone();
    let mut sets: Vec<(String, Option<usize>, Option<usize>)> = Vec::new();
    for (i, col) in header.iter().enumerate().skip(1) {
        let (name, kind) = col
            .rsplit_once(' ')
            .ok_or_else(|| data(format!("column {col:?} is not \"<set> retrieved|relevant|precision\"")))?;
        let pos = match sets.iter().position(|s| s.0 == name) {
            Some(p) => p,
            None => {
                sets.push((name.to_string(), None, None));
                sets.len() - 1
            }
        };
        match kind {
            "retrieved" => sets[pos].1 = Some(i),
            "relevant" => sets[pos].2 = Some(i),
            "precision" => {}
            other => return Err(data(format!("unknown column kind {other:?} in {col:?}"))),
        }
    }
    let mut rows: Vec<Vec<(String, usize, usize)>> = vec![Vec::new(); sets.len()];
    for (line, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| data(e.to_string()))?;
        let obs = rec.get(0).unwrap_or("").trim();
        if obs.eq_ignore_ascii_case("mean") {
            continue;
        }
        for (k, (name, ret, rel)) in sets.iter().enumerate() {
            let (Some(ret), Some(rel)) = (ret, rel) else {
                return Err(data(format!("rule set {name:?} needs both retrieved and relevant columns")));
            };
            let num = |i: usize| -> Result<usize, CliError> {
                let v = rec.get(i).unwrap_or("").trim();
                v.parse()
                    .map_err(|_| data(format!("line {}: {v:?} is not a count", line + 2)))
            };
            rows[k].push((obs.to_string(), num(*ret)?, num(*rel)?));
        }
    }
    sets.iter()
        .zip(rows)
        .map(|((name, _, _), rows)| EvaluationSummary::from_counts(name, &rows).stage("load counts"))
        .collect()
}

#[derive(Serialize)]
struct EvalOut<'a> {
    precision_floor: f64,
    exclusive: bool,
    selection: &'a defminer_core::Selection,
}

pub fn cmd_eval(cfg: &RunConfig, args: &EvalArgs, locale: Locale) -> Result<String, CliError> {
    let specs: Vec<(String, Vec<String>)> = args
        .rule_sets
        .iter()
        .map(|s| parse_rule_set(s))
        .collect::<Result<_, _>>()?;
    let summaries = if let Some(path) = &args.counts {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Data {
            stage: "load counts",
            reason: format!("{}: {e}", path.display()),
        })?;
        parse_counts(&text)?
    } else if let Some(gold_path) = &args.gold {
        if specs.is_empty() {
            return Err(CliError::Usage("eval with --gold needs at least one --rule-set".into()));
        }
        let gold = GoldSet::load(gold_path).stage("load gold")?;
        let inputs: Inputs = load_inputs(cfg)?;
        let observations: Vec<String> = if args.observations.is_empty() {
            vec![cfg.require_term()?.to_string()]
        } else {
            args.observations.clone()
        };
        let terms: Vec<Term> = observations
            .iter()
            .map(|o| Term::new(o))
            .collect::<Result<_, _>>()
            .stage("parse observation")?;
        specs
            .iter()
            .map(|(name, ids)| evaluate_rule_set(name, ids, &terms, &inputs.sentences, &inputs.catalog, &gold))
            .collect::<Result<_, _>>()
            .stage("evaluate")?
    } else {
        return Err(CliError::Usage("eval needs --gold or --counts".into()));
    };
    let report = table_report(&summaries, locale.decimal_comma).stage("report")?;
    let candidates: Vec<Candidate> = summaries
        .iter()
        .map(|s| {
            let ids = specs
                .iter()
                .find(|(n, _)| *n == s.rule_set_id)
                .map_or_else(|| vec![s.rule_set_id.clone()], |(_, ids)| ids.clone());
            Candidate::new(s.rule_set_id.clone(), &ids, s.clone())
        })
        .collect();
    let selection = rank_and_select(&candidates, cfg.precision_floor, args.exclusive);
    let chosen = selection
        .selected
        .as_ref()
        .map_or("none".to_string(), |c| c.id.clone());
    if let Some(out) = &cfg.output_dir {
        let mut staging = Staging::new(out)?;
        staging.write("eval_report.csv", &report)?;
        staging.write(
            "selection.json",
            json(&EvalOut {
                precision_floor: cfg.precision_floor,
                exclusive: args.exclusive,
                selection: &selection,
            }),
        )?;
        staging.commit()?;
    }
    let mut msg = report;
    for d in &selection.diagnostics {
        msg.push_str(&format!("note: {d}\n"));
    }
    msg.push_str(&format!("selected: {chosen}"));
    Ok(msg)
}

#[derive(Debug, Clone, Default, Args)]
pub struct CompareArgs {
    /// Terms to compare, as TERM or TERM=CORPUS_PATH; at least two.
    #[arg(required = true)]
    pub specs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ranked {
    pub key: String,
    pub count: usize,
    pub fraction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermComparison {
    pub term: String,
    pub definitions: usize,
    pub hyponymies: usize,
    pub cohesion: f64,
    pub genus_entropy: f64,
    pub top_genera: Vec<Ranked>,
    pub top_features: Vec<Ranked>,
    pub verdict: String,
}

pub const FUZZY: &str = "fuzzily defined";
pub const CONVERGENT: &str = "convergent";

fn ranked(t: &defminer_core::FreqTable) -> Vec<Ranked> {
    t.top(5)
        .iter()
        .map(|e| Ranked {
            key: e.key.clone(),
            count: e.count,
            fraction: e.fraction,
        })
        .collect()
}

/// The term with the strictly lowest cohesion is flagged as fuzzily defined.
pub fn assign_verdicts(rows: &mut [TermComparison]) {
    let min = rows.iter().map(|r| r.cohesion).fold(f64::INFINITY, f64::min);
    let at_min = rows.iter().filter(|r| r.cohesion == min).count();
    for r in rows.iter_mut() {
        r.verdict = if at_min == 1 && r.cohesion == min {
            FUZZY.into()
        } else {
            CONVERGENT.into()
        };
    }
}

fn comparison_csv(locale: Locale, rows: &[TermComparison]) -> Vec<u8> {
    let mut header = vec!["metric".to_string()];
    header.extend(rows.iter().map(|r| r.term.clone()));
    let cell = |e: Option<&Ranked>| e.map_or(String::new(), |e| format!("{} ({})", e.key, locale.number(e.fraction, 3)));
    let mut lines: Vec<Vec<String>> = vec![
        std::iter::once("definitions".to_string())
            .chain(rows.iter().map(|r| r.definitions.to_string()))
            .collect(),
        std::iter::once("hyponymies".to_string())
            .chain(rows.iter().map(|r| r.hyponymies.to_string()))
            .collect(),
        std::iter::once("cohesion".to_string())
            .chain(rows.iter().map(|r| locale.number(r.cohesion, 3)))
            .collect(),
        std::iter::once("genus_entropy".to_string())
            .chain(rows.iter().map(|r| locale.number(r.genus_entropy, 3)))
            .collect(),
        std::iter::once("verdict".to_string())
            .chain(rows.iter().map(|r| r.verdict.clone()))
            .collect(),
    ];
    for k in 0..5 {
        lines.push(
            std::iter::once(format!("genus_{}", k + 1))
                .chain(rows.iter().map(|r| cell(r.top_genera.get(k))))
                .collect(),
        );
    }
    for k in 0..5 {
        lines.push(
            std::iter::once(format!("feature_{}", k + 1))
                .chain(rows.iter().map(|r| cell(r.top_features.get(k))))
                .collect(),
        );
    }
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    outputs::table(locale, &header, lines)
}

pub fn cmd_compare(cfg: &RunConfig, args: &CompareArgs, locale: Locale) -> Result<String, CliError> {
    if args.specs.len() < 2 {
        return Err(CliError::Usage("compare needs at least two terms".into()));
    }
    let out = cfg.require_output_dir()?;
    let mut cache: BTreeMap<PathBuf, Inputs> = BTreeMap::new();
    let mut rows = Vec::new();
    for spec in &args.specs {
        let (term, corpus) = match spec.split_once('=') {
            Some((t, p)) => (t.trim(), PathBuf::from(p.trim())),
            None => (spec.trim(), cfg.require_corpus()?.to_path_buf()),
        };
        if !corpus.is_file() {
            return Err(CliError::MissingPath {
                key: "corpus_path",
                path: corpus,
            });
        }
        if !cache.contains_key(&corpus) {
            let local = RunConfig {
                corpus_path: Some(corpus.clone()),
                ..cfg.clone()
            };
            cache.insert(corpus.clone(), load_inputs(&local)?);
        }
        let a = analyze(&cache[&corpus], term, cfg)?;
        rows.push(TermComparison {
            term: a.term.text(),
            definitions: a.extraction.definitions.len(),
            hyponymies: a.extraction.hyponyms.len(),
            cohesion: a.clustering.cohesion,
            genus_entropy: a.genera.entropy(),
            top_genera: ranked(&a.genera),
            top_features: ranked(&a.features),
            verdict: String::new(),
        });
    }
    assign_verdicts(&mut rows);
    let mut staging = Staging::new(out)?;
    staging.write("comparison.json", json(&rows))?;
    staging.write("comparison.csv", comparison_csv(locale, &rows))?;
    staging.commit()?;
    let lines: Vec<String> = rows
        .iter()
        .map(|r| format!("{}: cohesion {}, {}", r.term, locale.number(r.cohesion, 3), r.verdict))
        .collect();
    Ok(lines.join("\n"))
}

#[derive(Debug, Clone, Args)]
pub struct InduceArgs {
    /// CSV of known definitions with columns term,definition.
    pub input: PathBuf,
}

fn read_definitions(path: &Path) -> Result<Vec<(String, String)>, CliError> {
    let data = |reason: String| CliError::Data {
        stage: "load definitions",
        reason,
    };
    let mut r = csv::Reader::from_path(path).map_err(|e| data(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| data(e.to_string()))?;
        if rec.len() != 2 {
            return Err(data(format!("line {}: expected term,definition", i + 2)));
        }
        out.push((rec[0].to_string(), rec[1].to_string()));
    }
    Ok(out)
}

pub fn cmd_induce(cfg: &RunConfig, args: &InduceArgs) -> Result<String, CliError> {
    let entries = read_definitions(&args.input)?;
    let report = induce_rule_statistics(&entries, &Lexicon::english());
    let body = json(&report);
    if let Some(out) = &cfg.output_dir {
        let mut staging = Staging::new(out)?;
        staging.write("induction.json", &body)?;
        staging.commit()?;
    }
    let mut msg = format!(
        "induce: {} definitions, {} skipped",
        report.entries, report.skipped
    );
    for e in report.definitors.top(5) {
        msg.push_str(&format!("\n  definitor {:?}: {}", e.key, e.count));
    }
    for w in &report.warnings {
        msg.push_str(&format!("\nwarning: {w}"));
    }
    Ok(msg)
}
