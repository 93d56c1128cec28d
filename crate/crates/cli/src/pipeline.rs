use std::path::Path;

use defminer_core::analytics::CooccurrenceTable;
use defminer_core::extraction::Extraction;
use defminer_core::graphs::{Clustering, DefinitionNetwork, OntologyGraph};
use defminer_core::{
    build_ontology, cluster_network, feature_cooccurrence, feature_distribution, genus_distribution,
    load_corpus, observation_profile, parse_conllu, prepare_sentences, sha256_hex, Corpus, Extractor,
    FreqTable, Lexicon, ObservationProfile, RuleCatalog, Sentence, Stopwords, Term,
};

use crate::config::RunConfig;
use crate::error::{CliError, StageExt};

/// Everything read from disk before extraction starts.
pub struct Inputs {
    pub corpus: Corpus,
    pub sentences: Vec<Sentence>,
    pub conllu_sentences: usize,
    pub heuristic_sentences: usize,
    pub catalog: RuleCatalog,
    pub stopwords: Stopwords,
    pub corpus_checksum: String,
}

fn read(path: &Path, stage: &'static str) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Data {
        stage,
        reason: format!("{}: {e}", path.display()),
    })
}

pub fn load_catalog(cfg: &RunConfig) -> Result<RuleCatalog, CliError> {
    match &cfg.rule_catalog_path {
        Some(p) => defminer_core::load_rule_catalog(p).stage("load rule_catalog_path"),
        None => Ok(RuleCatalog::default_catalog()),
    }
}

pub fn load_stopwords(cfg: &RunConfig) -> Result<Stopwords, CliError> {
    match &cfg.stopword_path {
        Some(p) => Stopwords::load(p).stage("load stopword_path"),
        None => Ok(Stopwords::english()),
    }
}

pub fn load_inputs(cfg: &RunConfig) -> Result<Inputs, CliError> {
    let catalog = load_catalog(cfg)?;
    let stopwords = load_stopwords(cfg)?;
    let corpus_path = cfg.require_corpus()?;
    let corpus_checksum = sha256_hex(&read(corpus_path, "load corpus_path")?);
    let corpus = load_corpus(corpus_path, cfg.corpus_format(corpus_path)).stage("load corpus_path")?;
    let conllu = match &cfg.conllu_path {
        Some(p) => {
            let text = String::from_utf8_lossy(&read(p, "load conllu_path")?).into_owned();
            Some(parse_conllu(&text).stage("load conllu_path")?)
        }
        None => None,
    };
    let tagged = prepare_sentences(&corpus, conllu.as_deref(), &Lexicon::english()).stage("tag")?;
    Ok(Inputs {
        corpus,
        conllu_sentences: tagged.conllu_sentences,
        heuristic_sentences: tagged.heuristic_sentences,
        sentences: tagged.sentences,
        catalog,
        stopwords,
        corpus_checksum,
    })
}

/// Extraction results and every statistic derived from them for one term.
pub struct Analysis {
    pub term: Term,
    pub extraction: Extraction,
    pub genera: FreqTable,
    pub features: FreqTable,
    pub cooccurrence: CooccurrenceTable,
    pub ontology: OntologyGraph,
    pub network: DefinitionNetwork,
    pub clustering: Clustering,
    pub profile: ObservationProfile,
}

pub fn analyze(inputs: &Inputs, term: &str, cfg: &RunConfig) -> Result<Analysis, CliError> {
    let term = Term::new(term).stage("parse term")?;
    let extractor = Extractor::new(inputs.catalog.clone(), inputs.stopwords.clone());
    let extraction = extractor.extract(&inputs.sentences, &term);
    let defs = &extraction.definitions;
    let network = DefinitionNetwork::build(defs, cfg.network_min_weight, &inputs.stopwords);
    let clustering = cluster_network(&network, cfg.cluster_threshold);
    Ok(Analysis {
        genera: genus_distribution(defs),
        features: feature_distribution(defs),
        cooccurrence: feature_cooccurrence(defs, cfg.min_cooccurrence),
        ontology: build_ontology(&term.text(), &extraction.hyponyms),
        profile: observation_profile(&term, &inputs.corpus),
        network,
        clustering,
        term,
        extraction,
    })
}
