//! Mining genus-differentia definitions and hypernym/hyponym relations of a
//! technological term from a corpus of scientific abstracts.
//!
//! The pipeline is split into stages that can be used independently:
//!
//! * [`corpus_io`] loads abstracts, parses CoNLL-U and provides a fallback tagger.
//! * [`rule_engine`] holds the rule catalog and the token-level matcher.
//! * [`extraction`] turns matches into definitions (`x = y + z`), hyponymies and synonyms.
//! * [`analytics`] computes genus/feature distributions, co-occurrence and the Gini index.
//! * [`graphs`] builds the ontology and the definition-similarity network.
//! * [`evaluation`] scores rule sets against gold labels and selects among them.

pub mod analytics;
pub mod corpus_io;
pub mod error;
pub mod evaluation;
pub mod extraction;
pub mod graphs;
pub mod rule_engine;

pub use analytics::{
    feature_cooccurrence, feature_distribution, genus_distribution, gini_index,
    observation_profile, CooccurrenceTable, FreqTable, ObservationProfile,
};
pub use corpus_io::{
    fingerprint, load_corpus, normalize_text, parse_conllu, prepare_sentences, segment_sentences, tag_heuristic, Corpus,
    CorpusFormat, Document, Lexicon, Sentence, TaggedCorpus, Token, Upos,
};
pub use error::{Error, Result};
pub use evaluation::{
    evaluate_rule_set, induce_rule_statistics, rank_and_select, weighted_precision, Candidate,
    EvaluationSummary, GoldSet, RuleEvaluation, Selection,
};
pub use extraction::{
    extract_definitions, extract_features, extract_hyponyms, extract_synonyms, parse_genus,
    split_coordination, DefinitionRecord, Extraction, Extractor, HyponymRecord, Stopwords,
    SynonymRecord,
};
pub use graphs::{
    build_definition_network, build_ontology, cluster_network, export_graph, Clustering,
    DefinitionNetwork, GraphFormat, OntologyGraph,
};
pub use rule_engine::{compile_rule, load_rule_catalog, Match, Matcher, Rule, RuleCatalog, Term};

/// Hex-encoded SHA-256 of `bytes`, used to pin shipped data files in run manifests.
pub fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    hex::encode(Sha256::digest(bytes))
}
