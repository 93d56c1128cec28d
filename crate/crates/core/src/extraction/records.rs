use serde::{Deserialize, Serialize};

/// A genus-differentia definition: `definiendum = genus + features`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefinitionRecord {
    pub doc_id: String,
    pub sent_index: usize,
    pub definiendum: String,
    pub definitor: String,
    /// Normalized text from the definiendum to the end of the sentence.
    pub definition_text: String,
    pub genus: String,
    pub features: Vec<String>,
    pub rule_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyponymRecord {
    pub doc_id: String,
    pub sent_index: usize,
    pub term: String,
    pub hyponym: String,
    /// Singular lemma of the category noun.
    pub hypernym: String,
    pub sentence_text: String,
    pub rule_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynonymRecord {
    pub doc_id: String,
    pub sent_index: usize,
    pub term: String,
    pub synonym: String,
    pub sentence_text: String,
}

/// Counts of candidates that did not become records.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub sentences: usize,
    pub definition_candidates: usize,
    pub genus_not_found: usize,
    pub duplicate_definitions: usize,
    /// Pre-head adjectives removed from genera, in order of appearance.
    pub dropped_modifiers: Vec<String>,
    pub hyponym_matches: usize,
    pub hypernym_not_found: usize,
    pub self_hyponyms: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Extraction {
    pub definitions: Vec<DefinitionRecord>,
    pub hyponyms: Vec<HyponymRecord>,
    pub synonyms: Vec<SynonymRecord>,
    pub diagnostics: Diagnostics,
}
