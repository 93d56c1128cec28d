//! From rule matches to definition, hyponymy and synonymy records.

mod chunk;
mod extractor;
mod records;
mod stopwords;

pub use chunk::{extract_features, parse_genus, split_coordination, GenusNotFound, GenusSpan};
pub use extractor::Extractor;
pub use records::{DefinitionRecord, Diagnostics, Extraction, HyponymRecord, SynonymRecord};
pub use stopwords::Stopwords;

use crate::corpus_io::{prepare_sentences, Corpus, Lexicon, Sentence};
use crate::rule_engine::{RuleCatalog, Term};

fn tagged(corpus: &Corpus) -> Vec<Sentence> {
    prepare_sentences(corpus, None, &Lexicon::english())
        .map(|t| t.sentences)
        .unwrap_or_default()
}

/// Definitions of `term` in a corpus tagged with the fallback tagger.
pub fn extract_definitions(corpus: &Corpus, term: &Term, catalog: &RuleCatalog) -> Vec<DefinitionRecord> {
    Extractor::new(catalog.clone(), Stopwords::english()).extract_definitions(&tagged(corpus), term)
}

/// Hyponymies of `term` in a corpus tagged with the fallback tagger.
pub fn extract_hyponyms(corpus: &Corpus, term: &Term, catalog: &RuleCatalog) -> Vec<HyponymRecord> {
    Extractor::new(catalog.clone(), Stopwords::english()).extract_hyponyms(&tagged(corpus), term)
}

/// Acronym synonyms of `term`, one per sentence that introduces one.
pub fn extract_synonyms(corpus: &Corpus, term: &Term) -> Vec<SynonymRecord> {
    tagged(corpus)
        .iter()
        .flat_map(|s| extractor::synonyms_in(s, term))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus_io::Document;

    fn corpus(abstracts: &[&str]) -> Corpus {
        Corpus::new(
            abstracts
                .iter()
                .enumerate()
                .map(|(i, a)| Document::new(format!("d{i}"), *a))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn ability_definition() {
        let c = corpus(&["Artificial intelligence is the ability of a computer to perform the functions and reasoning typical of the human mind."]);
        let ai = Term::new("artificial intelligence").unwrap();
        let defs = extract_definitions(&c, &ai, &RuleCatalog::default_catalog());
        assert_eq!(defs.len(), 1);
        assert_eq!(defs[0].genus, "ability of a computer");
        assert_eq!(defs[0].features, vec!["perform", "function", "reason", "typical", "human mind"]);
        assert_eq!(defs[0].definitor, "is");
        assert!(defs[0].definition_text.starts_with("artificial intelligence is the ability"));
    }

    #[test]
    fn absent_term_yields_nothing() {
        let c = corpus(&["Machine learning is a field of study."]);
        let ai = Term::new("artificial intelligence").unwrap();
        assert!(extract_definitions(&c, &ai, &RuleCatalog::default_catalog()).is_empty());
        assert!(extract_hyponyms(&c, &ai, &RuleCatalog::default_catalog()).is_empty());
    }

    #[test]
    fn planted_definitions_are_counted() {
        let c = corpus(&[
            "We study robots. Robotics is a branch of engineering that builds machines.",
            "Nothing here mentions the topic.",
            "Robotics has grown quickly.",
            "In this survey, robotics refers to the design of autonomous machines.",
            "Robotics papers are many.",
        ]);
        let t = Term::new("robotics").unwrap();
        let defs = extract_definitions(&c, &t, &RuleCatalog::default_catalog());
        assert_eq!(defs.len(), 2, "{defs:?}");
        assert_eq!(defs[0].genus, "branch of engineering");
        assert_eq!(defs[1].genus, "design of autonomous machines");
    }

    #[test]
    fn lexical_analysis_tasks() {
        let c = corpus(&["We demonstrate this approach in iris, an agent that can perform open-ended data science tasks such as lexical analysis and predictive modeling."]);
        let ds = Term::new("data science").unwrap();
        let hyp = extract_hyponyms(&c, &ds, &RuleCatalog::default_catalog());
        let pairs: Vec<(&str, &str)> = hyp.iter().map(|h| (h.hyponym.as_str(), h.hypernym.as_str())).collect();
        assert_eq!(pairs, vec![("lexical analysis", "task"), ("predictive modeling", "task")]);
    }

    #[test]
    fn such_as_needs_the_term() {
        let c = corpus(&["Many tasks such as parsing and tagging are hard."]);
        let ds = Term::new("data science").unwrap();
        assert!(extract_hyponyms(&c, &ds, &RuleCatalog::default_catalog()).is_empty());
    }

    #[test]
    fn synonyms() {
        let ai = Term::new("artificial intelligence").unwrap();
        let c = corpus(&["Artificial intelligence (AI) is a branch of computer science."]);
        let syn = extract_synonyms(&c, &ai);
        assert_eq!(syn.len(), 1);
        assert_eq!(syn[0].synonym, "ai");

        let iot = Term::new("internet of things").unwrap();
        let c = corpus(&["The internet of things (IoT) connects devices."]);
        assert_eq!(extract_synonyms(&c, &iot)[0].synonym, "iot");

        let c = corpus(&["Artificial intelligence is everywhere."]);
        assert!(extract_synonyms(&c, &ai).is_empty());
    }
}
