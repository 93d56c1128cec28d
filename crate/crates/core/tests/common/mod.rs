//! Helpers shared by the integration test targets.
#![allow(dead_code)]

pub mod golden;
pub mod matcher;

use std::path::PathBuf;

use defminer_core::{
    extract_hyponyms, load_corpus, Corpus, CorpusFormat, DefinitionRecord, EvaluationSummary, RuleCatalog, Term,
};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture_corpus(name: &str) -> Corpus {
    load_corpus(fixture_path(name), CorpusFormat::Jsonl).unwrap()
}

/// One published observation: `[is ret, is rel, refers ret, refers rel, both ret, both rel]`.
pub type Row = (String, [usize; 6]);

pub fn precision_rows() -> Vec<Row> {
    let mut r = csv::Reader::from_path(fixture_path("precision_counts.csv")).unwrap();
    r.records()
        .map(|rec| {
            let rec = rec.unwrap();
            let mut n = [0; 6];
            for (i, v) in n.iter_mut().enumerate() {
                *v = rec[i + 1].parse().unwrap();
            }
            (rec[0].to_string(), n)
        })
        .collect()
}

pub fn summary(id: &str, rows: &[Row], col: usize) -> EvaluationSummary {
    let counts: Vec<(&str, usize, usize)> = rows.iter().map(|(o, n)| (o.as_str(), n[col], n[col + 1])).collect();
    EvaluationSummary::from_counts(id, &counts).unwrap()
}

pub fn gini_oracle(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mean = x.iter().sum::<f64>() / n;
    let mut s = 0.0;
    for a in x {
        for b in x {
            s += (a - b).abs();
        }
    }
    s / (2.0 * n * n * mean)
}

pub fn def(doc: &str, genus: &str, features: &[&str]) -> DefinitionRecord {
    DefinitionRecord {
        doc_id: doc.into(),
        sent_index: 0,
        definiendum: "x".into(),
        definitor: "is".into(),
        definition_text: String::new(),
        genus: genus.into(),
        features: features.iter().map(|s| s.to_string()).collect(),
        rule_id: "def-be".into(),
    }
}

pub fn hyponym_pairs(corpus: &Corpus, term: &str) -> Vec<(String, String, String)> {
    let term = Term::new(term).unwrap();
    extract_hyponyms(corpus, &term, &RuleCatalog::default_catalog())
        .into_iter()
        .map(|h| (h.doc_id, h.hyponym, h.hypernym))
        .collect()
}
