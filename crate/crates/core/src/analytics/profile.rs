use std::collections::BTreeMap;

use serde::Serialize;

use super::gini::gini_index;
use crate::corpus_io::{tokenize, Corpus};
use crate::rule_engine::Term;

/// Literature indicators for a term: paper count, first year, subject concentration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObservationProfile {
    pub term: String,
    pub paper_count: usize,
    pub first_year: Option<i32>,
    pub subject_gini: Option<f64>,
}

fn mentions(abstract_text: &str, term: &Term) -> bool {
    let words: Vec<String> = tokenize(abstract_text);
    let n = term.words().len();
    words.windows(n).any(|w| w == term.words())
}

pub fn observation_profile(term: &Term, corpus: &Corpus) -> ObservationProfile {
    let mut paper_count = 0;
    let mut first_year: Option<i32> = None;
    let mut areas: BTreeMap<&str, u64> = BTreeMap::new();
    for doc in corpus.documents() {
        if !mentions(&doc.abstract_text, term) {
            continue;
        }
        paper_count += 1;
        if let Some(y) = doc.year {
            first_year = Some(first_year.map_or(y, |f| f.min(y)));
        }
        for (area, count) in doc.subject_areas.iter().flatten() {
            *areas.entry(area.as_str()).or_insert(0) += count;
        }
    }
    let counts: Vec<f64> = areas.values().map(|&c| c as f64).collect();
    ObservationProfile {
        term: term.text(),
        paper_count,
        first_year,
        subject_gini: gini_index(&counts).ok(),
    }
}
