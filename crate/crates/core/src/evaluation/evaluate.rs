use std::collections::{BTreeSet, HashMap};

use super::gold::GoldSet;
use super::metrics::{EvaluationSummary, RuleEvaluation};
use super::EvaluationError;
use crate::corpus_io::{fingerprint, Sentence};
use crate::error::Result;
use crate::extraction::{Extractor, Stopwords};
use crate::rule_engine::{RuleCatalog, Term};

/// Distinct sentences that yield at least one definition or hyponymy record.
pub fn retrieved_sentences<'a>(extractor: &Extractor, sentences: &'a [Sentence], term: &Term) -> Vec<&'a Sentence> {
    let by_key: HashMap<(&str, usize), &Sentence> = sentences
        .iter()
        .map(|s| ((s.doc_id.as_str(), s.sent_index), s))
        .collect();
    let ex = extractor.extract(sentences, term);
    let keys: BTreeSet<(String, usize)> = ex
        .definitions
        .iter()
        .map(|d| (d.doc_id.clone(), d.sent_index))
        .chain(ex.hyponyms.iter().map(|h| (h.doc_id.clone(), h.sent_index)))
        .collect();
    keys.iter()
        .filter_map(|(d, i)| by_key.get(&(d.as_str(), *i)).copied())
        .collect()
}

/// Scores the rules `rule_ids` of `catalog` on every observation term.
///
/// Every retrieved sentence must carry a gold label; otherwise the error
/// lists the missing fingerprints.
pub fn evaluate_rule_set<S: AsRef<str>>(
    rule_set_id: &str,
    rule_ids: &[S],
    observations: &[Term],
    sentences: &[Sentence],
    catalog: &RuleCatalog,
    gold: &GoldSet,
) -> Result<EvaluationSummary> {
    let extractor = Extractor::new(catalog.only(rule_ids)?, Stopwords::english());
    let mut evals = Vec::with_capacity(observations.len());
    let mut missing = BTreeSet::new();
    for term in observations {
        let hits = retrieved_sentences(&extractor, sentences, term);
        let mut relevant = 0;
        for s in &hits {
            match gold.label(&s.raw_text) {
                Some(true) => relevant += 1,
                Some(false) => {}
                None => {
                    missing.insert(fingerprint(&s.raw_text));
                }
            }
        }
        evals.push(RuleEvaluation::from_counts(rule_set_id, term.text(), hits.len(), relevant)?);
    }
    if !missing.is_empty() {
        return Err(EvaluationError::MissingLabels(missing.into_iter().collect()).into());
    }
    Ok(EvaluationSummary::new(rule_set_id, evals))
}
