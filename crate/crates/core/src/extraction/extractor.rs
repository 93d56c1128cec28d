use std::cmp::Reverse;
use std::collections::HashSet;
use std::ops::Range;

use super::chunk::{extract_features, parse_genus, split_coordination};
use super::records::{DefinitionRecord, Diagnostics, Extraction, HyponymRecord, SynonymRecord};
use super::stopwords::Stopwords;
use crate::corpus_io::{normalize_text, singularize, Sentence, Token, Upos};
use crate::rule_engine::{Match, RuleCatalog, RuleClass, Term};

/// Runs a rule catalog over tagged sentences and assembles records.
#[derive(Debug, Clone)]
pub struct Extractor {
    catalog: RuleCatalog,
    stopwords: Stopwords,
}

impl Default for Extractor {
    fn default() -> Self {
        Extractor::new(RuleCatalog::default_catalog(), Stopwords::english())
    }
}

fn normalized_words(sentence: &Sentence, range: Range<usize>) -> String {
    let text = normalize_text(&sentence.words(range));
    text.trim_end_matches('.').to_string()
}

fn sentence_text(sentence: &Sentence) -> String {
    sentence.raw_text.trim().to_lowercase()
}

fn is_noun(t: &Token) -> bool {
    matches!(t.upos, Upos::Noun | Upos::Propn)
}

/// Category noun for a hyponym match: the last noun in the slot between
/// term and trigger, else the nearest noun left of the term.
fn hypernym_of(sentence: &Sentence, m: &Match) -> Option<String> {
    let toks = &sentence.tokens;
    let noun = match &m.spans.hypernym {
        Some(slot) => toks[slot.clone()].iter().rev().find(|t| is_noun(t)),
        None => None,
    };
    let noun = noun.or_else(|| {
        let start = m.spans.definiendum.as_ref()?.start;
        toks[..start]
            .iter()
            .rev()
            .take_while(|t| is_noun(t) || t.surface == "of" || matches!(t.upos, Upos::Det | Upos::Adj))
            .find(|t| is_noun(t))
    })?;
    Some(singularize(&noun.lemma))
}

impl Extractor {
    pub fn new(catalog: RuleCatalog, stopwords: Stopwords) -> Self {
        Extractor { catalog, stopwords }
    }

    pub fn catalog(&self) -> &RuleCatalog {
        &self.catalog
    }

    pub fn stopwords(&self) -> &Stopwords {
        &self.stopwords
    }

    /// Extracts definitions, hyponymies and synonyms of `term`.
    ///
    /// Definitions with an identical `definition_text` are collapsed to the
    /// first one seen; the number collapsed is in the diagnostics.
    pub fn extract(&self, sentences: &[Sentence], term: &Term) -> Extraction {
        let mut out = Extraction::default();
        let mut seen_definitions = HashSet::new();
        for sentence in sentences {
            out.diagnostics.sentences += 1;
            let matches = self.catalog.match_sentence(sentence, term);
            for rec in self.definitions_in(sentence, &matches, &mut out.diagnostics) {
                if seen_definitions.insert(rec.definition_text.clone()) {
                    out.definitions.push(rec);
                } else {
                    out.diagnostics.duplicate_definitions += 1;
                }
            }
            out.hyponyms
                .extend(self.hyponyms_in(sentence, term, &matches, &mut out.diagnostics));
            out.synonyms.extend(synonyms_in(sentence, term));
        }
        out
    }

    pub fn extract_definitions(&self, sentences: &[Sentence], term: &Term) -> Vec<DefinitionRecord> {
        self.extract(sentences, term).definitions
    }

    pub fn extract_hyponyms(&self, sentences: &[Sentence], term: &Term) -> Vec<HyponymRecord> {
        self.extract(sentences, term).hyponyms
    }

    fn definitions_in(&self, sentence: &Sentence, matches: &[Match], diag: &mut Diagnostics) -> Vec<DefinitionRecord> {
        let mut candidates: Vec<&Match> = matches
            .iter()
            .filter(|m| matches!(m.class, RuleClass::Definitor | RuleClass::CompleteDefinition))
            .filter(|m| m.spans.definiendum.is_some() && m.spans.definitor.is_some())
            .collect();
        candidates.sort_by_key(|m| {
            let d = m.spans.definitor.as_ref().map_or(0, |r| r.len());
            (m.spans.definiendum.as_ref().map_or(0, |r| r.start), Reverse(d))
        });
        let mut out: Vec<DefinitionRecord> = Vec::new();
        let mut done_starts = HashSet::new();
        for m in candidates {
            let (Some(dd), Some(dt)) = (&m.spans.definiendum, &m.spans.definitor) else {
                continue;
            };
            if done_starts.contains(&dd.start) {
                continue;
            }
            diag.definition_candidates += 1;
            let genus = match parse_genus(sentence, dt.end) {
                Ok(g) => g,
                Err(_) => {
                    diag.genus_not_found += 1;
                    continue;
                }
            };
            done_starts.insert(dd.start);
            diag.dropped_modifiers.extend(genus.dropped.iter().cloned());
            out.push(DefinitionRecord {
                doc_id: sentence.doc_id.clone(),
                sent_index: sentence.sent_index,
                definiendum: sentence.words(dd.clone()),
                definitor: sentence.words(dt.clone()),
                definition_text: normalized_words(sentence, dd.start..sentence.len()),
                genus: normalized_words(sentence, genus.range.clone()),
                features: extract_features(sentence, genus.range.end, &self.stopwords),
                rule_id: m.rule_id.clone(),
            });
        }
        out
    }

    fn hyponyms_in(
        &self,
        sentence: &Sentence,
        term: &Term,
        matches: &[Match],
        diag: &mut Diagnostics,
    ) -> Vec<HyponymRecord> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for m in matches.iter().filter(|m| m.class == RuleClass::HyponymCore) {
            if m.spans.hyponym_items.is_empty() {
                continue;
            }
            diag.hyponym_matches += 1;
            let Some(hypernym) = hypernym_of(sentence, m) else {
                diag.hypernym_not_found += 1;
                continue;
            };
            let hyponyms = m
                .spans
                .hyponym_items
                .iter()
                .flat_map(|r| split_coordination(&sentence.tokens[r.clone()], &self.stopwords));
            for hyponym in hyponyms {
                if hyponym == hypernym {
                    diag.self_hyponyms += 1;
                    continue;
                }
                if !seen.insert((hyponym.clone(), hypernym.clone())) {
                    continue;
                }
                out.push(HyponymRecord {
                    doc_id: sentence.doc_id.clone(),
                    sent_index: sentence.sent_index,
                    term: term.text(),
                    hyponym,
                    hypernym: hypernym.clone(),
                    sentence_text: sentence_text(sentence),
                    rule_id: m.rule_id.clone(),
                });
            }
        }
        out
    }
}

/// The term followed by its initials acronym.
pub(crate) fn synonyms_in(sentence: &Sentence, term: &Term) -> Vec<SynonymRecord> {
    let Some(acronym) = term.acronym() else {
        return Vec::new();
    };
    let n = term.words().len();
    let found = term
        .occurrences(&sentence.tokens)
        .into_iter()
        .any(|p| term.bindings_at(&sentence.tokens, p).contains(&(n + 1)));
    if !found || acronym.len() > 6 || !acronym.chars().all(|c| c.is_alphabetic()) {
        return Vec::new();
    }
    vec![SynonymRecord {
        doc_id: sentence.doc_id.clone(),
        sent_index: sentence.sent_index,
        term: term.text(),
        synonym: acronym.to_string(),
        sentence_text: sentence_text(sentence),
    }]
}
