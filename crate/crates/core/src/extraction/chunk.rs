//! Genus and feature chunking over tagged tokens.

use std::ops::Range;

use thiserror::Error;

use super::stopwords::Stopwords;
use crate::corpus_io::{Sentence, Token, Upos};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no noun after token {definitor_end}")]
pub struct GenusNotFound {
    pub definitor_end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusSpan {
    pub range: Range<usize>,
    /// Adjectives before the head that were left out of the genus.
    pub dropped: Vec<String>,
}

fn is_noun(t: &Token) -> bool {
    matches!(t.upos, Upos::Noun | Upos::Propn)
}

fn is_det(t: &Token) -> bool {
    t.upos == Upos::Det || matches!(t.surface.as_str(), "a" | "an" | "the")
}

fn count_while(tokens: &[Token], from: usize, pred: impl Fn(&Token) -> bool) -> usize {
    tokens.get(from..).map_or(0, |rest| rest.iter().take_while(|t| pred(t)).count())
}

/// Locates the genus after a definitor ending at `definitor_end`.
///
/// Skips "one of", determiners, adverbs and pre-head adjectives, takes the
/// noun run as head and appends a following `of DET? ADJ* NOUN+` phrase.
pub fn parse_genus(sentence: &Sentence, definitor_end: usize) -> Result<GenusSpan, GenusNotFound> {
    let toks = &sentence.tokens;
    let mut i = definitor_end;
    if toks.get(i).is_some_and(|t| t.surface == "one") && toks.get(i + 1).is_some_and(|t| t.surface == "of") {
        i += 2;
    }
    i += count_while(toks, i, is_det);
    let mut dropped = Vec::new();
    while let Some(t) = toks.get(i).filter(|t| matches!(t.upos, Upos::Adj | Upos::Adv)) {
        if t.upos == Upos::Adj {
            dropped.push(t.surface.clone());
        }
        i += 1;
    }
    let head = count_while(toks, i, is_noun);
    if head == 0 {
        return Err(GenusNotFound { definitor_end });
    }
    let start = i;
    let mut end = i + head;
    if toks.get(end).is_some_and(|t| t.surface == "of") {
        let mut j = end + 1;
        if toks.get(j).is_some_and(is_det) {
            j += 1;
        }
        j += count_while(toks, j, |t| t.upos == Upos::Adj);
        let nouns = count_while(toks, j, is_noun);
        if nouns > 0 {
            end = j + nouns;
        }
    }
    Ok(GenusSpan {
        range: start..end,
        dropped,
    })
}

fn push_unique(out: &mut Vec<String>, feature: String, stopwords: &Stopwords) {
    if !feature.is_empty() && !stopwords.all_stop(&feature) && !out.contains(&feature) {
        out.push(feature);
    }
}

/// Distinctive features in `sentence[genus_end..]`.
///
/// Maximal `ADJ* NOUN+` runs become one feature (a lone noun contributes
/// its lemma, longer chunks their surface words); other verbs, adjectives,
/// adverbs and nouns contribute their lemma.
pub fn extract_features(sentence: &Sentence, genus_end: usize, stopwords: &Stopwords) -> Vec<String> {
    let toks = &sentence.tokens;
    let mut out = Vec::new();
    let mut i = genus_end.min(toks.len());
    while i < toks.len() {
        let t = &toks[i];
        match t.upos {
            Upos::Adj | Upos::Noun | Upos::Propn => {
                let adjs = count_while(toks, i, |t| t.upos == Upos::Adj);
                let nouns = count_while(toks, i + adjs, is_noun);
                if nouns == 0 {
                    for a in &toks[i..i + adjs] {
                        push_unique(&mut out, a.lemma.clone(), stopwords);
                    }
                    i += adjs;
                    continue;
                }
                let chunk: Vec<&Token> = toks[i..i + adjs + nouns]
                    .iter()
                    .skip_while(|t| stopwords.contains(&t.surface))
                    .collect();
                let feature = match chunk.as_slice() {
                    [] => String::new(),
                    [one] => one.lemma.clone(),
                    many => many.iter().map(|t| t.surface.as_str()).collect::<Vec<_>>().join(" "),
                };
                push_unique(&mut out, feature, stopwords);
                i += adjs + nouns;
            }
            Upos::Verb | Upos::Adv => {
                push_unique(&mut out, t.lemma.clone(), stopwords);
                i += 1;
            }
            _ => i += 1,
        }
    }
    out
}

/// Splits a coordinated phrase into items on commas, "and" and "or".
///
/// Determiners at either end of an item are trimmed, "etc." is dropped, and
/// empty or stopword-only items are discarded.
pub fn split_coordination(tokens: &[Token], stopwords: &Stopwords) -> Vec<String> {
    let mut out = Vec::new();
    for piece in tokens.split(|t| matches!(t.surface.as_str(), "," | "and" | "or")) {
        let words: Vec<&Token> = piece
            .iter()
            .filter(|t| t.surface != "etc." && !t.is_punct())
            .collect();
        let lo = words.iter().position(|t| !is_det(t)).unwrap_or(words.len());
        let hi = words.iter().rposition(|t| !is_det(t)).map_or(lo, |p| p + 1);
        let item = words[lo..hi.max(lo)]
            .iter()
            .map(|t| t.surface.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        if !item.is_empty() && !stopwords.all_stop(&item) {
            out.push(item);
        }
    }
    out
}
