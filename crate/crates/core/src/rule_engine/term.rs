use thiserror::Error;

use crate::corpus_io::{tokenize, Token};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("term {0:?} has no words after normalization")]
pub struct EmptyTerm(pub String);

/// A target term in normalized word form, plus its initials acronym.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    words: Vec<String>,
    acronym: Option<String>,
}

impl Term {
    pub fn new(text: &str) -> Result<Self, EmptyTerm> {
        let words: Vec<String> = tokenize(text)
            .into_iter()
            .filter(|w| w.chars().any(|c| c.is_alphanumeric()))
            .collect();
        if words.is_empty() {
            return Err(EmptyTerm(text.to_string()));
        }
        let acronym = if words.len() >= 2
            && words
                .iter()
                .all(|w| w.chars().next().is_some_and(|c| c.is_alphabetic()))
        {
            Some(words.iter().filter_map(|w| w.chars().next()).collect())
        } else {
            None
        };
        Ok(Term { words, acronym })
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn text(&self) -> String {
        self.words.join(" ")
    }

    /// Initials of every word, for terms of two or more words.
    pub fn acronym(&self) -> Option<&str> {
        self.acronym.as_deref()
    }

    fn is_acronym(&self, token: &Token) -> bool {
        self.acronym.as_deref() == Some(token.surface.as_str())
    }

    /// Whether the term's words start at `p`.
    pub fn occurs_at(&self, tokens: &[Token], p: usize) -> bool {
        p + self.words.len() <= tokens.len()
            && self
                .words
                .iter()
                .zip(&tokens[p..])
                .all(|(w, t)| t.surface == *w)
    }

    /// Every way the term can bind at `p`, as token counts, longest first:
    /// the words followed by the acronym, the words alone, the acronym alone.
    pub fn bindings_at(&self, tokens: &[Token], p: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(2);
        let n = self.words.len();
        if self.occurs_at(tokens, p) {
            if tokens.get(p + n).is_some_and(|t| self.is_acronym(t)) {
                out.push(n + 1);
            }
            out.push(n);
        }
        if tokens.get(p).is_some_and(|t| self.is_acronym(t)) && !out.contains(&1) {
            out.push(1);
        }
        out
    }

    /// Start offsets of every occurrence of the term's words.
    pub fn occurrences(&self, tokens: &[Token]) -> Vec<usize> {
        (0..tokens.len()).filter(|&p| self.occurs_at(tokens, p)).collect()
    }
}
