use std::ops::Range;

use serde::Serialize;

use super::catalog::{Family, Rule, RuleClass};
use super::pattern::PatternElement;
use super::term::Term;
use crate::corpus_io::{Sentence, Token, Upos};

pub const ARTICLES: [&str; 3] = ["a", "an", "the"];
const MODALS: [&str; 8] = ["can", "could", "may", "might", "must", "shall", "should", "will"];
const BE_FORMS: [&str; 8] = ["be", "is", "are", "was", "were", "been", "being", "am"];

/// Named token ranges of a match. Which ones are set depends on the family.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Spans {
    pub definiendum: Option<Range<usize>>,
    pub synonym: Option<Range<usize>>,
    pub definitor: Option<Range<usize>>,
    pub definiens: Option<Range<usize>>,
    pub hypernym: Option<Range<usize>>,
    pub trigger: Option<Range<usize>>,
    pub hyponym_list: Option<Range<usize>>,
    /// The individual list items inside `hyponym_list`.
    pub hyponym_items: Vec<Range<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Match {
    pub rule_id: String,
    pub family: Family,
    pub class: RuleClass,
    pub doc_id: String,
    pub sent_index: usize,
    pub span: Range<usize>,
    /// One range per pattern element.
    pub elements: Vec<Range<usize>>,
    pub spans: Spans,
}

#[derive(Debug, Clone)]
pub struct Matcher {
    rule_id: String,
    family: Family,
    class: RuleClass,
    elements: Vec<PatternElement>,
}

pub fn compile_rule(rule: &Rule) -> Matcher {
    Matcher {
        rule_id: rule.id.clone(),
        family: rule.family,
        class: rule.class,
        elements: rule.pattern.elements.clone(),
    }
}

/// Whether literal `word` matches `token` by surface, lemma, or (for "be") inflection.
pub fn word_matches(word: &str, token: &Token) -> bool {
    token.surface == word || token.lemma == word || (word == "be" && BE_FORMS.contains(&token.surface.as_str()))
}

/// Length of the literal at `q`, allowing a modal before a leading "be".
pub fn literal_len(words: &[String], tokens: &[Token], q: usize) -> Option<usize> {
    let mut i = q;
    if words.first().is_some_and(|w| w == "be")
        && tokens.get(i).is_some_and(|t| MODALS.contains(&t.surface.as_str()))
        && tokens.get(i + 1).is_some_and(|t| word_matches("be", t))
    {
        i += 1;
    }
    for w in words {
        if tokens.get(i).is_some_and(|t| word_matches(w, t)) {
            i += 1;
        } else {
            return None;
        }
    }
    Some(i - q)
}

fn run_len(tokens: &[Token], q: usize, max: u8, pred: impl Fn(&Token) -> bool) -> usize {
    tokens[q.min(tokens.len())..]
        .iter()
        .take(max as usize)
        .take_while(|t| pred(t))
        .count()
}

impl Matcher {
    pub fn rule_id(&self) -> &str {
        &self.rule_id
    }

    pub fn class(&self) -> RuleClass {
        self.class
    }

    pub fn elements(&self) -> &[PatternElement] {
        &self.elements
    }

    /// Where element `k` starts when the previous one ended at `p`:
    /// a single comma is skipped before every element but the first.
    fn element_start(&self, k: usize, tokens: &[Token], p: usize) -> usize {
        if k > 0 && tokens.get(p).is_some_and(|t| t.surface == ",") {
            p + 1
        } else {
            p
        }
    }

    /// Lengths element `k` can take at `q`, longest first.
    fn options(&self, k: usize, tokens: &[Token], q: usize, term: &Term) -> Vec<usize> {
        let bounded = |min: u8, r: usize| -> Vec<usize> {
            if r < min as usize {
                Vec::new()
            } else {
                (min as usize..=r).rev().collect()
            }
        };
        match &self.elements[k] {
            PatternElement::Literal(words) => literal_len(words, tokens, q).into_iter().collect(),
            PatternElement::Definiendum => term.bindings_at(tokens, q),
            PatternElement::Pos { upos, min, max } => bounded(*min, run_len(tokens, q, *max, |t| t.upos == *upos)),
            PatternElement::Wildcard { min, max } => bounded(*min, run_len(tokens, q, *max, |t| !t.is_punct())),
            PatternElement::Article => {
                if tokens.get(q).is_some_and(|t| ARTICLES.contains(&t.surface.as_str())) {
                    vec![1]
                } else {
                    Vec::new()
                }
            }
            PatternElement::SentenceStart => {
                if q == 0 {
                    vec![0]
                } else {
                    Vec::new()
                }
            }
        }
    }

    fn best_end(
        &self,
        k: usize,
        p: usize,
        tokens: &[Token],
        term: &Term,
        memo: &mut Vec<Option<Option<usize>>>,
    ) -> Option<usize> {
        if k == self.elements.len() {
            return Some(p);
        }
        let slot = k * (tokens.len() + 2) + p;
        if let Some(v) = memo[slot] {
            return v;
        }
        let q = self.element_start(k, tokens, p);
        let mut best = None;
        for len in self.options(k, tokens, q, term) {
            if let Some(e) = self.best_end(k + 1, q + len, tokens, term, memo) {
                best = best.max(Some(e));
            }
        }
        memo[slot] = Some(best);
        best
    }

    /// Element ranges of the longest match starting at `start`.
    ///
    /// Ties between assignments with the same end are broken greedily: the
    /// earliest element takes as many tokens as it can.
    pub fn match_at(&self, tokens: &[Token], start: usize, term: &Term) -> Option<Vec<Range<usize>>> {
        if start > tokens.len() {
            return None;
        }
        let mut memo = vec![None; self.elements.len() * (tokens.len() + 2)];
        let target = self.best_end(0, start, tokens, term, &mut memo)?;
        let mut out = Vec::with_capacity(self.elements.len());
        let mut p = start;
        for k in 0..self.elements.len() {
            let q = self.element_start(k, tokens, p);
            let len = self
                .options(k, tokens, q, term)
                .into_iter()
                .find(|&len| self.best_end(k + 1, q + len, tokens, term, &mut memo) == Some(target))?;
            out.push(q..q + len);
            p = q + len;
        }
        Some(out)
    }

    /// All leftmost, non-overlapping, non-empty matches in `sentence`.
    pub fn match_sentence(&self, sentence: &Sentence, term: &Term) -> Vec<Match> {
        let tokens = &sentence.tokens;
        let mut out = Vec::new();
        let mut p = 0;
        while p < tokens.len() {
            if let Some(elements) = self.match_at(tokens, p, term) {
                let span = elements[0].start..elements.last().map_or(p, |r| r.end);
                if !span.is_empty() {
                    let spans = self.name_spans(tokens, &elements, term);
                    p = span.end;
                    out.push(Match {
                        rule_id: self.rule_id.clone(),
                        family: self.family,
                        class: self.class,
                        doc_id: sentence.doc_id.clone(),
                        sent_index: sentence.sent_index,
                        span,
                        elements,
                        spans,
                    });
                    continue;
                }
            }
            p += 1;
        }
        out
    }

    fn literal_run_after(&self, elements: &[Range<usize>], from: usize) -> Option<Range<usize>> {
        let first = (from..self.elements.len()).find(|&k| self.elements[k].is_literal())?;
        let mut last = first;
        while last + 1 < self.elements.len() && self.elements[last + 1].is_literal() {
            last += 1;
        }
        Some(elements[first].start..elements[last].end)
    }

    fn name_spans(&self, tokens: &[Token], elements: &[Range<usize>], term: &Term) -> Spans {
        let mut spans = Spans::default();
        let def_idx = self
            .elements
            .iter()
            .position(|e| *e == PatternElement::Definiendum);
        if let Some(k) = def_idx {
            let r = elements[k].clone();
            if term.words().len() >= 2 && r.len() == term.words().len() + 1 {
                spans.synonym = Some(r.end - 1..r.end);
            }
            spans.definiendum = Some(r);
        }
        match self.family {
            Family::Definition => {
                let from = def_idx.map_or(0, |k| k + 1);
                let adjacent = def_idx.is_none() || self.elements.get(from).is_some_and(|e| e.is_literal());
                if adjacent {
                    if let Some(d) = self.literal_run_after(elements, from) {
                        spans.definiens = Some(d.end..tokens.len());
                        spans.definitor = Some(d);
                    }
                }
            }
            Family::Hyponym => {
                if let Some(t) = self.elements.iter().rposition(|e| e.is_literal()) {
                    let trigger = elements[t].clone();
                    let from = def_idx.map_or(0, |k| k + 1);
                    if from < t {
                        let slot = elements[from].start..elements[t - 1].end;
                        if !slot.is_empty() {
                            spans.hypernym = Some(slot);
                        }
                    }
                    let items = list_items(tokens, trigger.end);
                    if let (Some(a), Some(b)) = (items.first(), items.last()) {
                        spans.hyponym_list = Some(a.start..b.end);
                    }
                    spans.hyponym_items = items;
                    spans.trigger = Some(trigger);
                }
            }
        }
        spans
    }
}

/// Key span used to collapse matches of one class.
pub(crate) fn dedup_key(m: &Match) -> Range<usize> {
    let key = match m.class {
        RuleClass::Definitor | RuleClass::DefinitorFollowing | RuleClass::CompleteDefinition => m.spans.definitor.clone(),
        RuleClass::HyponymCore => m.spans.hyponym_list.clone(),
        RuleClass::SynonymousStructure => m.spans.synonym.clone(),
        _ => None,
    };
    key.unwrap_or_else(|| m.span.clone())
}

fn is_item_token(t: &Token) -> bool {
    match t.upos {
        Upos::Noun | Upos::Propn | Upos::Adj | Upos::Num | Upos::Det => true,
        Upos::X => t.surface != "etc.",
        Upos::Verb => ["ing", "ed", "en"].iter().any(|s| t.surface.ends_with(s)),
        _ => false,
    }
}

/// A base-form verb used as a noun modifier ("support vector machine").
fn is_verb_modifier(t: &Token, next: Option<&Token>) -> bool {
    t.upos == Upos::Verb && !t.surface.ends_with('s') && next.is_some_and(|n| matches!(n.upos, Upos::Noun | Upos::Propn))
}

fn is_list_separator(t: &Token) -> bool {
    matches!(t.surface.as_str(), "," | "and" | "or")
}

fn closes_list(t: &Token) -> bool {
    matches!(t.surface.as_str(), "etc." | "." | ";" | ":" | "!" | "?")
}

/// Leading noun phrase of the piece `a..b`.
fn leading_phrase(tokens: &[Token], a: usize, b: usize) -> Option<Range<usize>> {
    let mut end = a;
    let mut k = a;
    while k < b {
        let t = &tokens[k];
        if is_item_token(t) || is_verb_modifier(t, tokens.get(k + 1)) {
            k += 1;
            end = k;
        } else if t.surface == "of" && end > a {
            k += 1;
        } else {
            break;
        }
    }
    while end > a && tokens[end - 1].upos == Upos::Det {
        end -= 1;
    }
    (a..end).any(|i| tokens[i].upos != Upos::Det).then_some(a..end)
}

/// Items of a coordinated list starting at `start`.
///
/// The rest of the sentence is cut into pieces at commas, "and" and "or";
/// "etc." and clause punctuation close the list. The first piece yields its
/// leading noun phrase. A later piece yields one only if the phrase fills
/// the piece or is followed by a verb. No items are returned when the first
/// piece has no noun phrase.
pub fn list_items(tokens: &[Token], start: usize) -> Vec<Range<usize>> {
    let n = tokens.len();
    let mut items = Vec::new();
    let mut i = start;
    let mut first = true;
    loop {
        while i < n && is_list_separator(&tokens[i]) {
            if first {
                return items;
            }
            i += 1;
        }
        if i >= n || closes_list(&tokens[i]) {
            break;
        }
        let mut j = i;
        while j < n && !is_list_separator(&tokens[j]) && !closes_list(&tokens[j]) {
            j += 1;
        }
        match leading_phrase(tokens, i, j) {
            Some(r) if first || r.end == j || matches!(tokens[r.end].upos, Upos::Aux | Upos::Verb) => items.push(r),
            None if first => return items,
            _ => {}
        }
        first = false;
        i = j;
    }
    items
}

/// Token range covering every item of the list starting at `start`.
pub fn list_extent(tokens: &[Token], start: usize) -> Option<Range<usize>> {
    let items = list_items(tokens, start);
    Some(items.first()?.start..items.last()?.end)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus_io::{tag_heuristic, Lexicon};
    use crate::rule_engine::RuleCatalog;

    fn sentence(text: &str) -> Sentence {
        tag_heuristic(text, &Lexicon::english())
    }

    fn matcher(id: &str) -> Matcher {
        compile_rule(RuleCatalog::default_catalog().get(id).unwrap())
    }

    #[test]
    fn be_definitor() {
        let ai = Term::new("artificial intelligence").unwrap();
        let s = sentence("artificial intelligence is a branch of computer science");
        let ms = matcher("def-be").match_sentence(&s, &ai);
        assert_eq!(ms.len(), 1);
        assert_eq!(s.words(ms[0].spans.definitor.clone().unwrap()), "is");
        assert!(matcher("def-be")
            .match_sentence(&sentence("we apply artificial intelligence methods"), &ai)
            .is_empty());
    }

    #[test]
    fn refer_to_definitor() {
        let ai = Term::new("artificial intelligence").unwrap();
        let s = sentence("artificial intelligence refers to a branch of computer science");
        let ms = matcher("def-refer-to").match_sentence(&s, &ai);
        assert_eq!(ms.len(), 1);
        assert_eq!(s.words(ms[0].spans.definitor.clone().unwrap()), "refers to");
    }

    #[test]
    fn modal_before_be() {
        let ds = Term::new("data science").unwrap();
        let s = sentence("Data science can be defined as the study of data.");
        let ms = matcher("def-be-defined-as").match_sentence(&s, &ds);
        assert_eq!(s.words(ms[0].spans.definitor.clone().unwrap()), "can be defined as");
    }

    #[test]
    fn two_occurrences_two_matches() {
        let ai = Term::new("artificial intelligence").unwrap();
        let s = sentence("artificial intelligence is hard and artificial intelligence is new");
        assert_eq!(matcher("def-be").match_sentence(&s, &ai).len(), 2);
    }

    #[test]
    fn acronym_binds_as_synonym() {
        let ai = Term::new("artificial intelligence").unwrap();
        let s = sentence("Artificial intelligence (AI) is a branch of computer science.");
        let m = &matcher("def-be").match_sentence(&s, &ai)[0];
        assert_eq!(s.words(m.spans.definiendum.clone().unwrap()), "artificial intelligence ai");
        assert_eq!(s.words(m.spans.synonym.clone().unwrap()), "ai");
    }

    #[test]
    fn such_as_list() {
        let ai = Term::new("artificial intelligence").unwrap();
        let s = sentence(
            "There are many artificial intelligence (AI) applications such as computer vision, image recognition, and machine translator.",
        );
        let ms = matcher("hyp-such-as").match_sentence(&s, &ai);
        assert_eq!(ms.len(), 1);
        assert_eq!(s.words(ms[0].spans.hypernym.clone().unwrap()), "applications");
        assert_eq!(
            s.words(ms[0].spans.hyponym_list.clone().unwrap()),
            "computer vision image recognition and machine translator"
        );
    }

    #[test]
    fn list_stops_after_coordinated_item() {
        let s = sentence("such as lexical analysis and predictive modeling, which are hard");
        let r = list_extent(&s.tokens, 2).unwrap();
        assert_eq!(s.words(r), "lexical analysis and predictive modeling");
    }

    #[test]
    fn later_pieces_need_a_following_verb() {
        let s = sentence(
            "such as classification, since it identifies the relevant variables, making thus the procedures more interpretable, cheaper in terms of measurement and data overfit.",
        );
        let items: Vec<String> = list_items(&s.tokens, 2).into_iter().map(|r| s.words(r)).collect();
        assert_eq!(items, ["classification", "data overfit"]);
        let s = sentence("such as natural language comprehension and image recognition will increase surveillance powers.");
        let items: Vec<String> = list_items(&s.tokens, 2).into_iter().map(|r| s.words(r)).collect();
        assert_eq!(items, ["natural language comprehension", "image recognition"]);
    }

    #[test]
    fn no_term_no_match() {
        let ai = Term::new("artificial intelligence").unwrap();
        let s = sentence("machine learning is a field");
        for m in RuleCatalog::default_catalog().enabled_matchers() {
            if m.elements().contains(&PatternElement::Definiendum) {
                assert!(m.match_sentence(&s, &ai).is_empty(), "{}", m.rule_id());
            }
        }
    }
}
