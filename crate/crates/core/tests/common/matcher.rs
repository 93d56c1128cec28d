use std::ops::Range;

use defminer_core::corpus_io::{Sentence, Token, Upos};
use defminer_core::rule_engine::{Matcher, PatternElement, Term};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const POOL: &[(&str, &str, Upos)] = &[
    ("artificial", "artificial", Upos::Adj),
    ("intelligence", "intelligence", Upos::Noun),
    ("ai", "ai", Upos::Propn),
    ("data", "data", Upos::Noun),
    ("science", "science", Upos::Noun),
    ("ds", "ds", Upos::Propn),
    ("is", "be", Upos::Aux),
    ("are", "be", Upos::Aux),
    ("be", "be", Upos::Aux),
    ("can", "can", Upos::Aux),
    ("will", "will", Upos::Aux),
    ("defined", "define", Upos::Verb),
    ("as", "as", Upos::Adp),
    ("refers", "refer", Upos::Verb),
    ("refer", "refer", Upos::Verb),
    ("to", "to", Upos::Adp),
    ("such", "such", Upos::Adj),
    ("including", "include", Upos::Verb),
    ("e.g.", "e.g.", Upos::X),
    ("one", "one", Upos::Num),
    ("of", "of", Upos::Adp),
    ("the", "the", Upos::Det),
    ("a", "a", Upos::Det),
    ("an", "a", Upos::Det),
    ("this", "this", Upos::Det),
    (",", ",", Upos::Punct),
    (".", ".", Upos::Punct),
    ("field", "field", Upos::Noun),
    ("branches", "branch", Upos::Noun),
    ("computer", "computer", Upos::Noun),
    ("new", "new", Upos::Adj),
    ("rapid", "rapid", Upos::Adj),
    ("runs", "run", Upos::Verb),
    ("quickly", "quickly", Upos::Adv),
];

pub fn random_sentence(rng: &mut ChaCha8Rng) -> Sentence {
    let n = rng.gen_range(0..=20);
    let tokens = (0..n)
        .map(|_| {
            let (s, l, u) = POOL[rng.gen_range(0..POOL.len())];
            Token::new(s, l, u)
        })
        .collect();
    Sentence::new("doc", 0, "", tokens)
}

const ARTICLES: [&str; 3] = ["a", "an", "the"];
const MODALS: [&str; 8] = ["can", "could", "may", "might", "must", "shall", "should", "will"];
const BE: [&str; 8] = ["be", "is", "are", "was", "were", "been", "being", "am"];

fn word_ok(w: &str, t: &Token) -> bool {
    t.surface == w || t.lemma == w || (w == "be" && BE.contains(&t.surface.as_str()))
}

/// Whether element `e` may cover exactly `toks[q..q + len]`.
pub fn element_ok(e: &PatternElement, toks: &[Token], q: usize, len: usize, term: &Term) -> bool {
    let span = &toks[q..q + len];
    match e {
        PatternElement::Literal(words) => {
            let plain = span.len() == words.len() && words.iter().zip(span).all(|(w, t)| word_ok(w, t));
            let modal = words[0] == "be"
                && span.len() == words.len() + 1
                && MODALS.contains(&span[0].surface.as_str())
                && words.iter().zip(&span[1..]).all(|(w, t)| word_ok(w, t));
            // A modal directly before "be" is always absorbed.
            let absorbed = words[0] == "be"
                && q + 1 < toks.len()
                && MODALS.contains(&toks[q].surface.as_str())
                && word_ok("be", &toks[q + 1]);
            if absorbed {
                modal
            } else {
                plain
            }
        }
        PatternElement::Definiendum => {
            let words: Vec<&str> = span.iter().map(|t| t.surface.as_str()).collect();
            let acronym = term.acronym();
            words == term.words()
                || (words.len() == term.words().len() + 1
                    && words[..words.len() - 1] == *term.words()
                    && acronym == Some(words[words.len() - 1]))
                || (words.len() == 1 && acronym == Some(words[0]))
        }
        PatternElement::Pos { upos, min, max } => {
            (*min as usize..=*max as usize).contains(&len) && span.iter().all(|t| t.upos == *upos)
        }
        PatternElement::Wildcard { min, max } => {
            (*min as usize..=*max as usize).contains(&len) && span.iter().all(|t| t.upos != Upos::Punct)
        }
        PatternElement::Article => len == 1 && ARTICLES.contains(&span[0].surface.as_str()),
        PatternElement::SentenceStart => len == 0 && q == 0,
    }
}

/// Every complete assignment of element ranges starting at `p`.
fn enumerate(
    elements: &[PatternElement],
    k: usize,
    p: usize,
    toks: &[Token],
    term: &Term,
    cur: &mut Vec<Range<usize>>,
    out: &mut Vec<Vec<Range<usize>>>,
) {
    if k == elements.len() {
        out.push(cur.clone());
        return;
    }
    let q = if k > 0 && toks.get(p).is_some_and(|t| t.surface == ",") {
        p + 1
    } else {
        p
    };
    if q > toks.len() {
        return;
    }
    for len in 0..=toks.len() - q {
        if element_ok(&elements[k], toks, q, len, term) {
            cur.push(q..q + len);
            enumerate(elements, k + 1, q + len, toks, term, cur, out);
            cur.pop();
        }
    }
}

/// Longest assignment at `start`; ties go to the lexicographically
/// largest vector of element lengths.
fn oracle_at(m: &Matcher, toks: &[Token], start: usize, term: &Term) -> Option<Vec<Range<usize>>> {
    let mut all = Vec::new();
    enumerate(m.elements(), 0, start, toks, term, &mut Vec::new(), &mut all);
    all.into_iter().max_by(|a, b| {
        let end = |v: &Vec<Range<usize>>| v.last().map_or(start, |r| r.end);
        let lens = |v: &Vec<Range<usize>>| v.iter().map(|r| r.len()).collect::<Vec<_>>();
        end(a).cmp(&end(b)).then_with(|| lens(a).cmp(&lens(b)))
    })
}

pub fn oracle_sentence(m: &Matcher, toks: &[Token], term: &Term) -> Vec<(Range<usize>, Vec<Range<usize>>)> {
    let mut out = Vec::new();
    let mut p = 0;
    while p < toks.len() {
        if let Some(el) = oracle_at(m, toks, p, term) {
            let span = el[0].start..el.last().unwrap().end;
            if !span.is_empty() {
                p = span.end;
                out.push((span, el));
                continue;
            }
        }
        p += 1;
    }
    out
}

pub fn check(m: &Matcher, s: &Sentence, term: &Term) {
    let got: Vec<_> = m
        .match_sentence(s, term)
        .into_iter()
        .map(|x| (x.span, x.elements))
        .collect();
    let want = oracle_sentence(m, &s.tokens, term);
    let text: Vec<&str> = s.tokens.iter().map(|t| t.surface.as_str()).collect();
    assert_eq!(got, want, "rule {} on {:?}", m.rule_id(), text.join(" "));
}

pub fn terms() -> [Term; 2] {
    [
        Term::new("artificial intelligence").unwrap(),
        Term::new("data science").unwrap(),
    ]
}
