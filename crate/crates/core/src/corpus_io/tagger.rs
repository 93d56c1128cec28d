//! Fallback part-of-speech tagger.
//!
//! Used only when no CoNLL-U input is supplied. Each token is tagged by, in
//! order: the closed-class table, the lexicon (also tried on the stem of
//! `-s` forms), suffix rules, digits, and finally `NOUN`.

use std::collections::HashMap;
use std::path::Path;

use super::types::{Sentence, Token, Upos};
use crate::error::{Error, Result};

const DEFAULT_LEXICON: &str = include_str!("../../data/lexicon_en.tsv");

/// Word to UPOS lookup table.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: HashMap<String, Upos>,
    source: String,
}

impl Lexicon {
    /// The lexicon shipped with the crate.
    pub fn english() -> Self {
        Self::parse(DEFAULT_LEXICON)
    }

    /// Parses `word<TAB>UPOS` lines; `#` starts a comment, unknown tags map to `X`.
    pub fn parse(text: &str) -> Self {
        let entries = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .filter_map(|l| {
                let mut parts = l.split('\t');
                let word = parts.next()?.trim().to_lowercase();
                let tag = Upos::parse_lenient(parts.next()?.trim());
                Some((word, tag))
            })
            .collect();
        Lexicon {
            entries,
            source: text.to_string(),
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(Self::parse(&text))
    }

    pub fn get(&self, word: &str) -> Option<Upos> {
        self.entries.get(word).copied()
    }

    pub fn insert(&mut self, word: &str, upos: Upos) {
        self.entries.insert(word.to_lowercase(), upos);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checksum of the text this lexicon was parsed from.
    pub fn checksum(&self) -> String {
        crate::sha256_hex(self.source.as_bytes())
    }
}

fn closed_class(word: &str) -> Option<(Upos, &'static str)> {
    use Upos::*;
    let hit = match word {
        "a" | "an" | "the" | "this" | "these" | "those" | "each" | "every" | "some" | "any" | "no"
        | "another" | "both" | "either" | "neither" | "all" => (Det, ""),
        "of" | "in" | "on" | "at" | "by" | "for" | "with" | "from" | "into" | "onto" | "through"
        | "during" | "without" | "within" | "between" | "among" | "across" | "about" | "against"
        | "over" | "under" | "above" | "below" | "via" | "per" | "upon" | "toward" | "towards"
        | "after" | "before" | "like" | "as" | "than" | "throughout" | "beyond" | "despite" => {
            (Adp, "")
        }
        "is" | "are" | "was" | "were" | "be" | "been" | "being" | "am" => (Aux, "be"),
        "has" | "have" | "had" | "having" => (Aux, "have"),
        "do" | "does" | "did" => (Aux, "do"),
        "can" | "could" | "may" | "might" | "must" | "shall" | "should" | "will" | "would" => {
            (Aux, "")
        }
        "and" | "or" | "but" | "nor" | "yet" => (Cconj, ""),
        "because" | "although" | "though" | "while" | "whereas" | "if" | "unless" | "whether"
        | "since" | "once" | "until" | "so" => (Sconj, ""),
        "it" | "its" | "they" | "them" | "their" | "we" | "our" | "us" | "i" | "me" | "my"
        | "you" | "your" | "he" | "him" | "his" | "she" | "her" | "which" | "who" | "whom"
        | "whose" | "what" | "that" | "itself" | "themselves" => (Pron, ""),
        "to" | "not" | "'s" => (Part, ""),
        "very" | "also" | "only" | "just" | "more" | "most" | "too" | "then" | "there" | "here"
        | "now" | "however" | "thus" | "therefore" | "hence" | "further" | "well" | "often" => {
            (Adv, "")
        }
        "one" | "two" | "three" | "four" | "five" | "six" | "seven" | "eight" | "nine" | "ten" => {
            (Num, "")
        }
        "e.g." | "i.e." => (Adv, ""),
        "etc." | "etc" => (X, "etc."),
        "such" | "many" | "much" | "several" | "few" | "other" | "various" | "same" => (Adj, ""),
        _ => return None,
    };
    Some(hit)
}

const SUFFIX_RULES: &[(&str, Upos)] = &[
    ("ly", Upos::Adv),
    ("ing", Upos::Verb),
    ("ed", Upos::Verb),
    ("tion", Upos::Noun),
    ("ment", Upos::Noun),
    ("ness", Upos::Noun),
    ("ity", Upos::Noun),
    ("ous", Upos::Adj),
    ("ive", Upos::Adj),
    ("al", Upos::Adj),
    ("ic", Upos::Adj),
];

fn suffix_tag(word: &str) -> Option<Upos> {
    SUFFIX_RULES
        .iter()
        .find(|(suffix, _)| word.len() >= suffix.len() + 3 && word.ends_with(suffix))
        .map(|(_, tag)| *tag)
}

fn is_number(word: &str) -> bool {
    word.chars().any(|c| c.is_ascii_digit())
        && word.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | ',' | '-' | '%'))
}

const SINGULAR_EXCEPTIONS: &[&str] = &[
    "series", "species", "news", "means", "bias", "lens", "chaos", "canvas", "gas", "physics",
    "mathematics", "economics", "linguistics", "logistics", "robotics", "analytics", "is", "has",
    "was", "this", "thus", "its",
];

/// Plural-to-singular by suffix stripping, with an exception list.
pub fn singularize(word: &str) -> String {
    if SINGULAR_EXCEPTIONS.contains(&word)
        || word.len() <= 3
        || word.ends_with("ss")
        || word.ends_with("us")
        || word.ends_with("is")
    {
        return word.to_string();
    }
    if let Some(stem) = word.strip_suffix("ies") {
        return format!("{stem}y");
    }
    for suffix in ["sses", "shes", "ches", "xes", "zes"] {
        if word.ends_with(suffix) {
            return word[..word.len() - 2].to_string();
        }
    }
    match word.strip_suffix('s') {
        Some(stem) => stem.to_string(),
        None => word.to_string(),
    }
}

/// Repairs a stripped stem; without lexical evidence the word is left whole.
fn repair_stem(stem: &str, suffix: &str, lexicon: &Lexicon) -> String {
    if lexicon.get(stem).is_some() {
        return stem.to_string();
    }
    let with_e = format!("{stem}e");
    if lexicon.get(&with_e).is_some() {
        return with_e;
    }
    let b = stem.as_bytes();
    if b.len() >= 3 && b[b.len() - 1] == b[b.len() - 2] && b"bdgmnprt".contains(&b[b.len() - 1]) {
        return stem[..stem.len() - 1].to_string();
    }
    format!("{stem}{suffix}")
}

/// Verb lemma: strips `-ing`/`-ed` (with doubled-consonant and silent-`e`
/// repair) and third-person `-s`.
pub fn verb_lemma(word: &str, lexicon: &Lexicon) -> String {
    if lexicon.get(word) == Some(Upos::Verb) {
        return word.to_string();
    }
    if word.len() > 4 {
        if let Some(stem) = word.strip_suffix("ing") {
            return repair_stem(stem, "ing", lexicon);
        }
    }
    if word.len() > 4 {
        if let Some(stem) = word.strip_suffix("ied") {
            return format!("{stem}y");
        }
    }
    if word.len() > 3 {
        if let Some(stem) = word.strip_suffix("ed") {
            return repair_stem(stem, "ed", lexicon);
        }
    }
    if let Some(stem) = plural_stem_in_lexicon(word, lexicon) {
        return stem.0;
    }
    if word.len() > 3 && word.ends_with('s') && !word.ends_with("ss") {
        return singularize(word);
    }
    word.to_string()
}

pub fn lemmatize(word: &str, upos: Upos, lexicon: &Lexicon) -> String {
    match upos {
        Upos::Noun | Upos::Propn => singularize(word),
        Upos::Verb => verb_lemma(word, lexicon),
        _ => word.to_string(),
    }
}

/// For an `-s` form, the first stem candidate found in the lexicon.
fn plural_stem_in_lexicon(word: &str, lexicon: &Lexicon) -> Option<(String, Upos)> {
    if word.len() <= 3 || !word.ends_with('s') || word.ends_with("ss") {
        return None;
    }
    let mut candidates = vec![word[..word.len() - 1].to_string()];
    if let Some(stem) = word.strip_suffix("es") {
        candidates.push(stem.to_string());
    }
    if let Some(stem) = word.strip_suffix("ies") {
        candidates.push(format!("{stem}y"));
    }
    candidates
        .into_iter()
        .find_map(|c| lexicon.get(&c).map(|tag| (c, tag)))
}

fn tag_word(raw: &str, lexicon: &Lexicon) -> Token {
    let word = raw.to_lowercase();
    if !word.chars().any(char::is_alphanumeric) {
        return Token::new(raw, word, Upos::Punct);
    }
    if let Some((upos, lemma)) = closed_class(&word) {
        let lemma = if lemma.is_empty() { word.clone() } else { lemma.to_string() };
        return Token::new(raw, lemma, upos);
    }
    if is_number(&word) {
        return Token::new(raw, word.clone(), Upos::Num);
    }
    if let Some(upos) = lexicon.get(&word) {
        let lemma = lemmatize(&word, upos, lexicon);
        return Token::new(raw, lemma, upos);
    }
    if let Some((stem, tag)) = plural_stem_in_lexicon(&word, lexicon) {
        let upos = match tag {
            Upos::Verb => Upos::Verb,
            Upos::Propn => Upos::Propn,
            _ => Upos::Noun,
        };
        return Token::new(raw, stem, upos);
    }
    if word.ends_with("ed") || word.ends_with("ing") {
        let lemma = verb_lemma(&word, lexicon);
        if lemma != word && lexicon.get(&lemma) == Some(Upos::Verb) {
            return Token::new(raw, lemma, Upos::Verb);
        }
    }
    if let Some(upos) = suffix_tag(&word) {
        let lemma = lemmatize(&word, upos, lexicon);
        return Token::new(raw, lemma, upos);
    }
    let lemma = singularize(&word);
    Token::new(raw, lemma, Upos::Noun)
}

/// Tags pre-split tokens (see [`super::tokenize`]).
///
/// A base-form verb right after a determiner is read as a noun ("the use of").
pub fn tag_tokens<S: AsRef<str>>(words: &[S], lexicon: &Lexicon) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::with_capacity(words.len());
    for (i, w) in words.iter().enumerate() {
        let mut t = tag_word(w.as_ref(), lexicon);
        t.index = i + 1;
        let after_det = out.last().is_some_and(|p| p.upos == Upos::Det);
        if after_det && t.upos == Upos::Verb && !t.surface.ends_with("ed") && !t.surface.ends_with("ing") {
            t.upos = Upos::Noun;
            t.lemma = singularize(&t.surface.to_lowercase());
        }
        out.push(t);
    }
    out
}

/// Tokenizes and tags one sentence.
pub fn tag_heuristic(sentence_text: &str, lexicon: &Lexicon) -> Sentence {
    let words = super::normalize::tokenize(sentence_text);
    Sentence::new(String::new(), 0, sentence_text, tag_tokens(&words, lexicon))
}
