use std::fmt;

use serde::{Deserialize, Serialize};

/// The 17 universal part-of-speech categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Upos {
    Adj,
    Adp,
    Adv,
    Aux,
    Cconj,
    Det,
    Intj,
    Noun,
    Num,
    Part,
    Pron,
    Propn,
    Punct,
    Sconj,
    Sym,
    Verb,
    X,
}

impl Upos {
    pub const ALL: [Upos; 17] = [
        Upos::Adj,
        Upos::Adp,
        Upos::Adv,
        Upos::Aux,
        Upos::Cconj,
        Upos::Det,
        Upos::Intj,
        Upos::Noun,
        Upos::Num,
        Upos::Part,
        Upos::Pron,
        Upos::Propn,
        Upos::Punct,
        Upos::Sconj,
        Upos::Sym,
        Upos::Verb,
        Upos::X,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Upos::Adj => "ADJ",
            Upos::Adp => "ADP",
            Upos::Adv => "ADV",
            Upos::Aux => "AUX",
            Upos::Cconj => "CCONJ",
            Upos::Det => "DET",
            Upos::Intj => "INTJ",
            Upos::Noun => "NOUN",
            Upos::Num => "NUM",
            Upos::Part => "PART",
            Upos::Pron => "PRON",
            Upos::Propn => "PROPN",
            Upos::Punct => "PUNCT",
            Upos::Sconj => "SCONJ",
            Upos::Sym => "SYM",
            Upos::Verb => "VERB",
            Upos::X => "X",
        }
    }

    /// Strict parse; `None` for anything outside the closed set.
    pub fn parse(tag: &str) -> Option<Upos> {
        Upos::ALL.iter().copied().find(|u| u.as_str() == tag)
    }

    /// Lenient parse used for tagged input: unknown tags become `X`.
    pub fn parse_lenient(tag: &str) -> Upos {
        Upos::parse(tag).unwrap_or(Upos::X)
    }

    pub fn is_nominal(self) -> bool {
        matches!(self, Upos::Noun | Upos::Propn)
    }
}

impl fmt::Display for Upos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub lemma: String,
    pub upos: Upos,
    /// 1-based position within the sentence.
    pub index: usize,
}

impl Token {
    pub fn new(surface: impl Into<String>, lemma: impl Into<String>, upos: Upos) -> Self {
        Token {
            surface: surface.into(),
            lemma: lemma.into(),
            upos,
            index: 0,
        }
    }

    pub fn is_punct(&self) -> bool {
        self.upos == Upos::Punct
    }
}

/// A tokenized, tagged sentence with its source document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    pub tokens: Vec<Token>,
    pub raw_text: String,
    pub doc_id: String,
    pub sent_index: usize,
    pub sent_id: Option<String>,
}

impl Sentence {
    /// Builds a sentence and renumbers its tokens `1..=n`.
    pub fn new(
        doc_id: impl Into<String>,
        sent_index: usize,
        raw_text: impl Into<String>,
        mut tokens: Vec<Token>,
    ) -> Self {
        for (i, t) in tokens.iter_mut().enumerate() {
            t.index = i + 1;
        }
        Sentence {
            tokens,
            raw_text: raw_text.into(),
            doc_id: doc_id.into(),
            sent_index,
            sent_id: None,
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Space-joined surfaces of `tokens[range]`, punctuation omitted.
    pub fn words(&self, range: std::ops::Range<usize>) -> String {
        self.tokens[range]
            .iter()
            .filter(|t| !t.is_punct())
            .map(|t| t.surface.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn upos_sequence(&self) -> Vec<Upos> {
        self.tokens.iter().map(|t| t.upos).collect()
    }
}
