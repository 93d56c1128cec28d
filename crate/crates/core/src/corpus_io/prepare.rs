use std::collections::{BTreeMap, HashSet};

use super::corpus::{Corpus, CorpusError};
use super::normalize::tokenize;
use super::segment::segment_sentences;
use super::tagger::{tag_tokens, Lexicon};
use super::types::{Sentence, Token};

/// Sentences ready for matching, with a record of where their tags came from.
#[derive(Debug, Clone, Default)]
pub struct TaggedCorpus {
    pub sentences: Vec<Sentence>,
    pub conllu_sentences: usize,
    pub heuristic_sentences: usize,
}

impl TaggedCorpus {
    /// True when any sentence was tagged by the fallback tagger.
    pub fn degraded(&self) -> bool {
        self.heuristic_sentences > 0
    }

    pub fn tag_source(&self) -> &'static str {
        match (self.conllu_sentences > 0, self.heuristic_sentences > 0) {
            (true, true) => "mixed",
            (true, false) => "conllu",
            (false, _) => "heuristic",
        }
    }
}

/// Lowercases forms and lemmas and drops bracket/quote tokens so gold-tagged
/// sentences line up with the heuristic token stream.
fn normalize_tagged(sentence: &Sentence) -> Option<Sentence> {
    let tokens: Vec<Token> = sentence
        .tokens
        .iter()
        .filter(|t| {
            !(t.is_punct() && !matches!(t.surface.as_str(), "," | ";" | ":" | "." | "!" | "?"))
        })
        .map(|t| {
            let mut t = t.clone();
            t.surface = t.surface.to_lowercase();
            t.lemma = t.lemma.to_lowercase();
            t
        })
        .collect();
    if tokens.is_empty() {
        return None;
    }
    let mut s = Sentence::new(
        sentence.doc_id.clone(),
        sentence.sent_index,
        sentence.raw_text.clone(),
        tokens,
    );
    s.sent_id = sentence.sent_id.clone();
    Some(s)
}

/// Tokenizes and tags one abstract with the fallback tagger.
pub(crate) fn tag_abstract(doc_id: &str, text: &str, lexicon: &Lexicon) -> Vec<Sentence> {
    segment_sentences(text)
        .into_iter()
        .filter_map(|raw| {
            let words = tokenize(&raw);
            (!words.is_empty()).then(|| tag_tokens(&words, lexicon)).map(|tokens| (raw, tokens))
        })
        .enumerate()
        .map(|(i, (raw, tokens))| Sentence::new(doc_id, i, raw, tokens))
        .collect()
}

/// Builds the sentence stream for a corpus.
///
/// Documents that have sentences in `conllu` use those tags; every other
/// document is segmented and tagged heuristically. Output is in corpus
/// document order.
pub fn prepare_sentences(
    corpus: &Corpus,
    conllu: Option<&[Sentence]>,
    lexicon: &Lexicon,
) -> Result<TaggedCorpus, CorpusError> {
    let known: HashSet<&str> = corpus.documents().iter().map(|d| d.doc_id.as_str()).collect();
    let mut by_doc: BTreeMap<&str, Vec<Sentence>> = BTreeMap::new();
    for s in conllu.unwrap_or(&[]) {
        if !known.contains(s.doc_id.as_str()) {
            return Err(CorpusError::UnknownDocument(s.doc_id.clone()));
        }
        if let Some(n) = normalize_tagged(s) {
            by_doc.entry(s.doc_id.as_str()).or_default().push(n);
        }
    }

    let mut out = TaggedCorpus::default();
    for doc in corpus.documents() {
        match by_doc.remove(doc.doc_id.as_str()) {
            Some(tagged) => {
                out.conllu_sentences += tagged.len();
                out.sentences.extend(tagged);
            }
            None => {
                let tagged = tag_abstract(&doc.doc_id, &doc.abstract_text, lexicon);
                out.heuristic_sentences += tagged.len();
                out.sentences.extend(tagged);
            }
        }
    }
    Ok(out)
}
