//! Corpus loading and the uniform token stream every later stage consumes.
//!
//! Abstracts arrive as JSON-lines or CSV. Sentences come either from a
//! supplied CoNLL-U file (gold tags, preferred) or from the heuristic
//! tagger in [`tagger`], which is a clearly degraded fallback: the
//! [`TaggedCorpus`] records how many sentences came from each source.

mod conllu;
mod corpus;
mod normalize;
mod prepare;
mod segment;
mod tagger;
mod types;

pub use conllu::{parse_conllu, write_conllu, ConlluError};
pub use corpus::{load_corpus, parse_csv, parse_jsonl, Corpus, CorpusError, CorpusFormat, Document};
pub use normalize::{fingerprint, normalize_text, tokenize};
pub use prepare::{prepare_sentences, TaggedCorpus};
pub use segment::segment_sentences;
pub use tagger::{lemmatize, singularize, tag_heuristic, tag_tokens, verb_lemma, Lexicon};
pub use types::{Sentence, Token, Upos};
