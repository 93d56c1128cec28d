//! CoNLL-U reader and writer. Only ID, FORM, LEMMA and UPOS are used.

use thiserror::Error;

use super::types::{Sentence, Token, Upos};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConlluError {
    #[error("line {line}: expected 10 tab-separated columns, found {found}")]
    ColumnCount { line: usize, found: usize },
    #[error("line {line}: invalid token id {id:?}")]
    BadId { line: usize, id: String },
    #[error("line {line}: token id {found} out of sequence (expected {expected})")]
    OutOfSequence {
        line: usize,
        expected: usize,
        found: usize,
    },
}

#[derive(Default)]
struct Block {
    doc_id: Option<String>,
    sent_id: Option<String>,
    text: Option<String>,
    tokens: Vec<Token>,
}

fn comment_value<'a>(comment: &'a str, key: &str) -> Option<&'a str> {
    let rest = comment.trim_start_matches('#').trim_start();
    let rest = rest.strip_prefix(key)?.trim_start();
    Some(rest.strip_prefix('=')?.trim())
}

/// Parses CoNLL-U text into sentences.
///
/// `# newdoc id = ...` (or `# doc_id = ...`) sets the document of the
/// following sentences and restarts `sent_index`. Multiword ranges (`3-4`)
/// and empty nodes (`5.1`) are skipped; their parts carry the tokens.
pub fn parse_conllu(text: &str) -> Result<Vec<Sentence>, ConlluError> {
    let mut sentences = Vec::new();
    let mut doc_id = String::new();
    let mut sent_index = 0usize;
    let mut block = Block::default();

    let mut flush = |block: &mut Block, doc_id: &mut String, sent_index: &mut usize| {
        let b = std::mem::take(block);
        if let Some(d) = b.doc_id {
            if d != *doc_id {
                *doc_id = d;
                *sent_index = 0;
            }
        }
        if b.tokens.is_empty() {
            return;
        }
        let raw = b.text.unwrap_or_else(|| {
            b.tokens
                .iter()
                .map(|t| t.surface.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        });
        let mut s = Sentence::new(doc_id.clone(), *sent_index, raw, b.tokens);
        s.sent_id = b.sent_id;
        sentences.push(s);
        *sent_index += 1;
    };

    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.trim().is_empty() {
            flush(&mut block, &mut doc_id, &mut sent_index);
            continue;
        }
        if line.starts_with('#') {
            if let Some(v) = comment_value(line, "newdoc id").or_else(|| comment_value(line, "doc_id")) {
                block.doc_id = Some(v.to_string());
            } else if let Some(v) = comment_value(line, "sent_id") {
                block.sent_id = Some(v.to_string());
            } else if let Some(v) = comment_value(line, "text") {
                block.text = Some(v.to_string());
            }
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 10 {
            return Err(ConlluError::ColumnCount {
                line: lineno,
                found: cols.len(),
            });
        }
        let id = cols[0];
        if id.contains('-') || id.contains('.') {
            let parts: Vec<&str> = id.split(['-', '.']).collect();
            if parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok()) {
                continue;
            }
            return Err(ConlluError::BadId {
                line: lineno,
                id: id.to_string(),
            });
        }
        let n: usize = id.parse().map_err(|_| ConlluError::BadId {
            line: lineno,
            id: id.to_string(),
        })?;
        let expected = block.tokens.len() + 1;
        if n != expected {
            return Err(ConlluError::OutOfSequence {
                line: lineno,
                expected,
                found: n,
            });
        }
        let form = cols[1];
        let lemma = if cols[2] == "_" && form != "_" { form } else { cols[2] };
        let mut token = Token::new(form, lemma, Upos::parse_lenient(cols[3]));
        token.index = n;
        block.tokens.push(token);
    }
    flush(&mut block, &mut doc_id, &mut sent_index);
    Ok(sentences)
}

/// Writes sentences back as CoNLL-U, columns 5-10 left empty (`_`).
pub fn write_conllu(sentences: &[Sentence]) -> String {
    let mut out = String::new();
    let mut current_doc: Option<&str> = None;
    for s in sentences {
        if current_doc != Some(s.doc_id.as_str()) && !s.doc_id.is_empty() {
            out.push_str(&format!("# newdoc id = {}\n", s.doc_id));
        }
        current_doc = Some(s.doc_id.as_str());
        if let Some(id) = &s.sent_id {
            out.push_str(&format!("# sent_id = {id}\n"));
        }
        out.push_str(&format!("# text = {}\n", s.raw_text.replace('\n', " ")));
        for t in &s.tokens {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t_\t_\t_\t_\t_\t_\n",
                t.index, t.surface, t.lemma, t.upos
            ));
        }
        out.push('\n');
    }
    out
}
