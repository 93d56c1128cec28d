use serde::Serialize;

use defminer_core::analytics::CooccurrenceTable;
use defminer_core::{DefinitionRecord, FreqTable, HyponymRecord, SynonymRecord};

/// Number formatting and CSV delimiter for all tabular outputs.
#[derive(Debug, Clone, Copy, Default)]
pub struct Locale {
    pub decimal_comma: bool,
}

impl Locale {
    pub fn number(&self, x: f64, decimals: usize) -> String {
        let s = format!("{x:.decimals$}");
        if self.decimal_comma {
            s.replace('.', ",")
        } else {
            s
        }
    }

    fn writer(&self) -> csv::Writer<Vec<u8>> {
        csv::WriterBuilder::new()
            .delimiter(if self.decimal_comma { b';' } else { b',' })
            .from_writer(Vec::new())
    }
}

/// CSV bytes with a header and `rows`.
pub fn table<R, I>(locale: Locale, header: &[&str], rows: I) -> Vec<u8>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = locale.writer();
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("serializable value");
    out.push(b'\n');
    out
}

pub const FEATURE_SEPARATOR: &str = " | ";

pub fn definitions_csv(locale: Locale, defs: &[DefinitionRecord]) -> Vec<u8> {
    table(
        locale,
        &["doc_id", "sent_index", "definiendum", "definitor", "genus", "features", "definition_text", "rule_id"],
        defs.iter().map(|d| {
            [
                d.doc_id.clone(),
                d.sent_index.to_string(),
                d.definiendum.clone(),
                d.definitor.clone(),
                d.genus.clone(),
                d.features.join(FEATURE_SEPARATOR),
                d.definition_text.clone(),
                d.rule_id.clone(),
            ]
        }),
    )
}

pub fn hyponyms_csv(locale: Locale, recs: &[HyponymRecord]) -> Vec<u8> {
    table(
        locale,
        &["doc_id", "sent_index", "term", "hyponym", "hypernym", "rule_id", "sentence_text"],
        recs.iter().map(|h| {
            [
                h.doc_id.clone(),
                h.sent_index.to_string(),
                h.term.clone(),
                h.hyponym.clone(),
                h.hypernym.clone(),
                h.rule_id.clone(),
                h.sentence_text.clone(),
            ]
        }),
    )
}

pub fn synonyms_csv(locale: Locale, recs: &[SynonymRecord]) -> Vec<u8> {
    table(
        locale,
        &["doc_id", "sent_index", "term", "synonym", "sentence_text"],
        recs.iter().map(|s| {
            [
                s.doc_id.clone(),
                s.sent_index.to_string(),
                s.term.clone(),
                s.synonym.clone(),
                s.sentence_text.clone(),
            ]
        }),
    )
}

pub fn freq_csv(locale: Locale, key: &str, t: &FreqTable) -> Vec<u8> {
    table(
        locale,
        &[key, "count", "fraction"],
        t.entries
            .iter()
            .map(|e| [e.key.clone(), e.count.to_string(), locale.number(e.fraction, 6)]),
    )
}

pub fn cooccurrence_csv(locale: Locale, t: &CooccurrenceTable) -> Vec<u8> {
    table(
        locale,
        &["feature_a", "feature_b", "count", "fraction"],
        t.pairs
            .iter()
            .map(|p| [p.a.clone(), p.b.clone(), p.count.to_string(), locale.number(p.fraction, 6)]),
    )
}
