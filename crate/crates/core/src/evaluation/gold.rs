use std::collections::HashMap;
use std::path::Path;

use super::EvaluationError;
use crate::corpus_io::fingerprint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldLabel {
    pub doc_id: String,
    pub fingerprint: String,
    pub relevant: bool,
}

/// Manual relevance judgments keyed by sentence fingerprint.
#[derive(Debug, Clone, Default)]
pub struct GoldSet {
    labels: HashMap<String, GoldLabel>,
}

impl GoldSet {
    pub fn from_labels(labels: impl IntoIterator<Item = GoldLabel>) -> Result<Self, EvaluationError> {
        let mut map = HashMap::new();
        for (i, mut l) in labels.into_iter().enumerate() {
            l.fingerprint = fingerprint(&l.fingerprint);
            if map.contains_key(&l.fingerprint) {
                return Err(EvaluationError::DuplicateFingerprint {
                    line: i + 2,
                    fingerprint: l.fingerprint,
                });
            }
            map.insert(l.fingerprint.clone(), l);
        }
        Ok(GoldSet { labels: map })
    }

    /// CSV with header `doc_id,fingerprint,relevant`, relevant being `0` or `1`.
    pub fn parse(text: &str) -> Result<Self, EvaluationError> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let mut labels = Vec::new();
        for (i, rec) in r.records().enumerate() {
            let line = i + 2;
            let rec = rec.map_err(|e| EvaluationError::Csv {
                line,
                reason: e.to_string(),
            })?;
            if rec.len() != 3 {
                return Err(EvaluationError::Csv {
                    line,
                    reason: format!("expected 3 fields, found {}", rec.len()),
                });
            }
            let relevant = match rec[2].trim() {
                "1" => true,
                "0" => false,
                other => {
                    return Err(EvaluationError::BadLabel {
                        line,
                        value: other.to_string(),
                    })
                }
            };
            labels.push(GoldLabel {
                doc_id: rec[0].trim().to_string(),
                fingerprint: rec[1].to_string(),
                relevant,
            });
        }
        Self::from_labels(labels)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, EvaluationError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| EvaluationError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Label for a sentence, looked up by its fingerprint.
    pub fn label(&self, sentence_text: &str) -> Option<bool> {
        self.labels.get(&fingerprint(sentence_text)).map(|l| l.relevant)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_lookup() {
        let g = GoldSet::parse("doc_id,fingerprint,relevant\nd1,data science is a field,1\nd2,\"x is y\",0\n").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.label("Data science is a field."), Some(true));
        assert_eq!(g.label("X is Y"), Some(false));
        assert_eq!(g.label("unknown"), None);
    }

    #[test]
    fn duplicate_fingerprint() {
        let e = GoldSet::parse("doc_id,fingerprint,relevant\na,x is y,1\nb,X is y.,0\n").unwrap_err();
        assert!(matches!(e, EvaluationError::DuplicateFingerprint { line: 3, .. }));
    }

    #[test]
    fn bad_label() {
        let e = GoldSet::parse("doc_id,fingerprint,relevant\na,x,yes\n").unwrap_err();
        assert!(matches!(e, EvaluationError::BadLabel { line: 2, .. }));
    }
}
