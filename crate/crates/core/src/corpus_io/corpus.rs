use std::collections::{BTreeMap, HashSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: malformed record: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("duplicate doc_id {0:?}")]
    DuplicateId(String),
    #[error("tagged sentence refers to doc_id {0:?}, which is not in the corpus")]
    UnknownDocument(String),
    #[error("unknown corpus format {0:?} (expected jsonl or csv)")]
    UnknownFormat(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Jsonl,
    Csv,
}

impl CorpusFormat {
    pub fn parse(s: &str) -> Result<Self, CorpusError> {
        match s.to_ascii_lowercase().as_str() {
            "jsonl" | "json" | "ndjson" => Ok(CorpusFormat::Jsonl),
            "csv" => Ok(CorpusFormat::Csv),
            other => Err(CorpusError::UnknownFormat(other.to_string())),
        }
    }

    /// Guesses from the file extension, defaulting to JSON-lines.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => CorpusFormat::Csv,
            _ => CorpusFormat::Jsonl,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub doc_id: String,
    pub abstract_text: String,
    /// `(area, count)` pairs sorted by area name.
    pub subject_areas: Option<Vec<(String, u64)>>,
    pub year: Option<i32>,
}

impl Document {
    pub fn new(doc_id: impl Into<String>, abstract_text: impl Into<String>) -> Self {
        Document {
            doc_id: doc_id.into(),
            abstract_text: abstract_text.into(),
            subject_areas: None,
            year: None,
        }
    }

    pub fn with_year(mut self, year: i32) -> Self {
        self.year = Some(year);
        self
    }

    pub fn with_subject_areas<I, S>(mut self, areas: I) -> Self
    where
        I: IntoIterator<Item = (S, u64)>,
        S: Into<String>,
    {
        let map: BTreeMap<String, u64> = areas.into_iter().map(|(k, v)| (k.into(), v)).collect();
        self.subject_areas = Some(map.into_iter().collect());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Corpus {
    documents: Vec<Document>,
}

impl Corpus {
    pub fn new(documents: Vec<Document>) -> Result<Self, CorpusError> {
        let mut seen = HashSet::new();
        for d in &documents {
            if !seen.insert(d.doc_id.as_str()) {
                return Err(CorpusError::DuplicateId(d.doc_id.clone()));
            }
        }
        Ok(Corpus { documents })
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn get(&self, doc_id: &str) -> Option<&Document> {
        self.documents.iter().find(|d| d.doc_id == doc_id)
    }
}

#[derive(Deserialize)]
struct JsonRecord {
    doc_id: String,
    #[serde(rename = "abstract")]
    abstract_text: String,
    #[serde(default)]
    year: Option<i32>,
    #[serde(default)]
    subject_areas: Option<BTreeMap<String, u64>>,
}

impl From<JsonRecord> for Document {
    fn from(r: JsonRecord) -> Self {
        Document {
            doc_id: r.doc_id,
            abstract_text: r.abstract_text,
            subject_areas: r.subject_areas.map(|m| m.into_iter().collect()),
            year: r.year,
        }
    }
}

pub fn load_corpus(path: impl AsRef<Path>, format: CorpusFormat) -> Result<Corpus, CorpusError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    match format {
        CorpusFormat::Jsonl => parse_jsonl(&text),
        CorpusFormat::Csv => parse_csv(&text),
    }
}

pub fn parse_jsonl(text: &str) -> Result<Corpus, CorpusError> {
    let mut docs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let rec: JsonRecord = serde_json::from_str(line).map_err(|e| CorpusError::Malformed {
            line: i + 1,
            reason: e.to_string(),
        })?;
        docs.push(rec.into());
    }
    Corpus::new(docs)
}

/// CSV with headers `doc_id,abstract[,year][,subject_areas]`; subject areas
/// are written `area:count;area:count`.
pub fn parse_csv(text: &str) -> Result<Corpus, CorpusError> {
    if text.trim().is_empty() {
        return Ok(Corpus::default());
    }
    let mut reader = csv::ReaderBuilder::new()
        .flexible(false)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CorpusError::Malformed {
            line: 1,
            reason: e.to_string(),
        })?
        .clone();
    let col = |name: &str| headers.iter().position(|h| h.trim() == name);
    let (Some(id_col), Some(abs_col)) = (col("doc_id"), col("abstract")) else {
        return Err(CorpusError::Malformed {
            line: 1,
            reason: "header must contain doc_id and abstract".into(),
        });
    };
    let year_col = col("year");
    let areas_col = col("subject_areas");

    let mut docs = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| CorpusError::Malformed {
            line: e.position().map(|p| p.line() as usize).unwrap_or(0),
            reason: e.to_string(),
        })?;
        let line = rec.position().map(|p| p.line() as usize).unwrap_or(0);
        let field = |c: usize| rec.get(c).unwrap_or("").trim();
        let doc_id = field(id_col);
        if doc_id.is_empty() {
            return Err(CorpusError::Malformed {
                line,
                reason: "empty doc_id".into(),
            });
        }
        let mut doc = Document::new(doc_id, field(abs_col));
        if let Some(c) = year_col {
            let y = field(c);
            if !y.is_empty() {
                doc.year = Some(y.parse().map_err(|_| CorpusError::Malformed {
                    line,
                    reason: format!("year {y:?} is not an integer"),
                })?);
            }
        }
        if let Some(c) = areas_col {
            let raw = field(c);
            if !raw.is_empty() {
                let mut map = BTreeMap::new();
                for part in raw.split(';').filter(|p| !p.trim().is_empty()) {
                    let (name, count) = part.rsplit_once(':').ok_or_else(|| CorpusError::Malformed {
                        line,
                        reason: format!("subject area {part:?} is not name:count"),
                    })?;
                    let count: u64 = count.trim().parse().map_err(|_| CorpusError::Malformed {
                        line,
                        reason: format!("subject area count {count:?} is not a non-negative integer"),
                    })?;
                    *map.entry(name.trim().to_string()).or_insert(0) += count;
                }
                doc.subject_areas = Some(map.into_iter().collect());
            }
        }
        docs.push(doc);
    }
    Corpus::new(docs)
}
