use thiserror::Error;

use crate::analytics::GiniError;
use crate::corpus_io::{ConlluError, CorpusError};
use crate::evaluation::EvaluationError;
use crate::graphs::GraphError;
use crate::rule_engine::{CatalogError, EmptyTerm};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Conllu(#[from] ConlluError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Term(#[from] EmptyTerm),
    #[error(transparent)]
    Gini(#[from] GiniError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Evaluation(#[from] EvaluationError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}
