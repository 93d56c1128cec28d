//! Ontology graph, definition-similarity network, clustering and export.

mod export;
mod network;
mod ontology;

use thiserror::Error;

pub use export::{export_graph, import_csv_edges, ExportGraph, GraphFormat};
pub use network::{
    build_definition_network, cluster_network, definition_words, Clustering, DefinitionNetwork, NetworkNode,
};
pub use ontology::{build_ontology, OntologyGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on {0:?}")]
    SelfLoop(String),
    #[error("edge {src:?} -> {dst:?} would close a cycle")]
    Cycle { src: String, dst: String },
    #[error("unknown graph format {0:?} (expected dot, graphml or csv)")]
    UnknownFormat(String),
    #[error("edge list line {line}: {reason}")]
    Csv { line: usize, reason: String },
}
