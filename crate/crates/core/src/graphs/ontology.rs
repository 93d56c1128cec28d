use std::collections::{BTreeMap, BTreeSet};

use super::GraphError;
use crate::extraction::HyponymRecord;

/// Directed concept graph rooted at the term: term → category → hyponym.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntologyGraph {
    root: String,
    nodes: BTreeSet<String>,
    edges: BTreeMap<(String, String), usize>,
    diagnostics: Vec<String>,
}

impl OntologyGraph {
    pub fn new(root: impl Into<String>) -> Self {
        let root = root.into();
        OntologyGraph {
            nodes: BTreeSet::from([root.clone()]),
            root,
            edges: BTreeMap::new(),
            diagnostics: Vec::new(),
        }
    }

    pub fn root(&self) -> &str {
        &self.root
    }

    pub fn nodes(&self) -> impl Iterator<Item = &str> {
        self.nodes.iter().map(String::as_str)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Edges in lexicographic `(src, dst)` order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, usize)> {
        self.edges.iter().map(|((a, b), &w)| (a.as_str(), b.as_str(), w))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, src: &str, dst: &str) -> Option<usize> {
        self.edges.get(&(src.to_string(), dst.to_string())).copied()
    }

    pub fn diagnostics(&self) -> &[String] {
        &self.diagnostics
    }

    pub fn successors<'a>(&'a self, node: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.edges
            .keys()
            .filter(move |(a, _)| a == node)
            .map(|(_, b)| b.as_str())
    }

    /// Whether a directed path leads from `from` to `to`.
    pub fn reaches(&self, from: &str, to: &str) -> bool {
        let mut stack = vec![from];
        let mut seen = BTreeSet::new();
        while let Some(n) = stack.pop() {
            if n == to {
                return true;
            }
            if seen.insert(n) {
                stack.extend(self.successors(n));
            }
        }
        false
    }

    /// Whether adding `src → dst` keeps the graph acyclic and loop-free.
    pub fn check_edge(&self, src: &str, dst: &str) -> Result<(), GraphError> {
        if src == dst {
            return Err(GraphError::SelfLoop(src.to_string()));
        }
        if self.edges.contains_key(&(src.to_string(), dst.to_string())) {
            return Ok(());
        }
        if self.reaches(dst, src) {
            return Err(GraphError::Cycle {
                src: src.to_string(),
                dst: dst.to_string(),
            });
        }
        Ok(())
    }

    /// Adds `weight` to the edge `src → dst`, rejecting loops and cycles.
    pub fn add_edge(&mut self, src: &str, dst: &str, weight: usize) -> Result<(), GraphError> {
        self.check_edge(src, dst)?;
        self.nodes.insert(src.to_string());
        self.nodes.insert(dst.to_string());
        *self.edges.entry((src.to_string(), dst.to_string())).or_insert(0) += weight;
        Ok(())
    }

    /// Nodes not reachable from the root.
    pub fn orphans(&self) -> Vec<&str> {
        let mut reached = BTreeSet::new();
        let mut stack = vec![self.root.as_str()];
        while let Some(n) = stack.pop() {
            if reached.insert(n) {
                stack.extend(self.successors(n));
            }
        }
        self.nodes().filter(|n| !reached.contains(n)).collect()
    }
}

/// Builds `term → hypernym → hyponym` with edge weights equal to record counts.
///
/// Records naming the term as hyponym, or that would close a cycle, are
/// skipped and noted in the diagnostics.
pub fn build_ontology(term: &str, records: &[HyponymRecord]) -> OntologyGraph {
    let mut g = OntologyGraph::new(term);
    for r in records {
        if r.hyponym == term {
            g.diagnostics
                .push(format!("{}: hyponym equals the term, skipped", r.doc_id));
            continue;
        }
        if r.term != term {
            g.diagnostics
                .push(format!("{}: record is for {:?}, not {:?}, skipped", r.doc_id, r.term, term));
            continue;
        }
        let result = g.check_edge(term, &r.hypernym).and_then(|_| {
            g.check_edge(&r.hypernym, &r.hyponym)?;
            // the new term → hypernym edge would close hyponym ⇝ term
            if g.reaches(&r.hyponym, term) {
                return Err(GraphError::Cycle {
                    src: r.hypernym.clone(),
                    dst: r.hyponym.clone(),
                });
            }
            Ok(())
        });
        match result {
            Ok(()) => {
                g.add_edge(term, &r.hypernym, 1).expect("checked");
                g.add_edge(&r.hypernym, &r.hyponym, 1).expect("checked");
            }
            Err(e) => g.diagnostics.push(format!("{}: {e}, skipped", r.doc_id)),
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(hyponym: &str, hypernym: &str) -> HyponymRecord {
        HyponymRecord {
            doc_id: "d".into(),
            sent_index: 0,
            term: "artificial intelligence".into(),
            hyponym: hyponym.into(),
            hypernym: hypernym.into(),
            sentence_text: String::new(),
            rule_id: "hyp-such-as".into(),
        }
    }

    #[test]
    fn empty_records_leave_root() {
        let g = build_ontology("artificial intelligence", &[]);
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn multiplicity_is_weight() {
        let g = build_ontology(
            "artificial intelligence",
            &[rec("computer vision", "application"), rec("computer vision", "application")],
        );
        assert_eq!(g.weight("application", "computer vision"), Some(2));
        assert_eq!(g.weight("artificial intelligence", "application"), Some(2));
    }

    #[test]
    fn cycles_and_self_reference_skipped() {
        let g = build_ontology(
            "artificial intelligence",
            &[
                rec("machine learning", "technique"),
                rec("technique", "machine learning"),
                rec("artificial intelligence", "field"),
                rec("x", "x"),
            ],
        );
        assert_eq!(g.diagnostics().len(), 3);
        assert!(g.orphans().is_empty());
        assert_eq!(g.weight("technique", "machine learning"), Some(1));
    }
}
