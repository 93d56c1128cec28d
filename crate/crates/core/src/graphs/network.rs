use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::corpus_io::singularize;
use crate::extraction::{DefinitionRecord, Stopwords};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NetworkNode {
    /// `def-0000`, `def-0001`, … in input order.
    pub id: String,
    pub doc_id: String,
    pub definition_text: String,
    pub words: BTreeSet<String>,
}

/// Undirected graph of definitions weighted by shared content words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DefinitionNetwork {
    nodes: Vec<NetworkNode>,
    /// Keyed by node index pair `(i, j)` with `i < j`.
    edges: BTreeMap<(usize, usize), usize>,
}

/// Content words of a definition: genus and feature words, singular, without stopwords.
pub fn definition_words(def: &DefinitionRecord, stopwords: &Stopwords) -> BTreeSet<String> {
    std::iter::once(def.genus.as_str())
        .chain(def.features.iter().map(String::as_str))
        .flat_map(str::split_whitespace)
        .map(|w| w.trim_matches(|c: char| !c.is_alphanumeric()).to_lowercase())
        .filter(|w| !w.is_empty() && !stopwords.contains(w))
        .map(|w| singularize(&w))
        .collect()
}

impl DefinitionNetwork {
    /// Nodes from explicit word sets; an edge joins two nodes sharing at least `min_weight` words.
    pub fn from_word_sets(sets: Vec<(String, String, BTreeSet<String>)>, min_weight: usize) -> Self {
        let nodes: Vec<NetworkNode> = sets
            .into_iter()
            .enumerate()
            .map(|(i, (doc_id, text, words))| NetworkNode {
                id: format!("def-{i:04}"),
                doc_id,
                definition_text: text,
                words,
            })
            .collect();
        let min_weight = min_weight.max(1);
        let mut edges = BTreeMap::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                let w = nodes[i].words.intersection(&nodes[j].words).count();
                if w >= min_weight {
                    edges.insert((i, j), w);
                }
            }
        }
        DefinitionNetwork { nodes, edges }
    }

    pub fn build(defs: &[DefinitionRecord], min_weight: usize, stopwords: &Stopwords) -> Self {
        let sets = defs
            .iter()
            .map(|d| (d.doc_id.clone(), d.definition_text.clone(), definition_words(d, stopwords)))
            .collect();
        Self::from_word_sets(sets, min_weight)
    }

    pub fn nodes(&self) -> &[NetworkNode] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j, weight)` node-index triples with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.get(&key).copied()
    }
}

pub fn build_definition_network(defs: &[DefinitionRecord], min_weight: usize) -> DefinitionNetwork {
    DefinitionNetwork::build(defs, min_weight, &Stopwords::english())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Clustering {
    pub threshold: usize,
    /// Node ids per component, largest component first.
    pub components: Vec<Vec<String>>,
    /// Size of the largest component over the node count (0 for an empty network).
    pub cohesion: f64,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Connected components over edges of weight at least `threshold`.
pub fn cluster_network(net: &DefinitionNetwork, threshold: usize) -> Clustering {
    let n = net.node_count();
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, j, w) in net.edges() {
        if w >= threshold.max(1) {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(net.nodes()[i].id.clone());
    }
    let mut components: Vec<Vec<String>> = groups.into_values().collect();
    components.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let cohesion = match components.first() {
        Some(c) if n > 0 => c.len() as f64 / n as f64,
        _ => 0.0,
    };
    Clustering {
        threshold,
        components,
        cohesion,
    }
}
