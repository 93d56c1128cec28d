use std::fmt::Write as _;
use std::str::FromStr;

use super::network::DefinitionNetwork;
use super::ontology::OntologyGraph;
use super::GraphError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Graphml,
    Csv,
}

impl FromStr for GraphFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        match s.to_ascii_lowercase().as_str() {
            "dot" | "gv" => Ok(GraphFormat::Dot),
            "graphml" => Ok(GraphFormat::Graphml),
            "csv" => Ok(GraphFormat::Csv),
            other => Err(GraphError::UnknownFormat(other.to_string())),
        }
    }
}

impl GraphFormat {
    pub fn extension(self) -> &'static str {
        match self {
            GraphFormat::Dot => "dot",
            GraphFormat::Graphml => "graphml",
            GraphFormat::Csv => "csv",
        }
    }
}

/// Anything that can be written out as a weighted edge list.
pub trait ExportGraph {
    fn directed(&self) -> bool;
    fn name(&self) -> &str;
    /// Node labels in lexicographic order.
    fn node_labels(&self) -> Vec<String>;
    /// `(src, dst, weight)` in lexicographic order.
    fn edge_list(&self) -> Vec<(String, String, usize)>;
}

impl ExportGraph for OntologyGraph {
    fn directed(&self) -> bool {
        true
    }

    fn name(&self) -> &str {
        "ontology"
    }

    fn node_labels(&self) -> Vec<String> {
        self.nodes().map(str::to_string).collect()
    }

    fn edge_list(&self) -> Vec<(String, String, usize)> {
        self.edges().map(|(a, b, w)| (a.to_string(), b.to_string(), w)).collect()
    }
}

impl ExportGraph for DefinitionNetwork {
    fn directed(&self) -> bool {
        false
    }

    fn name(&self) -> &str {
        "network"
    }

    fn node_labels(&self) -> Vec<String> {
        let mut ids: Vec<String> = self.nodes().iter().map(|n| n.id.clone()).collect();
        ids.sort();
        ids
    }

    fn edge_list(&self) -> Vec<(String, String, usize)> {
        let mut out: Vec<_> = self
            .edges()
            .map(|(i, j, w)| (self.nodes()[i].id.clone(), self.nodes()[j].id.clone(), w))
            .collect();
        out.sort();
        out
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
        .replace('\'', "&apos;")
}

fn to_dot(g: &dyn ExportGraph) -> String {
    let (kind, arrow) = if g.directed() { ("digraph", "->") } else { ("graph", "--") };
    let mut out = format!("{kind} {} {{\n", g.name());
    for n in g.node_labels() {
        let _ = writeln!(out, "  {};", dot_quote(&n));
    }
    for (a, b, w) in g.edge_list() {
        let _ = writeln!(out, "  {} {arrow} {} [label=\"{w}\", weight={w}];", dot_quote(&a), dot_quote(&b));
    }
    out.push_str("}\n");
    out
}

fn to_graphml(g: &dyn ExportGraph) -> String {
    let mut out = String::from(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n\
         \x20 <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n",
    );
    let dir = if g.directed() { "directed" } else { "undirected" };
    let _ = writeln!(out, "  <graph id=\"{}\" edgedefault=\"{dir}\">", g.name());
    for n in g.node_labels() {
        let _ = writeln!(out, "    <node id=\"{}\"/>", xml_escape(&n));
    }
    for (i, (a, b, w)) in g.edge_list().into_iter().enumerate() {
        let _ = writeln!(
            out,
            "    <edge id=\"e{i}\" source=\"{}\" target=\"{}\"><data key=\"weight\">{w}</data></edge>",
            xml_escape(&a),
            xml_escape(&b)
        );
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

fn to_csv(g: &dyn ExportGraph) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["src", "dst", "weight"]).expect("in-memory write");
    for (a, b, weight) in g.edge_list() {
        w.write_record([a.as_str(), b.as_str(), &weight.to_string()])
            .expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

/// Serializes a graph. Node and edge order is lexicographic, so equal graphs give equal bytes.
pub fn export_graph(graph: &dyn ExportGraph, format: GraphFormat) -> Vec<u8> {
    match format {
        GraphFormat::Dot => to_dot(graph).into_bytes(),
        GraphFormat::Graphml => to_graphml(graph).into_bytes(),
        GraphFormat::Csv => to_csv(graph),
    }
}

/// Reads back a CSV edge list written by [`export_graph`].
pub fn import_csv_edges(bytes: &[u8]) -> Result<Vec<(String, String, usize)>, GraphError> {
    let mut r = csv::Reader::from_reader(bytes);
    let mut out = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| GraphError::Csv {
            line: i + 2,
            reason: e.to_string(),
        })?;
        if rec.len() != 3 {
            return Err(GraphError::Csv {
                line: i + 2,
                reason: format!("expected 3 fields, found {}", rec.len()),
            });
        }
        let w = rec[2].parse().map_err(|_| GraphError::Csv {
            line: i + 2,
            reason: format!("weight {:?} is not an integer", &rec[2]),
        })?;
        out.push((rec[0].to_string(), rec[1].to_string(), w));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn single_edge_dot() {
        let mut g = OntologyGraph::new("artificial intelligence");
        g.add_edge("artificial intelligence", "application", 1).unwrap();
        let dot = String::from_utf8(export_graph(&g, GraphFormat::Dot)).unwrap();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("  \"artificial intelligence\" -> \"application\""));
    }

    #[test]
    fn empty_network_dot() {
        let dot = String::from_utf8(export_graph(&DefinitionNetwork::default(), GraphFormat::Dot)).unwrap();
        assert_eq!(dot, "graph network {\n}\n");
    }

    #[test]
    fn three_node_csv() {
        let set = |w: &[&str]| w.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        let net = DefinitionNetwork::from_word_sets(
            vec![
                ("a".into(), String::new(), set(&["x", "y"])),
                ("b".into(), String::new(), set(&["x", "y", "z"])),
                ("c".into(), String::new(), set(&["z"])),
            ],
            1,
        );
        let csv = String::from_utf8(export_graph(&net, GraphFormat::Csv)).unwrap();
        assert_eq!(csv, "src,dst,weight\ndef-0000,def-0001,2\ndef-0001,def-0002,1\n");
        assert_eq!(import_csv_edges(csv.as_bytes()).unwrap(), net.edge_list());
    }

    #[test]
    fn graphml_escapes() {
        let mut g = OntologyGraph::new("r&d");
        g.add_edge("r&d", "<x>", 2).unwrap();
        let xml = String::from_utf8(export_graph(&g, GraphFormat::Graphml)).unwrap();
        assert!(xml.contains("source=\"r&amp;d\" target=\"&lt;x&gt;\""));
        assert!(xml.contains("<data key=\"weight\">2</data>"));
    }

    #[test]
    fn unknown_format() {
        assert!(matches!("svg".parse::<GraphFormat>(), Err(GraphError::UnknownFormat(f)) if f == "svg"));
    }
}
