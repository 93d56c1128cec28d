use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::extraction::DefinitionRecord;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FreqEntry {
    pub key: String,
    pub count: usize,
    pub fraction: f64,
}

/// Counts over a set of definitions, sorted by count descending then key.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct FreqTable {
    pub entries: Vec<FreqEntry>,
    /// Number of definitions the counts were taken over.
    pub total: usize,
}

impl FreqTable {
    pub fn from_counts(counts: &BTreeMap<String, usize>, total: usize) -> Self {
        let mut entries: Vec<FreqEntry> = counts
            .iter()
            .map(|(k, &c)| FreqEntry {
                key: k.clone(),
                count: c,
                fraction: if total == 0 { 0.0 } else { c as f64 / total as f64 },
            })
            .collect();
        entries.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.key.cmp(&b.key)));
        FreqTable { entries, total }
    }

    pub fn get(&self, key: &str) -> Option<&FreqEntry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn top(&self, n: usize) -> &[FreqEntry] {
        &self.entries[..n.min(self.entries.len())]
    }

    /// Shannon entropy in bits of the count distribution.
    pub fn entropy(&self) -> f64 {
        let sum: usize = self.entries.iter().map(|e| e.count).sum();
        if sum == 0 {
            return 0.0;
        }
        -self
            .entries
            .iter()
            .filter(|e| e.count > 0)
            .map(|e| {
                let p = e.count as f64 / sum as f64;
                p * p.log2()
            })
            .sum::<f64>()
    }
}

/// Partial counts that can be built per chunk of definitions and merged.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FeatureCounts {
    pub features: BTreeMap<String, usize>,
    pub pairs: BTreeMap<(String, String), usize>,
    pub genera: BTreeMap<String, usize>,
    pub definitions: usize,
}

impl FeatureCounts {
    pub fn add(&mut self, def: &DefinitionRecord) {
        self.definitions += 1;
        *self.genera.entry(def.genus.clone()).or_insert(0) += 1;
        let set: BTreeSet<&String> = def.features.iter().collect();
        let items: Vec<&String> = set.into_iter().collect();
        for (i, a) in items.iter().enumerate() {
            *self.features.entry((*a).clone()).or_insert(0) += 1;
            for b in &items[i + 1..] {
                *self.pairs.entry(((*a).clone(), (*b).clone())).or_insert(0) += 1;
            }
        }
    }

    pub fn from_definitions<'a>(defs: impl IntoIterator<Item = &'a DefinitionRecord>) -> Self {
        let mut c = FeatureCounts::default();
        for d in defs {
            c.add(d);
        }
        c
    }

    pub fn merge(mut self, other: FeatureCounts) -> Self {
        fn add_all<K: Ord>(into: &mut BTreeMap<K, usize>, from: BTreeMap<K, usize>) {
            for (k, v) in from {
                *into.entry(k).or_insert(0) += v;
            }
        }
        add_all(&mut self.features, other.features);
        add_all(&mut self.pairs, other.pairs);
        add_all(&mut self.genera, other.genera);
        self.definitions += other.definitions;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CooccurrenceEntry {
    pub a: String,
    pub b: String,
    pub count: usize,
    pub fraction: f64,
}

/// Feature pairs appearing in the same definition, with `a < b`.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct CooccurrenceTable {
    pub pairs: Vec<CooccurrenceEntry>,
    pub total: usize,
}

impl CooccurrenceTable {
    pub fn from_counts(counts: &FeatureCounts, min_count: usize) -> Self {
        let total = counts.definitions;
        let mut pairs: Vec<CooccurrenceEntry> = counts
            .pairs
            .iter()
            .filter(|(_, &c)| c >= min_count.max(1))
            .map(|((a, b), &c)| CooccurrenceEntry {
                a: a.clone(),
                b: b.clone(),
                count: c,
                fraction: if total == 0 { 0.0 } else { c as f64 / total as f64 },
            })
            .collect();
        pairs.sort_by(|x, y| y.count.cmp(&x.count).then_with(|| (&x.a, &x.b).cmp(&(&y.a, &y.b))));
        CooccurrenceTable { pairs, total }
    }

    /// Count for an unordered pair.
    pub fn count(&self, a: &str, b: &str) -> usize {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.pairs
            .iter()
            .find(|p| p.a == a && p.b == b)
            .map_or(0, |p| p.count)
    }
}

pub fn genus_distribution(defs: &[DefinitionRecord]) -> FreqTable {
    let c = FeatureCounts::from_definitions(defs);
    FreqTable::from_counts(&c.genera, c.definitions)
}

/// Per-definition feature frequency: a feature repeated in one definition counts once.
pub fn feature_distribution(defs: &[DefinitionRecord]) -> FreqTable {
    let c = FeatureCounts::from_definitions(defs);
    FreqTable::from_counts(&c.features, c.definitions)
}

pub fn feature_cooccurrence(defs: &[DefinitionRecord], min_count: usize) -> CooccurrenceTable {
    CooccurrenceTable::from_counts(&FeatureCounts::from_definitions(defs), min_count)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn def(genus: &str, features: &[&str]) -> DefinitionRecord {
        DefinitionRecord {
            doc_id: "d".into(),
            sent_index: 0,
            definiendum: "x".into(),
            definitor: "is".into(),
            definition_text: format!("x is {genus}"),
            genus: genus.into(),
            features: features.iter().map(|s| s.to_string()).collect(),
            rule_id: "def-be".into(),
        }
    }

    #[test]
    fn genera_hand_count() {
        let defs = vec![def("A", &[]), def("A", &[]), def("B", &[]), def("C", &[])];
        let t = genus_distribution(&defs);
        let rows: Vec<(&str, usize, f64)> = t.entries.iter().map(|e| (e.key.as_str(), e.count, e.fraction)).collect();
        assert_eq!(rows, vec![("A", 2, 0.5), ("B", 1, 0.25), ("C", 1, 0.25)]);
        assert_eq!(t.total, 4);
    }

    #[test]
    fn single_genus_and_empty() {
        let t = genus_distribution(&[def("field", &[]), def("field", &[])]);
        assert_eq!(t.entries[0].fraction, 1.0);
        let e = genus_distribution(&[]);
        assert!(e.is_empty() && e.total == 0);
    }

    #[test]
    fn branch_at_fifteen_percent() {
        let mut defs: Vec<_> = (0..17).map(|i| def(&format!("g{i}"), &[])).collect();
        defs.extend((0..3).map(|_| def("branch of computer science", &[])));
        let t = genus_distribution(&defs);
        assert!((t.get("branch of computer science").unwrap().fraction - 0.15).abs() < 1e-12);
    }

    #[test]
    fn repeated_feature_counts_once() {
        let t = feature_distribution(&[def("g", &["data", "data"]), def("g", &[])]);
        assert_eq!(t.get("data").unwrap().count, 1);
        assert_eq!(t.get("data").unwrap().fraction, 0.5);
    }

    #[test]
    fn three_definition_pairs() {
        let defs = vec![def("g", &["a", "b"]), def("g", &["a", "b", "c"]), def("g", &["b", "c"])];
        let t = feature_cooccurrence(&defs, 1);
        assert_eq!(t.count("a", "b"), 2);
        assert_eq!(t.count("c", "b"), 2);
        assert_eq!(t.count("a", "c"), 1);
        assert_eq!(feature_cooccurrence(&defs, 2).pairs.len(), 2);
    }

    #[test]
    fn entropy_of_uniform() {
        let t = genus_distribution(&[def("a", &[]), def("b", &[]), def("c", &[]), def("d", &[])]);
        assert!((t.entropy() - 2.0).abs() < 1e-12);
    }
}
