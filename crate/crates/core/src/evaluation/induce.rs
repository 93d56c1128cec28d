use std::collections::BTreeMap;

use serde::Serialize;

use crate::analytics::FreqTable;
use crate::corpus_io::{tag_heuristic, Lexicon, Sentence, Upos};
use crate::extraction::parse_genus;
use crate::rule_engine::Term;

/// Below this many definitions the induced statistics are flagged as thin.
pub const MIN_INDUCTION_ENTRIES: usize = 600;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InductionReport {
    pub entries: usize,
    pub skipped: usize,
    pub definitors: FreqTable,
    pub genus_patterns: FreqTable,
    pub between: FreqTable,
    pub warnings: Vec<String>,
}

struct Observed {
    definitor: String,
    genus_pattern: Option<String>,
    between: Option<String>,
}

fn observe(sentence: &Sentence, term: &Term) -> Option<Observed> {
    let toks = &sentence.tokens;
    let (p, len) = (0..toks.len()).find_map(|p| term.bindings_at(toks, p).first().map(|&l| (p, l)))?;
    let after = p + len;
    let v = (after..toks.len()).find(|&i| matches!(toks[i].upos, Upos::Aux | Upos::Verb))?;
    let stop = |t: &crate::corpus_io::Token| {
        matches!(t.upos, Upos::Det | Upos::Noun | Upos::Adj | Upos::Propn | Upos::Num | Upos::Punct)
    };
    let mut end = v;
    while end < toks.len() && end - v < 3 && !stop(&toks[end]) {
        end += 1;
    }
    let between = (v > after).then(|| sentence.words(after..v)).filter(|s| !s.is_empty());
    let genus_pattern = parse_genus(sentence, end).ok().map(|g| {
        let start = (end..g.range.start)
            .find(|&i| toks[i].upos != Upos::Det)
            .unwrap_or(g.range.start);
        toks[start..g.range.end]
            .iter()
            .map(|t| t.upos.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    });
    Some(Observed {
        definitor: sentence.words(v..end),
        genus_pattern,
        between,
    })
}

/// Tallies definitors, genus POS patterns and words between term and
/// definitor over `(term, sentence)` pairs.
pub fn induce_rule_statistics<T: AsRef<str>, S: AsRef<str>>(entries: &[(T, S)], lexicon: &Lexicon) -> InductionReport {
    let mut definitors = BTreeMap::new();
    let mut patterns = BTreeMap::new();
    let mut between = BTreeMap::new();
    let mut skipped = 0;
    let mut used = 0;
    for (term, text) in entries {
        let observed = Term::new(term.as_ref())
            .ok()
            .and_then(|t| observe(&tag_heuristic(text.as_ref(), lexicon), &t));
        let Some(o) = observed else {
            skipped += 1;
            continue;
        };
        used += 1;
        *definitors.entry(o.definitor).or_insert(0) += 1;
        if let Some(g) = o.genus_pattern {
            *patterns.entry(g).or_insert(0) += 1;
        }
        if let Some(b) = o.between {
            *between.entry(b).or_insert(0) += 1;
        }
    }
    let mut warnings = Vec::new();
    if entries.len() < MIN_INDUCTION_ENTRIES {
        warnings.push(format!(
            "only {} definitions supplied; at least {MIN_INDUCTION_ENTRIES} are needed for stable rule statistics",
            entries.len()
        ));
    }
    InductionReport {
        entries: entries.len(),
        skipped,
        definitors: FreqTable::from_counts(&definitors, used),
        genus_patterns: FreqTable::from_counts(&patterns, used),
        between: FreqTable::from_counts(&between, used),
        warnings,
    }
}
