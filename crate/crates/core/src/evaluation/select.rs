use std::collections::BTreeSet;

use serde::Serialize;

use super::metrics::EvaluationSummary;

pub const DEFAULT_PRECISION_FLOOR: f64 = 0.65;

/// A rule set under comparison together with its evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Candidate {
    pub id: String,
    pub rule_ids: BTreeSet<String>,
    pub summary: EvaluationSummary,
}

impl Candidate {
    pub fn new<S: AsRef<str>>(id: impl Into<String>, rule_ids: &[S], summary: EvaluationSummary) -> Self {
        Candidate {
            id: id.into(),
            rule_ids: rule_ids.iter().map(|s| s.as_ref().to_string()).collect(),
            summary,
        }
    }

    fn precision(&self) -> f64 {
        self.summary.weighted_precision.unwrap_or(0.0)
    }

    fn relevant(&self) -> usize {
        self.summary.total_relevant()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Selection {
    pub selected: Option<Candidate>,
    pub diagnostics: Vec<String>,
}

fn best_by_relevant<'a>(cands: impl Iterator<Item = &'a Candidate>) -> Option<&'a Candidate> {
    cands.max_by(|a, b| {
        a.relevant()
            .cmp(&b.relevant())
            .then(a.precision().total_cmp(&b.precision()))
            .then_with(|| b.id.cmp(&a.id))
    })
}

/// Picks a rule set: drop candidates under `floor`; among exclusive
/// candidates keep the one with most relevant results; otherwise prefer a
/// union candidate that clears the floor and is at least as productive as
/// each of its parts.
pub fn rank_and_select(candidates: &[Candidate], floor: f64, exclusive: bool) -> Selection {
    let mut diagnostics = Vec::new();
    let survivors: Vec<&Candidate> = candidates
        .iter()
        .filter(|c| {
            let keep = c.summary.weighted_precision.is_some_and(|p| p >= floor);
            if !keep {
                diagnostics.push(format!(
                    "{}: precision {} below floor {floor}",
                    c.id,
                    c.summary
                        .weighted_precision
                        .map_or("undefined".to_string(), |p| format!("{p:.3}"))
                ));
            }
            keep
        })
        .collect();
    if survivors.is_empty() {
        diagnostics.push("no candidate reaches the precision floor".into());
        return Selection {
            selected: None,
            diagnostics,
        };
    }
    if exclusive {
        return Selection {
            selected: best_by_relevant(survivors.into_iter()).cloned(),
            diagnostics,
        };
    }
    let unions = survivors.iter().copied().filter(|u| {
        let parts: Vec<&Candidate> = candidates
            .iter()
            .filter(|c| c.rule_ids.len() < u.rule_ids.len() && c.rule_ids.is_subset(&u.rule_ids))
            .collect();
        let covered: BTreeSet<&String> = parts.iter().flat_map(|c| &c.rule_ids).collect();
        parts.len() >= 2
            && covered.len() == u.rule_ids.len()
            && parts.iter().all(|p| u.relevant() >= p.relevant())
    });
    let best_union = unions.max_by(|a, b| {
        a.rule_ids
            .len()
            .cmp(&b.rule_ids.len())
            .then(a.relevant().cmp(&b.relevant()))
            .then_with(|| b.id.cmp(&a.id))
    });
    let selected = match best_union {
        Some(u) => Some(u),
        None => best_by_relevant(survivors.into_iter()),
    };
    Selection {
        selected: selected.cloned(),
        diagnostics,
    }
}
