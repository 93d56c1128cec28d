use serde::Serialize;

use super::EvaluationError;

/// Retrieved and relevant counts of one rule set on one observation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RuleEvaluation {
    pub rule_set_id: String,
    pub observation: String,
    pub retrieved: usize,
    pub relevant: usize,
    /// `None` when nothing was retrieved.
    pub precision: Option<f64>,
}

impl RuleEvaluation {
    pub fn from_counts(
        rule_set_id: impl Into<String>,
        observation: impl Into<String>,
        retrieved: usize,
        relevant: usize,
    ) -> Result<Self, EvaluationError> {
        let observation = observation.into();
        if relevant > retrieved {
            return Err(EvaluationError::CountMismatch {
                observation,
                retrieved,
                relevant,
            });
        }
        Ok(RuleEvaluation {
            rule_set_id: rule_set_id.into(),
            observation,
            retrieved,
            relevant,
            precision: (retrieved > 0).then(|| relevant as f64 / retrieved as f64),
        })
    }
}

/// Total relevant over total retrieved.
pub fn weighted_precision(evals: &[RuleEvaluation]) -> Result<f64, EvaluationError> {
    if evals.is_empty() {
        return Err(EvaluationError::NoObservations);
    }
    let retrieved: usize = evals.iter().map(|e| e.retrieved).sum();
    let relevant: usize = evals.iter().map(|e| e.relevant).sum();
    if retrieved == 0 {
        return Err(EvaluationError::NothingRetrieved);
    }
    Ok(relevant as f64 / retrieved as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvaluationSummary {
    pub rule_set_id: String,
    pub per_observation: Vec<RuleEvaluation>,
    pub mean_retrieved: f64,
    pub mean_relevant: f64,
    /// `None` when no observation retrieved anything.
    pub weighted_precision: Option<f64>,
}

impl EvaluationSummary {
    pub fn new(rule_set_id: impl Into<String>, per_observation: Vec<RuleEvaluation>) -> Self {
        let n = per_observation.len();
        let mean = |f: fn(&RuleEvaluation) -> usize| {
            if n == 0 {
                0.0
            } else {
                per_observation.iter().map(f).sum::<usize>() as f64 / n as f64
            }
        };
        let mean_retrieved = mean(|e| e.retrieved);
        let mean_relevant = mean(|e| e.relevant);
        EvaluationSummary {
            rule_set_id: rule_set_id.into(),
            weighted_precision: weighted_precision(&per_observation).ok(),
            per_observation,
            mean_retrieved,
            mean_relevant,
        }
    }

    /// Builds a summary from `(observation, retrieved, relevant)` rows.
    pub fn from_counts<S: AsRef<str>>(
        rule_set_id: &str,
        rows: &[(S, usize, usize)],
    ) -> Result<Self, EvaluationError> {
        let evals = rows
            .iter()
            .map(|(o, ret, rel)| RuleEvaluation::from_counts(rule_set_id, o.as_ref(), *ret, *rel))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(rule_set_id, evals))
    }

    pub fn total_retrieved(&self) -> usize {
        self.per_observation.iter().map(|e| e.retrieved).sum()
    }

    pub fn total_relevant(&self) -> usize {
        self.per_observation.iter().map(|e| e.relevant).sum()
    }
}
