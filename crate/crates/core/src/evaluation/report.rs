use super::metrics::EvaluationSummary;
use super::EvaluationError;

fn number(x: f64, decimals: usize, decimal_comma: bool) -> String {
    let s = format!("{x:.decimals$}");
    if decimal_comma {
        s.replace('.', ",")
    } else {
        s
    }
}

/// Observation × rule-set table of retrieved, relevant and precision, with a
/// closing MEAN row (mean counts, weighted precision).
///
/// Precision is shown with three decimals; an undefined precision prints as
/// zero. With `decimal_comma` the separator becomes `;` and decimals use `,`.
pub fn table_report(summaries: &[EvaluationSummary], decimal_comma: bool) -> Result<String, EvaluationError> {
    let first = summaries.first().ok_or(EvaluationError::NoObservations)?;
    let observations: Vec<&str> = first.per_observation.iter().map(|e| e.observation.as_str()).collect();
    for s in summaries {
        let obs: Vec<&str> = s.per_observation.iter().map(|e| e.observation.as_str()).collect();
        if obs != observations {
            return Err(EvaluationError::MismatchedObservations(s.rule_set_id.clone()));
        }
    }
    let mut w = csv::WriterBuilder::new()
        .delimiter(if decimal_comma { b';' } else { b',' })
        .from_writer(Vec::new());
    let mut header = vec!["observation".to_string()];
    for s in summaries {
        for col in ["retrieved", "relevant", "precision"] {
            header.push(format!("{} {col}", s.rule_set_id));
        }
    }
    let csv_err = |e: csv::Error| EvaluationError::Csv {
        line: 0,
        reason: e.to_string(),
    };
    w.write_record(&header).map_err(csv_err)?;
    for (i, obs) in observations.iter().enumerate() {
        let mut row = vec![obs.to_string()];
        for s in summaries {
            let e = &s.per_observation[i];
            row.push(e.retrieved.to_string());
            row.push(e.relevant.to_string());
            row.push(number(e.precision.unwrap_or(0.0), 3, decimal_comma));
        }
        w.write_record(&row).map_err(csv_err)?;
    }
    let mut mean = vec!["MEAN".to_string()];
    for s in summaries {
        mean.push(number(s.mean_retrieved, 0, decimal_comma));
        mean.push(number(s.mean_relevant, 0, decimal_comma));
        mean.push(number(s.weighted_precision.unwrap_or(0.0), 3, decimal_comma));
    }
    w.write_record(&mean).map_err(csv_err)?;
    let bytes = w.into_inner().map_err(|e| EvaluationError::Csv {
        line: 0,
        reason: e.to_string(),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
