use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GiniError {
    #[error("Gini index of an empty list is undefined")]
    Empty,
    #[error("Gini index is undefined when every count is zero")]
    AllZero,
    #[error("count at position {0} is negative")]
    Negative(usize),
    #[error("count at position {0} is not a finite number")]
    NotFinite(usize),
}

/// Gini index `Σ_i Σ_j |x_i − x_j| / (2 n Σ x)`, without small-sample correction.
///
/// Evaluated in `O(n log n)` through the sorted form
/// `Σ_i (2i − n − 1) x_(i) / (n Σ x)`.
pub fn gini_index(counts: &[f64]) -> Result<f64, GiniError> {
    if counts.is_empty() {
        return Err(GiniError::Empty);
    }
    for (i, &x) in counts.iter().enumerate() {
        if !x.is_finite() {
            return Err(GiniError::NotFinite(i));
        }
        if x < 0.0 {
            return Err(GiniError::Negative(i));
        }
    }
    let sum: f64 = counts.iter().sum();
    if sum == 0.0 {
        return Err(GiniError::AllZero);
    }
    let mut sorted = counts.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let weighted: f64 = sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| (2.0 * (i as f64 + 1.0) - n - 1.0) * x)
        .sum();
    Ok((weighted / (n * sum)).clamp(0.0, 1.0))
}
