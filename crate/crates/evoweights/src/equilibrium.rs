//! Closed form for the rest point of the dynamic and a residual measure.
//!
//! The interior fixed point weights each feature by the reciprocal of
//! `mean_j + 1/2`, normalized to the simplex. Features with smaller column
//! means therefore end up with strictly larger weights, equal means tie, and
//! every weight is at least `1 / (3m)`.

use crate::core::{ColumnMeans, WeightVector};
use crate::dynamics::delta;
use crate::error::Result;

/// The unique interior rest point for the given column means.
pub fn fixed_point(means: &ColumnMeans) -> WeightVector {
    let inverse: Vec<f64> = means.values().iter().map(|&mu| 1.0 / (mu + 0.5)).collect();
    // mean_j + 1/2 is in [1/2, 3/2], so the sum of reciprocals is positive.
    WeightVector::new(inverse).expect("reciprocals of means + 1/2 are positive and finite")
}

/// How far `gamma` is from being a rest point: the largest deviation of any
/// incentive from their weighted average, `max_j |delta_j - sum_s gamma_s delta_s|`.
/// Zero exactly at a fixed point.
pub fn fixed_point_residual(gamma: &WeightVector, means: &ColumnMeans) -> Result<f64> {
    let d = delta(gamma, means)?;
    let avg = gamma.weights().dot(d.total());
    Ok(d.total()
        .iter()
        .map(|&dj| (dj - avg).abs())
        .fold(0.0, f64::max))
}
