//! Scalar summaries of how unevenly the equilibrium spreads its weight.
//!
//! The impact norm measures the distance of the equilibrium from the
//! barycenter, weighted by column means; its qualified variant recomputes the
//! column means over only the strongest rows. Feature impact scales each
//! equilibrium weight by the spread of its column.

use ndarray::Array1;

use crate::core::{ColumnMeans, NormalizedMatrix, WeightVector};
use crate::error::{Error, Result};

fn check_dims(m: usize, gamma: &WeightVector, context: &'static str) -> Result<()> {
    if gamma.len() != m {
        return Err(Error::DimensionMismatch {
            context,
            left: m,
            right: gamma.len(),
        });
    }
    Ok(())
}

/// `m/(m-1) * sum_j |gamma_j - 1/m| * mean_j`.
///
/// Zero exactly when the weights sit at the barycenter (or every deviating
/// column has mean zero); at most one when both factors are maximal.
pub fn impact_norm(means: &ColumnMeans, gamma: &WeightVector) -> Result<f64> {
    check_dims(means.len(), gamma, "impact_norm")?;
    let m = means.len() as f64;
    let uniform = 1.0 / m;
    let sum: f64 = gamma
        .weights()
        .iter()
        .zip(means.values().iter())
        .map(|(&g, &mu)| (g - uniform).abs() * mu)
        .sum();
    Ok(m / (m - 1.0) * sum)
}

/// Rows whose mean payoff puts them in the top tenth (rounded up, at least
/// one row). Equal means are broken toward the lower row index.
pub fn qualified_cohort(phi: &NormalizedMatrix) -> Vec<usize> {
    let n = phi.n_rows();
    let take = (n as f64 / 10.0).ceil() as usize;
    let m = phi.n_cols() as f64;
    let row_means: Vec<f64> = phi
        .values()
        .rows()
        .into_iter()
        .map(|r| r.sum() / m)
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    // stable sort: ties keep ascending index order
    order.sort_by(|&a, &b| row_means[b].partial_cmp(&row_means[a]).unwrap());
    let mut cohort: Vec<usize> = order.into_iter().take(take).collect();
    cohort.sort_unstable();
    cohort
}

/// Impact norm with column means taken over the qualified cohort only.
pub fn qualified_impact_norm(phi: &NormalizedMatrix, gamma: &WeightVector) -> Result<f64> {
    check_dims(phi.n_cols(), gamma, "qualified_impact_norm")?;
    let cohort = qualified_cohort(phi);
    let k = cohort.len() as f64;
    let means: Vec<f64> = (0..phi.n_cols())
        .map(|j| {
            let sum: f64 = cohort.iter().map(|&i| phi.values()[[i, j]]).sum();
            (sum / k).clamp(0.0, 1.0)
        })
        .collect();
    let cohort_means = ColumnMeans::new(means).expect("cohort means stay in [0, 1]");
    impact_norm(&cohort_means, gamma)
}

/// Column spread scaled by weight: `(max_i phi_ij - min_i phi_ij) * gamma_j`.
/// Constant columns score zero no matter their weight.
pub fn feature_impact(phi: &NormalizedMatrix, gamma: &WeightVector) -> Result<Array1<f64>> {
    check_dims(phi.n_cols(), gamma, "feature_impact")?;
    let spreads = phi.values().columns().into_iter().map(|c| {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &v in c.iter() {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        hi - lo
    });
    Ok(spreads
        .zip(gamma.weights().iter())
        .map(|(s, &g)| s * g)
        .collect())
}
