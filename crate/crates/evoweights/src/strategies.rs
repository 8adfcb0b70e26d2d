//! Row-level view of the dynamic: how much each alternative's fitness leans
//! on each feature, and the per-row analogues of the incentive parts.
//!
//! Averaging either part over the rows recovers the corresponding column
//! incentive from [`crate::dynamics`], so these matrices explain which
//! alternatives drive the aggregate movement.

use ndarray::{Array1, Array2, ArrayView1};

use crate::core::{NormalizedMatrix, WeightVector};
use crate::error::{Error, Result};

fn check_dims(phi: &NormalizedMatrix, gamma: &WeightVector, context: &'static str) -> Result<()> {
    if gamma.len() != phi.n_cols() {
        return Err(Error::DimensionMismatch {
            context,
            left: phi.n_cols(),
            right: gamma.len(),
        });
    }
    Ok(())
}

/// Weighted fitness per row: `r_i = sum_j gamma_j phi_ij`. Lies in `[0, 1]`.
pub fn global_fitness(phi: &NormalizedMatrix, gamma: &WeightVector) -> Result<Array1<f64>> {
    check_dims(phi, gamma, "global_fitness")?;
    Ok(phi.values().dot(gamma.weights()))
}

/// Share of each row's fitness carried by each feature; rows sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct DependenceMatrix {
    shares: Array2<f64>,
}

impl DependenceMatrix {
    pub fn values(&self) -> &Array2<f64> {
        &self.shares
    }

    pub fn row(&self, i: usize) -> ArrayView1<'_, f64> {
        self.shares.row(i)
    }

    pub fn n_rows(&self) -> usize {
        self.shares.nrows()
    }

    pub fn n_cols(&self) -> usize {
        self.shares.ncols()
    }
}

/// `mu_ij = gamma_j phi_ij / r_i`. Rows with zero fitness have no shares to
/// distribute and are rejected.
pub fn dependence(phi: &NormalizedMatrix, gamma: &WeightVector) -> Result<DependenceMatrix> {
    check_dims(phi, gamma, "dependence")?;
    let fitness = global_fitness(phi, gamma)?;
    let mut shares = phi.values().clone();
    for (i, mut row) in shares.rows_mut().into_iter().enumerate() {
        let r = fitness[i];
        if r == 0.0 {
            return Err(Error::ZeroFitnessRow { row: i });
        }
        row.zip_mut_with(gamma.weights(), |v, &g| *v = g * *v / r);
    }
    debug_assert!(
        shares
            .rows()
            .into_iter()
            .all(|row| (row.sum() - 1.0).abs() <= 1e-12),
        "dependence rows must sum to one"
    );
    Ok(DependenceMatrix { shares })
}

/// Per-row dominance incentive: `gamma_j (phi_ij - 1/2)`.
pub fn gene_strategy(phi: &NormalizedMatrix, gamma: &WeightVector) -> Result<Array2<f64>> {
    check_dims(phi, gamma, "gene_strategy")?;
    let mut out = phi.values().clone();
    for mut row in out.rows_mut() {
        row.zip_mut_with(gamma.weights(), |v, &g| *v = g * (*v - 0.5));
    }
    Ok(out)
}

/// Per-row balance incentive: `-2 (gamma_j phi_ij - r_i / m)`.
///
/// Written without dividing by `r_i`, so rows with zero fitness contribute a
/// zero row instead of failing; where `r_i > 0` this equals
/// `-2 r_i (mu_ij - 1/m)` in terms of the dependence shares.
pub fn organism_strategy(phi: &NormalizedMatrix, gamma: &WeightVector) -> Result<Array2<f64>> {
    check_dims(phi, gamma, "organism_strategy")?;
    let fitness = global_fitness(phi, gamma)?;
    let m = phi.n_cols() as f64;
    let mut out = phi.values().clone();
    for (i, mut row) in out.rows_mut().into_iter().enumerate() {
        let target = fitness[i] / m;
        row.zip_mut_with(gamma.weights(), |v, &g| *v = -2.0 * (g * *v - target));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::column_means;
    use crate::dynamics::{delta_bal, delta_dom};
    use approx::assert_abs_diff_eq;

    #[test]
    fn flat_payoffs_spread_dependence_evenly() {
        let phi = NormalizedMatrix::from_rows(vec![vec![1.0; 4], vec![1.0; 4]]).unwrap();
        let gamma = WeightVector::uniform(4).unwrap();

        let fitness = global_fitness(&phi, &gamma).unwrap();
        assert_abs_diff_eq!(fitness[0], 1.0, epsilon = 1e-15);

        let mu = dependence(&phi, &gamma).unwrap();
        for &v in mu.values().iter() {
            assert_abs_diff_eq!(v, 0.25, epsilon = 1e-15);
        }

        let org = organism_strategy(&phi, &gamma).unwrap();
        for &v in org.iter() {
            assert_abs_diff_eq!(v, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn a_single_supporting_feature_takes_the_whole_share() {
        let phi = NormalizedMatrix::from_rows(vec![vec![1.0, 0.0]]).unwrap();
        let gamma = WeightVector::uniform(2).unwrap();

        let mu = dependence(&phi, &gamma).unwrap();
        assert_eq!(mu.row(0).to_vec(), vec![1.0, 0.0]);

        let org = organism_strategy(&phi, &gamma).unwrap();
        assert_abs_diff_eq!(org[[0, 0]], -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(org[[0, 1]], 0.5, epsilon = 1e-15);

        let gene = gene_strategy(&phi, &gamma).unwrap();
        assert_abs_diff_eq!(gene[[0, 0]], 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(gene[[0, 1]], -0.25, epsilon = 1e-15);
    }

    #[test]
    fn zero_fitness_rows_are_rejected_by_dependence_only() {
        let phi = NormalizedMatrix::from_rows(vec![vec![0.0, 0.0], vec![1.0, 0.5]]).unwrap();
        let gamma = WeightVector::uniform(2).unwrap();

        assert_eq!(
            dependence(&phi, &gamma).unwrap_err(),
            Error::ZeroFitnessRow { row: 0 }
        );

        let org = organism_strategy(&phi, &gamma).unwrap();
        assert_eq!(org.row(0).to_vec(), vec![0.0, 0.0]);
    }

    #[test]
    fn dependence_rows_sum_to_one() {
        let phi = NormalizedMatrix::from_rows(vec![
            vec![0.2, 0.9, 0.4],
            vec![0.7, 0.1, 0.8],
            vec![0.5, 0.5, 0.5],
        ])
        .unwrap();
        let gamma = WeightVector::new(vec![0.2, 0.5, 0.3]).unwrap();
        let mu = dependence(&phi, &gamma).unwrap();
        for row in mu.values().rows() {
            assert_abs_diff_eq!(row.sum(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn row_averages_recover_the_column_incentives() {
        let phi = NormalizedMatrix::from_rows(vec![
            vec![0.2, 0.9, 0.4],
            vec![0.7, 0.1, 0.8],
            vec![0.0, 0.6, 0.3],
        ])
        .unwrap();
        let gamma = WeightVector::new(vec![0.5, 0.2, 0.3]).unwrap();
        let means = column_means(&phi);
        let n = phi.n_rows() as f64;

        let gene = gene_strategy(&phi, &gamma).unwrap();
        let dom = delta_dom(&gamma, &means).unwrap();
        for j in 0..3 {
            assert_abs_diff_eq!(gene.column(j).sum() / n, dom[j], epsilon = 1e-15);
        }

        let org = organism_strategy(&phi, &gamma).unwrap();
        let bal = delta_bal(&gamma, &means).unwrap();
        for j in 0..3 {
            assert_abs_diff_eq!(org.column(j).sum() / n, bal[j], epsilon = 1e-15);
        }
    }

    #[test]
    fn organism_strategy_matches_its_share_form() {
        let phi = NormalizedMatrix::from_rows(vec![vec![0.4, 0.8], vec![0.9, 0.3]]).unwrap();
        let gamma = WeightVector::new(vec![0.6, 0.4]).unwrap();
        let org = organism_strategy(&phi, &gamma).unwrap();
        let mu = dependence(&phi, &gamma).unwrap();
        let r = global_fitness(&phi, &gamma).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expected = -2.0 * r[i] * (mu.values()[[i, j]] - 0.5);
                assert_abs_diff_eq!(org[[i, j]], expected, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let phi = NormalizedMatrix::from_rows(vec![vec![0.4, 0.8]]).unwrap();
        let gamma = WeightVector::uniform(3).unwrap();
        assert!(matches!(
            global_fitness(&phi, &gamma).unwrap_err(),
            Error::DimensionMismatch { .. }
        ));
    }
}
