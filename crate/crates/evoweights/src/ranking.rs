//! Scoring, ordering, and the Pareto cross-check.
//!
//! Alternatives are scored by their weighted fitness and sorted best first.
//! Because every weight in an interior vector is positive, a best-scoring row
//! can never be strictly dominated; `certify_scalarization` verifies that
//! claim against an exhaustive dominance scan and produces the offending pair
//! when it fails (which can happen once weights sit on the boundary).

use ndarray::ArrayView1;

use crate::core::{NormalizedMatrix, WeightVector};
use crate::error::Result;
use crate::strategies::global_fitness;

/// Whether large or small payoffs win.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Objective {
    #[default]
    Maximize,
    Minimize,
}

/// Scores and the derived order for one weight vector.
#[derive(Debug, Clone, PartialEq)]
pub struct RankReport {
    scores: Vec<f64>,
    order: Vec<usize>,
    pareto: Vec<bool>,
    weights: WeightVector,
    objective: Objective,
}

impl RankReport {
    /// Score of row `i`, in original row order.
    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    /// Row indices from best to worst; tied scores keep ascending index order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `pareto()[i]` is true when row `i` is not strictly dominated.
    pub fn pareto(&self) -> &[bool] {
        &self.pareto
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }
}

/// Scores every row with the given weights and sorts best first.
pub fn rank(
    phi: &NormalizedMatrix,
    gamma: &WeightVector,
    objective: Objective,
) -> Result<RankReport> {
    let scores = global_fitness(phi, gamma)?.to_vec();
    let mut order: Vec<usize> = (0..scores.len()).collect();
    // stable sort keeps ties in ascending row order
    order.sort_by(|&a, &b| match objective {
        Objective::Maximize => scores[b].partial_cmp(&scores[a]).unwrap(),
        Objective::Minimize => scores[a].partial_cmp(&scores[b]).unwrap(),
    });
    let front = pareto_front(phi, objective);
    let mut pareto = vec![false; scores.len()];
    for i in front {
        pareto[i] = true;
    }
    Ok(RankReport {
        scores,
        order,
        pareto,
        weights: gamma.clone(),
        objective,
    })
}

// a beats b in every component, strictly somewhere
fn dominates(a: ArrayView1<'_, f64>, b: ArrayView1<'_, f64>, objective: Objective) -> bool {
    let mut strict = false;
    for (&x, &y) in a.iter().zip(b.iter()) {
        let (better_eq, better) = match objective {
            Objective::Maximize => (x >= y, x > y),
            Objective::Minimize => (x <= y, x < y),
        };
        if !better_eq {
            return false;
        }
        strict |= better;
    }
    strict
}

/// Indices of all non-dominated rows, ascending, by exhaustive pairwise scan.
pub fn pareto_front(phi: &NormalizedMatrix, objective: Objective) -> Vec<usize> {
    let values = phi.values();
    let n = values.nrows();
    (0..n)
        .filter(|&i| (0..n).all(|k| k == i || !dominates(values.row(k), values.row(i), objective)))
        .collect()
}

/// Outcome of checking the best-scoring rows against the Pareto front.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certification {
    Certified,
    /// `best_row` had the best score yet is strictly dominated by `dominated_by`.
    Refuted {
        best_row: usize,
        dominated_by: usize,
    },
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified)
    }
}

/// Confirms that every best-scoring row is on the Pareto front.
///
/// The guarantee assumes interior weights; with zero weights a dominated row
/// can still tie for the best score, and the refutation names the pair.
pub fn certify_scalarization(
    phi: &NormalizedMatrix,
    gamma: &WeightVector,
    objective: Objective,
) -> Result<Certification> {
    let report = rank(phi, gamma, objective)?;
    let best = report.scores()[report.order()[0]];
    let values = phi.values();
    for &i in report.order() {
        if report.scores()[i] != best {
            break;
        }
        if !report.pareto()[i] {
            let culprit = (0..values.nrows())
                .find(|&k| k != i && dominates(values.row(k), values.row(i), objective))
                .expect("a row off the front has a dominating row");
            return Ok(Certification::Refuted {
                best_row: i,
                dominated_by: culprit,
            });
        }
    }
    Ok(Certification::Certified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn incomparable_rows_are_all_on_the_front() {
        let phi = NormalizedMatrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(pareto_front(&phi, Objective::Maximize), vec![0, 1]);
        assert_eq!(pareto_front(&phi, Objective::Minimize), vec![0, 1]);
    }

    #[test]
    fn dominated_rows_are_dropped_per_direction() {
        let phi = NormalizedMatrix::from_rows(vec![vec![1.0, 1.0], vec![0.5, 0.5]]).unwrap();
        assert_eq!(pareto_front(&phi, Objective::Maximize), vec![0]);
        assert_eq!(pareto_front(&phi, Objective::Minimize), vec![1]);
    }

    #[test]
    fn duplicate_rows_do_not_dominate_each_other() {
        let phi = NormalizedMatrix::from_rows(vec![vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        assert_eq!(pareto_front(&phi, Objective::Maximize), vec![0, 1]);
        let gamma = WeightVector::uniform(2).unwrap();
        let cert = certify_scalarization(&phi, &gamma, Objective::Maximize).unwrap();
        assert!(cert.is_certified());
    }

    #[test]
    fn ranking_sorts_best_first_with_stable_ties() {
        let phi = NormalizedMatrix::from_rows(vec![
            vec![0.2, 0.2],
            vec![0.8, 0.8],
            vec![0.5, 0.5],
            vec![0.8, 0.8],
        ])
        .unwrap();
        let gamma = WeightVector::uniform(2).unwrap();

        let report = rank(&phi, &gamma, Objective::Maximize).unwrap();
        assert_eq!(report.order(), &[1, 3, 2, 0]);
        assert_abs_diff_eq!(report.scores()[1], 0.8, epsilon = 1e-15);

        let report = rank(&phi, &gamma, Objective::Minimize).unwrap();
        assert_eq!(report.order(), &[0, 2, 1, 3]);
    }

    #[test]
    fn single_row_is_trivially_first_and_undominated() {
        let phi = NormalizedMatrix::from_rows(vec![vec![0.3, 0.9]]).unwrap();
        let gamma = WeightVector::uniform(2).unwrap();
        let report = rank(&phi, &gamma, Objective::Maximize).unwrap();
        assert_eq!(report.order(), &[0]);
        assert_eq!(report.pareto(), &[true]);
        assert!(certify_scalarization(&phi, &gamma, Objective::Maximize)
            .unwrap()
            .is_certified());
    }

    #[test]
    fn interior_weights_certify() {
        let phi = NormalizedMatrix::from_rows(vec![
            vec![0.9, 0.1, 0.5],
            vec![0.2, 0.8, 0.6],
            vec![0.4, 0.4, 0.4],
        ])
        .unwrap();
        let gamma = WeightVector::new(vec![0.2, 0.3, 0.5]).unwrap();
        for objective in [Objective::Maximize, Objective::Minimize] {
            assert!(certify_scalarization(&phi, &gamma, objective)
                .unwrap()
                .is_certified());
        }
    }

    #[test]
    fn boundary_weights_can_be_refuted_with_a_witness() {
        // Zero weight on the second feature hides that row 1 dominates row 0.
        let phi = NormalizedMatrix::from_rows(vec![vec![1.0, 0.0], vec![1.0, 1.0]]).unwrap();
        let gamma = WeightVector::new(vec![1.0, 0.0]).unwrap();
        let cert = certify_scalarization(&phi, &gamma, Objective::Maximize).unwrap();
        assert_eq!(
            cert,
            Certification::Refuted {
                best_row: 0,
                dominated_by: 1
            }
        );
    }
}
