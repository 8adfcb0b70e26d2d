//! The discrete replicator-style dynamic on the weight simplex.
//!
//! Each feature `j` receives an incentive `delta_j` made of two parts: a
//! dominance term `gamma_j (mean_j - 1/2)` rewarding strong columns, and a
//! balance term `-2 (gamma_j mean_j - avg_s gamma_s mean_s)` pulling the
//! weighted payoffs toward their average. One step rescales each weight by
//! `1 + delta_j` and renormalizes, which is well defined only while every
//! factor stays positive.

use ndarray::Array1;

use crate::core::{ColumnMeans, DeltaVector, WeightVector};
use crate::error::{Error, Result};

/// Stop and bookkeeping parameters for [`iterate`].
#[derive(Debug, Clone, PartialEq)]
pub struct IterationConfig {
    max_iterations: usize,
    tolerance: f64,
    record_trajectory: bool,
}

impl IterationConfig {
    pub fn new(max_iterations: usize, tolerance: f64) -> Result<Self> {
        if max_iterations == 0 {
            return Err(Error::BadConfig("max_iterations must be at least 1"));
        }
        if tolerance <= 0.0 || !tolerance.is_finite() {
            return Err(Error::BadConfig("tolerance must be positive and finite"));
        }
        Ok(Self {
            max_iterations,
            tolerance,
            record_trajectory: false,
        })
    }

    /// Keep every intermediate state instead of just the endpoints.
    pub fn with_trajectory(mut self, record: bool) -> Self {
        self.record_trajectory = record;
        self
    }

    pub fn max_iterations(&self) -> usize {
        self.max_iterations
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn records_trajectory(&self) -> bool {
        self.record_trajectory
    }
}

impl Default for IterationConfig {
    fn default() -> Self {
        Self {
            max_iterations: 10_000,
            tolerance: 1e-12,
            record_trajectory: false,
        }
    }
}

/// Why [`iterate`] stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// Successive iterates came within tolerance after this many steps.
    Converged { steps: usize },
    /// The step budget ran out first.
    MaxIterations,
    /// Updating iterate `step` would have scaled feature `feature` by a
    /// non-positive factor; the recorded states stop just before.
    PositivityViolation { step: usize, feature: usize },
}

/// Record of a run of the dynamic.
///
/// `states[0]` is the initial weight vector and the last entry is the final
/// one reached; `deltas[k]` is the incentive evaluated at `states[k]`. With
/// trajectory recording off only those endpoints are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    states: Vec<WeightVector>,
    deltas: Vec<DeltaVector>,
    termination: Termination,
    boundary_start: bool,
}

impl Trajectory {
    pub fn states(&self) -> &[WeightVector] {
        &self.states
    }

    pub fn deltas(&self) -> &[DeltaVector] {
        &self.deltas
    }

    pub fn termination(&self) -> Termination {
        self.termination
    }

    /// True when the starting point had a zero coordinate. Such runs are
    /// allowed but stay on the boundary face forever.
    pub fn boundary_start(&self) -> bool {
        self.boundary_start
    }

    pub fn initial(&self) -> &WeightVector {
        &self.states[0]
    }

    pub fn final_weights(&self) -> &WeightVector {
        self.states.last().expect("trajectory is never empty")
    }

    pub fn converged(&self) -> bool {
        matches!(self.termination, Termination::Converged { .. })
    }
}

fn check_dims(gamma: &WeightVector, means: &ColumnMeans, context: &'static str) -> Result<()> {
    if gamma.len() != means.len() {
        return Err(Error::DimensionMismatch {
            context,
            left: gamma.len(),
            right: means.len(),
        });
    }
    Ok(())
}

fn dom_values(gamma: &WeightVector, means: &ColumnMeans) -> Array1<f64> {
    let mut out = gamma.weights().clone();
    out.zip_mut_with(means.values(), |g, &mu| *g *= mu - 0.5);
    out
}

fn bal_values(gamma: &WeightVector, means: &ColumnMeans) -> Array1<f64> {
    let m = gamma.len() as f64;
    let avg = gamma.weights().dot(means.values()) / m;
    let mut out = gamma.weights().clone();
    out.zip_mut_with(means.values(), |g, &mu| *g = -2.0 * (*g * mu - avg));
    out
}

/// Dominance part of the incentive: `gamma_j (mean_j - 1/2)` per feature.
pub fn delta_dom(gamma: &WeightVector, means: &ColumnMeans) -> Result<Array1<f64>> {
    check_dims(gamma, means, "delta_dom")?;
    Ok(dom_values(gamma, means))
}

/// Balance part: `-2 (gamma_j mean_j - avg_s gamma_s mean_s)` per feature.
/// Sums to zero over the features.
pub fn delta_bal(gamma: &WeightVector, means: &ColumnMeans) -> Result<Array1<f64>> {
    check_dims(gamma, means, "delta_bal")?;
    Ok(bal_values(gamma, means))
}

/// Full incentive, split into its parts.
pub fn delta(gamma: &WeightVector, means: &ColumnMeans) -> Result<DeltaVector> {
    check_dims(gamma, means, "delta")?;
    let v = DeltaVector::from_parts(dom_values(gamma, means), bal_values(gamma, means));
    // The parts collapse to -gamma_j (mean_j + 1/2) + (2/m) sum_s gamma_s mean_s.
    debug_assert!(
        {
            let m = gamma.len() as f64;
            let weighted = gamma.weights().dot(means.values());
            gamma
                .weights()
                .iter()
                .zip(means.values().iter())
                .zip(v.total().iter())
                .all(|((&g, &mu), &t)| (t - (-g * (mu + 0.5) + 2.0 / m * weighted)).abs() <= 1e-14)
        },
        "dom + bal disagrees with the collapsed incentive"
    );
    Ok(v)
}

fn step_with_delta(gamma: &WeightVector, d: &DeltaVector) -> Result<WeightVector> {
    let mut scaled = Vec::with_capacity(gamma.len());
    for (j, (&g, &dj)) in gamma.weights().iter().zip(d.total().iter()).enumerate() {
        let factor = 1.0 + dj;
        if factor <= 0.0 {
            return Err(Error::PositivityViolation { feature: j });
        }
        scaled.push(g * factor);
    }
    WeightVector::new(scaled)
}

/// One update: rescale weights by `1 + delta_j` and renormalize.
pub fn step(gamma: &WeightVector, means: &ColumnMeans) -> Result<WeightVector> {
    let d = delta(gamma, means)?;
    step_with_delta(gamma, &d)
}

/// Runs the dynamic until successive iterates differ by less than the
/// tolerance in max norm, the step budget runs out, or an update factor
/// turns non-positive. The last case ends the run but is not an error; it is
/// reported through [`Termination`] with the partial trajectory intact.
pub fn iterate(
    gamma0: &WeightVector,
    means: &ColumnMeans,
    config: &IterationConfig,
) -> Result<Trajectory> {
    let mut current = gamma0.clone();
    let mut current_delta = delta(&current, means)?;
    let boundary_start = !current.is_interior();

    let mut states = vec![current.clone()];
    let mut deltas = vec![current_delta.clone()];
    let mut termination = Termination::MaxIterations;
    let mut steps_taken = 0;

    for k in 0..config.max_iterations {
        let next = match step_with_delta(&current, &current_delta) {
            Ok(next) => next,
            Err(Error::PositivityViolation { feature }) => {
                termination = Termination::PositivityViolation { step: k, feature };
                break;
            }
            Err(other) => return Err(other),
        };
        let gap = next.linf_distance(&current);
        current = next;
        current_delta = delta(&current, means)?;
        steps_taken = k + 1;
        if config.record_trajectory {
            states.push(current.clone());
            deltas.push(current_delta.clone());
        }
        if gap < config.tolerance {
            termination = Termination::Converged { steps: k + 1 };
            break;
        }
    }

    if !config.record_trajectory && steps_taken > 0 {
        states.push(current);
        deltas.push(current_delta);
    }

    Ok(Trajectory {
        states,
        deltas,
        termination,
        boundary_start,
    })
}
