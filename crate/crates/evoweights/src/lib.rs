//! Feature weighting through an evolutionary dynamic on the simplex.
//!
//! Columns of a dataset compete for weight: each iteration nudges a weight
//! vector on the standard simplex by a two-part incentive (dominance of
//! strong columns, balance toward equal weighted payoffs) until it settles at
//! an interior equilibrium that is also available in closed form from the
//! column means alone. The equilibrium weights then score and rank the rows,
//! and a few scalar metrics summarize how far the weighting moved from
//! uniform.
//!
//! The pipeline is: normalize raw columns into `[0, 1]` payoffs
//! ([`normalize()`]), take column means ([`core`]), run or solve the dynamic
//! ([`dynamics`], [`equilibrium`]), then rank rows and compute summaries
//! ([`ranking`], [`metrics`]). [`strategies`] exposes the row-level
//! decomposition of the incentive for explaining individual alternatives.

pub mod core;
pub mod dynamics;
pub mod equilibrium;
mod error;
pub mod metrics;
pub mod normalize;
pub mod ranking;
pub mod strategies;

pub use crate::core::{
    column_means, ColumnMeans, DeltaVector, NormalizedMatrix, RawDataset, WeightVector,
};
pub use crate::dynamics::{
    delta, delta_bal, delta_dom, iterate, step, IterationConfig, Termination, Trajectory,
};
pub use crate::equilibrium::{fixed_point, fixed_point_residual};
pub use crate::error::{Error, Result};
pub use crate::metrics::{feature_impact, impact_norm, qualified_cohort, qualified_impact_norm};
pub use crate::normalize::{
    check_order_preserving, normalize, ColumnSpec, NormalizationSpec, Orientation, Strategy,
};
pub use crate::ranking::{
    certify_scalarization, pareto_front, rank, Certification, Objective, RankReport,
};
pub use crate::strategies::{
    dependence, gene_strategy, global_fitness, organism_strategy, DependenceMatrix,
};
