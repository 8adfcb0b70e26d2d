//! Core data types shared by every stage of the pipeline.
//!
//! The central objects are a raw dataset (rows = alternatives, columns =
//! features), its normalized counterpart with entries in `[0, 1]`, the vector
//! of column means that drives the dynamic, and weight vectors living on the
//! standard simplex.

use ndarray::{Array1, Array2, ArrayView1};

use crate::error::{Error, Result};
use crate::normalize::NormalizationSpec;

/// Raw observations: `n >= 1` alternatives in rows, `m >= 2` feature columns.
///
/// Entries must be finite but are otherwise unconstrained; range requirements
/// are imposed per column by the normalization strategies.
#[derive(Debug, Clone, PartialEq)]
pub struct RawDataset {
    values: Array2<f64>,
    row_labels: Vec<String>,
    column_names: Vec<String>,
}

impl RawDataset {
    pub fn new(
        rows: Vec<Vec<f64>>,
        row_labels: Vec<String>,
        column_names: Vec<String>,
    ) -> Result<Self> {
        let values = rectangular(rows)?;
        let (n, m) = values.dim();
        if row_labels.len() != n {
            return Err(Error::WrongCount {
                what: "row labels",
                expected: n,
                got: row_labels.len(),
            });
        }
        if column_names.len() != m {
            return Err(Error::WrongCount {
                what: "column names",
                expected: m,
                got: column_names.len(),
            });
        }
        Ok(Self {
            values,
            row_labels,
            column_names,
        })
    }

    /// Builds a dataset with positional labels (`1..=n`, `c1..=cm`).
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let values = rectangular(rows)?;
        let (n, m) = values.dim();
        Ok(Self {
            values,
            row_labels: (1..=n).map(|i| i.to_string()).collect(),
            column_names: (1..=m).map(|j| format!("c{j}")).collect(),
        })
    }

    pub fn n_rows(&self) -> usize {
        self.values.nrows()
    }

    pub fn n_cols(&self) -> usize {
        self.values.ncols()
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub fn column(&self, j: usize) -> ArrayView1<'_, f64> {
        self.values.column(j)
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn column_names(&self) -> &[String] {
        &self.column_names
    }
}

fn rectangular(rows: Vec<Vec<f64>>) -> Result<Array2<f64>> {
    if rows.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let m = rows[0].len();
    if m < 2 {
        return Err(Error::TooFewColumns(m));
    }
    let mut values = Array2::zeros((rows.len(), m));
    for (i, row) in rows.iter().enumerate() {
        if row.len() != m {
            return Err(Error::RaggedRow {
                row: i,
                expected: m,
                got: row.len(),
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { row: i, col: j });
            }
            values[[i, j]] = v;
        }
    }
    Ok(values)
}

/// Normalized payoff matrix with every entry in `[0, 1]`.
///
/// Keeps the normalization spec it was produced with, so reports can state how
/// each column was transformed.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedMatrix {
    values: Array2<f64>,
    provenance: NormalizationSpec,
}

impl NormalizedMatrix {
    pub fn new(values: Array2<f64>, provenance: NormalizationSpec) -> Result<Self> {
        let (n, m) = values.dim();
        if n == 0 {
            return Err(Error::EmptyDataset);
        }
        if m < 2 {
            return Err(Error::TooFewColumns(m));
        }
        if provenance.len() != m {
            return Err(Error::WrongCount {
                what: "normalization strategies",
                expected: m,
                got: provenance.len(),
            });
        }
        for ((i, j), &v) in values.indexed_iter() {
            if !v.is_finite() {
                return Err(Error::NonFinite { row: i, col: j });
            }
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfRange {
                    row: i,
                    col: j,
                    value: v,
                });
            }
        }
        Ok(Self { values, provenance })
    }

    /// Wraps values that are already in `[0, 1]`, recording an identity spec.
    pub fn from_values(values: Array2<f64>) -> Result<Self> {
        let m = values.ncols();
        Self::new(values, NormalizationSpec::identity(m))
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::from_values(rectangular(rows)?)
    }

    pub fn n_rows(&self) -> usize {
        self.values.nrows()
    }

    pub fn n_cols(&self) -> usize {
        self.values.ncols()
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub fn column(&self, j: usize) -> ArrayView1<'_, f64> {
        self.values.column(j)
    }

    pub fn provenance(&self) -> &NormalizationSpec {
        &self.provenance
    }
}

/// Per-column means of a normalized matrix; each entry lies in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnMeans {
    means: Array1<f64>,
}

impl ColumnMeans {
    pub fn new(means: Vec<f64>) -> Result<Self> {
        if means.len() < 2 {
            return Err(Error::TooFewColumns(means.len()));
        }
        for (j, &v) in means.iter().enumerate() {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(Error::MeanOutOfRange { col: j, value: v });
            }
        }
        Ok(Self {
            means: Array1::from(means),
        })
    }

    pub fn len(&self) -> usize {
        self.means.len()
    }

    pub fn is_empty(&self) -> bool {
        self.means.is_empty()
    }

    pub fn values(&self) -> &Array1<f64> {
        &self.means
    }

    pub fn get(&self, j: usize) -> f64 {
        self.means[j]
    }
}

/// Column means of a normalized matrix.
///
/// Means of values in `[0, 1]` stay in `[0, 1]` up to rounding; the result is
/// clamped so the type invariant holds exactly.
pub fn column_means(phi: &NormalizedMatrix) -> ColumnMeans {
    let n = phi.n_rows() as f64;
    let means = phi
        .values()
        .columns()
        .into_iter()
        .map(|c| (c.sum() / n).clamp(0.0, 1.0))
        .collect();
    ColumnMeans {
        means: Array1::from_vec(means),
    }
}

/// Point on the standard simplex: non-negative weights summing to one.
///
/// Construction renormalizes by the raw sum, so any non-negative vector with
/// positive total is accepted.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Array1<f64>,
}

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::TooFewColumns(weights.len()));
        }
        let mut sum = 0.0;
        for (index, &w) in weights.iter().enumerate() {
            if !w.is_finite() {
                return Err(Error::NonFiniteWeight { index });
            }
            if w < 0.0 {
                return Err(Error::NegativeWeight { index, value: w });
            }
            sum += w;
        }
        if sum <= 0.0 {
            return Err(Error::ZeroWeightSum { sum });
        }
        let mut weights = Array1::from(weights);
        weights.mapv_inplace(|w| w / sum);
        Ok(Self { weights })
    }

    /// The barycenter `(1/m, ..., 1/m)`.
    pub fn uniform(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::TooFewColumns(m));
        }
        Ok(Self {
            weights: Array1::from_elem(m, 1.0 / m as f64),
        })
    }

    /// True when every coordinate is strictly positive.
    pub fn is_interior(&self) -> bool {
        self.weights.iter().all(|&w| w > 0.0)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &Array1<f64> {
        &self.weights
    }

    pub fn get(&self, j: usize) -> f64 {
        self.weights[j]
    }

    pub fn as_slice(&self) -> &[f64] {
        self.weights.as_slice().expect("weights are contiguous")
    }

    /// Largest coordinatewise distance to `other`.
    pub fn linf_distance(&self, other: &WeightVector) -> f64 {
        self.weights
            .iter()
            .zip(other.weights.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Incentive split at a weight vector: dominance part, balance part, and
/// their sum, each an `m`-vector indexed by feature.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaVector {
    dom: Array1<f64>,
    bal: Array1<f64>,
    total: Array1<f64>,
}

impl DeltaVector {
    pub(crate) fn from_parts(dom: Array1<f64>, bal: Array1<f64>) -> Self {
        let total = &dom + &bal;
        Self { dom, bal, total }
    }

    pub fn dom(&self) -> &Array1<f64> {
        &self.dom
    }

    pub fn bal(&self) -> &Array1<f64> {
        &self.bal
    }

    pub fn total(&self) -> &Array1<f64> {
        &self.total
    }

    pub fn len(&self) -> usize {
        self.total.len()
    }

    pub fn is_empty(&self) -> bool {
        self.total.is_empty()
    }
}
