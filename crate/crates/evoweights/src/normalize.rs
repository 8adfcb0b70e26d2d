//! Column-wise normalization of raw data into `[0, 1]` payoffs.
//!
//! Each column gets one strategy. Ratio strategies require non-negative
//! entries and a positive column maximum; the identity requires the data to
//! already sit in `[0, 1]`. Every strategy maps ties to ties, and each one is
//! monotone in a declared direction (`gain` = larger raw is better, `cost` =
//! smaller raw is better), which `check_order_preserving` verifies against
//! the produced matrix.

use crate::core::{NormalizedMatrix, RawDataset};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Copies values through unchanged; they must already be in `[0, 1]`.
    Identity,
    /// `x / max`, for gain columns with non-negative entries.
    MaxRatio,
    /// `1 - x / max`, for cost columns with non-negative entries.
    InvertedMax,
    /// `1 - (x - min) / max`, a cost transform that pins the best raw value to 1.
    ShiftedInvertedMax,
}

/// Which raw ordering a column rewards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Gain,
    Cost,
}

impl Strategy {
    /// The direction in which the strategy is order preserving.
    pub fn natural_orientation(self) -> Orientation {
        match self {
            Strategy::Identity | Strategy::MaxRatio => Orientation::Gain,
            Strategy::InvertedMax | Strategy::ShiftedInvertedMax => Orientation::Cost,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnSpec {
    pub strategy: Strategy,
    pub orientation: Orientation,
}

impl ColumnSpec {
    pub fn new(strategy: Strategy) -> Self {
        Self {
            strategy,
            orientation: strategy.natural_orientation(),
        }
    }
}

/// One strategy per column, in column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationSpec {
    columns: Vec<ColumnSpec>,
}

impl NormalizationSpec {
    pub fn new(columns: Vec<ColumnSpec>) -> Self {
        Self { columns }
    }

    /// All-identity spec, the provenance of matrices built from unit-range data.
    pub fn identity(m: usize) -> Self {
        Self {
            columns: vec![ColumnSpec::new(Strategy::Identity); m],
        }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[ColumnSpec] {
        &self.columns
    }

    pub fn get(&self, j: usize) -> ColumnSpec {
        self.columns[j]
    }
}

/// Applies the spec column by column and wraps the result.
pub fn normalize(data: &RawDataset, spec: &NormalizationSpec) -> Result<NormalizedMatrix> {
    if spec.len() != data.n_cols() {
        return Err(Error::WrongCount {
            what: "normalization strategies",
            expected: data.n_cols(),
            got: spec.len(),
        });
    }
    let mut values = data.values().clone();
    for (j, col_spec) in spec.columns().iter().enumerate() {
        let mut column = values.column_mut(j);
        match col_spec.strategy {
            Strategy::Identity => {
                for (i, &v) in column.iter().enumerate() {
                    if !(0.0..=1.0).contains(&v) {
                        return Err(Error::OutOfRange {
                            row: i,
                            col: j,
                            value: v,
                        });
                    }
                }
            }
            Strategy::MaxRatio => {
                let max = ratio_range(column.view(), j)?.1;
                column.mapv_inplace(|v| v / max);
            }
            Strategy::InvertedMax => {
                let max = ratio_range(column.view(), j)?.1;
                column.mapv_inplace(|v| 1.0 - v / max);
            }
            Strategy::ShiftedInvertedMax => {
                let (min, max) = ratio_range(column.view(), j)?;
                column.mapv_inplace(|v| 1.0 - (v - min) / max);
            }
        }
    }
    NormalizedMatrix::new(values, spec.clone())
}

// Ratio strategies need non-negative entries and a positive maximum.
fn ratio_range(column: ndarray::ArrayView1<'_, f64>, j: usize) -> Result<(f64, f64)> {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for (i, &v) in column.iter().enumerate() {
        if v < 0.0 {
            return Err(Error::NegativeEntry {
                row: i,
                col: j,
                value: v,
            });
        }
        min = min.min(v);
        max = max.max(v);
    }
    if max == 0.0 {
        return Err(Error::ZeroColumn { col: j });
    }
    Ok((min, max))
}

/// Checks that column `j` of `phi` orders rows the way the raw column does.
///
/// Gain: `x <= y` exactly when `phi(x) <= phi(y)`; cost flips the right-hand
/// side. Ties in the raw data must map to ties. Panics if the shapes disagree
/// or the column index is out of range.
pub fn check_order_preserving(
    data: &RawDataset,
    phi: &NormalizedMatrix,
    column: usize,
    orientation: Orientation,
) -> bool {
    assert_eq!(data.n_rows(), phi.n_rows(), "row counts differ");
    assert!(column < data.n_cols(), "column index out of range");
    assert!(column < phi.n_cols(), "column index out of range");

    let raw = data.column(column);
    let mapped = phi.column(column);
    let n = raw.len();
    for i in 0..n {
        for k in 0..n {
            let raw_le = raw[i] <= raw[k];
            let mapped_le = match orientation {
                Orientation::Gain => mapped[i] <= mapped[k],
                Orientation::Cost => mapped[i] >= mapped[k],
            };
            if raw_le != mapped_le {
                return false;
            }
        }
    }
    true
}
