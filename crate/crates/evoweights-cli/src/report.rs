//! The structured output document and its two renderings.
//!
//! JSON keeps full floating point precision and a stable field order, so a
//! rerun on the same inputs is byte identical and values survive a
//! parse round trip. The table rendering is for people: weights at four
//! decimals, scores at six.

use std::fmt::Write as _;

use evoweights::Termination;
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct Document {
    pub config: ConfigEcho,
    pub dataset: DatasetInfo,
    pub column_means: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rankings: Option<RankingsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metrics: Option<MetricsSection>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub command: String,
    pub input: String,
    pub spec: String,
    pub delimiter: String,
    pub labels: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub init: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub objective: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DatasetInfo {
    pub rows: usize,
    pub row_labels: Vec<String>,
    pub columns: Vec<ColumnInfo>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColumnInfo {
    pub name: String,
    pub strategy: String,
    pub direction: String,
    pub order_preserving: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WeightsSection {
    pub initial: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterated: Option<IteratedWeights>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<Vec<f64>>,
    /// Largest coordinate gap between the final iterate and the closed form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_gap: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IteratedWeights {
    pub termination: TerminationDoc,
    pub boundary_start: bool,
    pub trajectory: Vec<Vec<f64>>,
    #[serde(rename = "final")]
    pub final_weights: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TerminationDoc {
    Converged { steps: usize },
    MaxIterations,
    PositivityViolation { step: usize, feature: usize },
}

impl From<Termination> for TerminationDoc {
    fn from(t: Termination) -> Self {
        match t {
            Termination::Converged { steps } => TerminationDoc::Converged { steps },
            Termination::MaxIterations => TerminationDoc::MaxIterations,
            Termination::PositivityViolation { step, feature } => {
                TerminationDoc::PositivityViolation { step, feature }
            }
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RankingsSection {
    pub objective: String,
    pub uniform: RankingDoc,
    pub equilibrium: RankingDoc,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RankingDoc {
    pub weights: Vec<f64>,
    /// Score of each row, in original row order.
    pub scores: Vec<f64>,
    /// Row indices best first.
    pub order: Vec<usize>,
    pub pareto: Vec<bool>,
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub best_row: usize,
    pub dominated_by: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MetricsSection {
    pub weights: Vec<f64>,
    pub impact_norm: f64,
    pub qualified_impact_norm: f64,
    pub qualified_cohort: Vec<usize>,
    pub feature_impact: Vec<f64>,
}

pub fn to_json(doc: &Document) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("document serializes");
    out.push('\n');
    out
}

fn weight_row(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format!("{v:.4}"))
        .collect::<Vec<_>>()
        .join("  ")
}

pub fn to_table(doc: &Document) -> String {
    let mut out = String::new();
    let names: Vec<&str> = doc
        .dataset
        .columns
        .iter()
        .map(|c| c.name.as_str())
        .collect();

    let _ = writeln!(
        out,
        "dataset: {} rows, {} features ({})",
        doc.dataset.rows,
        names.len(),
        doc.config.input
    );
    let _ = writeln!(out);

    let name_width = doc
        .dataset
        .columns
        .iter()
        .map(|c| c.name.len())
        .chain(["column".len()])
        .max()
        .unwrap();
    let _ = writeln!(
        out,
        "{:<name_width$}  {:<20}  {:<9}  {:<16}  mean",
        "column", "strategy", "direction", "order-preserving"
    );
    for (c, mean) in doc.dataset.columns.iter().zip(&doc.column_means) {
        let _ = writeln!(
            out,
            "{:<name_width$}  {:<20}  {:<9}  {:<16}  {:.4}",
            c.name,
            c.strategy,
            c.direction,
            if c.order_preserving { "yes" } else { "NO" },
            mean
        );
    }

    if let Some(w) = &doc.weights {
        let _ = writeln!(out);
        let _ = writeln!(out, "weights");
        if let Some(it) = &w.iterated {
            let _ = writeln!(out, "  step  {}", names.join("  "));
            for (k, state) in it.trajectory.iter().enumerate() {
                let _ = writeln!(out, "  {k:<4}  {}", weight_row(state));
            }
            match &it.termination {
                TerminationDoc::Converged { steps } => {
                    let _ = writeln!(out, "  converged after {steps} steps");
                }
                TerminationDoc::MaxIterations => {
                    let _ = writeln!(out, "  stopped at the iteration budget");
                }
                TerminationDoc::PositivityViolation { step, feature } => {
                    let _ = writeln!(
                        out,
                        "  stopped at step {step}: non-positive factor for feature {feature}"
                    );
                }
            }
            if it.boundary_start {
                let _ = writeln!(out, "  note: started on the simplex boundary");
            }
            let _ = writeln!(out, "  final        {}", weight_row(&it.final_weights));
        }
        if let Some(cf) = &w.closed_form {
            let _ = writeln!(out, "  closed form  {}", weight_row(cf));
        }
        if let Some(gap) = w.max_gap {
            let _ = writeln!(out, "  max gap between routes: {gap:.3e}");
        }
    }

    if let Some(r) = &doc.rankings {
        let _ = writeln!(out);
        let _ = writeln!(out, "rankings ({})", r.objective);
        for (title, regime) in [
            ("uniform weights", &r.uniform),
            ("equilibrium weights", &r.equilibrium),
        ] {
            let _ = writeln!(out, "  {title}: {}", weight_row(&regime.weights));
            let _ = writeln!(out, "  rank  score     pareto  row");
            for (pos, &i) in regime.order.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  {:<4}  {:.6}  {:<6}  {}",
                    pos + 1,
                    regime.scores[i],
                    if regime.pareto[i] { "*" } else { "" },
                    doc.dataset.row_labels[i]
                );
            }
            match &regime.witness {
                None => {
                    let _ = writeln!(out, "  best row is on the front: {}", regime.certified);
                }
                Some(w) => {
                    let _ = writeln!(
                        out,
                        "  NOT certified: best row {} is dominated by row {}",
                        doc.dataset.row_labels[w.best_row], doc.dataset.row_labels[w.dominated_by]
                    );
                }
            }
        }
    }

    if let Some(m) = &doc.metrics {
        let _ = writeln!(out);
        let _ = writeln!(out, "metrics (at the equilibrium weights)");
        let _ = writeln!(out, "  impact norm            {:.4}", m.impact_norm);
        let cohort = m
            .qualified_cohort
            .iter()
            .map(|&i| doc.dataset.row_labels[i].as_str())
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(
            out,
            "  qualified impact norm  {:.4}  (cohort: {cohort})",
            m.qualified_impact_norm
        );
        let _ = writeln!(out, "  feature impact");
        for (name, z) in names.iter().zip(&m.feature_impact) {
            let _ = writeln!(out, "    {name:<name_width$}  {z:.5}");
        }
    }

    out
}
