//! File ingestion: CSV datasets, normalization spec files, and starting
//! weights given on the command line.

use std::path::Path;

use evoweights::{ColumnSpec, NormalizationSpec, Orientation, RawDataset, Strategy, WeightVector};

use crate::CliError;

pub fn read_dataset(path: &Path, delimiter: char, labels: bool) -> Result<RawDataset, CliError> {
    if !delimiter.is_ascii() {
        return Err(CliError::Data(format!(
            "delimiter '{delimiter}' must be a single ASCII character"
        )));
    }
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(delimiter as u8)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Io(format!("cannot open {}: {e}", path.display())))?;

    let headers = reader
        .headers()
        .map_err(|e| CliError::Data(format!("cannot read header row: {e}")))?
        .clone();
    let skip = usize::from(labels);
    let column_names: Vec<String> = headers.iter().skip(skip).map(str::to_string).collect();

    let mut rows = Vec::new();
    let mut row_labels = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Data(e.to_string()))?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if labels {
            row_labels.push(record.get(0).unwrap_or("").to_string());
        } else {
            row_labels.push((rows.len() + 1).to_string());
        }
        let mut row = Vec::with_capacity(column_names.len());
        for (j, field) in record.iter().skip(skip).enumerate() {
            let value: f64 = field.parse().map_err(|_| {
                let name = column_names.get(j).map(String::as_str).unwrap_or("?");
                CliError::Data(format!(
                    "line {line}, column '{name}': cannot parse '{field}' as a number"
                ))
            })?;
            row.push(value);
        }
        rows.push(row);
    }

    RawDataset::new(rows, row_labels, column_names).map_err(|e| CliError::Data(e.to_string()))
}

pub fn read_spec(path: &Path, column_names: &[String]) -> Result<NormalizationSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot open {}: {e}", path.display())))?;
    parse_spec(&text, column_names)
}

/// One `column = strategy [direction]` line per column; `#` starts a comment.
/// When the direction is omitted the strategy's natural one is recorded.
pub fn parse_spec(text: &str, column_names: &[String]) -> Result<NormalizationSpec, CliError> {
    let mut assigned: Vec<Option<ColumnSpec>> = vec![None; column_names.len()];
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((name, value)) = line.split_once('=') else {
            return Err(CliError::Spec(format!(
                "spec line {line_no}: expected 'column = strategy [direction]'"
            )));
        };
        let name = name.trim();
        let col = column_names.iter().position(|c| c == name).ok_or_else(|| {
            CliError::Spec(format!("spec line {line_no}: unknown column '{name}'"))
        })?;
        if assigned[col].is_some() {
            return Err(CliError::Spec(format!(
                "spec line {line_no}: column '{name}' specified twice"
            )));
        }

        let mut tokens = value.split_whitespace();
        let strategy = tokens
            .next()
            .ok_or_else(|| CliError::Spec(format!("spec line {line_no}: missing strategy")))
            .and_then(|s| {
                parse_strategy(s).ok_or_else(|| {
                    CliError::Spec(format!("spec line {line_no}: unknown strategy '{s}'"))
                })
            })?;
        let orientation = match tokens.next() {
            None => strategy.natural_orientation(),
            Some(d) => parse_orientation(d).ok_or_else(|| {
                CliError::Spec(format!("spec line {line_no}: unknown direction '{d}'"))
            })?,
        };
        if let Some(extra) = tokens.next() {
            return Err(CliError::Spec(format!(
                "spec line {line_no}: unexpected token '{extra}'"
            )));
        }
        assigned[col] = Some(ColumnSpec {
            strategy,
            orientation,
        });
    }

    let mut columns = Vec::with_capacity(column_names.len());
    for (j, slot) in assigned.into_iter().enumerate() {
        columns.push(slot.ok_or_else(|| {
            CliError::Spec(format!(
                "spec file gives no strategy for column '{}'",
                column_names[j]
            ))
        })?);
    }
    Ok(NormalizationSpec::new(columns))
}

fn parse_strategy(token: &str) -> Option<Strategy> {
    match token {
        "identity" => Some(Strategy::Identity),
        "max-ratio" => Some(Strategy::MaxRatio),
        "inverted-max" => Some(Strategy::InvertedMax),
        "shifted-inverted-max" => Some(Strategy::ShiftedInvertedMax),
        _ => None,
    }
}

fn parse_orientation(token: &str) -> Option<Orientation> {
    match token {
        "gain" => Some(Orientation::Gain),
        "cost" => Some(Orientation::Cost),
        _ => None,
    }
}

pub fn strategy_name(strategy: Strategy) -> &'static str {
    match strategy {
        Strategy::Identity => "identity",
        Strategy::MaxRatio => "max-ratio",
        Strategy::InvertedMax => "inverted-max",
        Strategy::ShiftedInvertedMax => "shifted-inverted-max",
    }
}

pub fn orientation_name(orientation: Orientation) -> &'static str {
    match orientation {
        Orientation::Gain => "gain",
        Orientation::Cost => "cost",
    }
}

/// `uniform` or a comma-separated list of strictly positive numbers, which is
/// renormalized onto the simplex.
pub fn parse_init(text: &str, m: usize) -> Result<WeightVector, CliError> {
    if text == "uniform" {
        return WeightVector::uniform(m).map_err(|e| CliError::Spec(e.to_string()));
    }
    let values: Vec<f64> = text
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            CliError::Spec("--init must be 'uniform' or comma-separated numbers".to_string())
        })?;
    if values.len() != m {
        return Err(CliError::Spec(format!(
            "--init has {} entries but the dataset has {m} feature columns",
            values.len()
        )));
    }
    if values.iter().any(|v| !v.is_finite() || *v <= 0.0) {
        return Err(CliError::Spec(
            "--init entries must be finite and strictly positive".to_string(),
        ));
    }
    WeightVector::new(values).map_err(|e| CliError::Spec(e.to_string()))
}
