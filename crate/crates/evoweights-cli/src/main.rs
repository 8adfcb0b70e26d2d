//! Command line front end for the weighting library.
//!
//! Reads a delimited dataset and a normalization spec, then runs one of four
//! commands: `weights` (iterated and/or closed-form equilibrium), `rank`
//! (both weighting regimes side by side), `metrics` (norms and per-feature
//! impact at the equilibrium), or `report` (everything in one document).

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use evoweights::{
    certify_scalarization, check_order_preserving, column_means, fixed_point, impact_norm, iterate,
    normalize, qualified_cohort, qualified_impact_norm, Certification, ColumnMeans, Error,
    IterationConfig, NormalizedMatrix, Objective, RawDataset, Termination, WeightVector,
};

use report::{
    ColumnInfo, ConfigEcho, DatasetInfo, Document, IteratedWeights, MetricsSection, RankingDoc,
    RankingsSection, WeightsSection, WitnessDoc,
};

/// Errors are grouped by exit code so scripts can tell input trouble from
/// math trouble: 1 io, 2 malformed data, 3 bad spec or flags, 4 the dynamic
/// left the simplex.
#[derive(Debug)]
pub enum CliError {
    Io(String),
    Data(String),
    Spec(String),
    Dynamics(String),
}

impl CliError {
    pub fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Data(m) | CliError::Spec(m) | CliError::Dynamics(m) => m,
        }
    }

    pub fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Data(_) => 2,
            CliError::Spec(_) => 3,
            CliError::Dynamics(_) => 4,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "evoweights",
    version,
    about = "Feature weighting by evolutionary simulation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute feature weights (iterated, closed form, or both).
    Weights {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        iter: IterArgs,
    },
    /// Rank rows under uniform and equilibrium weights.
    Rank {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        objective: ObjectiveArgs,
    },
    /// Impact norms and per-feature impact at the equilibrium weights.
    Metrics {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Everything: weights, rankings, and metrics in one document.
    Report {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        iter: IterArgs,
        #[command(flatten)]
        objective: ObjectiveArgs,
    },
}

#[derive(Args)]
struct ObjectiveArgs {
    /// Treat smaller scores as better.
    #[arg(long, conflicts_with = "max")]
    min: bool,
    /// Treat larger scores as better (the default).
    #[arg(long)]
    max: bool,
}

#[derive(Args)]
struct CommonArgs {
    /// Delimited data file with a header row.
    #[arg(long)]
    input: PathBuf,
    /// Normalization spec, one `column = strategy [direction]` per line.
    #[arg(long)]
    spec: PathBuf,
    /// Field delimiter.
    #[arg(long, default_value_t = ',')]
    delimiter: char,
    /// Treat the first column as row labels.
    #[arg(long)]
    labels: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct IterArgs {
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
    /// Iteration budget.
    #[arg(long, default_value_t = 10_000)]
    iters: usize,
    /// Stop when no weight moves more than this in one step.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Starting weights: `uniform` or a comma-separated list.
    #[arg(long, default_value = "uniform")]
    init: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Iterate,
    ClosedForm,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

/// Shared front half of every command: dataset, spec, normalization, means.
struct Prepared {
    data: RawDataset,
    phi: NormalizedMatrix,
    means: ColumnMeans,
    columns: Vec<ColumnInfo>,
}

fn prepare(common: &CommonArgs) -> Result<Prepared, CliError> {
    let data = input::read_dataset(&common.input, common.delimiter, common.labels)?;
    let spec = input::read_spec(&common.spec, data.column_names())?;

    let phi = normalize(&data, &spec).map_err(|e| match e {
        // Name the offending column; indices alone are unhelpful in a wide file.
        Error::OutOfRange { col, row, value } => CliError::Spec(format!(
            "column '{}': identity normalization needs values in [0, 1], but row {} holds {}",
            data.column_names()[col],
            row + 1,
            value
        )),
        Error::NegativeEntry { col, row, value } => CliError::Spec(format!(
            "column '{}': ratio normalization needs non-negative values, but row {} holds {}",
            data.column_names()[col],
            row + 1,
            value
        )),
        Error::ZeroColumn { col } => CliError::Spec(format!(
            "column '{}': ratio normalization is undefined when every value is zero",
            data.column_names()[col]
        )),
        other => CliError::Data(other.to_string()),
    })?;

    let means = column_means(&phi);

    let columns = spec
        .columns()
        .iter()
        .enumerate()
        .map(|(j, c)| ColumnInfo {
            name: data.column_names()[j].clone(),
            strategy: input::strategy_name(c.strategy).to_string(),
            direction: input::orientation_name(c.orientation).to_string(),
            order_preserving: check_order_preserving(&data, &phi, j, c.orientation),
        })
        .collect();

    Ok(Prepared {
        data,
        phi,
        means,
        columns,
    })
}

fn weights_section(prep: &Prepared, iter: &IterArgs) -> Result<WeightsSection, CliError> {
    let m = prep.means.len();
    let initial = input::parse_init(&iter.init, m)?;
    let config = IterationConfig::new(iter.iters, iter.tol)
        .map_err(|e| CliError::Spec(e.to_string()))?
        .with_trajectory(true);

    let iterated = if iter.mode != Mode::ClosedForm {
        let traj =
            iterate(&initial, &prep.means, &config).map_err(|e| CliError::Data(e.to_string()))?;
        if let Termination::PositivityViolation { step, feature } = traj.termination() {
            return Err(CliError::Dynamics(format!(
                "update factor for feature {} went non-positive at step {}; \
                 start closer to the interior",
                feature, step
            )));
        }
        Some(IteratedWeights {
            termination: traj.termination().into(),
            boundary_start: traj.boundary_start(),
            trajectory: traj.states().iter().map(|w| w.weights().to_vec()).collect(),
            final_weights: traj.final_weights().weights().to_vec(),
        })
    } else {
        None
    };

    let closed_form = if iter.mode != Mode::Iterate {
        Some(fixed_point(&prep.means).weights().to_vec())
    } else {
        None
    };

    let max_gap = match (&iterated, &closed_form) {
        (Some(it), Some(cf)) => Some(
            it.final_weights
                .iter()
                .zip(cf)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0_f64, f64::max),
        ),
        _ => None,
    };

    Ok(WeightsSection {
        initial: initial.weights().to_vec(),
        iterated,
        closed_form,
        max_gap,
    })
}

fn ranking_doc(
    prep: &Prepared,
    gamma: &WeightVector,
    objective: Objective,
) -> Result<RankingDoc, CliError> {
    let wrap = |e: Error| CliError::Data(e.to_string());
    let rep = evoweights::rank(&prep.phi, gamma, objective).map_err(wrap)?;
    let (certified, witness) =
        match certify_scalarization(&prep.phi, gamma, objective).map_err(wrap)? {
            Certification::Certified => (true, None),
            Certification::Refuted {
                best_row,
                dominated_by,
            } => (
                false,
                Some(WitnessDoc {
                    best_row,
                    dominated_by,
                }),
            ),
        };
    Ok(RankingDoc {
        weights: gamma.weights().to_vec(),
        scores: rep.scores().to_vec(),
        order: rep.order().to_vec(),
        pareto: rep.pareto().to_vec(),
        certified,
        witness,
    })
}

fn objective_name(args: &ObjectiveArgs) -> &'static str {
    if args.min {
        "minimize"
    } else {
        "maximize"
    }
}

fn rankings_section(prep: &Prepared, args: &ObjectiveArgs) -> Result<RankingsSection, CliError> {
    let objective = if args.min {
        Objective::Minimize
    } else {
        Objective::Maximize
    };
    // m >= 2 is guaranteed by dataset validation, so uniform cannot fail here
    let uniform =
        WeightVector::uniform(prep.means.len()).map_err(|e| CliError::Data(e.to_string()))?;
    Ok(RankingsSection {
        objective: objective_name(args).to_string(),
        uniform: ranking_doc(prep, &uniform, objective)?,
        equilibrium: ranking_doc(prep, &fixed_point(&prep.means), objective)?,
    })
}

fn metrics_section(prep: &Prepared) -> Result<MetricsSection, CliError> {
    let gamma = fixed_point(&prep.means);
    let wrap = |e: Error| CliError::Data(e.to_string());
    Ok(MetricsSection {
        weights: gamma.weights().to_vec(),
        impact_norm: impact_norm(&prep.means, &gamma).map_err(wrap)?,
        qualified_impact_norm: qualified_impact_norm(&prep.phi, &gamma).map_err(wrap)?,
        qualified_cohort: qualified_cohort(&prep.phi),
        feature_impact: evoweights::feature_impact(&prep.phi, &gamma)
            .map_err(wrap)?
            .to_vec(),
    })
}

fn config_echo(name: &str, common: &CommonArgs) -> ConfigEcho {
    ConfigEcho {
        command: name.to_string(),
        input: common.input.display().to_string(),
        spec: common.spec.display().to_string(),
        delimiter: common.delimiter.to_string(),
        labels: common.labels,
        mode: None,
        max_iterations: None,
        tolerance: None,
        init: None,
        objective: None,
    }
}

fn echo_iter(echo: &mut ConfigEcho, iter: &IterArgs) {
    echo.mode = Some(
        match iter.mode {
            Mode::Iterate => "iterate",
            Mode::ClosedForm => "closed-form",
            Mode::Both => "both",
        }
        .to_string(),
    );
    echo.max_iterations = Some(iter.iters);
    echo.tolerance = Some(iter.tol);
    echo.init = Some(iter.init.clone());
}

fn run(command: Command) -> Result<(), CliError> {
    let (common, doc) = match &command {
        Command::Weights { common, iter } => {
            let prep = prepare(common)?;
            let mut config = config_echo("weights", common);
            echo_iter(&mut config, iter);
            let doc = Document {
                config,
                dataset: dataset_info(&prep),
                column_means: prep.means.values().to_vec(),
                weights: Some(weights_section(&prep, iter)?),
                rankings: None,
                metrics: None,
            };
            (common, doc)
        }
        Command::Rank { common, objective } => {
            let prep = prepare(common)?;
            let mut config = config_echo("rank", common);
            config.objective = Some(objective_name(objective).to_string());
            let doc = Document {
                config,
                dataset: dataset_info(&prep),
                column_means: prep.means.values().to_vec(),
                weights: None,
                rankings: Some(rankings_section(&prep, objective)?),
                metrics: None,
            };
            (common, doc)
        }
        Command::Metrics { common } => {
            let prep = prepare(common)?;
            let doc = Document {
                config: config_echo("metrics", common),
                dataset: dataset_info(&prep),
                column_means: prep.means.values().to_vec(),
                weights: None,
                rankings: None,
                metrics: Some(metrics_section(&prep)?),
            };
            (common, doc)
        }
        Command::Report { common, iter, objective } => {
            let prep = prepare(common)?;
            let mut config = config_echo("report", common);
            echo_iter(&mut config, iter);
            config.objective = Some(objective_name(objective).to_string());
            let doc = Document {
                config,
                dataset: dataset_info(&prep),
                column_means: prep.means.values().to_vec(),
                weights: Some(weights_section(&prep, iter)?),
                rankings: Some(rankings_section(&prep, objective)?),
                metrics: Some(metrics_section(&prep)?),
            };
            (common, doc)
        }
    };

    let rendered = match common.format {
        Format::Json => report::to_json(&doc),
        Format::Table => report::to_table(&doc),
    };
    match &common.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn dataset_info(prep: &Prepared) -> DatasetInfo {
    DatasetInfo {
        rows: prep.data.row_labels().len(),
        row_labels: prep.data.row_labels().to_vec(),
        columns: prep.columns.clone(),
    }
}
