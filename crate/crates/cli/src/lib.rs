//! Batch driver around `panelsur`: config, pipeline stages and renderers.

pub mod config;
pub mod delta;
pub mod figure;
pub mod render;
pub mod report;

use std::fmt;

use panelsur::diagnostics::run_diagnostics;
use panelsur::egls::egls_fit;
use panelsur::unitroot::battery_for;
use panelsur::{load_panel_csv, Error, PanelDataset};

pub use config::{Emit, RunConfig};
pub use delta::{delta_report, DeltaReport};
pub use figure::{emit_figure_data, FigureData};
pub use report::Report;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "ConfigError: {m}"),
            CliError::Core(e) => write!(f, "{}: {e}", e.kind()),
        }
    }
}

impl CliError {
    /// 2 for configuration problems, 3 for data problems, 4 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Core(e) => match e {
                Error::UnknownVariable(_) | Error::InvalidSpec(_) | Error::EmptyWindow { .. } => 2,
                Error::UnbalancedPanel(_)
                | Error::DuplicateObservation { .. }
                | Error::Parse(_)
                | Error::Io(_)
                | Error::Csv(_)
                | Error::DegenerateVariable(_) => 3,
                _ => 4,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    /// Load only; with `validate`, also check the model against the data.
    Ingest { validate: bool },
    UnitRoot,
    Estimate,
    Diagnose,
    /// Every stage in order.
    Full,
}

pub fn load_dataset(cfg: &RunConfig) -> Result<PanelDataset<f64>, CliError> {
    Ok(load_panel_csv(&cfg.data_path, &cfg.schema)?)
}

/// Runs `stage` and everything it depends on.
pub fn run_pipeline(cfg: &RunConfig, stage: Stage) -> Result<Report, CliError> {
    let ds = load_dataset(cfg)?;
    run_on(cfg, &ds, stage)
}

pub fn run_on(cfg: &RunConfig, ds: &PanelDataset<f64>, stage: Stage) -> Result<Report, CliError> {
    let mut report = Report {
        dataset: report::DatasetBlock::new(cfg.data_path.display().to_string(), ds),
        unit_root: None,
        estimation: None,
        diagnostics: None,
    };
    if let Stage::Ingest { validate } = stage {
        if validate {
            cfg.model.validate(ds)?;
            cfg.model.sample_panel(ds)?;
            for v in cfg.unit_root_variables() {
                ds.variable(&v)?;
            }
        }
        return Ok(report);
    }
    cfg.model.validate(ds)?;

    if matches!(stage, Stage::UnitRoot | Stage::Full) {
        let opts = cfg.unit_root.options();
        let sample = cfg.model.sample_panel(ds)?;
        let batteries = cfg
            .unit_root_variables()
            .into_iter()
            .map(|v| Ok(report::VariableBattery { report: battery_for(&sample, &v, &opts)?, variable: v }))
            .collect::<Result<Vec<_>, Error>>()?;
        report.unit_root = Some(batteries);
    }
    if matches!(stage, Stage::Estimate | Stage::Diagnose | Stage::Full) {
        let fit = egls_fit(ds, &cfg.model, None, cfg.egls)?;
        let sample = cfg.model.sample_panel(ds)?;
        report.estimation = Some(report::EstimationBlock::new(&cfg.model, &sample, &fit, cfg.egls));
        if matches!(stage, Stage::Diagnose | Stage::Full) {
            let d = run_diagnostics(ds, &cfg.model, &fit, &cfg.diagnostics)?;
            report.diagnostics = Some(report::DiagnosticsBlock::new(&d, &cfg.diagnostics));
        }
    }
    Ok(report)
}

pub fn render_report(r: &Report, emit: Emit) -> String {
    match emit {
        Emit::Text => render::report_text(r),
        Emit::Json => render::to_json(r),
        Emit::Csv => render::report_csv(r),
    }
}

pub fn render_figure(f: &FigureData, emit: Emit) -> String {
    match emit {
        Emit::Text => render::figure_text(f),
        Emit::Json => render::to_json(f),
        Emit::Csv => render::figure_csv(f),
    }
}

pub fn render_delta(d: &DeltaReport, emit: Emit) -> String {
    match emit {
        Emit::Text => render::delta_text(d),
        Emit::Json => render::to_json(d),
        Emit::Csv => render::delta_csv(d),
    }
}

/// Text rendering of a report previously emitted as JSON.
pub fn rerender_json(json: &str, emit: Emit) -> Result<String, CliError> {
    let r: Report = serde_json::from_str(json).map_err(|e| CliError::Config(format!("not a report: {e}")))?;
    Ok(render_report(&r, emit))
}
