use std::fmt;

use thiserror::Error;

/// Location of a hole in a panel that should have been balanced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PanelGap {
    /// No observations at all.
    Empty,
    /// A `(unit, period, variable)` cell is absent or not a finite number.
    Missing { unit: String, period: i32, variable: String },
}

impl fmt::Display for PanelGap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PanelGap::Empty => write!(f, "no observations"),
            PanelGap::Missing { unit, period, variable } => {
                write!(f, "missing value for unit `{unit}`, period {period}, variable `{variable}`")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("unbalanced panel: {0}")]
    UnbalancedPanel(PanelGap),

    #[error("duplicate observation for unit `{unit}`, period {period}, variable `{variable}`")]
    DuplicateObservation { unit: String, period: i32, variable: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("empty or out-of-range period window {first}..={last}")]
    EmptyWindow { first: i32, last: i32 },

    #[error("invalid model specification: {0}")]
    InvalidSpec(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("design matrix is rank deficient: column {column} is a linear combination of earlier columns")]
    Collinear { column: usize },

    #[error("insufficient observations: need at least {needed}, have {available}")]
    InsufficientObservations { needed: usize, available: usize },

    #[error("perfect fit: residual sum of squares is zero, log-likelihood undefined")]
    PerfectFit,

    #[error("degenerate sample size {n}: information criteria need n > e and k >= 1")]
    DegenerateSample { n: usize },

    #[error("argument outside function domain: {0}")]
    Domain(String),

    #[error("period covariance is singular or not positive definite ({units} units, {periods} periods)")]
    SingularPeriodCovariance { units: usize, periods: usize },

    #[error("no moment table entry for T = {periods}, lag = {lag}")]
    UnsupportedSampleSize { periods: usize, lag: usize },

    #[error("degenerate residuals{}", .unit.as_ref().map(|u| format!(" for unit `{u}`")).unwrap_or_default())]
    DegenerateResiduals { unit: Option<String> },

    #[error("variable `{0}` is constant")]
    DegenerateVariable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Stable short name of the error kind, used in CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnbalancedPanel(_) => "UnbalancedPanel",
            Error::DuplicateObservation { .. } => "DuplicateObservation",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::EmptyWindow { .. } => "EmptyWindow",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::Parse(_) => "Parse",
            Error::Collinear { .. } => "Collinear",
            Error::InsufficientObservations { .. } => "InsufficientObservations",
            Error::PerfectFit => "PerfectFit",
            Error::DegenerateSample { .. } => "DegenerateSample",
            Error::Domain(_) => "DomainError",
            Error::SingularPeriodCovariance { .. } => "SingularPeriodCovariance",
            Error::UnsupportedSampleSize { .. } => "UnsupportedSampleSize",
            Error::DegenerateResiduals { .. } => "DegenerateResiduals",
            Error::DegenerateVariable(_) => "DegenerateVariable",
            Error::Io(_) => "Io",
            Error::Csv(_) => "Csv",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
