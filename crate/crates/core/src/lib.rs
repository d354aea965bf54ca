//! Panel-data econometrics for balanced cross-section × period panels:
//! pooled OLS, period-SUR feasible GLS with panel-corrected standard errors,
//! panel unit-root tests and residual diagnostics.
//!
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases at the bottom of this file fix the scalar to one of the two.

pub mod diagnostics;
pub mod dist;
pub mod egls;
pub mod error;
pub mod linalg;
pub mod panel;
pub mod regress;
pub mod scalar;
pub mod special;
pub mod unitroot;

pub use error::{Error, PanelGap, Result};
pub use linalg::Matrix;
pub use panel::{load_panel_csv, read_panel_csv, CsvLayout, ModelSpec, PanelDataset, PanelDesign, WideVariable};
pub use regress::{ols_fit, RegressionFit, StatBlock};
pub use scalar::Scalar;

pub type Panel64 = PanelDataset<f64>;
pub type Panel32 = PanelDataset<f32>;
pub type Fit64 = RegressionFit<f64>;
pub type Fit32 = RegressionFit<f32>;
pub type EglsFit64 = egls::EglsFit<f64>;
pub type EglsFit32 = egls::EglsFit<f32>;
