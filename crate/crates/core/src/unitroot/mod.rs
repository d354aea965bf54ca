//! Panel unit-root battery: LLC, Breitung, IPS, and Fisher-type ADF and PP
//! combinations, twelve results in all, decided by majority vote.

mod adf;
mod ips;
mod ips_table;
mod llc;
pub mod mackinnon;
mod pp;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dist::chi_sq_upper_tail;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Qr};
use crate::panel::PanelDataset;
use crate::scalar::{compensated_sum, Scalar};

pub use adf::{adf_regression, adf_test, default_max_lag, select_lag_sic, sic_argmin, AdfRegression};
pub use ips::{ips_moments, ips_test};
pub use llc::{breitung_test, llc_adjustment, llc_test};
pub use pp::{pp_single, PpResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeterministicSpec {
    TrendAndConstant,
    ConstantOnly,
    None,
}

impl DeterministicSpec {
    /// Number of deterministic regressors.
    pub fn terms(self) -> usize {
        match self {
            DeterministicSpec::TrendAndConstant => 2,
            DeterministicSpec::ConstantOnly => 1,
            DeterministicSpec::None => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DeterministicSpec::TrendAndConstant => "trend and constant",
            DeterministicSpec::ConstantOnly => "constant",
            DeterministicSpec::None => "none",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitRootTest {
    Llc,
    Breitung,
    Ips,
    AdfFisher,
    PpFisher,
}

impl fmt::Display for UnitRootTest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitRootTest::Llc => "Levin, Lin & Chu t*",
            UnitRootTest::Breitung => "Breitung t-stat",
            UnitRootTest::Ips => "Im, Pesaran and Shin W-stat",
            UnitRootTest::AdfFisher => "ADF - Fisher Chi-square",
            UnitRootTest::PpFisher => "PP - Fisher Chi-square",
        })
    }
}

/// The fixed battery order.
pub const BATTERY: [(UnitRootTest, DeterministicSpec); 12] = [
    (UnitRootTest::Llc, DeterministicSpec::TrendAndConstant),
    (UnitRootTest::Llc, DeterministicSpec::ConstantOnly),
    (UnitRootTest::Llc, DeterministicSpec::None),
    (UnitRootTest::Breitung, DeterministicSpec::TrendAndConstant),
    (UnitRootTest::Ips, DeterministicSpec::TrendAndConstant),
    (UnitRootTest::Ips, DeterministicSpec::ConstantOnly),
    (UnitRootTest::AdfFisher, DeterministicSpec::TrendAndConstant),
    (UnitRootTest::AdfFisher, DeterministicSpec::ConstantOnly),
    (UnitRootTest::AdfFisher, DeterministicSpec::None),
    (UnitRootTest::PpFisher, DeterministicSpec::TrendAndConstant),
    (UnitRootTest::PpFisher, DeterministicSpec::ConstantOnly),
    (UnitRootTest::PpFisher, DeterministicSpec::None),
];

pub const SIGNIFICANCE: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitRootResult<T> {
    pub test: UnitRootTest,
    pub spec: DeterministicSpec,
    pub statistic: Option<T>,
    pub p_value: Option<T>,
    /// Chi-square degrees of freedom for the Fisher combinations.
    pub dof: Option<usize>,
    /// `p_value < 0.05`; false when the test could not run.
    pub rejects_unit_root: bool,
    /// Per-unit lag orders chosen by SIC (empty for PP).
    pub lags: Vec<usize>,
    /// Why the test could not run, if it could not.
    pub error: Option<String>,
}

impl<T: Scalar> UnitRootResult<T> {
    pub fn computed(test: UnitRootTest, spec: DeterministicSpec, statistic: T, p_value: T, lags: Vec<usize>) -> Self {
        Self {
            test,
            spec,
            statistic: Some(statistic),
            p_value: Some(p_value),
            dof: None,
            rejects_unit_root: p_value < T::lit(SIGNIFICANCE),
            lags,
            error: None,
        }
    }

    pub fn failed(test: UnitRootTest, spec: DeterministicSpec, error: &Error) -> Self {
        Self {
            test,
            spec,
            statistic: None,
            p_value: None,
            dof: None,
            rejects_unit_root: false,
            lags: Vec::new(),
            error: Some(format!("{}: {error}", error.kind())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StationarityDecision {
    Stationary,
    NonStationary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitRootReport<T> {
    pub results: Vec<UnitRootResult<T>>,
    pub votes_stationary: usize,
    pub vote_threshold: usize,
    pub decision: StationarityDecision,
}

impl<T: Scalar> UnitRootReport<T> {
    pub fn from_results(results: Vec<UnitRootResult<T>>, vote_threshold: usize) -> Self {
        let votes_stationary = results.iter().filter(|r| r.rejects_unit_root).count();
        let decision = if votes_stationary >= vote_threshold {
            StationarityDecision::Stationary
        } else {
            StationarityDecision::NonStationary
        };
        Self { results, votes_stationary, vote_threshold, decision }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct UnitRootOptions {
    /// Upper bound for SIC lag selection; the length-based default when absent.
    pub max_lag: Option<usize>,
    pub vote_threshold: usize,
}

impl Default for UnitRootOptions {
    fn default() -> Self {
        Self { max_lag: None, vote_threshold: 7 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FisherResult<T> {
    pub statistic: T,
    pub dof: usize,
    pub p_value: T,
}

/// `−2 Σ ln p_i` against `χ²_{2N}`. Terms are summed in sorted order, so the
/// result does not depend on the order of the inputs.
pub fn fisher_combine<T: Scalar>(p_values: &[T]) -> Result<FisherResult<T>> {
    if p_values.is_empty() {
        return Err(Error::InsufficientObservations { needed: 1, available: 0 });
    }
    let mut logs = Vec::with_capacity(p_values.len());
    for &p in p_values {
        if !(p > T::zero() && p <= T::one()) {
            return Err(Error::Domain(format!("Fisher combination needs p-values in (0, 1], got {p}")));
        }
        logs.push(p.ln());
    }
    logs.sort_by(|a, b| a.partial_cmp(b).expect("finite logs"));
    let statistic = T::lit(-2.0) * compensated_sum(logs);
    let dof = 2 * p_values.len();
    Ok(FisherResult { statistic, dof, p_value: chi_sq_upper_tail(statistic, dof)? })
}

fn fisher_result<T: Scalar>(test: UnitRootTest, spec: DeterministicSpec, p: &[T], lags: Vec<usize>) -> Result<UnitRootResult<T>> {
    // Surface p-values of exactly zero would make the statistic infinite.
    let floored: Vec<T> = p.iter().map(|&v| v.max(T::min_positive_value())).collect();
    let f = fisher_combine(&floored)?;
    let mut r = UnitRootResult::computed(test, spec, f.statistic, f.p_value, lags);
    r.dof = Some(f.dof);
    Ok(r)
}

/// Per-unit ADF p-values combined Fisher-style.
pub fn adf_fisher_test<T: Scalar>(panel: &Matrix<T>, spec: DeterministicSpec, max_lag: Option<usize>) -> Result<UnitRootResult<T>> {
    let max_lag = resolve_max_lag(panel.cols(), spec, max_lag)?;
    let mut p = Vec::with_capacity(panel.rows());
    let mut lags = Vec::with_capacity(panel.rows());
    for i in 0..panel.rows() {
        let (reg, pv) = adf_test(panel.row(i), max_lag, spec)?;
        p.push(pv);
        lags.push(reg.lag);
    }
    fisher_result(UnitRootTest::AdfFisher, spec, &p, lags)
}

/// Per-unit Phillips–Perron p-values combined Fisher-style.
pub fn pp_fisher_test<T: Scalar>(panel: &Matrix<T>, spec: DeterministicSpec) -> Result<UnitRootResult<T>> {
    let p = (0..panel.rows()).map(|i| pp_single(panel.row(i), spec).map(|r| r.p_value)).collect::<Result<Vec<T>>>()?;
    fisher_result(UnitRootTest::PpFisher, spec, &p, Vec::new())
}

/// All twelve tests on an `N × T` panel. A test that cannot run is kept in
/// the report with its error and counts as a non-rejection.
pub fn battery<T: Scalar>(panel: &Matrix<T>, options: &UnitRootOptions) -> UnitRootReport<T> {
    let results = BATTERY
        .iter()
        .map(|&(test, spec)| {
            let run = match test {
                UnitRootTest::Llc => llc_test(panel, spec, options.max_lag),
                UnitRootTest::Breitung => breitung_test(panel, options.max_lag),
                UnitRootTest::Ips => ips_test(panel, spec, options.max_lag),
                UnitRootTest::AdfFisher => adf_fisher_test(panel, spec, options.max_lag),
                UnitRootTest::PpFisher => pp_fisher_test(panel, spec),
            };
            run.unwrap_or_else(|e| UnitRootResult::failed(test, spec, &e))
        })
        .collect();
    UnitRootReport::from_results(results, options.vote_threshold)
}

/// Battery on one variable of a dataset.
pub fn battery_for<T: Scalar>(ds: &PanelDataset<T>, variable: &str, options: &UnitRootOptions) -> Result<UnitRootReport<T>> {
    Ok(battery(ds.variable(variable)?, options))
}

pub(crate) fn resolve_max_lag(t_len: usize, spec: DeterministicSpec, max_lag: Option<usize>) -> Result<usize> {
    match max_lag {
        Some(m) => Ok(m),
        None => default_max_lag(t_len, spec),
    }
}

/// `⌊4(T/100)^{2/9}⌋`.
pub fn newey_west_bandwidth(t_len: usize) -> usize {
    (4.0 * (t_len as f64 / 100.0).powf(2.0 / 9.0)).floor() as usize
}

/// Bartlett-kernel long-run variance `γ₀ + 2 Σ_{j≤l} (1 − j/(l+1)) γ_j`,
/// autocovariances divided by the series length.
pub fn bartlett_lrv<T: Scalar>(u: &[T], bandwidth: usize) -> T {
    let n = T::count(u.len());
    let gamma = |j: usize| compensated_sum((j..u.len()).map(|t| u[t] * u[t - j])) / n;
    let mut acc = gamma(0);
    for j in 1..=bandwidth.min(u.len().saturating_sub(1)) {
        let w = T::one() - T::count(j) / T::count(bandwidth + 1);
        acc = acc + T::lit(2.0) * w * gamma(j);
    }
    acc
}

/// Residuals of `v` after projection on the columns of `z`.
pub(crate) fn residualize<T: Scalar>(v: &[T], z: &Matrix<T>) -> Result<Vec<T>> {
    if z.cols() == 0 {
        return Ok(v.to_vec());
    }
    let beta = Qr::new(z)?.solve(v);
    let fitted = z.mul_vec(&beta);
    Ok(v.iter().zip(&fitted).map(|(&a, &b)| a - b).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fisher_hand_values() {
        let f = fisher_combine(&[1.0_f64, 1.0, 1.0]).unwrap();
        assert_eq!(f.statistic, 0.0);
        assert_eq!(f.p_value, 1.0);
        let f = fisher_combine(&[0.5_f64, 0.1]).unwrap();
        assert!((f.statistic - 5.991464547107982).abs() < 1e-12);
        assert_eq!(f.dof, 4);
        let f = fisher_combine(&[0.05_f64; 28]).unwrap();
        assert!((f.statistic - 56.0 * 20.0_f64.ln()).abs() < 1e-10);
        assert_eq!(f.dof, 56);
        assert!(f.p_value < 1e-6);
    }

    #[test]
    fn fisher_domain() {
        assert!(matches!(fisher_combine(&[0.0_f64, 0.5]), Err(Error::Domain(_))));
        assert!(matches!(fisher_combine(&[1.5_f64]), Err(Error::Domain(_))));
    }

    #[test]
    fn bandwidth_rule() {
        assert_eq!(newey_west_bandwidth(100), 4);
        assert_eq!(newey_west_bandwidth(50), 3);
        assert_eq!(newey_west_bandwidth(7), 2);
    }

    fn result(rejects: bool) -> UnitRootResult<f64> {
        let p = if rejects { 0.01 } else { 0.5 };
        UnitRootResult::computed(UnitRootTest::Llc, DeterministicSpec::None, -1.0, p, vec![])
    }

    #[test]
    fn vote_threshold_edges() {
        let r: Vec<_> = (0..12).map(|i| result(i < 6)).collect();
        assert_eq!(UnitRootReport::from_results(r, 7).decision, StationarityDecision::NonStationary);
        let r: Vec<_> = (0..12).map(|i| result(i < 7)).collect();
        assert_eq!(UnitRootReport::from_results(r, 7).decision, StationarityDecision::Stationary);
        let r: Vec<_> = (0..12).map(|_| result(true)).collect();
        assert_eq!(UnitRootReport::from_results(r, 7).votes_stationary, 12);
    }

    #[test]
    fn failed_test_does_not_vote() {
        let r = UnitRootResult::<f64>::failed(
            UnitRootTest::PpFisher,
            DeterministicSpec::None,
            &Error::InsufficientObservations { needed: 10, available: 7 },
        );
        assert!(!r.rejects_unit_root);
        assert!(r.error.unwrap().starts_with("InsufficientObservations"));
    }
}
