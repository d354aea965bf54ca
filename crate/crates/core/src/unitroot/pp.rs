use serde::{Deserialize, Serialize};

use super::adf::adf_regression;
use super::{bartlett_lrv, mackinnon, newey_west_bandwidth, DeterministicSpec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PpResult<T> {
    pub z_tau: T,
    pub p_value: T,
    pub bandwidth: usize,
}

/// Phillips–Perron `Z_τ` for one series, Bartlett long-run variance with the
/// Newey–West bandwidth, MacKinnon p-value.
pub fn pp_single<T: Scalar>(series: &[T], spec: DeterministicSpec) -> Result<PpResult<T>> {
    let t_len = series.len();
    if t_len < 10 {
        return Err(Error::InsufficientObservations { needed: 10, available: t_len });
    }
    let reg = adf_regression(series, 0, spec)?;
    let u = &reg.fit.residuals;
    let n = T::count(u.len());
    let bandwidth = newey_west_bandwidth(t_len);
    let gamma0 = u.iter().map(|&e| e * e).sum::<T>() / n;
    let lambda2 = bartlett_lrv(u, bandwidth);
    let lambda = lambda2.sqrt();
    let se = reg.fit.std_errors[0];
    let s = reg.fit.stats.se_regression;
    let z_tau = (gamma0 / lambda2).sqrt() * reg.tau - (lambda2 - gamma0) / (T::lit(2.0) * lambda) * (n * se / s);
    if !z_tau.is_finite() {
        return Err(Error::DegenerateResiduals { unit: None });
    }
    Ok(PpResult { z_tau, p_value: mackinnon::pvalue(z_tau, spec), bandwidth })
}
