use super::{mackinnon, DeterministicSpec};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::regress::{ols_fit_with_constant, RegressionFit};
use crate::scalar::Scalar;

/// An estimated augmented Dickey–Fuller regression.
#[derive(Debug, Clone)]
pub struct AdfRegression<T> {
    /// t-ratio on `y_{t−1}`.
    pub tau: T,
    pub lag: usize,
    /// Columns: `y_{t−1}`, `Δy_{t−1} .. Δy_{t−p}`, `[trend]`, `[C]`.
    pub fit: RegressionFit<T>,
    /// Position in `y` of the first regression row.
    pub first_row: usize,
}

/// Regression rows `start..T` (positions in `y`); `start ≥ lag + 1`.
pub(crate) fn adf_design<T: Scalar>(
    y: &[T],
    lag: usize,
    spec: DeterministicSpec,
    start: usize,
) -> Result<(Vec<T>, Matrix<T>, Option<usize>)> {
    let t_len = y.len();
    debug_assert!(start > lag);
    let k = 1 + lag + spec.terms();
    let n = t_len.saturating_sub(start);
    if n <= k {
        return Err(Error::InsufficientObservations { needed: k + 1, available: n });
    }
    let dy = |t: usize| y[t] - y[t - 1];
    let mut z = Vec::with_capacity(n);
    let mut x = Matrix::zeros(n, k);
    for (r, t) in (start..t_len).enumerate() {
        z.push(dy(t));
        x[(r, 0)] = y[t - 1];
        for j in 1..=lag {
            x[(r, j)] = dy(t - j);
        }
        let mut c = lag + 1;
        if spec == DeterministicSpec::TrendAndConstant {
            x[(r, c)] = T::count(t);
            c += 1;
        }
        if spec != DeterministicSpec::None {
            x[(r, c)] = T::one();
        }
    }
    let constant = (spec != DeterministicSpec::None).then_some(k - 1);
    Ok((z, x, constant))
}

fn fit_window<T: Scalar>(y: &[T], lag: usize, spec: DeterministicSpec, start: usize) -> Result<AdfRegression<T>> {
    let (z, x, constant) = adf_design(y, lag, spec, start)?;
    let fit = ols_fit_with_constant(&z, &x, constant)?;
    if fit.stats.ssr == T::zero() {
        return Err(Error::PerfectFit);
    }
    Ok(AdfRegression { tau: fit.t_stats[0], lag, fit, first_row: start })
}

/// `Δy_t` on `y_{t−1}`, `p` lagged differences and the deterministic terms,
/// over every usable row `t = p+1 .. T−1`.
pub fn adf_regression<T: Scalar>(series: &[T], lag: usize, spec: DeterministicSpec) -> Result<AdfRegression<T>> {
    fit_window(series, lag, spec, lag + 1)
}

/// Index of the smallest value; ties go to the earliest.
pub fn sic_argmin<T: Scalar>(values: &[T]) -> Option<usize> {
    let mut best: Option<(usize, T)> = None;
    for (i, &v) in values.iter().enumerate() {
        if v.is_nan() {
            continue;
        }
        match best {
            Some((_, b)) if v >= b => {}
            _ => best = Some((i, v)),
        }
    }
    best.map(|(i, _)| i)
}

/// Lag in `0..=max_lag` minimizing SIC, all candidates fitted on the rows
/// available to `max_lag` so they share one sample.
pub fn select_lag_sic<T: Scalar>(series: &[T], max_lag: usize, spec: DeterministicSpec) -> Result<usize> {
    if 3 * max_lag >= series.len() {
        return Err(Error::InvalidSpec(format!(
            "max lag {max_lag} must be below a third of the series length {}",
            series.len()
        )));
    }
    let start = max_lag + 1;
    let mut sic = Vec::with_capacity(max_lag + 1);
    for p in 0..=max_lag {
        let r = fit_window(series, p, spec, start)?;
        sic.push(r.fit.stats.sic.unwrap_or_else(T::nan));
    }
    sic_argmin(&sic).ok_or(Error::PerfectFit)
}

/// Largest lag admissible for a series of length `t_len`:
/// `min(⌊12(T/100)^{1/4}⌋, ⌈T/3⌉ − 1)`, further capped so the ADF regression
/// keeps at least three residual degrees of freedom.
pub fn default_max_lag(t_len: usize, spec: DeterministicSpec) -> Result<usize> {
    let schwert = (12.0 * (t_len as f64 / 100.0).powf(0.25)).floor() as usize;
    let third = t_len.div_ceil(3).saturating_sub(1);
    let d = spec.terms();
    // (T − 1 − p) − (1 + p + d) ≥ 3
    let dof_cap = (t_len as i64 - 5 - d as i64).div_euclid(2);
    if dof_cap < 0 {
        return Err(Error::InsufficientObservations { needed: 5 + d, available: t_len });
    }
    Ok(schwert.min(third).min(dof_cap as usize))
}

/// Per-unit ADF: SIC lag choice, then the regression on its full sample.
pub fn adf_test<T: Scalar>(series: &[T], max_lag: usize, spec: DeterministicSpec) -> Result<(AdfRegression<T>, T)> {
    let lag = select_lag_sic(series, max_lag, spec)?;
    let reg = adf_regression(series, lag, spec)?;
    let p = mackinnon::pvalue(reg.tau, spec);
    Ok((reg, p))
}
