//! Levin–Lin–Chu adjusted t* and Breitung's λ.

use super::adf::{adf_regression, select_lag_sic};
use super::{bartlett_lrv, newey_west_bandwidth, residualize, resolve_max_lag, DeterministicSpec, UnitRootResult, UnitRootTest};
use crate::dist::normal_cdf;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{compensated_sum, mean, Scalar};

/// Mean and standard-deviation adjustments `(μ*, σ*)` indexed by the average
/// effective sample `T̃`: columns are no deterministics, constant, constant and trend.
const LLC_ADJUSTMENT: [(f64, [(f64, f64); 3]); 13] = [
    (25.0, [(0.004, 1.049), (-0.554, 0.919), (-0.703, 1.003)]),
    (30.0, [(0.003, 1.035), (-0.546, 0.889), (-0.674, 0.949)]),
    (35.0, [(0.002, 1.027), (-0.541, 0.867), (-0.653, 0.906)]),
    (40.0, [(0.002, 1.021), (-0.537, 0.850), (-0.637, 0.871)]),
    (45.0, [(0.001, 1.017), (-0.533, 0.837), (-0.624, 0.842)]),
    (50.0, [(0.001, 1.014), (-0.531, 0.826), (-0.614, 0.818)]),
    (60.0, [(0.001, 1.011), (-0.527, 0.810), (-0.598, 0.780)]),
    (70.0, [(0.000, 1.008), (-0.524, 0.798), (-0.587, 0.751)]),
    (80.0, [(0.000, 1.007), (-0.521, 0.789), (-0.578, 0.728)]),
    (90.0, [(0.000, 1.006), (-0.520, 0.782), (-0.571, 0.710)]),
    (100.0, [(0.000, 1.005), (-0.518, 0.776), (-0.566, 0.695)]),
    (250.0, [(0.000, 1.001), (-0.509, 0.742), (-0.533, 0.603)]),
    (500.0, [(0.000, 1.000), (-0.504, 0.727), (-0.526, 0.572)]),
];

/// `(μ*, σ*)` at `t_tilde`, linear between rows and clamped at both ends.
pub fn llc_adjustment(t_tilde: f64, spec: DeterministicSpec) -> (f64, f64) {
    let col = match spec {
        DeterministicSpec::None => 0,
        DeterministicSpec::ConstantOnly => 1,
        DeterministicSpec::TrendAndConstant => 2,
    };
    let first = LLC_ADJUSTMENT[0];
    let last = LLC_ADJUSTMENT[LLC_ADJUSTMENT.len() - 1];
    if t_tilde <= first.0 {
        return first.1[col];
    }
    if t_tilde >= last.0 {
        return last.1[col];
    }
    let j = LLC_ADJUSTMENT.iter().position(|r| r.0 >= t_tilde).expect("inside the table");
    let (t0, r0) = LLC_ADJUSTMENT[j - 1];
    let (t1, r1) = LLC_ADJUSTMENT[j];
    let w = (t_tilde - t0) / (t1 - t0);
    let (m0, s0) = r0[col];
    let (m1, s1) = r1[col];
    (m0 + w * (m1 - m0), s0 + w * (s1 - s0))
}

/// Pooled `t*` with its per-unit lags. `panel` is `N × T`.
pub fn llc_test<T: Scalar>(panel: &Matrix<T>, spec: DeterministicSpec, max_lag: Option<usize>) -> Result<UnitRootResult<T>> {
    let (n_units, t_len) = (panel.rows(), panel.cols());
    if n_units < 2 {
        return Err(Error::InsufficientObservations { needed: 2, available: n_units });
    }
    let max_lag = resolve_max_lag(t_len, spec, max_lag)?;
    let bandwidth = newey_west_bandwidth(t_len);

    let mut e_all = Vec::new();
    let mut v_all = Vec::new();
    let mut ratios = Vec::with_capacity(n_units);
    let mut lags = Vec::with_capacity(n_units);
    for i in 0..n_units {
        let y = panel.row(i);
        let lag = select_lag_sic(y, max_lag, spec)?;
        let reg = adf_regression(y, lag, spec)?;
        let sigma_e = reg.fit.stats.se_regression;

        // Partial the lags and deterministics out of Δy_t and y_{t−1}.
        let start = reg.first_row;
        let design = adf_others(y, lag, spec, start, reg.fit.n());
        let dy: Vec<T> = (start..t_len).map(|t| y[t] - y[t - 1]).collect();
        let ylag: Vec<T> = (start..t_len).map(|t| y[t - 1]).collect();
        let e = residualize(&dy, &design)?;
        let v = residualize(&ylag, &design)?;
        e_all.extend(e.into_iter().map(|a| a / sigma_e));
        v_all.extend(v.into_iter().map(|a| a / sigma_e));

        let mut diffs: Vec<T> = (1..t_len).map(|t| y[t] - y[t - 1]).collect();
        if spec != DeterministicSpec::None {
            let m = mean(&diffs);
            diffs.iter_mut().for_each(|d| *d = *d - m);
        }
        let sigma_y = bartlett_lrv(&diffs, bandwidth).sqrt();
        ratios.push(sigma_y / sigma_e);
        lags.push(lag);
    }

    let svv = compensated_sum(v_all.iter().map(|&v| v * v));
    let sev = compensated_sum(e_all.iter().zip(&v_all).map(|(&e, &v)| e * v));
    let delta = sev / svv;
    let ssr = compensated_sum(e_all.iter().zip(&v_all).map(|(&e, &v)| (e - delta * v) * (e - delta * v)));
    let sigma2 = ssr / T::count(e_all.len());
    let se = (sigma2 / svv).sqrt();
    let t_delta = delta / se;

    let p_bar = lags.iter().sum::<usize>() as f64 / n_units as f64;
    let t_tilde = t_len as f64 - p_bar - 1.0;
    let (mu, sd) = llc_adjustment(t_tilde, spec);
    let s_n = mean(&ratios);
    let nt = T::count(n_units) * T::lit(t_tilde);
    let t_star = (t_delta - nt * s_n / sigma2 * se * T::lit(mu)) / T::lit(sd);
    if !t_star.is_finite() {
        return Err(Error::DegenerateResiduals { unit: None });
    }
    Ok(UnitRootResult::computed(UnitRootTest::Llc, spec, t_star, normal_cdf(t_star), lags))
}

/// Lagged differences and deterministic terms of the ADF design, without `y_{t−1}`.
fn adf_others<T: Scalar>(y: &[T], lag: usize, spec: DeterministicSpec, start: usize, rows: usize) -> Matrix<T> {
    let k = lag + spec.terms();
    let mut m = Matrix::zeros(rows, k);
    for (r, t) in (start..y.len()).enumerate() {
        for j in 1..=lag {
            m[(r, j - 1)] = y[t - j] - y[t - j - 1];
        }
        let mut c = lag;
        if spec == DeterministicSpec::TrendAndConstant {
            m[(r, c)] = T::count(t);
            c += 1;
        }
        if spec != DeterministicSpec::None {
            m[(r, c)] = T::one();
        }
    }
    m
}

/// Breitung's λ under constant and trend. Only the autoregressive part is
/// removed before the forward-orthogonalizing / detrending transforms.
pub fn breitung_test<T: Scalar>(panel: &Matrix<T>, max_lag: Option<usize>) -> Result<UnitRootResult<T>> {
    let spec = DeterministicSpec::TrendAndConstant;
    let (n_units, t_len) = (panel.rows(), panel.cols());
    if n_units < 2 {
        return Err(Error::InsufficientObservations { needed: 2, available: n_units });
    }
    if t_len < 6 {
        return Err(Error::InsufficientObservations { needed: 6, available: t_len });
    }
    let max_lag = resolve_max_lag(t_len, spec, max_lag)?;

    let mut e_all = Vec::new();
    let mut v_all = Vec::new();
    let mut lags = Vec::with_capacity(n_units);
    for i in 0..n_units {
        let y = panel.row(i);
        let lag = select_lag_sic(y, max_lag, spec)?;
        let reg = adf_regression(y, lag, spec)?;
        let s = reg.fit.stats.se_regression;
        let beta = &reg.fit.coefficients[1..=lag];
        let ar = |t: usize| -> T {
            beta.iter().enumerate().map(|(j, &b)| b * (y[t - j - 1] - y[t - j - 2])).sum()
        };
        let start = lag + 1;
        let a: Vec<T> = (start..t_len).map(|t| (y[t] - y[t - 1] - ar(t)) / s).collect();
        // Levels run one step past the last difference so the detrending
        // slope spans every difference; otherwise it correlates with the
        // forward-orthogonalized errors.
        let b: Vec<T> = (start..=t_len).map(|t| (y[t - 1] - ar(t)) / s).collect();
        let m = a.len();
        if m < 3 {
            return Err(Error::InsufficientObservations { needed: 3, available: m });
        }
        let span = T::count(m);
        for s_idx in 0..m - 1 {
            let rest = m - 1 - s_idx;
            let future = compensated_sum(a[s_idx + 1..].iter().copied()) / T::count(rest);
            let w = (T::count(rest) / T::count(rest + 1)).sqrt();
            e_all.push(w * (a[s_idx] - future));
            v_all.push(b[s_idx] - b[0] - T::count(s_idx) / span * (b[m] - b[0]));
        }
        lags.push(lag);
    }

    let svv = compensated_sum(v_all.iter().map(|&v| v * v));
    let sev = compensated_sum(e_all.iter().zip(&v_all).map(|(&e, &v)| e * v));
    let alpha = sev / svv;
    let ssr = compensated_sum(e_all.iter().zip(&v_all).map(|(&e, &v)| (e - alpha * v) * (e - alpha * v)));
    let sigma2 = ssr / T::count(e_all.len() - 1);
    let lambda = alpha * svv.sqrt() / sigma2.sqrt();
    if !lambda.is_finite() {
        return Err(Error::DegenerateResiduals { unit: None });
    }
    Ok(UnitRootResult::computed(UnitRootTest::Breitung, spec, lambda, normal_cdf(lambda), lags))
}
