//! Im–Pesaran–Shin W-t-bar.

use super::adf::{adf_regression, select_lag_sic};
use super::ips_table::{IPS_CONSTANT, IPS_MAX_LAG, IPS_TREND, IPS_T_GRID};
use super::{resolve_max_lag, DeterministicSpec, UnitRootResult, UnitRootTest};
use crate::dist::normal_cdf;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Null `(E[t], Var[t])` of the ADF t-ratio for series length `t_len` and
/// lag `lag`, interpolated linearly in `T` between tabulated lengths.
pub fn ips_moments(t_len: usize, lag: usize, spec: DeterministicSpec) -> Result<(f64, f64)> {
    let table = match spec {
        DeterministicSpec::ConstantOnly => &IPS_CONSTANT,
        DeterministicSpec::TrendAndConstant => &IPS_TREND,
        DeterministicSpec::None => return Err(Error::InvalidSpec("IPS needs a constant".into())),
    };
    let unsupported = Error::UnsupportedSampleSize { periods: t_len, lag };
    if lag > IPS_MAX_LAG {
        return Err(unsupported);
    }
    let Some(hi) = IPS_T_GRID.iter().position(|&g| g >= t_len) else {
        return Err(unsupported);
    };
    if IPS_T_GRID[hi] == t_len {
        return table[hi][lag].ok_or(unsupported);
    }
    if hi == 0 {
        return Err(unsupported);
    }
    let (Some((m0, v0)), Some((m1, v1))) = (table[hi - 1][lag], table[hi][lag]) else {
        return Err(unsupported);
    };
    let (t0, t1) = (IPS_T_GRID[hi - 1] as f64, IPS_T_GRID[hi] as f64);
    let w = (t_len as f64 - t0) / (t1 - t0);
    Ok((m0 + w * (m1 - m0), v0 + w * (v1 - v0)))
}

pub fn ips_test<T: Scalar>(panel: &Matrix<T>, spec: DeterministicSpec, max_lag: Option<usize>) -> Result<UnitRootResult<T>> {
    if spec == DeterministicSpec::None {
        return Err(Error::InvalidSpec("IPS is defined only with a constant or constant and trend".into()));
    }
    let (n_units, t_len) = (panel.rows(), panel.cols());
    if n_units < 2 {
        return Err(Error::InsufficientObservations { needed: 2, available: n_units });
    }
    let max_lag = resolve_max_lag(t_len, spec, max_lag)?;
    let mut taus = Vec::with_capacity(n_units);
    let mut e_sum = 0.0;
    let mut v_sum = 0.0;
    let mut lags = Vec::with_capacity(n_units);
    for i in 0..n_units {
        let y = panel.row(i);
        let lag = select_lag_sic(y, max_lag, spec)?;
        let (e, v) = ips_moments(t_len, lag, spec)?;
        taus.push(adf_regression(y, lag, spec)?.tau);
        e_sum += e;
        v_sum += v;
        lags.push(lag);
    }
    let n = T::count(n_units);
    let t_bar = taus.iter().copied().sum::<T>() / n;
    let w = n.sqrt() * (t_bar - T::lit(e_sum) / n) / (T::lit(v_sum) / n).sqrt();
    Ok(UnitRootResult::computed(UnitRootTest::Ips, spec, w, normal_cdf(w), lags))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_range() {
        assert!(ips_moments(7, 0, DeterministicSpec::ConstantOnly).is_ok());
        assert!(matches!(
            ips_moments(5, 0, DeterministicSpec::ConstantOnly),
            Err(Error::UnsupportedSampleSize { periods: 5, lag: 0 })
        ));
        assert!(matches!(
            ips_moments(101, 0, DeterministicSpec::TrendAndConstant),
            Err(Error::UnsupportedSampleSize { .. })
        ));
        assert!(matches!(
            ips_moments(7, 3, DeterministicSpec::TrendAndConstant),
            Err(Error::UnsupportedSampleSize { .. })
        ));
    }

    #[test]
    fn interpolation_is_between_neighbours() {
        let (a, _) = ips_moments(40, 1, DeterministicSpec::ConstantOnly).unwrap();
        let (b, _) = ips_moments(50, 1, DeterministicSpec::ConstantOnly).unwrap();
        let (m, _) = ips_moments(45, 1, DeterministicSpec::ConstantOnly).unwrap();
        assert!((m - 0.5 * (a + b)).abs() < 1e-12);
    }

    #[test]
    fn trend_moments_are_more_negative() {
        for &t in &[10, 25, 50, 100] {
            let (c, _) = ips_moments(t, 0, DeterministicSpec::ConstantOnly).unwrap();
            let (ct, _) = ips_moments(t, 0, DeterministicSpec::TrendAndConstant).unwrap();
            assert!(ct < c);
        }
    }
}
