//! Least-squares regression and the statistics block printed under every
//! estimation table.
//!
//! Fits go through a Householder QR of the design; the normal equations are
//! never formed. Goodness-of-fit follows the usual econometrics-package
//! conventions:
//!
//! * `R² = 1 − SSR/TSS`, where TSS is the residual sum of squares of `y` on the
//!   constant column alone. For a column of ones that is the centered total sum
//!   of squares; for a whitened constant (GLS) it is the restricted-model SSR.
//!   Without a constant TSS is the raw `Σy²`.
//! * `adj R² = 1 − (1 − R²)(n − 1)/(n − k)` and `F = (R²/(k − 1)) / ((1 − R²)/(n − k))`.
//! * `ℓ = −(n/2)(1 + ln 2π + ln(SSR/n))`, with per-observation AIC/SIC/HQ.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Qr};
use crate::scalar::{dot, mean, Scalar};

pub use crate::dist::{chi_sq_upper_tail, f_upper_tail, normal_cdf, normal_two_tailed_prob, t_two_tailed_prob};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatBlock<T> {
    pub n: usize,
    pub k: usize,
    pub r_squared: T,
    pub adj_r_squared: T,
    pub se_regression: T,
    pub ssr: T,
    /// `None` when the fit is exact (SSR = 0).
    pub log_likelihood: Option<T>,
    /// `None` without a constant or when the constant is the only regressor.
    pub f_stat: Option<T>,
    pub f_prob: Option<T>,
    pub durbin_watson: T,
    pub mean_dep: T,
    pub sd_dep: T,
    pub aic: Option<T>,
    pub sic: Option<T>,
    pub hq: Option<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegressionFit<T> {
    pub coefficients: Vec<T>,
    pub std_errors: Vec<T>,
    pub t_stats: Vec<T>,
    /// Two-tailed, `n − k` degrees of freedom.
    pub t_probs: Vec<T>,
    /// Residuals in the row order of the design.
    pub residuals: Vec<T>,
    pub covariance: Matrix<T>,
    /// Index of the constant column, if the design has one.
    pub constant_column: Option<usize>,
    pub stats: StatBlock<T>,
}

impl<T: Scalar> RegressionFit<T> {
    pub fn n(&self) -> usize {
        self.stats.n
    }

    pub fn k(&self) -> usize {
        self.stats.k
    }

    pub fn dof(&self) -> usize {
        self.stats.n - self.stats.k
    }

    /// Replaces the coefficient covariance (e.g. with a robust estimator) and
    /// recomputes standard errors, t-statistics and their probabilities.
    pub fn with_covariance(mut self, covariance: Matrix<T>) -> Result<Self> {
        let (se, t, p) = inference(&self.coefficients, &covariance, self.dof())?;
        self.std_errors = se;
        self.t_stats = t;
        self.t_probs = p;
        self.covariance = covariance;
        Ok(self)
    }
}

/// Per-observation information criteria.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InformationCriteria<T> {
    pub aic: T,
    pub sic: T,
    pub hq: T,
}

/// Gaussian log-likelihood at the ML variance estimate `SSR/n`.
pub fn gaussian_log_likelihood<T: Scalar>(ssr: T, n: usize) -> Result<T> {
    if n == 0 {
        return Err(Error::InsufficientObservations { needed: 1, available: 0 });
    }
    if ssr.is_nan() || ssr < T::zero() {
        return Err(Error::Domain(format!("sum of squared residuals must be non-negative, got {ssr}")));
    }
    if ssr == T::zero() {
        return Err(Error::PerfectFit);
    }
    let nf = T::count(n);
    let two_pi = T::lit(2.0) * T::PI();
    Ok(-(nf / T::lit(2.0)) * (T::one() + two_pi.ln() + (ssr / nf).ln()))
}

/// AIC, SIC (Schwarz) and Hannan–Quinn, each divided by `n`.
pub fn information_criteria<T: Scalar>(log_likelihood: T, n: usize, k: usize) -> Result<InformationCriteria<T>> {
    if k == 0 {
        return Err(Error::DegenerateSample { n });
    }
    // ln ln n needs n > e
    if n < 3 || n <= k {
        return Err(Error::DegenerateSample { n });
    }
    let nf = T::count(n);
    let kf = T::count(k);
    let two = T::lit(2.0);
    let m2ll = -two * log_likelihood;
    Ok(InformationCriteria {
        aic: (m2ll + two * kf) / nf,
        sic: (m2ll + kf * nf.ln()) / nf,
        hq: (m2ll + two * kf * nf.ln().ln()) / nf,
    })
}

/// `√(SSR / (n − k))`.
pub fn standard_error_of_regression<T: Scalar>(ssr: T, n: usize, k: usize) -> Result<T> {
    if n <= k {
        return Err(Error::InsufficientObservations { needed: k + 1, available: n });
    }
    Ok((ssr / T::count(n - k)).sqrt())
}

/// Overall F-test of the `k − 1` slopes from `R²`, with its upper-tail probability.
pub fn f_from_r_squared<T: Scalar>(r_squared: T, n: usize, k: usize) -> Result<(T, T)> {
    if k < 2 || n <= k {
        return Err(Error::InsufficientObservations { needed: k.max(2) + 1, available: n });
    }
    let dof = n - k;
    let f = (r_squared / T::count(k - 1)) / ((T::one() - r_squared) / T::count(dof));
    let p = if f.is_finite() { f_upper_tail(f, k - 1, dof)? } else { T::zero() };
    Ok((f, p))
}

/// Durbin–Watson statistic of residuals in their given order.
pub fn durbin_watson<T: Scalar>(residuals: &[T]) -> Result<T> {
    if residuals.len() < 2 {
        return Err(Error::InsufficientObservations { needed: 1, available: residuals.len() });
    }
    let denom: T = residuals.iter().map(|&e| e * e).sum();
    if denom == T::zero() {
        return Err(Error::DegenerateResiduals { unit: None });
    }
    let num: T = residuals.windows(2).map(|w| (w[1] - w[0]) * (w[1] - w[0])).sum();
    Ok(num / denom)
}

/// Index of a column whose entries are all equal and nonzero.
pub fn detect_constant_column<T: Scalar>(x: &Matrix<T>) -> Option<usize> {
    (0..x.cols()).find(|&j| {
        let first = x[(0, j)];
        first != T::zero() && (1..x.rows()).all(|i| x[(i, j)] == first)
    })
}

/// OLS of `y` on `x`; a constant column is detected automatically.
pub fn ols_fit<T: Scalar>(y: &[T], x: &Matrix<T>) -> Result<RegressionFit<T>> {
    let constant = if x.rows() > 0 { detect_constant_column(x) } else { None };
    ols_fit_with_constant(y, x, constant)
}

/// OLS with the constant column given explicitly. Used for whitened designs,
/// where the transformed constant is no longer a column of equal values.
pub fn ols_fit_with_constant<T: Scalar>(y: &[T], x: &Matrix<T>, constant_column: Option<usize>) -> Result<RegressionFit<T>> {
    let (n, k) = (x.rows(), x.cols());
    assert_eq!(y.len(), n, "dependent length must equal design rows");
    if k == 0 {
        return Err(Error::InvalidSpec("design matrix has no columns".into()));
    }
    if n <= k {
        return Err(Error::InsufficientObservations { needed: k + 1, available: n });
    }
    let qr = Qr::new(x)?;
    let beta = qr.solve(y);
    let fitted = x.mul_vec(&beta);
    let residuals: Vec<T> = y.iter().zip(&fitted).map(|(&a, &b)| a - b).collect();
    let raw_ssr: T = residuals.iter().map(|&e| e * e).sum();
    let yy = dot(y, y);
    // Exact fits leave only rounding noise in the residuals.
    let perfect = raw_ssr <= T::lit(64.0) * T::count(n) * T::epsilon() * T::epsilon() * yy;
    let ssr = if perfect { T::zero() } else { raw_ssr };

    let dof = n - k;
    let s2 = ssr / T::count(dof);
    let covariance = qr.gram_inverse().scale(s2);
    let (std_errors, t_stats, t_probs) = inference(&beta, &covariance, dof)?;

    let tss = match constant_column {
        Some(c) => {
            let col = x.column(c);
            let cc = dot(&col, &col);
            let cy = dot(&col, y);
            yy - cy * cy / cc
        }
        None => yy,
    };
    let r_squared = if tss > T::zero() { T::one() - ssr / tss } else { T::one() };
    let nf = T::count(n);
    let adj_r_squared = T::one() - (T::one() - r_squared) * (nf - T::one()) / T::count(dof);
    let (f_stat, f_prob) = match constant_column {
        Some(_) if k > 1 => {
            let (f, p) = f_from_r_squared(r_squared, n, k)?;
            (Some(f), Some(p))
        }
        _ => (None, None),
    };

    let mean_dep = mean(y);
    let sd_dep = (y.iter().map(|&v| (v - mean_dep) * (v - mean_dep)).sum::<T>() / (nf - T::one())).sqrt();
    let durbin_watson = if ssr == T::zero() {
        T::nan()
    } else {
        durbin_watson(&residuals)?
    };
    let log_likelihood = gaussian_log_likelihood(ssr, n).ok();
    let ic = log_likelihood.and_then(|ll| information_criteria(ll, n, k).ok());

    Ok(RegressionFit {
        coefficients: beta,
        std_errors,
        t_stats,
        t_probs,
        residuals,
        covariance,
        constant_column,
        stats: StatBlock {
            n,
            k,
            r_squared,
            adj_r_squared,
            se_regression: s2.sqrt(),
            ssr,
            log_likelihood,
            f_stat,
            f_prob,
            durbin_watson,
            mean_dep,
            sd_dep,
            aic: ic.map(|c| c.aic),
            sic: ic.map(|c| c.sic),
            hq: ic.map(|c| c.hq),
        },
    })
}

type Inference<T> = (Vec<T>, Vec<T>, Vec<T>);

fn inference<T: Scalar>(beta: &[T], covariance: &Matrix<T>, dof: usize) -> Result<Inference<T>> {
    let se: Vec<T> = covariance.diagonal().into_iter().map(|v| v.max(T::zero()).sqrt()).collect();
    let t: Vec<T> = beta.iter().zip(&se).map(|(&b, &s)| b / s).collect();
    let p = t
        .iter()
        .map(|&ti| if ti.is_nan() { Ok(T::nan()) } else { t_two_tailed_prob(ti, dof) })
        .collect::<Result<Vec<T>>>()?;
    Ok((se, t, p))
}
