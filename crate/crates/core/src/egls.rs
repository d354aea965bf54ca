//! Panel EGLS with one-step period-SUR weighting and period-SUR
//! panel-corrected standard errors.
//!
//! Rows of every design handled here are grouped by unit: unit `i` owns rows
//! `i·T .. (i+1)·T`, in period order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{cholesky, forward_substitute, Matrix, Qr};
use crate::panel::{ModelSpec, PanelDataset, PanelDesign};
use crate::regress::{durbin_watson, ols_fit_with_constant, RegressionFit, StatBlock};
use crate::scalar::{compensated_sum, mean, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CovarianceSource {
    Estimated,
    Supplied,
}

/// Divisor of the cross-period residual covariance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CovarianceDivisor {
    /// `1/N`, the moment estimator.
    #[default]
    Units,
    /// `1/(N − 1)`.
    UnitsMinusOne,
}

/// Scaling applied to the PCSE sandwich.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PcseConvention {
    /// Multiply by `n/(n − k)`.
    #[default]
    DofCorrected,
    Uncorrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct EglsOptions {
    pub divisor: CovarianceDivisor,
    pub pcse: PcseConvention,
}

/// `T × T` cross-period covariance together with its lower Cholesky factor.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodCovariance<T> {
    sigma: Matrix<T>,
    source: CovarianceSource,
    #[serde(skip)]
    lower: Matrix<T>,
}

impl<T: Scalar> PeriodCovariance<T> {
    /// A user-supplied covariance; must be symmetric positive definite.
    pub fn supplied(sigma: Matrix<T>) -> Result<Self> {
        Self::build(sigma, CovarianceSource::Supplied, 0)
    }

    pub fn identity(periods: usize) -> Self {
        Self::supplied(Matrix::identity(periods)).expect("identity is positive definite")
    }

    fn build(sigma: Matrix<T>, source: CovarianceSource, units: usize) -> Result<Self> {
        let t = sigma.rows();
        let singular = Error::SingularPeriodCovariance { units, periods: t };
        if t == 0 || sigma.cols() != t {
            return Err(singular);
        }
        let scale = sigma.diagonal().into_iter().fold(T::zero(), T::max);
        if !sigma.is_symmetric(T::lit(1e3) * T::epsilon() * scale) {
            return Err(Error::InvalidSpec("period covariance must be symmetric".into()));
        }
        let lower = cholesky(&sigma).ok_or(singular)?;
        Ok(Self { sigma, source, lower })
    }

    pub fn sigma(&self) -> &Matrix<T> {
        &self.sigma
    }

    /// `L` with `sigma = L·Lᵀ`.
    pub fn cholesky_lower(&self) -> &Matrix<T> {
        &self.lower
    }

    pub fn source(&self) -> CovarianceSource {
        self.source
    }

    pub fn periods(&self) -> usize {
        self.sigma.rows()
    }
}

fn cross_period_moments<T: Scalar>(residuals: &Matrix<T>, divisor: T) -> Matrix<T> {
    let (n, t) = (residuals.rows(), residuals.cols());
    let mut sigma = Matrix::zeros(t, t);
    for a in 0..t {
        for b in 0..=a {
            let s = compensated_sum((0..n).map(|i| residuals[(i, a)] * residuals[(i, b)])) / divisor;
            sigma[(a, b)] = s;
            sigma[(b, a)] = s;
        }
    }
    sigma
}

/// `σ_ts = (1/N)·Σ_i e_it·e_is` from an `N × T` residual matrix.
pub fn estimate_period_covariance<T: Scalar>(
    residuals: &Matrix<T>,
    divisor: CovarianceDivisor,
) -> Result<PeriodCovariance<T>> {
    let (n, t) = (residuals.rows(), residuals.cols());
    if n <= t {
        return Err(Error::SingularPeriodCovariance { units: n, periods: t });
    }
    let d = match divisor {
        CovarianceDivisor::Units => T::count(n),
        CovarianceDivisor::UnitsMinusOne => T::count(n - 1),
    };
    PeriodCovariance::build(cross_period_moments(residuals, d), CovarianceSource::Estimated, n)
}

fn check_grouping(rows: usize, periods: usize) -> Result<usize> {
    if periods == 0 || !rows.is_multiple_of(periods) {
        return Err(Error::InvalidSpec(format!("{rows} rows do not split into blocks of {periods} periods")));
    }
    Ok(rows / periods)
}

/// Premultiplies every unit's `T`-row block of `(y, X)` by `L⁻¹`.
pub fn period_sur_transform<T: Scalar>(
    y: &[T],
    x: &Matrix<T>,
    cov: &PeriodCovariance<T>,
) -> Result<(Vec<T>, Matrix<T>)> {
    let t = cov.periods();
    let units = check_grouping(x.rows(), t)?;
    assert_eq!(y.len(), x.rows(), "dependent length must equal design rows");
    let l = cov.cholesky_lower();
    let k = x.cols();
    let mut y_out = Vec::with_capacity(y.len());
    let mut x_out = Matrix::zeros(x.rows(), k);
    for i in 0..units {
        let rows = i * t..(i + 1) * t;
        y_out.extend(forward_substitute(l, &y[rows.clone()]));
        for j in 0..k {
            let col: Vec<T> = rows.clone().map(|r| x[(r, j)]).collect();
            for (s, v) in forward_substitute(l, &col).into_iter().enumerate() {
                x_out[(i * t + s, j)] = v;
            }
        }
    }
    Ok((y_out, x_out))
}

/// Period-SUR PCSE: `(X̃ᵀX̃)⁻¹ (Σ_i X̃_iᵀ Ω̂ X̃_i) (X̃ᵀX̃)⁻¹`, with `Ω̂` the
/// cross-period covariance of the transformed residuals.
pub fn pcse_covariance<T: Scalar>(
    x: &Matrix<T>,
    residuals: &[T],
    periods: usize,
    convention: PcseConvention,
) -> Result<Matrix<T>> {
    let units = check_grouping(x.rows(), periods)?;
    let (n, k) = (x.rows(), x.cols());
    if n <= k {
        return Err(Error::InsufficientObservations { needed: k + 1, available: n });
    }
    let resid = Matrix::from_row_major(units, periods, residuals.to_vec());
    let omega = cross_period_moments(&resid, T::count(units));

    let mut meat = Matrix::zeros(k, k);
    for i in 0..units {
        let xi = x.row_block(i * periods, (i + 1) * periods);
        let part = xi.transpose().matmul(&omega).matmul(&xi);
        for a in 0..k {
            for b in 0..k {
                meat[(a, b)] = meat[(a, b)] + part[(a, b)];
            }
        }
    }
    let bread = Qr::new(x)?.gram_inverse();
    let mut v = bread.matmul(&meat).matmul(&bread);
    if convention == PcseConvention::DofCorrected {
        v = v.scale(T::count(n) / T::count(n - k));
    }
    // Symmetrize away rounding asymmetry from the triple product.
    let half = T::lit(0.5);
    let mut sym = Matrix::zeros(k, k);
    for a in 0..k {
        for b in 0..k {
            sym[(a, b)] = half * (v[(a, b)] + v[(b, a)]);
        }
    }
    Ok(sym)
}

/// Raw-data statistics at the EGLS coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnweightedStats<T> {
    pub r_squared: T,
    pub ssr: T,
    pub durbin_watson: T,
    pub mean_dep: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EglsFit<T> {
    /// Stage-2 fit on the transformed data, carrying the PCSE covariance.
    pub base: RegressionFit<T>,
    pub unweighted: UnweightedStats<T>,
    /// `y − Xβ̂` on the raw data, unit-major.
    pub unweighted_residuals: Vec<T>,
    pub period_cov: PeriodCovariance<T>,
    pub columns: Vec<String>,
    pub n_units: usize,
    pub n_periods: usize,
}

impl<T: Scalar> EglsFit<T> {
    pub fn weighted_stats(&self) -> &StatBlock<T> {
        &self.base.stats
    }

    pub fn weighted_residuals(&self) -> &[T] {
        &self.base.residuals
    }

    /// Residuals as an `N × T` matrix.
    pub fn residual_matrix(&self, weighted: bool) -> Matrix<T> {
        let e = if weighted { &self.base.residuals } else { &self.unweighted_residuals };
        Matrix::from_row_major(self.n_units, self.n_periods, e.clone())
    }
}

pub fn egls_fit<T: Scalar>(
    ds: &PanelDataset<T>,
    spec: &ModelSpec,
    cov_override: Option<&PeriodCovariance<T>>,
    options: EglsOptions,
) -> Result<EglsFit<T>> {
    egls_fit_design(&spec.design(ds)?, cov_override, options)
}

/// Stage-1 pooled OLS, period covariance, whitening, stage-2 OLS, PCSE.
pub fn egls_fit_design<T: Scalar>(
    design: &PanelDesign<T>,
    cov_override: Option<&PeriodCovariance<T>>,
    options: EglsOptions,
) -> Result<EglsFit<T>> {
    let (units, periods) = (design.n_units, design.n_periods);
    let cov = match cov_override {
        Some(c) => {
            if c.periods() != periods {
                return Err(Error::InvalidSpec(format!(
                    "supplied covariance is {0}x{0}, panel has {periods} periods",
                    c.periods()
                )));
            }
            c.clone()
        }
        None => {
            if units <= periods {
                return Err(Error::SingularPeriodCovariance { units, periods });
            }
            let first = ols_fit_with_constant(&design.y, &design.x, design.constant_column)?;
            let resid = Matrix::from_row_major(units, periods, first.residuals);
            estimate_period_covariance(&resid, options.divisor)?
        }
    };

    let (y_w, x_w) = period_sur_transform(&design.y, &design.x, &cov)?;
    let stage2 = ols_fit_with_constant(&y_w, &x_w, design.constant_column)?;
    let pcse = pcse_covariance(&x_w, &stage2.residuals, periods, options.pcse)?;
    let base = stage2.with_covariance(pcse)?;

    let fitted = design.x.mul_vec(&base.coefficients);
    let raw: Vec<T> = design.y.iter().zip(&fitted).map(|(&a, &b)| a - b).collect();
    let ssr = compensated_sum(raw.iter().map(|&e| e * e));
    let mean_dep = mean(&design.y);
    let tss = compensated_sum(design.y.iter().map(|&v| (v - mean_dep) * (v - mean_dep)));
    let r_squared = if design.constant_column.is_some() {
        T::one() - ssr / tss
    } else {
        T::one() - ssr / compensated_sum(design.y.iter().map(|&v| v * v))
    };
    let unweighted = UnweightedStats {
        r_squared,
        ssr,
        durbin_watson: if ssr == T::zero() { T::nan() } else { durbin_watson(&raw)? },
        mean_dep,
    };

    Ok(EglsFit {
        base,
        unweighted,
        unweighted_residuals: raw,
        period_cov: cov,
        columns: design.columns.clone(),
        n_units: units,
        n_periods: periods,
    })
}
