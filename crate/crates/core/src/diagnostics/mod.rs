//! Residual diagnostics: normality, autocorrelation, heteroskedasticity,
//! cross-section dependence and multicollinearity.

mod dw;

use serde::{Deserialize, Serialize};

use crate::egls::EglsFit;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::panel::{ModelSpec, PanelDataset};
use crate::regress::{chi_sq_upper_tail, normal_two_tailed_prob, ols_fit_with_constant, RegressionFit};
use crate::scalar::{compensated_sum, mean, Scalar};

pub use dw::{dw_decide, DwBounds, DwDecision};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestStat<T> {
    pub stat: T,
    pub prob: T,
}

/// Jarque–Bera with population (divisor-`n`) moments.
pub fn jarque_bera<T: Scalar>(residuals: &[T]) -> Result<TestStat<T>> {
    let n = residuals.len();
    if n < 4 {
        return Err(Error::InsufficientObservations { needed: 4, available: n });
    }
    let m = mean(residuals);
    let moment = |p: i32| compensated_sum(residuals.iter().map(|&e| (e - m).powi(p))) / T::count(n);
    let m2 = moment(2);
    if !(m2 > T::zero()) {
        return Err(Error::DegenerateResiduals { unit: None });
    }
    let skew = moment(3) / m2.powf(T::lit(1.5));
    let kurt = moment(4) / (m2 * m2);
    let three = T::lit(3.0);
    let stat = T::count(n) * (skew * skew / T::lit(6.0) + (kurt - three) * (kurt - three) / T::lit(24.0));
    Ok(TestStat { stat, prob: chi_sq_upper_tail(stat, 2)? })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BpgResult<T> {
    pub lm_stat: T,
    pub dof: usize,
    pub prob: T,
    pub homoskedastic: bool,
    /// Regression of squared residuals on the original design.
    pub aux_fit: RegressionFit<T>,
}

/// Breusch–Pagan–Godfrey: regress `e²` on the original design, `LM = n·R²`
/// with `k − 1` degrees of freedom. `x` must contain the constant.
pub fn bpg_test<T: Scalar>(residuals: &[T], x: &Matrix<T>, constant_column: usize) -> Result<BpgResult<T>> {
    let e2: Vec<T> = residuals.iter().map(|&e| e * e).collect();
    let aux = ols_fit_with_constant(&e2, x, Some(constant_column))?;
    let n = x.rows();
    let dof = x.cols().saturating_sub(1).max(1);
    let constant_target = e2.iter().all(|&v| v == e2[0]);
    let lm_stat = if constant_target { T::zero() } else { T::count(n) * aux.stats.r_squared };
    let prob = chi_sq_upper_tail(lm_stat.max(T::zero()), dof)?;
    Ok(BpgResult { lm_stat, dof, prob, homoskedastic: prob > T::lit(0.05), aux_fit: aux })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChiSqStat<T> {
    pub stat: T,
    pub dof: usize,
    pub prob: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CsdBlock<T> {
    pub bp_lm: ChiSqStat<T>,
    pub pesaran_scaled_lm: TestStat<T>,
    pub pesaran_cd: TestStat<T>,
    pub demeaned: bool,
}

/// Pairwise cross-section correlations of an `N × T` residual matrix, `i < j`
/// in row-major order.
pub fn cross_section_correlations<T: Scalar>(residuals: &Matrix<T>, demean: bool) -> Result<Vec<T>> {
    let (n, t) = (residuals.rows(), residuals.cols());
    let rows: Vec<Vec<T>> = (0..n)
        .map(|i| {
            let r = residuals.row(i);
            let m = if demean { mean(r) } else { T::zero() };
            r.iter().map(|&v| v - m).collect()
        })
        .collect();
    let norms: Vec<T> = rows.iter().map(|r| compensated_sum(r.iter().map(|&v| v * v)).sqrt()).collect();
    if let Some(i) = norms.iter().position(|&s| !(s > T::zero())) {
        return Err(Error::DegenerateResiduals { unit: Some(format!("#{i}")) });
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let c = compensated_sum((0..t).map(|s| rows[i][s] * rows[j][s]));
            out.push(c / (norms[i] * norms[j]));
        }
    }
    Ok(out)
}

/// Breusch–Pagan LM, Pesaran scaled LM and Pesaran CD.
pub fn csd_tests<T: Scalar>(residuals: &Matrix<T>, demean: bool) -> Result<CsdBlock<T>> {
    let (n, t) = (residuals.rows(), residuals.cols());
    if n < 2 {
        return Err(Error::InsufficientObservations { needed: 2, available: n });
    }
    if t < 3 {
        return Err(Error::InsufficientObservations { needed: 3, available: t });
    }
    let rho = cross_section_correlations(residuals, demean)?;
    let tf = T::count(t);
    let pairs = n * (n - 1) / 2;
    let nn1 = T::count(n * (n - 1));

    let lm = compensated_sum(rho.iter().map(|&r| tf * r * r));
    let scaled = (T::one() / nn1).sqrt() * compensated_sum(rho.iter().map(|&r| tf * r * r - T::one()));
    let cd = (T::lit(2.0) * tf / nn1).sqrt() * compensated_sum(rho.iter().copied());
    Ok(CsdBlock {
        bp_lm: ChiSqStat { stat: lm, dof: pairs, prob: chi_sq_upper_tail(lm, pairs)? },
        pesaran_scaled_lm: TestStat { stat: scaled, prob: normal_two_tailed_prob(scaled) },
        pesaran_cd: TestStat { stat: cd, prob: normal_two_tailed_prob(cd) },
        demeaned: demean,
    })
}

/// Named symmetric correlation matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationMatrix<T> {
    pub names: Vec<String>,
    pub matrix: Matrix<T>,
}

impl<T: Scalar> CorrelationMatrix<T> {
    pub fn get(&self, a: &str, b: &str) -> Option<T> {
        let i = self.names.iter().position(|n| n == a)?;
        let j = self.names.iter().position(|n| n == b)?;
        Some(self.matrix[(i, j)])
    }

    /// Restriction to the named variables, in the given order.
    pub fn sub(&self, names: &[String]) -> Option<Self> {
        let idx: Vec<usize> =
            names.iter().map(|a| self.names.iter().position(|n| n == a)).collect::<Option<_>>()?;
        let k = idx.len();
        let mut m = Matrix::zeros(k, k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(a, b)] = self.matrix[(i, j)];
            }
        }
        Some(Self { names: names.to_vec(), matrix: m })
    }
}

/// Pearson correlation of two equally long samples.
pub fn pearson<T: Scalar>(a: &[T], b: &[T]) -> Option<T> {
    assert_eq!(a.len(), b.len());
    let (ma, mb) = (mean(a), mean(b));
    let saa = compensated_sum(a.iter().map(|&v| (v - ma) * (v - ma)));
    let sbb = compensated_sum(b.iter().map(|&v| (v - mb) * (v - mb)));
    if !(saa > T::zero() && sbb > T::zero()) {
        return None;
    }
    let sab = compensated_sum(a.iter().zip(b).map(|(&u, &v)| (u - ma) * (v - mb)));
    Some((sab / (saa * sbb).sqrt()).max(-T::one()).min(T::one()))
}

/// Pooled Pearson correlations over all `N × T` observations.
pub fn pearson_matrix<T: Scalar, S: AsRef<str>>(ds: &PanelDataset<T>, vars: &[S]) -> Result<CorrelationMatrix<T>> {
    if vars.len() < 2 {
        return Err(Error::InvalidSpec("correlation matrix needs at least two variables".into()));
    }
    let data: Vec<Vec<T>> = vars.iter().map(|v| ds.stacked(v.as_ref())).collect::<Result<_>>()?;
    for (v, d) in vars.iter().zip(&data) {
        if d.iter().all(|&x| x == d[0]) {
            return Err(Error::DegenerateVariable(v.as_ref().to_string()));
        }
    }
    let k = vars.len();
    let mut m = Matrix::identity(k);
    for i in 0..k {
        for j in i + 1..k {
            let r = pearson(&data[i], &data[j]).ok_or_else(|| Error::DegenerateVariable(vars[i].as_ref().to_string()))?;
            m[(i, j)] = r;
            m[(j, i)] = r;
        }
    }
    Ok(CorrelationMatrix { names: vars.iter().map(|v| v.as_ref().to_string()).collect(), matrix: m })
}

/// How a pairwise correlation is compared with the model R².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KleinRule {
    /// `ρ² < R²`.
    #[default]
    SquaredCorrelation,
    /// `|ρ| < R²`, the stricter literal reading.
    AbsoluteCorrelation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KleinVerdict<T> {
    pub respected: bool,
    pub rule: KleinRule,
    /// The pair with the largest `|ρ|`.
    pub max_pair: (String, String),
    pub max_abs_correlation: T,
    pub model_r_squared: T,
}

pub fn klein_check<T: Scalar>(corr: &CorrelationMatrix<T>, model_r2: T, rule: KleinRule) -> Result<KleinVerdict<T>> {
    let k = corr.names.len();
    if k < 2 {
        return Err(Error::InvalidSpec("Klein's rule needs at least two regressors".into()));
    }
    if !(model_r2 >= T::zero() && model_r2 <= T::one()) {
        return Err(Error::Domain(format!("model R-squared {model_r2} outside [0, 1]")));
    }
    let (mut best, mut pair) = (-T::one(), (0, 1));
    for i in 0..k {
        for j in i + 1..k {
            let r = corr.matrix[(i, j)].abs();
            if r > best {
                best = r;
                pair = (i, j);
            }
        }
    }
    let respected = match rule {
        KleinRule::SquaredCorrelation => best * best < model_r2,
        KleinRule::AbsoluteCorrelation => best < model_r2,
    };
    Ok(KleinVerdict {
        respected,
        rule,
        max_pair: (corr.names[pair.0].clone(), corr.names[pair.1].clone()),
        max_abs_correlation: best,
        model_r_squared: model_r2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidualSpace {
    /// Residuals of the transformed (whitened) regression.
    #[default]
    Weighted,
    /// `y − Xβ̂` on the raw data.
    Unweighted,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "source")]
pub enum DwBoundsSource {
    /// Built-in 5% table, nearest `n`.
    #[default]
    Table,
    Explicit { dl: f64, du: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DiagnosticsOptions {
    pub dw_bounds: DwBoundsSource,
    pub bpg_residuals: ResidualSpace,
    pub csd_residuals: ResidualSpace,
    pub csd_demean: bool,
    pub klein: KleinRule,
}

impl Default for DiagnosticsOptions {
    fn default() -> Self {
        Self {
            dw_bounds: DwBoundsSource::Table,
            bpg_residuals: ResidualSpace::Weighted,
            csd_residuals: ResidualSpace::Weighted,
            csd_demean: true,
            klein: KleinRule::SquaredCorrelation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DwResult<T> {
    pub stat: T,
    pub bounds: DwBounds,
    pub decision: DwDecision,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagnosticsReport<T> {
    pub jarque_bera: TestStat<T>,
    pub durbin_watson: DwResult<T>,
    pub bpg: BpgResult<T>,
    pub csd: CsdBlock<T>,
    /// Dependent variable first, then the regressors.
    pub correlations: CorrelationMatrix<T>,
    pub klein: KleinVerdict<T>,
}

/// The full suite for an EGLS fit of `spec` on `ds`.
pub fn run_diagnostics<T: Scalar>(
    ds: &PanelDataset<T>,
    spec: &ModelSpec,
    fit: &EglsFit<T>,
    options: &DiagnosticsOptions,
) -> Result<DiagnosticsReport<T>> {
    let design = spec.design(ds)?;
    let pick = |space: ResidualSpace| match space {
        ResidualSpace::Weighted => fit.weighted_residuals(),
        ResidualSpace::Unweighted => fit.unweighted_residuals.as_slice(),
    };

    let jarque_bera = jarque_bera(fit.weighted_residuals())?;

    let k_prime = design.x.cols() - usize::from(design.constant_column.is_some());
    let n = design.x.rows();
    let bounds = match options.dw_bounds {
        DwBoundsSource::Table => DwBounds::from_table(n, k_prime)?,
        DwBoundsSource::Explicit { dl, du } => DwBounds::new(dl, du, n, k_prime, 0.05)?,
    };
    let dw_stat = fit.weighted_stats().durbin_watson;
    let durbin_watson = DwResult { stat: dw_stat, bounds, decision: dw_decide(dw_stat, &bounds) };

    let constant = design
        .constant_column
        .ok_or_else(|| Error::InvalidSpec("heteroskedasticity test needs a model with a constant".into()))?;
    let bpg = bpg_test(pick(options.bpg_residuals), &design.x, constant)?;

    let resid = Matrix::from_row_major(fit.n_units, fit.n_periods, pick(options.csd_residuals).to_vec());
    let sample = spec.sample_panel(ds)?;
    let csd = csd_tests(&resid, options.csd_demean).map_err(|e| match e {
        Error::DegenerateResiduals { unit: Some(idx) } => {
            let i: usize = idx.trim_start_matches('#').parse().unwrap_or(0);
            Error::DegenerateResiduals { unit: sample.units().get(i).cloned().or(Some(idx)) }
        }
        other => other,
    })?;

    let mut vars = vec![spec.dependent.clone()];
    vars.extend(spec.regressors.iter().cloned());
    let correlations = pearson_matrix(&sample, &vars)?;
    let regressor_corr = correlations.sub(&spec.regressors).expect("regressors are in the matrix");
    let klein = klein_check(&regressor_corr, fit.weighted_stats().r_squared.max(T::zero()).min(T::one()), options.klein)?;

    Ok(DiagnosticsReport { jarque_bera, durbin_watson, bpg, csd, correlations, klein })
}
