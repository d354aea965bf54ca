//! Plain-data view of a run. Everything the text renderer prints comes from
//! here, so a report read back from JSON renders to the same bytes.

use panelsur::diagnostics::{
    CsdBlock, DiagnosticsOptions, DiagnosticsReport, DwResult, KleinVerdict, ResidualSpace, TestStat,
};
use panelsur::egls::{CovarianceDivisor, CovarianceSource, EglsFit, EglsOptions, PcseConvention, UnweightedStats};
use panelsur::unitroot::UnitRootReport;
use panelsur::{ModelSpec, PanelDataset};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub dataset: DatasetBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_root: Option<Vec<VariableBattery>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub estimation: Option<EstimationBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<DiagnosticsBlock>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetBlock {
    pub source: String,
    pub units: Vec<String>,
    pub first_period: i32,
    pub last_period: i32,
    pub n_periods: usize,
    pub observations: usize,
    pub variables: Vec<String>,
}

impl DatasetBlock {
    pub fn new(source: String, ds: &PanelDataset<f64>) -> Self {
        let p = ds.periods();
        Self {
            source,
            units: ds.units().to_vec(),
            first_period: p[0],
            last_period: p[p.len() - 1],
            n_periods: ds.n_periods(),
            observations: ds.n_obs(),
            variables: ds.variable_names().map(str::to_owned).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariableBattery {
    pub variable: String,
    #[serde(flatten)]
    pub report: UnitRootReport<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub variable: String,
    pub coefficient: f64,
    pub std_error: f64,
    pub t_stat: f64,
    pub prob: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedStats {
    pub r_squared: f64,
    pub adj_r_squared: f64,
    pub se_regression: f64,
    pub ssr: f64,
    pub f_stat: Option<f64>,
    pub f_prob: Option<f64>,
    pub durbin_watson: f64,
    pub mean_dep: f64,
    pub sd_dep: f64,
    pub log_likelihood: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimationBlock {
    pub dependent: String,
    pub first_period: i32,
    pub last_period: i32,
    pub n_periods: usize,
    pub cross_sections: usize,
    pub observations: usize,
    pub covariance_source: CovarianceSource,
    pub divisor: CovarianceDivisor,
    pub pcse: PcseConvention,
    pub coefficients: Vec<CoefficientRow>,
    pub weighted: WeightedStats,
    pub unweighted: UnweightedStats<f64>,
    /// `T × T` period covariance used for the weighting.
    pub period_covariance: Vec<Vec<f64>>,
}

impl EstimationBlock {
    pub fn new(spec: &ModelSpec, sample: &PanelDataset<f64>, fit: &EglsFit<f64>, options: EglsOptions) -> Self {
        let b = &fit.base;
        let coefficients = fit
            .columns
            .iter()
            .enumerate()
            .map(|(j, name)| CoefficientRow {
                variable: name.clone(),
                coefficient: b.coefficients[j],
                std_error: b.std_errors[j],
                t_stat: b.t_stats[j],
                prob: b.t_probs[j],
            })
            .collect();
        let s = &b.stats;
        let sigma = fit.period_cov.sigma();
        let p = sample.periods();
        Self {
            dependent: spec.dependent.clone(),
            first_period: p[0],
            last_period: p[p.len() - 1],
            n_periods: fit.n_periods,
            cross_sections: fit.n_units,
            observations: b.n(),
            covariance_source: fit.period_cov.source(),
            divisor: options.divisor,
            pcse: options.pcse,
            coefficients,
            weighted: WeightedStats {
                r_squared: s.r_squared,
                adj_r_squared: s.adj_r_squared,
                se_regression: s.se_regression,
                ssr: s.ssr,
                f_stat: s.f_stat,
                f_prob: s.f_prob,
                durbin_watson: s.durbin_watson,
                mean_dep: s.mean_dep,
                sd_dep: s.sd_dep,
                log_likelihood: s.log_likelihood,
            },
            unweighted: fit.unweighted.clone(),
            period_covariance: (0..sigma.rows()).map(|i| sigma.row(i).to_vec()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BpgBlock {
    pub lm_stat: f64,
    pub dof: usize,
    pub prob: f64,
    pub homoskedastic: bool,
    pub aux_r_squared: f64,
    pub residuals: ResidualSpace,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationBlock {
    pub names: Vec<String>,
    pub matrix: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsBlock {
    pub jarque_bera: TestStat<f64>,
    pub durbin_watson: DwResult<f64>,
    pub bpg: BpgBlock,
    pub csd: CsdBlock<f64>,
    pub csd_residuals: ResidualSpace,
    pub correlations: CorrelationBlock,
    pub klein: KleinVerdict<f64>,
}

impl DiagnosticsBlock {
    pub fn new(d: &DiagnosticsReport<f64>, options: &DiagnosticsOptions) -> Self {
        let m = &d.correlations.matrix;
        Self {
            jarque_bera: d.jarque_bera,
            durbin_watson: d.durbin_watson,
            bpg: BpgBlock {
                lm_stat: d.bpg.lm_stat,
                dof: d.bpg.dof,
                prob: d.bpg.prob,
                homoskedastic: d.bpg.homoskedastic,
                aux_r_squared: d.bpg.aux_fit.stats.r_squared,
                residuals: options.bpg_residuals,
            },
            csd: d.csd,
            csd_residuals: options.csd_residuals,
            correlations: CorrelationBlock {
                names: d.correlations.names.clone(),
                matrix: (0..m.rows()).map(|i| m.row(i).to_vec()).collect(),
            },
            klein: d.klein.clone(),
        }
    }
}
