//! Library output against the brute-force oracles on random toy panels.

mod common;

use common::oracle::{self, max_rel_gap};
use common::Toy;
use panelsur::diagnostics::csd_tests;
use panelsur::egls::{egls_fit_design, estimate_period_covariance, pcse_covariance, CovarianceDivisor, EglsOptions, PcseConvention};
use panelsur::regress::ols_fit;
use panelsur::Matrix;

const SEEDS: std::ops::Range<u64> = 0..300;

fn flat(m: &Matrix<f64>) -> Vec<f64> {
    m.as_slice().to_vec()
}

fn flat_rows(r: &oracle::Rows) -> Vec<f64> {
    r.iter().flatten().copied().collect()
}

#[test]
fn ols_matches_normal_equations() {
    for seed in SEEDS {
        let toy = Toy::random(seed);
        let fit = ols_fit(&toy.y, &Matrix::from_rows(&toy.x)).unwrap();
        let o = oracle::ols(&toy.y, &toy.x);
        let gap = max_rel_gap(
            fit.coefficients.iter().chain(&fit.std_errors).chain(&fit.residuals).copied(),
            o.beta.iter().chain(&o.std_errors).chain(&o.residuals).copied(),
        );
        assert!(gap <= 1e-10, "seed {seed}: gap {gap:e}");
        assert!(max_rel_gap([fit.stats.ssr, fit.stats.r_squared, fit.stats.durbin_watson], [o.ssr, o.r_squared, o.durbin_watson]) <= 1e-10);
    }
}

#[test]
fn period_covariance_matches_double_loop() {
    for seed in SEEDS {
        let toy = Toy::random(seed);
        let e = toy.residual_rows(seed);
        for (divisor, d) in [(CovarianceDivisor::Units, toy.units), (CovarianceDivisor::UnitsMinusOne, toy.units - 1)] {
            let got = estimate_period_covariance(&Matrix::from_rows(&e), divisor).unwrap();
            let want = oracle::period_covariance(&e, d as f64);
            let gap = max_rel_gap(flat(got.sigma()), flat_rows(&want));
            assert!(gap <= 1e-12, "seed {seed}: gap {gap:e}");
        }
    }
}

#[test]
fn pcse_matches_explicit_sandwich() {
    for seed in SEEDS {
        let toy = Toy::random(seed);
        let e = flat_rows(&toy.residual_rows(seed));
        let got = pcse_covariance(&Matrix::from_rows(&toy.x), &e, toy.periods, PcseConvention::DofCorrected).unwrap();
        let want = oracle::pcse(&toy.x, &e, toy.periods);
        let gap = max_rel_gap(flat(&got), flat_rows(&want));
        assert!(gap <= 1e-12, "seed {seed}: gap {gap:e}");
    }
}

#[test]
fn csd_matches_pairwise_loop() {
    for seed in SEEDS {
        let toy = Toy::random(seed);
        let e = toy.residual_rows(seed);
        for demean in [true, false] {
            let got = csd_tests(&Matrix::from_rows(&e), demean).unwrap();
            let want = oracle::csd(&e, demean);
            let gap = max_rel_gap(
                [got.bp_lm.stat, got.pesaran_scaled_lm.stat, got.pesaran_cd.stat],
                [want.lm, want.scaled_lm, want.cd],
            );
            assert!(gap <= 1e-12, "seed {seed} demean {demean}: gap {gap:e}");
        }
    }
}

/// EGLS coefficients equal textbook GLS `(XᵀΩ⁻¹X)⁻¹XᵀΩ⁻¹y` with `Ω = I_N ⊗ Σ̂`.
#[test]
fn egls_matches_direct_gls() {
    for seed in SEEDS {
        let toy = Toy::random(seed);
        let fit = egls_fit_design(&toy.design(), None, EglsOptions::default()).unwrap();

        let stage1 = oracle::ols(&toy.y, &toy.x);
        let e: oracle::Rows = stage1.residuals.chunks(toy.periods).map(<[f64]>::to_vec).collect();
        let sigma_inv = oracle::invert(&oracle::period_covariance(&e, toy.units as f64));
        let k = toy.x[0].len();
        let (mut a, mut b) = (vec![vec![0.0; k]; k], vec![0.0; k]);
        for i in 0..toy.units {
            for t in 0..toy.periods {
                for s in 0..toy.periods {
                    let (rt, rs) = (i * toy.periods + t, i * toy.periods + s);
                    let w = sigma_inv[t][s];
                    for p in 0..k {
                        b[p] += toy.x[rt][p] * w * toy.y[rs];
                        for q in 0..k {
                            a[p][q] += toy.x[rt][p] * w * toy.x[rs][q];
                        }
                    }
                }
            }
        }
        let a_inv = oracle::invert(&a);
        let beta: Vec<f64> = (0..k).map(|p| (0..k).map(|q| a_inv[p][q] * b[q]).sum()).collect();
        let gap = max_rel_gap(fit.base.coefficients.iter().copied(), beta);
        assert!(gap <= 1e-9, "seed {seed}: gap {gap:e}");
    }
}
