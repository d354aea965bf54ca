//! Acceptance run: one PASS/FAIL line per criterion, with the failing checks
//! listed beneath. Exits non-zero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::PathBuf;
use std::process::ExitCode;

use common::oracle::{self, max_rel_gap};
use common::Toy;
use panelsur::diagnostics::{
    csd_tests, dw_decide, jarque_bera, klein_check, run_diagnostics, CorrelationMatrix, DiagnosticsOptions, DwBounds,
    DwDecision, KleinRule,
};
use panelsur::egls::{egls_fit, egls_fit_design, estimate_period_covariance, pcse_covariance, CovarianceDivisor, EglsOptions, PcseConvention, PeriodCovariance};
use panelsur::regress::{
    chi_sq_upper_tail, durbin_watson, f_from_r_squared, f_upper_tail, gaussian_log_likelihood, information_criteria,
    normal_two_tailed_prob, ols_fit, standard_error_of_regression, t_two_tailed_prob,
};
use panelsur::unitroot::{battery, battery_for, fisher_combine, StationarityDecision, UnitRootOptions, UnitRootReport, UnitRootResult, UnitRootTest, DeterministicSpec};
use panelsur::{load_panel_csv, CsvLayout, Matrix, ModelSpec, Panel64};
use panelsur_cli::{render_report, rerender_json, run_pipeline, Emit, RunConfig, Stage};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

struct Criterion {
    title: &'static str,
    checks: Vec<(String, bool)>,
}

impl Criterion {
    fn new(title: &'static str) -> Self {
        Self { title, checks: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, ok: bool) {
        self.checks.push((label.into(), ok));
    }

    /// `|got − want| ≤ tol`, with both numbers in the label.
    fn near(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        let ok = (got - want).abs() <= tol;
        self.check(format!("{what}: got {got:.6}, want {want} ± {tol}"), ok);
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn snapshot() -> (Panel64, ModelSpec) {
    let ds = load_panel_csv(root().join("fixtures/eu28_2010_2016.csv"), &CsvLayout::default()).expect("fixture loads");
    let spec = ModelSpec::new("povertyrate", vec!["inworkpovertyrate".into(), "socialexp".into(), "neetsrate".into()]);
    (ds, spec)
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new("internal consistency of the formula layer");
    let (ssr, n, k) = (372.5610, 196, 4);
    let ll = gaussian_log_likelihood(ssr, n).unwrap();
    c.near("log-likelihood", ll, -341.0560, 1e-3);
    let ic = information_criteria(ll, n, k).unwrap();
    c.near("AIC", ic.aic, 3.520979, 1e-5);
    c.near("SIC", ic.sic, 3.587880, 1e-5);
    c.near("HQ", ic.hq, 3.548064, 1e-5);
    c.near("S.E. of regression", standard_error_of_regression(ssr, n, k).unwrap(), 1.392990, 1e-5);
    let (f, p) = f_from_r_squared(0.038797, n, k).unwrap();
    c.near("F from R-squared", f, 2.583198, 1e-5);
    c.near("Prob(F)", p, 0.054628, 5e-6);
    c.near("chi-square(3) tail of n*R-squared", chi_sq_upper_tail(196.0 * 0.038797, 3).unwrap(), 0.054943, 5e-6);
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new("published-number reproduction on the snapshot");
    let (ds, spec) = snapshot();
    let fit = egls_fit(&ds, &spec, None, EglsOptions::default()).unwrap();
    let b = &fit.base;
    let names = ["INWORKPOVERTYRATE", "SOCIALEXP", "NEETSRATE", "C"];
    for (j, (want, tol)) in [(0.559232, 0.02), (-0.181560, 0.02), (0.135345, 0.02), (13.35735, 0.02)].into_iter().enumerate() {
        c.near(&format!("coefficient {}", names[j]), b.coefficients[j], want, tol);
    }
    for (j, want) in [0.047505, 0.063323, 0.039473, 1.241003].into_iter().enumerate() {
        c.near(&format!("PCSE std. error {}", names[j]), b.std_errors[j], want, 0.01);
    }
    c.near("weighted R-squared", b.stats.r_squared, 0.507414, 0.02);
    c.near("weighted Durbin-Watson", b.stats.durbin_watson, 1.951906, 0.05);
    c.near("unweighted R-squared", fit.unweighted.r_squared, 0.664053, 0.02);

    let d = run_diagnostics(&ds, &spec, &fit, &DiagnosticsOptions::default()).unwrap();
    c.near("Breusch-Pagan LM", d.csd.bp_lm.stat, 400.3456, 5.0);
    c.check(format!("Breusch-Pagan LM d.f.: got {}, want 378", d.csd.bp_lm.dof), d.csd.bp_lm.dof == 378);
    c.near("Pesaran CD", d.csd.pesaran_cd.stat, -0.375082, 0.05);
    c.near("BPG auxiliary R-squared", d.bpg.aux_fit.stats.r_squared, 0.038797, 0.01);
    for (a, bb, want) in [
        ("neetsrate", "inworkpovertyrate", 0.38057),
        ("neetsrate", "socialexp", -0.26423),
        ("inworkpovertyrate", "socialexp", -0.16576),
    ] {
        c.near(&format!("correlation {a}/{bb}"), d.correlations.get(a, bb).unwrap(), want, 0.01);
    }

    // The frozen expected-output file stays the exact target.
    let text = std::fs::read_to_string(root().join("fixtures/eu28_expected.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let frozen: Vec<f64> = v["coefficients"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    let gap = max_rel_gap(b.coefficients.iter().copied(), frozen);
    c.check(format!("frozen fixture coefficients: max relative gap {gap:e} <= 1e-9"), gap <= 1e-9);
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new("oracle equivalence on toy instances");
    let (mut ols_gap, mut cov_gap, mut pcse_gap, mut csd_gap) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    for seed in 0..200 {
        let toy = Toy::random(seed);
        let fit = ols_fit(&toy.y, &Matrix::from_rows(&toy.x)).unwrap();
        let o = oracle::ols(&toy.y, &toy.x);
        ols_gap = ols_gap.max(max_rel_gap(
            fit.coefficients.iter().chain(&fit.std_errors).copied(),
            o.beta.iter().chain(&o.std_errors).copied(),
        ));
        let e = toy.residual_rows(seed);
        let em = Matrix::from_rows(&e);
        let cov = estimate_period_covariance(&em, CovarianceDivisor::Units).unwrap();
        let want = oracle::period_covariance(&e, toy.units as f64);
        cov_gap = cov_gap.max(max_rel_gap(cov.sigma().as_slice().iter().copied(), want.iter().flatten().copied()));
        let flat: Vec<f64> = e.iter().flatten().copied().collect();
        let v = pcse_covariance(&Matrix::from_rows(&toy.x), &flat, toy.periods, PcseConvention::DofCorrected).unwrap();
        let want = oracle::pcse(&toy.x, &flat, toy.periods);
        pcse_gap = pcse_gap.max(max_rel_gap(v.as_slice().iter().copied(), want.iter().flatten().copied()));
        let s = csd_tests(&em, true).unwrap();
        let o = oracle::csd(&e, true);
        csd_gap = csd_gap.max(max_rel_gap(
            [s.bp_lm.stat, s.pesaran_scaled_lm.stat, s.pesaran_cd.stat],
            [o.lm, o.scaled_lm, o.cd],
        ));
    }
    c.check(format!("OLS vs normal equations: {ols_gap:e} <= 1e-10"), ols_gap <= 1e-10);
    c.check(format!("period covariance vs double loop: {cov_gap:e} <= 1e-12"), cov_gap <= 1e-12);
    c.check(format!("PCSE vs explicit sandwich: {pcse_gap:e} <= 1e-12"), pcse_gap <= 1e-12);
    c.check(format!("CSD vs pairwise loop: {csd_gap:e} <= 1e-12"), csd_gap <= 1e-12);
    c
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new("property suite");
    let mut rng = ChaCha8Rng::seed_from_u64(4);

    let (mut ident, mut scale, mut dw_ok, mut jb_gap) = (0.0_f64, 0.0_f64, true, 0.0_f64);
    for seed in 0..100 {
        let toy = Toy::random(seed);
        let design = toy.design();
        let ols = ols_fit(&design.y, &design.x).unwrap();
        let e = egls_fit_design(&design, Some(&PeriodCovariance::identity(toy.periods)), EglsOptions::default()).unwrap();
        for (a, b) in e.base.coefficients.iter().zip(&ols.coefficients) {
            ident = ident.max(rel(*a, *b));
        }
        ident = ident.max(rel(e.base.stats.r_squared, ols.stats.r_squared));

        let factor = rng.random_range(0.01..100.0);
        let mut scaled = design.clone();
        scaled.y.iter_mut().for_each(|v| *v *= factor);
        let a = egls_fit_design(&design, None, EglsOptions::default()).unwrap();
        let b = egls_fit_design(&scaled, None, EglsOptions::default()).unwrap();
        for (x, y) in a.base.t_stats.iter().zip(&b.base.t_stats) {
            scale = scale.max(rel(*x, *y));
        }
        let (sa, sb) = (a.weighted_stats(), b.weighted_stats());
        scale = scale
            .max(rel(sa.r_squared, sb.r_squared))
            .max(rel(sa.durbin_watson, sb.durbin_watson))
            .max(rel(sa.f_stat.unwrap(), sb.f_stat.unwrap()));

        let d = durbin_watson(&a.base.residuals).unwrap();
        dw_ok &= (0.0..=4.0).contains(&d);
        let jb = jarque_bera(&a.base.residuals).unwrap();
        jb_gap = jb_gap.max((jb.prob - (-jb.stat / 2.0).exp()).abs());
    }
    c.check(format!("identity-weight EGLS equals OLS: {ident:e} <= 1e-12"), ident <= 1e-12);
    c.check(format!("rescaling invariance of t, R-squared, DW, F: {scale:e} <= 1e-8"), scale <= 1e-8);
    c.check("Durbin-Watson within [0, 4]", dw_ok);
    c.check(format!("JB prob = exp(-stat/2): {jb_gap:e} <= 1e-12"), jb_gap <= 1e-12);

    let mut monotone = true;
    let mut at_zero = normal_two_tailed_prob(0.0) == 1.0;
    for d in 1..30 {
        at_zero &= chi_sq_upper_tail(0.0, d).unwrap() == 1.0
            && f_upper_tail(0.0, d, 50).unwrap() == 1.0
            && t_two_tailed_prob(0.0, d).unwrap() == 1.0;
        let mut last = [f64::INFINITY; 4];
        for i in 0..400 {
            let x = i as f64 * 0.1;
            let now = [
                chi_sq_upper_tail(x, d).unwrap(),
                f_upper_tail(x, d, 50).unwrap(),
                t_two_tailed_prob(x, d).unwrap(),
                normal_two_tailed_prob(x),
            ];
            monotone &= now.iter().zip(&last).all(|(n, l)| n <= l);
            last = now;
        }
    }
    c.check("tail functions are non-increasing", monotone);
    c.check("tail functions equal 1 at 0", at_zero);

    let mut twelve = true;
    for seed in 0..5 {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<f64>> = (0..5).map(|_| (0..12).map(|_| StandardNormal.sample(&mut r)).collect()).collect();
        let rep = battery(&Matrix::from_rows(&rows), &UnitRootOptions::default());
        twelve &= rep.results.len() == 12 && rep.vote_threshold == 7;
    }
    c.check("battery always yields 12 results with threshold 7", twelve);
    let votes = |k: usize| -> Vec<UnitRootResult<f64>> {
        (0..12)
            .map(|i| UnitRootResult::computed(UnitRootTest::Llc, DeterministicSpec::None, -1.0, if i < k { 0.01 } else { 0.5 }, vec![]))
            .collect()
    };
    c.check(
        "6 of 12 rejections is non-stationary, 7 is stationary",
        UnitRootReport::from_results(votes(6), 7).decision == StationarityDecision::NonStationary
            && UnitRootReport::from_results(votes(7), 7).decision == StationarityDecision::Stationary,
    );

    let mut perm = true;
    for _ in 0..50 {
        let p: Vec<f64> = (0..28).map(|_| rng.random_range(1e-9..1.0)).collect();
        let mut q = p.clone();
        q.reverse();
        q.rotate_left(rng.random_range(0..28));
        let (a, b) = (fisher_combine(&p).unwrap(), fisher_combine(&q).unwrap());
        perm &= a.statistic.to_bits() == b.statistic.to_bits() && a.p_value.to_bits() == b.p_value.to_bits();
    }
    c.check("Fisher combination is permutation invariant", perm);

    let cfg = RunConfig::from_path(&root().join("fixtures/eu28_config.json")).unwrap();
    let first = run_pipeline(&cfg, Stage::Full).unwrap();
    let second = run_pipeline(&cfg, Stage::Full).unwrap();
    let same = [Emit::Text, Emit::Json, Emit::Csv].iter().all(|&e| render_report(&first, e) == render_report(&second, e));
    c.check("report reruns are byte-identical", same);
    let round = rerender_json(&render_report(&first, Emit::Json), Emit::Text).unwrap();
    c.check("text re-rendered from JSON is byte-identical", round == render_report(&first, Emit::Text));
    c
}

fn simulated(seed: u64) -> (Matrix<f64>, Matrix<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut wn = Matrix::zeros(28, 50);
    let mut rw = Matrix::zeros(28, 50);
    for i in 0..28 {
        let mut level = 0.0;
        for t in 0..50 {
            wn[(i, t)] = StandardNormal.sample(&mut rng);
            let e: f64 = StandardNormal.sample(&mut rng);
            level += e;
            rw[(i, t)] = level;
        }
    }
    (wn, rw)
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new("unit-root behaviour at desk scale");
    let (wn, rw) = simulated(2016);
    let opts = UnitRootOptions::default();
    let w = battery(&wn, &opts);
    c.check(
        format!("white noise: {} of 12 rejections (want >= 10), {:?}", w.votes_stationary, w.decision),
        w.votes_stationary >= 10 && w.decision == StationarityDecision::Stationary,
    );
    let r = battery(&rw, &opts);
    c.check(
        format!("random walk: {} of 12 rejections (want <= 2), {:?}", r.votes_stationary, r.decision),
        r.votes_stationary <= 2 && r.decision == StationarityDecision::NonStationary,
    );
    let (ds, spec) = snapshot();
    for v in std::iter::once(&spec.dependent).chain(&spec.regressors) {
        let rep = battery_for(&ds, v, &opts).unwrap();
        c.check(
            format!("snapshot {v}: {} of 12 rejections, {:?} (want stationary)", rep.votes_stationary, rep.decision),
            rep.decision == StationarityDecision::Stationary,
        );
    }
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new("decision rules");
    let bounds = DwBounds::new(1.73445, 1.79688, 196, 3, 0.05).unwrap();
    let d = dw_decide(1.951906, &bounds);
    c.check(format!("dw_decide(1.951906, 1.73445, 1.79688) = {d:?}"), d == DwDecision::NoAutocorrelation);

    let names: Vec<String> = ["neetsrate", "inworkpovertyrate", "socialexp"].map(String::from).to_vec();
    let matrix = Matrix::from_rows(&[
        vec![1.0, 0.38057, -0.26423],
        vec![0.38057, 1.0, -0.16576],
        vec![-0.26423, -0.16576, 1.0],
    ]);
    let k = klein_check(&CorrelationMatrix { names, matrix }, 0.507414, KleinRule::default()).unwrap();
    c.check(format!("Klein's rule on the published matrix: respected = {}", k.respected), k.respected);

    let (ds, spec) = snapshot();
    let fit = egls_fit(&ds, &spec, None, EglsOptions::default()).unwrap();
    let diag = run_diagnostics(&ds, &spec, &fit, &DiagnosticsOptions::default()).unwrap();
    c.check(
        format!("BPG on the snapshot: prob {:.4}, homoskedastic = {}", diag.bpg.prob, diag.bpg.homoskedastic),
        diag.bpg.homoskedastic && diag.bpg.prob > 0.05,
    );
    c
}

fn main() -> ExitCode {
    let criteria = [criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(), criterion_6()];
    let mut all = true;
    for (i, c) in criteria.iter().enumerate() {
        let ok = c.passed();
        all &= ok;
        println!("criterion {} ({}): {}", i + 1, c.title, if ok { "PASS" } else { "FAIL" });
        for (label, pass) in &c.checks {
            if !pass {
                println!("    FAIL {label}");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
