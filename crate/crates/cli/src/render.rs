//! Text, JSON and CSV renderings. Statistics print with 6 decimals and
//! probabilities with 4; CSV and JSON carry full precision.

use std::fmt::Write as _;

use panelsur::diagnostics::{DwDecision, KleinRule, ResidualSpace};
use panelsur::egls::{CovarianceDivisor, CovarianceSource, PcseConvention};
use panelsur::unitroot::StationarityDecision;
use serde::Serialize;

use crate::delta::DeltaReport;
use crate::figure::FigureData;
use crate::report::{DiagnosticsBlock, EstimationBlock, Report, VariableBattery};

/// Fixed-point with `d` decimals; never prints a negative zero.
pub fn fixed(v: f64, d: usize) -> String {
    if v.is_nan() {
        return "NA".into();
    }
    let s = format!("{v:.d$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

fn stat(v: f64) -> String {
    fixed(v, 6)
}

fn prob(v: f64) -> String {
    fixed(v, 4)
}

fn opt(v: Option<f64>, f: fn(f64) -> String) -> String {
    v.map_or_else(|| "NA".into(), f)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn report_text(r: &Report) -> String {
    let mut out = String::new();
    let d = &r.dataset;
    let _ = writeln!(out, "Source: {}", d.source);
    let _ = writeln!(out, "Sample: {} {}", d.first_period, d.last_period);
    let _ = writeln!(out, "Cross-sections: {}", d.units.len());
    let _ = writeln!(out, "Periods: {}", d.n_periods);
    let _ = writeln!(out, "Observations per variable: {}", d.observations);
    let _ = writeln!(out, "Variables: {}", d.variables.join(", "));
    if let Some(batteries) = &r.unit_root {
        for b in batteries {
            out.push('\n');
            unit_root_text(&mut out, b);
        }
    }
    if let Some(e) = &r.estimation {
        out.push('\n');
        estimation_text(&mut out, e);
    }
    if let Some(dg) = &r.diagnostics {
        out.push('\n');
        diagnostics_text(&mut out, dg);
    }
    out
}

fn unit_root_text(out: &mut String, b: &VariableBattery) {
    let _ = writeln!(out, "Panel unit root tests: {}", b.variable.to_uppercase());
    let _ = writeln!(out, "{:<30}{:<20}{:>14}{:>10}{:>6}  {:>8}", "Method", "Deterministic", "Statistic", "Prob.", "df", "Reject");
    for t in &b.report.results {
        let df = t.dof.map_or_else(String::new, |d| d.to_string());
        let _ = write!(
            out,
            "{:<30}{:<20}{:>14}{:>10}{:>6}  {:>8}",
            t.test.to_string(),
            t.spec.label(),
            opt(t.statistic, stat),
            opt(t.p_value, prob),
            df,
            if t.rejects_unit_root { "yes" } else { "no" },
        );
        if let Some(e) = &t.error {
            let _ = write!(out, "  [not computed: {e}]");
        }
        out.push('\n');
    }
    let verdict = match b.report.decision {
        StationarityDecision::Stationary => "stationary at level",
        StationarityDecision::NonStationary => "non-stationary",
    };
    let _ = writeln!(
        out,
        "Rejections of the unit root: {} of {} (threshold {}): {verdict}",
        b.report.votes_stationary,
        b.report.results.len(),
        b.report.vote_threshold
    );
}

fn pair(out: &mut String, l: &str, lv: String, r: &str, rv: String) {
    let _ = writeln!(out, "{l:<22}{lv:>12}    {r:<22}{rv:>12}");
}

fn estimation_text(out: &mut String, e: &EstimationBlock) {
    let _ = writeln!(out, "Dependent Variable: {}", e.dependent.to_uppercase());
    let _ = writeln!(out, "Method: Panel EGLS (Period SUR)");
    let _ = writeln!(out, "Sample: {} {}", e.first_period, e.last_period);
    let _ = writeln!(out, "Periods included: {}", e.n_periods);
    let _ = writeln!(out, "Cross-sections included: {}", e.cross_sections);
    let _ = writeln!(out, "Total panel (balanced) observations: {}", e.observations);
    match e.covariance_source {
        CovarianceSource::Estimated => {
            let div = match e.divisor {
                CovarianceDivisor::Units => "N",
                CovarianceDivisor::UnitsMinusOne => "N-1",
            };
            let _ = writeln!(out, "Linear estimation after one-step weighting matrix (divisor {div})");
        }
        CovarianceSource::Supplied => {
            let _ = writeln!(out, "Linear estimation with supplied period weighting matrix");
        }
    }
    let dof = match e.pcse {
        PcseConvention::DofCorrected => "d.f. corrected",
        PcseConvention::Uncorrected => "no d.f. correction",
    };
    let _ = writeln!(out, "Period SUR (PCSE) standard errors & covariance ({dof})");
    out.push('\n');
    let _ = writeln!(out, "{:<22}{:>14}{:>14}{:>14}{:>10}", "Variable", "Coefficient", "Std. Error", "t-Statistic", "Prob.");
    out.push('\n');
    for c in &e.coefficients {
        let _ = writeln!(
            out,
            "{:<22}{:>14}{:>14}{:>14}{:>10}",
            c.variable.to_uppercase(),
            stat(c.coefficient),
            stat(c.std_error),
            stat(c.t_stat),
            prob(c.prob)
        );
    }
    out.push('\n');
    let w = &e.weighted;
    let _ = writeln!(out, "Weighted Statistics");
    out.push('\n');
    pair(out, "R-squared", stat(w.r_squared), "Mean dependent var", stat(w.mean_dep));
    pair(out, "Adjusted R-squared", stat(w.adj_r_squared), "S.D. dependent var", stat(w.sd_dep));
    pair(out, "S.E. of regression", stat(w.se_regression), "Sum squared resid", stat(w.ssr));
    pair(out, "F-statistic", opt(w.f_stat, stat), "Durbin-Watson stat", stat(w.durbin_watson));
    let _ = writeln!(out, "{:<22}{:>12}", "Prob(F-statistic)", opt(w.f_prob, prob));
    out.push('\n');
    let u = &e.unweighted;
    let _ = writeln!(out, "Unweighted Statistics");
    out.push('\n');
    pair(out, "R-squared", stat(u.r_squared), "Mean dependent var", stat(u.mean_dep));
    pair(out, "Sum squared resid", stat(u.ssr), "Durbin-Watson stat", stat(u.durbin_watson));
}

fn space(s: ResidualSpace) -> &'static str {
    match s {
        ResidualSpace::Weighted => "weighted",
        ResidualSpace::Unweighted => "unweighted",
    }
}

fn diagnostics_text(out: &mut String, d: &DiagnosticsBlock) {
    let _ = writeln!(out, "Residual diagnostics");
    out.push('\n');
    let jb = &d.jarque_bera;
    let _ = writeln!(out, "{:<42}{:>14}   Prob. {:>8}", "Jarque-Bera", stat(jb.stat), prob(jb.prob));

    let dw = &d.durbin_watson;
    let verdict = match dw.decision {
        DwDecision::NoAutocorrelation => "no autocorrelation",
        DwDecision::Positive => "positive autocorrelation",
        DwDecision::Negative => "negative autocorrelation",
        DwDecision::Inconclusive => "inconclusive",
    };
    let _ = writeln!(
        out,
        "{:<42}{:>14}   dL {} dU {} (n = {}, k' = {}): {verdict}",
        "Durbin-Watson",
        stat(dw.stat),
        stat(dw.bounds.dl),
        stat(dw.bounds.du),
        dw.bounds.n,
        dw.bounds.k_prime
    );

    let b = &d.bpg;
    let _ = writeln!(
        out,
        "{:<42}{:>14}   Prob. Chi-Square({}) {:>8}: {}",
        format!("Breusch-Pagan-Godfrey Obs*R-sq ({})", space(b.residuals)),
        stat(b.lm_stat),
        b.dof,
        prob(b.prob),
        if b.homoskedastic { "homoskedastic" } else { "heteroskedastic" }
    );
    let _ = writeln!(out, "{:<42}{:>14}", "  auxiliary R-squared", stat(b.aux_r_squared));
    out.push('\n');

    let c = &d.csd;
    let _ = writeln!(
        out,
        "Residual cross-section dependence ({} residuals{})",
        space(d.csd_residuals),
        if c.demeaned { ", demeaned" } else { "" }
    );
    let _ = writeln!(out, "{:<42}{:>14}{:>8}{:>10}", "Test", "Statistic", "d.f.", "Prob.");
    let _ = writeln!(out, "{:<42}{:>14}{:>8}{:>10}", "Breusch-Pagan LM", stat(c.bp_lm.stat), c.bp_lm.dof, prob(c.bp_lm.prob));
    let _ = writeln!(out, "{:<42}{:>14}{:>8}{:>10}", "Pesaran scaled LM", stat(c.pesaran_scaled_lm.stat), "", prob(c.pesaran_scaled_lm.prob));
    let _ = writeln!(out, "{:<42}{:>14}{:>8}{:>10}", "Pesaran CD", stat(c.pesaran_cd.stat), "", prob(c.pesaran_cd.prob));
    out.push('\n');

    let names = &d.correlations.names;
    let _ = writeln!(out, "Correlation matrix");
    let _ = write!(out, "{:<20}", "");
    for n in names {
        let _ = write!(out, "{:>20}", n);
    }
    out.push('\n');
    for (n, row) in names.iter().zip(&d.correlations.matrix) {
        let _ = write!(out, "{n:<20}");
        for &v in row {
            let _ = write!(out, "{:>20}", stat(v));
        }
        out.push('\n');
    }
    out.push('\n');

    let k = &d.klein;
    let rule = match k.rule {
        KleinRule::SquaredCorrelation => "r^2 < R^2",
        KleinRule::AbsoluteCorrelation => "|r| < R^2",
    };
    let _ = writeln!(
        out,
        "Klein's rule ({rule}): max |r| = {} ({}, {}), R-squared = {}: {}",
        stat(k.max_abs_correlation),
        k.max_pair.0,
        k.max_pair.1,
        stat(k.model_r_squared),
        if k.respected { "respected" } else { "violated" }
    );
}

/// Long format `section,item,field,value` with full-precision numbers.
pub fn report_csv(r: &Report) -> String {
    let mut rows: Vec<[String; 4]> = Vec::new();
    let mut put = |s: &str, i: &str, f: &str, v: String| rows.push([s.into(), i.into(), f.into(), v]);
    let num = |v: f64| v.to_string();
    let onum = |v: Option<f64>| v.map_or_else(String::new, |x| x.to_string());

    let d = &r.dataset;
    put("dataset", "", "source", d.source.clone());
    put("dataset", "", "cross_sections", d.units.len().to_string());
    put("dataset", "", "first_period", d.first_period.to_string());
    put("dataset", "", "last_period", d.last_period.to_string());
    put("dataset", "", "observations", d.observations.to_string());
    for b in r.unit_root.iter().flatten() {
        for t in &b.report.results {
            let item = format!("{}|{}|{}", b.variable, t.test, t.spec.label());
            put("unit_root", &item, "statistic", onum(t.statistic));
            put("unit_root", &item, "p_value", onum(t.p_value));
            put("unit_root", &item, "rejects_unit_root", t.rejects_unit_root.to_string());
            if let Some(e) = &t.error {
                put("unit_root", &item, "error", e.clone());
            }
        }
        put("unit_root", &b.variable, "votes_stationary", b.report.votes_stationary.to_string());
        put("unit_root", &b.variable, "decision", format!("{:?}", b.report.decision));
    }
    if let Some(e) = &r.estimation {
        for c in &e.coefficients {
            put("estimation", &c.variable, "coefficient", num(c.coefficient));
            put("estimation", &c.variable, "std_error", num(c.std_error));
            put("estimation", &c.variable, "t_stat", num(c.t_stat));
            put("estimation", &c.variable, "prob", num(c.prob));
        }
        let w = &e.weighted;
        for (f, v) in [
            ("r_squared", Some(w.r_squared)),
            ("adj_r_squared", Some(w.adj_r_squared)),
            ("se_regression", Some(w.se_regression)),
            ("ssr", Some(w.ssr)),
            ("f_stat", w.f_stat),
            ("f_prob", w.f_prob),
            ("durbin_watson", Some(w.durbin_watson)),
            ("mean_dep", Some(w.mean_dep)),
            ("sd_dep", Some(w.sd_dep)),
        ] {
            put("estimation", "weighted", f, onum(v));
        }
        let u = &e.unweighted;
        for (f, v) in [("r_squared", u.r_squared), ("ssr", u.ssr), ("durbin_watson", u.durbin_watson), ("mean_dep", u.mean_dep)] {
            put("estimation", "unweighted", f, num(v));
        }
    }
    if let Some(dg) = &r.diagnostics {
        put("diagnostics", "jarque_bera", "stat", num(dg.jarque_bera.stat));
        put("diagnostics", "jarque_bera", "prob", num(dg.jarque_bera.prob));
        put("diagnostics", "durbin_watson", "stat", num(dg.durbin_watson.stat));
        put("diagnostics", "durbin_watson", "dl", num(dg.durbin_watson.bounds.dl));
        put("diagnostics", "durbin_watson", "du", num(dg.durbin_watson.bounds.du));
        put("diagnostics", "durbin_watson", "decision", format!("{:?}", dg.durbin_watson.decision));
        put("diagnostics", "bpg", "lm_stat", num(dg.bpg.lm_stat));
        put("diagnostics", "bpg", "dof", dg.bpg.dof.to_string());
        put("diagnostics", "bpg", "prob", num(dg.bpg.prob));
        put("diagnostics", "bpg", "aux_r_squared", num(dg.bpg.aux_r_squared));
        put("diagnostics", "csd", "bp_lm", num(dg.csd.bp_lm.stat));
        put("diagnostics", "csd", "bp_lm_dof", dg.csd.bp_lm.dof.to_string());
        put("diagnostics", "csd", "bp_lm_prob", num(dg.csd.bp_lm.prob));
        put("diagnostics", "csd", "pesaran_scaled_lm", num(dg.csd.pesaran_scaled_lm.stat));
        put("diagnostics", "csd", "pesaran_scaled_lm_prob", num(dg.csd.pesaran_scaled_lm.prob));
        put("diagnostics", "csd", "pesaran_cd", num(dg.csd.pesaran_cd.stat));
        put("diagnostics", "csd", "pesaran_cd_prob", num(dg.csd.pesaran_cd.prob));
        let names = &dg.correlations.names;
        for (i, a) in names.iter().enumerate() {
            for (j, b) in names.iter().enumerate().skip(i + 1) {
                put("diagnostics", &format!("{a}|{b}"), "correlation", num(dg.correlations.matrix[i][j]));
            }
        }
        put("diagnostics", "klein", "respected", dg.klein.respected.to_string());
    }
    write_csv(&["section", "item", "field", "value"], rows)
}

fn write_csv<R: AsRef<[String]>>(header: &[&str], rows: impl IntoIterator<Item = R>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r.as_ref()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn figure_text(f: &FigureData) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<8}{:>8}{:>16}{:>16}", "Unit", "Period", f.x, f.y);
    for p in &f.points {
        let _ = writeln!(out, "{:<8}{:>8}{:>16}{:>16}", p.unit, p.period, stat(p.x), stat(p.y));
    }
    let _ = writeln!(out, "Pearson correlation: {}", stat(f.pearson));
    let _ = writeln!(out, "R-squared ({} on {}): {}", f.y, f.x, stat(f.r_squared));
    out
}

/// One row per observation, then a trailing `pearson,…,r_squared,…` row.
pub fn figure_csv(f: &FigureData) -> String {
    let mut rows: Vec<[String; 4]> = f
        .points
        .iter()
        .map(|p| [p.unit.clone(), p.period.to_string(), p.x.to_string(), p.y.to_string()])
        .collect();
    rows.push(["pearson".into(), f.pearson.to_string(), "r_squared".into(), f.r_squared.to_string()]);
    write_csv(&["unit", "period", &f.x, &f.y], rows)
}

pub fn delta_text(d: &DeltaReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Change in {} from {} to {}", d.variable, d.from, d.to);
    let _ = writeln!(out, "{:<6}{:<22}{:>14}{:>14}{:>14}", "Unit", "Name", d.from, d.to, "Change");
    for r in d.rows.iter().chain(&d.aggregate) {
        let _ = writeln!(
            out,
            "{:<6}{:<22}{:>14}{:>14}{:>14}",
            r.unit,
            r.name.as_deref().unwrap_or(""),
            stat(r.from_value),
            stat(r.to_value),
            stat(r.delta)
        );
    }
    out
}

pub fn delta_csv(d: &DeltaReport) -> String {
    let rows = d.rows.iter().chain(&d.aggregate).map(|r| {
        [
            r.unit.clone(),
            r.name.clone().unwrap_or_default(),
            r.from_value.to_string(),
            r.to_value.to_string(),
            r.delta.to_string(),
        ]
    });
    write_csv(&["unit", "name", "from_value", "to_value", "delta"], rows)
}
