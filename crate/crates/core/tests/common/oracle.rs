//! Brute-force reference implementations. Deliberately naive: plain loops,
//! normal equations, Gauss–Jordan inversion. Nothing here calls the library.
#![allow(dead_code)]

pub type Rows = Vec<Vec<f64>>;

/// Gauss–Jordan inverse with partial pivoting.
pub fn invert(a: &Rows) -> Rows {
    let n = a.len();
    let mut m: Rows = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&x, &y| m[x][c].abs().total_cmp(&m[y][c].abs())).unwrap();
        m.swap(c, p);
        let d = m[c][c];
        assert!(d.abs() > 1e-300, "singular matrix in oracle");
        for v in m[c].iter_mut() {
            *v /= d;
        }
        for r in 0..n {
            if r != c {
                let f = m[r][c];
                if f != 0.0 {
                    for j in 0..2 * n {
                        m[r][j] -= f * m[c][j];
                    }
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

pub fn xtx(x: &Rows) -> Rows {
    let k = x[0].len();
    let mut g = vec![vec![0.0; k]; k];
    for row in x {
        for a in 0..k {
            for b in 0..k {
                g[a][b] += row[a] * row[b];
            }
        }
    }
    g
}

pub struct OlsOracle {
    pub beta: Vec<f64>,
    pub std_errors: Vec<f64>,
    pub residuals: Vec<f64>,
    pub ssr: f64,
    pub r_squared: f64,
    pub durbin_watson: f64,
}

/// `β = (XᵀX)⁻¹Xᵀy`; `R²` against the centred total sum of squares.
pub fn ols(y: &[f64], x: &Rows) -> OlsOracle {
    let (n, k) = (x.len(), x[0].len());
    let inv = invert(&xtx(x));
    let mut xty = vec![0.0; k];
    for (row, &yi) in x.iter().zip(y) {
        for a in 0..k {
            xty[a] += row[a] * yi;
        }
    }
    let beta: Vec<f64> = (0..k).map(|a| (0..k).map(|b| inv[a][b] * xty[b]).sum()).collect();
    let residuals: Vec<f64> = x
        .iter()
        .zip(y)
        .map(|(row, &yi)| yi - row.iter().zip(&beta).map(|(a, b)| a * b).sum::<f64>())
        .collect();
    let ssr: f64 = residuals.iter().map(|e| e * e).sum();
    let s2 = ssr / (n - k) as f64;
    let std_errors = (0..k).map(|a| (s2 * inv[a][a]).sqrt()).collect();
    let ybar = y.iter().sum::<f64>() / n as f64;
    let tss: f64 = y.iter().map(|v| (v - ybar) * (v - ybar)).sum();
    let num: f64 = (1..n).map(|t| (residuals[t] - residuals[t - 1]).powi(2)).sum();
    OlsOracle { beta, std_errors, residuals, ssr, r_squared: 1.0 - ssr / tss, durbin_watson: num / ssr }
}

/// `σ_ts = Σ_i e_it e_is / divisor`, one entry at a time.
pub fn period_covariance(resid: &Rows, divisor: f64) -> Rows {
    let t = resid[0].len();
    let mut s = vec![vec![0.0; t]; t];
    for a in 0..t {
        for b in 0..t {
            let mut acc = 0.0;
            for row in resid {
                acc += row[a] * row[b];
            }
            s[a][b] = acc / divisor;
        }
    }
    s
}

/// Sandwich `(XᵀX)⁻¹ [Σ_i Σ_ts x_it σ_ts x_isᵀ] (XᵀX)⁻¹ · n/(n−k)`, with `σ`
/// from the residuals (divisor `N`). Rows of `x` are unit-major.
pub fn pcse(x: &Rows, resid: &[f64], periods: usize) -> Rows {
    let (n, k) = (x.len(), x[0].len());
    let units = n / periods;
    let e: Rows = (0..units).map(|i| resid[i * periods..(i + 1) * periods].to_vec()).collect();
    let omega = period_covariance(&e, units as f64);
    let mut meat = vec![vec![0.0; k]; k];
    for i in 0..units {
        for ts in 0..periods {
            for ss in 0..periods {
                let w = omega[ts][ss];
                let (xt, xs) = (&x[i * periods + ts], &x[i * periods + ss]);
                for a in 0..k {
                    for b in 0..k {
                        meat[a][b] += xt[a] * w * xs[b];
                    }
                }
            }
        }
    }
    let bread = invert(&xtx(x));
    let scale = n as f64 / (n - k) as f64;
    let mut v = vec![vec![0.0; k]; k];
    for a in 0..k {
        for b in 0..k {
            let mut acc = 0.0;
            for c in 0..k {
                for d in 0..k {
                    acc += bread[a][c] * meat[c][d] * bread[d][b];
                }
            }
            v[a][b] = acc * scale;
        }
    }
    v
}

pub struct CsdOracle {
    pub lm: f64,
    pub scaled_lm: f64,
    pub cd: f64,
}

/// Pairwise-loop Breusch–Pagan LM, Pesaran scaled LM and CD.
pub fn csd(resid: &Rows, demean: bool) -> CsdOracle {
    let (n, t) = (resid.len(), resid[0].len());
    let (mut lm, mut scaled, mut sum) = (0.0, 0.0, 0.0);
    for i in 0..n {
        for j in i + 1..n {
            let r = correlation(&resid[i], &resid[j], demean);
            lm += t as f64 * r * r;
            scaled += t as f64 * r * r - 1.0;
            sum += r;
        }
    }
    let nn1 = (n * (n - 1)) as f64;
    CsdOracle { lm, scaled_lm: scaled / nn1.sqrt(), cd: (2.0 * t as f64 / nn1).sqrt() * sum }
}

pub fn correlation(a: &[f64], b: &[f64], demean: bool) -> f64 {
    let n = a.len() as f64;
    let (ma, mb) = if demean { (a.iter().sum::<f64>() / n, b.iter().sum::<f64>() / n) } else { (0.0, 0.0) };
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    sab / (saa * sbb).sqrt()
}

/// Largest entrywise gap, relative to `max(1, |want|)`.
pub fn max_rel_gap(got: impl IntoIterator<Item = f64>, want: impl IntoIterator<Item = f64>) -> f64 {
    got.into_iter().zip(want).map(|(g, w)| (g - w).abs() / w.abs().max(1.0)).fold(0.0, f64::max)
}
