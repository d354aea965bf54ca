//! MacKinnon (1994) response surfaces for the single-series Dickey–Fuller
//! t-ratio: `p = Φ(Σ c_j τ^j)`, with separate polynomials below and above `τ*`.

use super::DeterministicSpec;
use crate::dist::normal_cdf;
use crate::scalar::Scalar;

struct Surface {
    min: f64,
    max: f64,
    star: f64,
    small: [f64; 3],
    large: [f64; 4],
}

const NONE: Surface = Surface {
    min: -19.04,
    max: f64::INFINITY,
    star: -1.04,
    small: [0.6344, 1.2378, 0.032496],
    large: [0.4797, 0.93557, -0.06999, 0.033066],
};

const CONSTANT: Surface = Surface {
    min: -18.83,
    max: 2.74,
    star: -1.61,
    small: [2.1659, 1.4412, 0.038269],
    large: [1.7339, 0.93202, -0.12745, -0.010368],
};

const TREND: Surface = Surface {
    min: -16.18,
    max: 0.7,
    star: -2.89,
    small: [3.2512, 1.6047, 0.049588],
    large: [2.5261, 0.61654, -0.37956, -0.060285],
};

fn horner(coef: &[f64], x: f64) -> f64 {
    coef.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Approximate p-value of a Dickey–Fuller t-ratio (lower tail).
pub fn pvalue<T: Scalar>(tau: T, spec: DeterministicSpec) -> T {
    let s = match spec {
        DeterministicSpec::None => &NONE,
        DeterministicSpec::ConstantOnly => &CONSTANT,
        DeterministicSpec::TrendAndConstant => &TREND,
    };
    let x = tau.to_f64().unwrap_or(f64::NAN);
    if x.is_nan() {
        return T::nan();
    }
    if x > s.max {
        return T::one();
    }
    if x < s.min {
        return T::zero();
    }
    let z = if x <= s.star { horner(&s.small, x) } else { horner(&s.large, x) };
    T::lit(normal_cdf(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    // statsmodels.tsa.adfvalues.mackinnonp(tau, regression, N=1)
    #[test]
    fn reference_points() {
        let cases = [
            (-3.5_f64, DeterministicSpec::ConstantOnly, 0.007_987_094_061_496_709_f64),
            (-2.0, DeterministicSpec::ConstantOnly, 0.286_573_099_168_431_54),
            (-3.0, DeterministicSpec::TrendAndConstant, 0.132_080_984_779_997_3),
            (-1.0, DeterministicSpec::None, 0.288_106_112_126_330_64),
            (-2.5, DeterministicSpec::None, 0.012_004_037_384_041_915),
        ];
        for (tau, spec, want) in cases {
            let got = pvalue(tau, spec);
            assert!((got - want).abs() < 1e-9, "{spec:?} tau={tau}: {got} vs {want}");
        }
    }

    #[test]
    fn clamps() {
        assert_eq!(pvalue(-25.0_f64, DeterministicSpec::ConstantOnly), 0.0);
        assert_eq!(pvalue(3.0_f64, DeterministicSpec::ConstantOnly), 1.0);
        assert_eq!(pvalue(1.0_f64, DeterministicSpec::TrendAndConstant), 1.0);
    }

    #[test]
    fn monotone() {
        for spec in [DeterministicSpec::None, DeterministicSpec::ConstantOnly, DeterministicSpec::TrendAndConstant] {
            let mut last = 0.0_f64;
            for i in 0..400 {
                let tau = -15.0 + i as f64 * 0.04;
                let p = pvalue(tau, spec);
                assert!(p >= last - 1e-12, "{spec:?} at {tau}");
                last = p;
            }
        }
    }
}
