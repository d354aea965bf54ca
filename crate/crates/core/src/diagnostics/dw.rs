use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// 5% Savin–White bounds: `(n, [(dl, du); k′ = 1..=5])`.
const SAVIN_WHITE_05: [(usize, [(f64, f64); 5]); 8] = [
    (50, [(1.503, 1.585), (1.462, 1.628), (1.421, 1.674), (1.378, 1.721), (1.335, 1.771)]),
    (60, [(1.549, 1.616), (1.514, 1.652), (1.480, 1.689), (1.444, 1.727), (1.408, 1.767)]),
    (70, [(1.583, 1.641), (1.554, 1.672), (1.525, 1.703), (1.494, 1.735), (1.464, 1.768)]),
    (80, [(1.611, 1.662), (1.586, 1.688), (1.560, 1.715), (1.534, 1.743), (1.507, 1.772)]),
    (90, [(1.635, 1.679), (1.612, 1.703), (1.589, 1.726), (1.566, 1.751), (1.542, 1.776)]),
    (100, [(1.654, 1.694), (1.634, 1.715), (1.613, 1.736), (1.592, 1.758), (1.571, 1.780)]),
    (150, [(1.720, 1.746), (1.706, 1.760), (1.693, 1.774), (1.679, 1.788), (1.665, 1.802)]),
    (200, [(1.758, 1.778), (1.748, 1.789), (1.738, 1.799), (1.728, 1.810), (1.718, 1.820)]),
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DwBounds {
    pub dl: f64,
    pub du: f64,
    pub n: usize,
    /// Regressors excluding the constant.
    pub k_prime: usize,
    pub alpha: f64,
}

impl DwBounds {
    pub fn new(dl: f64, du: f64, n: usize, k_prime: usize, alpha: f64) -> Result<Self> {
        if !(0.0 < dl && dl < du && du < 2.0) {
            return Err(Error::InvalidSpec(format!("Durbin-Watson bounds need 0 < dl < du < 2, got {dl}, {du}")));
        }
        Ok(Self { dl, du, n, k_prime, alpha })
    }

    /// Built-in 5% table, nearest tabulated `n` (ties go to the smaller `n`).
    pub fn from_table(n: usize, k_prime: usize) -> Result<Self> {
        if !(1..=5).contains(&k_prime) {
            return Err(Error::InvalidSpec(format!("no tabulated Durbin-Watson bounds for k' = {k_prime}")));
        }
        let (tab_n, row) = SAVIN_WHITE_05
            .iter()
            .min_by_key(|(m, _)| m.abs_diff(n))
            .expect("table is not empty");
        let (dl, du) = row[k_prime - 1];
        Self::new(dl, du, *tab_n, k_prime, 0.05)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DwDecision {
    NoAutocorrelation,
    Positive,
    Negative,
    Inconclusive,
}

pub fn dw_decide<T: Scalar>(stat: T, bounds: &DwBounds) -> DwDecision {
    let stat = stat.to_f64().unwrap_or(f64::NAN);
    let (dl, du) = (bounds.dl, bounds.du);
    if stat.is_nan() {
        DwDecision::Inconclusive
    } else if stat < dl {
        DwDecision::Positive
    } else if stat < du {
        DwDecision::Inconclusive
    } else if stat <= 4.0 - du {
        DwDecision::NoAutocorrelation
    } else if stat <= 4.0 - dl {
        DwDecision::Inconclusive
    } else {
        DwDecision::Negative
    }
}
