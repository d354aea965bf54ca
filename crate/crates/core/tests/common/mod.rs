#![allow(dead_code)]

pub mod oracle;

use panelsur::{Matrix, PanelDesign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// A small balanced panel regression, unit-major, constant last.
#[derive(Debug, Clone)]
pub struct Toy {
    pub units: usize,
    pub periods: usize,
    pub y: Vec<f64>,
    pub x: oracle::Rows,
}

impl Toy {
    /// Up to 10 units × 5 periods × 4 regressors (constant included), always
    /// with more units than periods so the period covariance is estimable.
    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let units = rng.random_range(6..=10);
        let periods = rng.random_range(3..=5);
        let slopes = rng.random_range(1..=3);
        let n = units * periods;
        let beta: Vec<f64> = (0..slopes).map(|_| rng.random_range(-2.0..2.0)).collect();
        let mut x = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        for _ in 0..n {
            let mut row: Vec<f64> = (0..slopes).map(|_| rng.random_range(-5.0..5.0)).collect();
            let e: f64 = StandardNormal.sample(&mut rng);
            y.push(1.5 + row.iter().zip(&beta).map(|(a, b)| a * b).sum::<f64>() + e);
            row.push(1.0);
            x.push(row);
        }
        Toy { units, periods, y, x }
    }

    pub fn design(&self) -> PanelDesign<f64> {
        let k = self.x[0].len();
        let mut columns: Vec<String> = (1..k).map(|j| format!("x{j}")).collect();
        columns.push("C".into());
        PanelDesign {
            y: self.y.clone(),
            x: Matrix::from_rows(&self.x),
            n_units: self.units,
            n_periods: self.periods,
            columns,
            constant_column: Some(k - 1),
        }
    }

    /// Residual-like `N × T` block drawn from the same seed.
    pub fn residual_rows(&self, seed: u64) -> oracle::Rows {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        (0..self.units)
            .map(|_| (0..self.periods).map(|_| StandardNormal.sample(&mut rng)).collect())
            .collect()
    }
}
