//! Scatter data behind the pairwise figures.

use panelsur::diagnostics::pearson;
use panelsur::regress::ols_fit;
use panelsur::{Error, Matrix, PanelDataset};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigurePoint {
    pub unit: String,
    pub period: i32,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureData {
    pub x: String,
    pub y: String,
    pub points: Vec<FigurePoint>,
    pub pearson: f64,
    /// R² of the simple regression of `y` on `x` with a constant.
    pub r_squared: f64,
}

pub fn emit_figure_data(ds: &PanelDataset<f64>, x: &str, y: &str) -> Result<FigureData, Error> {
    let xs = ds.stacked(x)?;
    let ys = ds.stacked(y)?;
    let pearson = pearson(&xs, &ys).ok_or_else(|| Error::DegenerateVariable(format!("{x} or {y}")))?;
    let r_squared = if x == y {
        1.0
    } else {
        let design = Matrix::from_columns(&[xs.clone(), vec![1.0; xs.len()]]);
        ols_fit(&ys, &design)?.stats.r_squared
    };
    let t = ds.n_periods();
    let points = xs
        .iter()
        .zip(&ys)
        .enumerate()
        .map(|(r, (&xv, &yv))| FigurePoint {
            unit: ds.units()[r / t].clone(),
            period: ds.periods()[r % t],
            x: xv,
            y: yv,
        })
        .collect();
    Ok(FigureData { x: x.into(), y: y.into(), points, pearson, r_squared })
}
