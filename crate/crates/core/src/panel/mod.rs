//! Balanced cross-section × period panels and model specifications.

mod csv_io;

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, PanelGap, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub use csv_io::{load_panel_csv, read_panel_csv, CsvLayout, WideVariable};

/// Balanced panel: every variable is an `N × T` matrix (rows = units, columns = periods).
///
/// Units are kept sorted by identifier and periods ascending, so two datasets
/// holding the same observations compare equal regardless of input row order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PanelDataset<T> {
    units: Vec<String>,
    periods: Vec<i32>,
    variables: BTreeMap<String, Matrix<T>>,
}

impl<T: Scalar> PanelDataset<T> {
    /// Validates and canonicalizes. Units are sorted; each matrix's rows are
    /// permuted to follow. Periods must already be strictly increasing.
    pub fn new(units: Vec<String>, periods: Vec<i32>, variables: BTreeMap<String, Matrix<T>>) -> Result<Self> {
        if units.is_empty() || periods.is_empty() || variables.is_empty() {
            return Err(Error::UnbalancedPanel(PanelGap::Empty));
        }
        let mut seen = HashSet::new();
        for u in &units {
            if !seen.insert(u.as_str()) {
                return Err(Error::InvalidSpec(format!("duplicate cross-section id `{u}`")));
            }
        }
        if periods.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSpec("period ids must be strictly increasing".into()));
        }
        let mut order: Vec<usize> = (0..units.len()).collect();
        order.sort_by(|&a, &b| units[a].cmp(&units[b]));

        let (n, t) = (units.len(), periods.len());
        let mut canonical = BTreeMap::new();
        for (name, m) in variables {
            if m.rows() != n || m.cols() != t {
                return Err(Error::InvalidSpec(format!(
                    "variable `{name}` is {}x{}, expected {n}x{t}",
                    m.rows(),
                    m.cols()
                )));
            }
            let mut sorted = Matrix::zeros(n, t);
            for (new_row, &old_row) in order.iter().enumerate() {
                for j in 0..t {
                    let v = m[(old_row, j)];
                    if !v.is_finite() {
                        return Err(Error::UnbalancedPanel(PanelGap::Missing {
                            unit: units[old_row].clone(),
                            period: periods[j],
                            variable: name.clone(),
                        }));
                    }
                    sorted[(new_row, j)] = v;
                }
            }
            canonical.insert(name, sorted);
        }
        let units = order.iter().map(|&i| units[i].clone()).collect();
        Ok(Self { units, periods, variables: canonical })
    }

    pub fn units(&self) -> &[String] {
        &self.units
    }

    pub fn periods(&self) -> &[i32] {
        &self.periods
    }

    pub fn n_units(&self) -> usize {
        self.units.len()
    }

    pub fn n_periods(&self) -> usize {
        self.periods.len()
    }

    /// `N × T`.
    pub fn n_obs(&self) -> usize {
        self.units.len() * self.periods.len()
    }

    pub fn variable_names(&self) -> impl Iterator<Item = &str> {
        self.variables.keys().map(String::as_str)
    }

    pub fn variable(&self, name: &str) -> Result<&Matrix<T>> {
        self.variables.get(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Values of `name` stacked unit-major, period-minor.
    pub fn stacked(&self, name: &str) -> Result<Vec<T>> {
        Ok(self.variable(name)?.as_slice().to_vec())
    }

    /// Time series of one unit.
    pub fn series(&self, name: &str, unit: usize) -> Result<Vec<T>> {
        Ok(self.variable(name)?.row(unit).to_vec())
    }

    pub fn period_index(&self, period: i32) -> Option<usize> {
        self.periods.binary_search(&period).ok()
    }

    pub fn unit_index(&self, unit: &str) -> Option<usize> {
        self.units.binary_search_by(|u| u.as_str().cmp(unit)).ok()
    }

    /// Sub-panel restricted to `vars` and the periods in `first..=last`.
    pub fn subset<S: AsRef<str>>(&self, vars: &[S], first: i32, last: i32) -> Result<Self> {
        let cols = self.window_columns(first, last)?;
        let mut variables = BTreeMap::new();
        for v in vars {
            let name = v.as_ref();
            let m = self.variable(name)?;
            let mut sub = Matrix::zeros(self.n_units(), cols.len());
            for i in 0..self.n_units() {
                for (j, &c) in cols.iter().enumerate() {
                    sub[(i, j)] = m[(i, c)];
                }
            }
            variables.insert(name.to_string(), sub);
        }
        if variables.is_empty() {
            return Err(Error::InvalidSpec("subset needs at least one variable".into()));
        }
        Ok(Self {
            units: self.units.clone(),
            periods: cols.iter().map(|&c| self.periods[c]).collect(),
            variables,
        })
    }

    fn window_columns(&self, first: i32, last: i32) -> Result<Vec<usize>> {
        let lo = self.periods[0];
        let hi = self.periods[self.periods.len() - 1];
        if first > last || first < lo || last > hi {
            return Err(Error::EmptyWindow { first, last });
        }
        let cols: Vec<usize> =
            (0..self.periods.len()).filter(|&j| (first..=last).contains(&self.periods[j])).collect();
        if cols.is_empty() {
            return Err(Error::EmptyWindow { first, last });
        }
        Ok(cols)
    }

    /// Converts the stored values to another scalar type.
    pub fn cast<U: Scalar>(&self) -> PanelDataset<U> {
        let variables = self
            .variables
            .iter()
            .map(|(k, m)| {
                let data = m.as_slice().iter().map(|v| U::lit(v.to_f64().unwrap_or(f64::NAN))).collect();
                (k.clone(), Matrix::from_row_major(m.rows(), m.cols(), data))
            })
            .collect();
        PanelDataset { units: self.units.clone(), periods: self.periods.clone(), variables }
    }
}

/// Dependent variable, regressors, constant flag and sample window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub dependent: String,
    pub regressors: Vec<String>,
    #[serde(default = "default_true")]
    pub include_constant: bool,
    /// Inclusive `(first, last)` period; the whole dataset when absent.
    #[serde(default)]
    pub sample: Option<(i32, i32)>,
}

fn default_true() -> bool {
    true
}

/// Response and design in unit-major, period-minor row order.
#[derive(Debug, Clone)]
pub struct PanelDesign<T> {
    pub y: Vec<T>,
    pub x: Matrix<T>,
    pub n_units: usize,
    pub n_periods: usize,
    /// Column names; `"C"` for the constant, which is always last.
    pub columns: Vec<String>,
    pub constant_column: Option<usize>,
}

impl ModelSpec {
    pub fn new<S: Into<String>>(dependent: S, regressors: Vec<String>) -> Self {
        Self { dependent: dependent.into(), regressors, include_constant: true, sample: None }
    }

    pub fn validate<T: Scalar>(&self, ds: &PanelDataset<T>) -> Result<()> {
        if self.regressors.iter().any(|r| r == &self.dependent) {
            return Err(Error::InvalidSpec(format!("dependent `{}` also listed as a regressor", self.dependent)));
        }
        let mut seen = HashSet::new();
        for r in &self.regressors {
            if !seen.insert(r) {
                return Err(Error::InvalidSpec(format!("regressor `{r}` listed twice")));
            }
        }
        if self.regressors.is_empty() && !self.include_constant {
            return Err(Error::InvalidSpec("model has no regressors".into()));
        }
        ds.variable(&self.dependent)?;
        for r in &self.regressors {
            ds.variable(r)?;
        }
        if let Some((first, last)) = self.sample {
            ds.window_columns(first, last)?;
        }
        Ok(())
    }

    /// The dataset restricted to the model's variables and sample window.
    pub fn sample_panel<T: Scalar>(&self, ds: &PanelDataset<T>) -> Result<PanelDataset<T>> {
        self.validate(ds)?;
        let (first, last) = self.sample.unwrap_or((ds.periods[0], ds.periods[ds.periods.len() - 1]));
        let mut vars = vec![self.dependent.clone()];
        vars.extend(self.regressors.iter().cloned());
        ds.subset(&vars, first, last)
    }

    pub fn design<T: Scalar>(&self, ds: &PanelDataset<T>) -> Result<PanelDesign<T>> {
        let sub = self.sample_panel(ds)?;
        let y = sub.stacked(&self.dependent)?;
        let mut columns_data = Vec::with_capacity(self.regressors.len() + 1);
        for r in &self.regressors {
            columns_data.push(sub.stacked(r)?);
        }
        let mut columns = self.regressors.clone();
        let mut constant_column = None;
        if self.include_constant {
            constant_column = Some(columns_data.len());
            columns_data.push(vec![T::one(); y.len()]);
            columns.push("C".to_string());
        }
        Ok(PanelDesign {
            y,
            x: Matrix::from_columns(&columns_data),
            n_units: sub.n_units(),
            n_periods: sub.n_periods(),
            columns,
            constant_column,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> PanelDataset<f64> {
        let units = vec!["RO".to_string(), "AT".to_string(), "FI".to_string()];
        let periods = vec![2010, 2011, 2012];
        let mut vars = BTreeMap::new();
        vars.insert(
            "a".to_string(),
            Matrix::from_rows(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0], vec![7.0, 8.0, 9.0]]),
        );
        vars.insert(
            "b".to_string(),
            Matrix::from_rows(&[vec![0.5, 0.1, 0.2], vec![0.9, 1.5, 0.3], vec![2.0, 0.4, 0.7]]),
        );
        PanelDataset::new(units, periods, vars).unwrap()
    }

    #[test]
    fn units_are_sorted_with_rows() {
        let ds = toy();
        assert_eq!(ds.units(), ["AT", "FI", "RO"]);
        assert_eq!(ds.series("a", 0).unwrap(), vec![4.0, 5.0, 6.0]);
        assert_eq!(ds.series("a", 2).unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(ds.n_obs(), 9);
    }

    #[test]
    fn rejects_non_finite() {
        let mut vars = BTreeMap::new();
        vars.insert("a".to_string(), Matrix::from_rows(&[vec![1.0, f64::NAN]]));
        let err = PanelDataset::new(vec!["X".into()], vec![1, 2], vars).unwrap_err();
        match err {
            Error::UnbalancedPanel(PanelGap::Missing { unit, period, variable }) => {
                assert_eq!((unit.as_str(), period, variable.as_str()), ("X", 2, "a"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn subset_window_and_idempotence() {
        let ds = toy();
        let once = ds.subset(&["a"], 2011, 2012).unwrap();
        assert_eq!(once.periods(), [2011, 2012]);
        assert_eq!(once.subset(&["a"], 2011, 2012).unwrap(), once);
        let single = ds.subset(&["b"], 2012, 2012).unwrap();
        assert_eq!(single.n_obs(), 3);
    }

    #[test]
    fn subset_errors() {
        let ds = toy();
        assert!(matches!(ds.subset(&["zzz"], 2010, 2012), Err(Error::UnknownVariable(_))));
        assert!(matches!(ds.subset(&["a"], 2012, 2010), Err(Error::EmptyWindow { .. })));
        assert!(matches!(ds.subset(&["a"], 2005, 2006), Err(Error::EmptyWindow { .. })));
    }

    #[test]
    fn spec_validation() {
        let ds = toy();
        let bad = ModelSpec::new("a", vec!["a".into()]);
        assert!(matches!(bad.validate(&ds), Err(Error::InvalidSpec(_))));
        let dup = ModelSpec::new("a", vec!["b".into(), "b".into()]);
        assert!(matches!(dup.validate(&ds), Err(Error::InvalidSpec(_))));
        let unknown = ModelSpec::new("a", vec!["q".into()]);
        assert!(matches!(unknown.validate(&ds), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn design_puts_constant_last() {
        let ds = toy();
        let d = ModelSpec::new("a", vec!["b".into()]).design(&ds).unwrap();
        assert_eq!(d.columns, ["b", "C"]);
        assert_eq!(d.constant_column, Some(1));
        assert_eq!(d.y[..3], [4.0, 5.0, 6.0]);
        assert_eq!(d.x[(0, 0)], 0.9);
        assert_eq!(d.x[(8, 1)], 1.0);
    }
}
