use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::PanelDataset;
use crate::error::{Error, PanelGap, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// How the columns of a panel CSV map onto (unit, period, variable, value).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "layout", rename_all = "snake_case")]
pub enum CsvLayout {
    /// One observation per row: `geo,time,variable,value`.
    Stacked { unit: String, period: String, variable: String, value: String },
    /// One row per (unit, period), one column per variable.
    Columns { unit: String, period: String, values: Vec<String> },
    /// One row per unit (and variable); every other column header is a period.
    Wide { unit: String, variable: WideVariable },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WideVariable {
    /// Variable name read from this column.
    Column(String),
    /// The whole file holds a single variable.
    Fixed(String),
}

impl Default for CsvLayout {
    fn default() -> Self {
        CsvLayout::Stacked {
            unit: "geo".into(),
            period: "time".into(),
            variable: "variable".into(),
            value: "value".into(),
        }
    }
}

pub fn load_panel_csv<T: Scalar, P: AsRef<Path>>(path: P, layout: &CsvLayout) -> Result<PanelDataset<T>> {
    let file = std::fs::File::open(path)?;
    read_panel_csv(file, layout)
}

/// Missing markers (`:`, empty) and unparseable cells come back as `None`.
/// Trailing status flags as in `"12.3 b"` are ignored.
fn parse_cell(raw: &str) -> Option<f64> {
    let s = raw.trim();
    if s.is_empty() || s == ":" {
        return None;
    }
    let token = s.split_whitespace().next()?;
    token.parse::<f64>().ok().filter(|v| v.is_finite())
}

fn parse_period(raw: &str) -> Result<i32> {
    raw.trim().parse::<i32>().map_err(|_| Error::Parse(format!("period `{raw}` is not an integer")))
}

fn column_index(headers: &csv::StringRecord, name: &str) -> Result<usize> {
    headers
        .iter()
        .position(|h| h.trim() == name)
        .ok_or_else(|| Error::Parse(format!("missing column `{name}`")))
}

type Cell = (String, i32, String);

struct Collector {
    cells: HashMap<Cell, Option<f64>>,
    units: BTreeSet<String>,
    periods: BTreeSet<i32>,
    variables: BTreeSet<String>,
}

impl Collector {
    fn new() -> Self {
        Self { cells: HashMap::new(), units: BTreeSet::new(), periods: BTreeSet::new(), variables: BTreeSet::new() }
    }

    fn push(&mut self, unit: &str, period: i32, variable: &str, value: Option<f64>) -> Result<()> {
        let key = (unit.trim().to_string(), period, variable.trim().to_string());
        if self.cells.contains_key(&key) {
            return Err(Error::DuplicateObservation { unit: key.0, period, variable: key.2 });
        }
        self.units.insert(key.0.clone());
        self.periods.insert(period);
        self.variables.insert(key.2.clone());
        self.cells.insert(key, value);
        Ok(())
    }

    fn finish<T: Scalar>(self) -> Result<PanelDataset<T>> {
        if self.cells.is_empty() {
            return Err(Error::UnbalancedPanel(PanelGap::Empty));
        }
        let units: Vec<String> = self.units.into_iter().collect();
        let periods: Vec<i32> = self.periods.into_iter().collect();
        let mut variables = BTreeMap::new();
        // Scan in canonical order so the reported gap is deterministic.
        for var in &self.variables {
            let mut m = Matrix::zeros(units.len(), periods.len());
            for (i, unit) in units.iter().enumerate() {
                for (j, &period) in periods.iter().enumerate() {
                    match self.cells.get(&(unit.clone(), period, var.clone())) {
                        Some(Some(v)) => m[(i, j)] = T::lit(*v),
                        _ => {
                            return Err(Error::UnbalancedPanel(PanelGap::Missing {
                                unit: unit.clone(),
                                period,
                                variable: var.clone(),
                            }))
                        }
                    }
                }
            }
            variables.insert(var.clone(), m);
        }
        PanelDataset::new(units, periods, variables)
    }
}

/// Reads a balanced panel. Any gap, missing marker or non-numeric cell is
/// reported as [`Error::UnbalancedPanel`] naming the first gap in canonical order.
pub fn read_panel_csv<T: Scalar, R: Read>(reader: R, layout: &CsvLayout) -> Result<PanelDataset<T>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).flexible(false).trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    let records: Vec<csv::StringRecord> = rdr.records().collect::<std::result::Result<_, _>>()?;
    if records.is_empty() {
        return Err(Error::UnbalancedPanel(PanelGap::Empty));
    }
    let mut out = Collector::new();
    match layout {
        CsvLayout::Stacked { unit, period, variable, value } => {
            let (iu, ip, iv, ix) = (
                column_index(&headers, unit)?,
                column_index(&headers, period)?,
                column_index(&headers, variable)?,
                column_index(&headers, value)?,
            );
            for rec in &records {
                out.push(&rec[iu], parse_period(&rec[ip])?, &rec[iv], parse_cell(&rec[ix]))?;
            }
        }
        CsvLayout::Columns { unit, period, values } => {
            if values.is_empty() {
                return Err(Error::InvalidSpec("column layout needs at least one value column".into()));
            }
            let iu = column_index(&headers, unit)?;
            let ip = column_index(&headers, period)?;
            let ivals: Vec<(usize, &str)> =
                values.iter().map(|v| column_index(&headers, v).map(|i| (i, v.as_str()))).collect::<Result<_>>()?;
            for rec in &records {
                let p = parse_period(&rec[ip])?;
                for &(i, name) in &ivals {
                    out.push(&rec[iu], p, name, parse_cell(&rec[i]))?;
                }
            }
        }
        CsvLayout::Wide { unit, variable } => {
            let iu = column_index(&headers, unit)?;
            let ivar = match variable {
                WideVariable::Column(c) => Some(column_index(&headers, c)?),
                WideVariable::Fixed(_) => None,
            };
            let period_cols: Vec<(usize, i32)> = headers
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != iu && Some(i) != ivar)
                .map(|(i, h)| parse_period(h).map(|p| (i, p)))
                .collect::<Result<_>>()?;
            if period_cols.is_empty() {
                return Err(Error::UnbalancedPanel(PanelGap::Empty));
            }
            for rec in &records {
                let name = match (ivar, variable) {
                    (Some(i), _) => &rec[i],
                    (None, WideVariable::Fixed(n)) => n.as_str(),
                    (None, WideVariable::Column(_)) => unreachable!(),
                };
                for &(i, p) in &period_cols {
                    out.push(&rec[iu], p, name, parse_cell(&rec[i]))?;
                }
            }
        }
    }
    out.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stacked(src: &str) -> Result<PanelDataset<f64>> {
        read_panel_csv(src.as_bytes(), &CsvLayout::default())
    }

    const SMALL: &str = "geo,time,variable,value\n\
        FI,2011,x,2.0\nAT,2010,x,3.0\nFI,2010,x,1.0\nAT,2011,x,4.0\n";

    #[test]
    fn stacked_is_canonicalized() {
        let ds = stacked(SMALL).unwrap();
        assert_eq!(ds.units(), ["AT", "FI"]);
        assert_eq!(ds.periods(), [2010, 2011]);
        assert_eq!(ds.stacked("x").unwrap(), vec![3.0, 4.0, 1.0, 2.0]);
    }

    #[test]
    fn row_order_does_not_matter() {
        let mut lines: Vec<&str> = SMALL.lines().collect();
        let header = lines.remove(0);
        lines.reverse();
        let shuffled = format!("{header}\n{}\n", lines.join("\n"));
        assert_eq!(stacked(&shuffled).unwrap(), stacked(SMALL).unwrap());
    }

    #[test]
    fn missing_marker_names_the_gap() {
        let src = SMALL.replace("AT,2011,x,4.0", "AT,2011,x,:");
        match stacked(&src) {
            Err(Error::UnbalancedPanel(PanelGap::Missing { unit, period, variable })) => {
                assert_eq!((unit.as_str(), period, variable.as_str()), ("AT", 2011, "x"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn absent_row_and_garbage_are_gaps() {
        let dropped: String = SMALL.lines().filter(|l| !l.starts_with("FI,2010")).map(|l| format!("{l}\n")).collect();
        assert!(matches!(stacked(&dropped), Err(Error::UnbalancedPanel(PanelGap::Missing { .. }))));
        let garbage = SMALL.replace("1.0", "abc");
        assert!(matches!(stacked(&garbage), Err(Error::UnbalancedPanel(PanelGap::Missing { .. }))));
        let blank = SMALL.replace("1.0", "");
        assert!(matches!(stacked(&blank), Err(Error::UnbalancedPanel(PanelGap::Missing { .. }))));
    }

    #[test]
    fn status_flags_are_ignored() {
        let src = SMALL.replace("1.0", "1.0 b");
        assert_eq!(stacked(&src).unwrap().stacked("x").unwrap()[2], 1.0);
    }

    #[test]
    fn duplicates_are_rejected() {
        let src = format!("{SMALL}AT,2010,x,9.0\n");
        assert!(matches!(stacked(&src), Err(Error::DuplicateObservation { .. })));
    }

    #[test]
    fn empty_inputs() {
        assert!(matches!(stacked(""), Err(Error::UnbalancedPanel(PanelGap::Empty))));
        assert!(matches!(stacked("geo,time,variable,value\n"), Err(Error::UnbalancedPanel(PanelGap::Empty))));
    }

    #[test]
    fn missing_column_is_a_parse_error() {
        assert!(matches!(stacked("geo,year,variable,value\nAT,2010,x,1\n"), Err(Error::Parse(_))));
    }

    #[test]
    fn wide_and_columns_agree_with_stacked() {
        let wide = "geo,variable,2010,2011\nFI,x,1.0,2.0\nAT,x,3.0,4.0\n";
        let layout = CsvLayout::Wide { unit: "geo".into(), variable: WideVariable::Column("variable".into()) };
        let a: PanelDataset<f64> = read_panel_csv(wide.as_bytes(), &layout).unwrap();
        assert_eq!(a, stacked(SMALL).unwrap());

        let fixed = "geo,2010,2011\nFI,1.0,2.0\nAT,3.0,4.0\n";
        let layout = CsvLayout::Wide { unit: "geo".into(), variable: WideVariable::Fixed("x".into()) };
        let b: PanelDataset<f64> = read_panel_csv(fixed.as_bytes(), &layout).unwrap();
        assert_eq!(b, a);

        let cols = "geo,time,x\nAT,2010,3.0\nAT,2011,4.0\nFI,2010,1.0\nFI,2011,2.0\n";
        let layout = CsvLayout::Columns { unit: "geo".into(), period: "time".into(), values: vec!["x".into()] };
        let c: PanelDataset<f64> = read_panel_csv(cols.as_bytes(), &layout).unwrap();
        assert_eq!(c, a);
    }
}
