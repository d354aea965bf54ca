//! Change of a variable between two periods, per unit.

use panelsur::{Error, PanelDataset};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaRow {
    pub unit: String,
    pub name: Option<String>,
    pub from_value: f64,
    pub to_value: f64,
    /// `to_value − from_value`, in the variable's own units (pp for rates).
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub variable: String,
    pub from: i32,
    pub to: i32,
    /// Largest increase first.
    pub rows: Vec<DeltaRow>,
    pub aggregate: Option<DeltaRow>,
}

pub fn delta_report(
    ds: &PanelDataset<f64>,
    var: &str,
    from: i32,
    to: i32,
    aggregate_unit: Option<&str>,
) -> Result<DeltaReport, Error> {
    let values = ds.variable(var)?;
    let window = Error::EmptyWindow { first: from, last: to };
    let (Some(a), Some(b)) = (ds.period_index(from), ds.period_index(to)) else {
        return Err(window);
    };
    let mut rows = Vec::with_capacity(ds.n_units());
    let mut aggregate = None;
    for (i, unit) in ds.units().iter().enumerate() {
        let row = DeltaRow {
            unit: unit.clone(),
            name: country_name(unit).map(str::to_owned),
            from_value: values[(i, a)],
            to_value: values[(i, b)],
            delta: values[(i, b)] - values[(i, a)],
        };
        if aggregate_unit == Some(unit.as_str()) {
            aggregate = Some(row);
        } else {
            rows.push(row);
        }
    }
    rows.sort_by(|p, q| q.delta.total_cmp(&p.delta).then_with(|| p.unit.cmp(&q.unit)));
    Ok(DeltaReport { variable: var.into(), from, to, rows, aggregate })
}

/// English names for Eurostat geo codes of the EU28 era.
pub fn country_name(code: &str) -> Option<&'static str> {
    Some(match code {
        "AT" => "Austria",
        "BE" => "Belgium",
        "BG" => "Bulgaria",
        "CY" => "Cyprus",
        "CZ" => "Czechia",
        "DE" => "Germany",
        "DK" => "Denmark",
        "EE" => "Estonia",
        "EL" => "Greece",
        "ES" => "Spain",
        "FI" => "Finland",
        "FR" => "France",
        "HR" => "Croatia",
        "HU" => "Hungary",
        "IE" => "Ireland",
        "IT" => "Italy",
        "LT" => "Lithuania",
        "LU" => "Luxembourg",
        "LV" => "Latvia",
        "MT" => "Malta",
        "NL" => "Netherlands",
        "PL" => "Poland",
        "PT" => "Portugal",
        "RO" => "Romania",
        "SE" => "Sweden",
        "SI" => "Slovenia",
        "SK" => "Slovakia",
        "UK" => "United Kingdom",
        "EU28" => "European Union (28)",
        _ => return None,
    })
}
