//! Tables for export as JSON or CSV.

use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::affine_weyl::AffineWeylGroup;
use crate::error::{Error, Result};
use crate::hecke::PrimeField;
use crate::root_datum::Cocharacter;
use crate::satake::Satake;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    AdmSizes,
    Strata,
    Matrix,
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adm-sizes" => Ok(TableKind::AdmSizes),
            "strata" => Ok(TableKind::Strata),
            "matrix" => Ok(TableKind::Matrix),
            _ => Err(Error::Parse(format!("unknown table `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Text(String),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text)).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn write(&self, format: Format, path: &Path) -> Result<()> {
        std::fs::write(path, self.render(format)?)?;
        Ok(())
    }
}

/// `|Adm(mu)|` for dominant `mu` in the height window.
pub fn adm_sizes(group: &AffineWeylGroup, height: i64) -> Result<Table> {
    let d = group.datum();
    let mut rows = Vec::new();
    for mu in super::dominant_window(d, height) {
        let n = group.admissible_set(&mu)?.len();
        rows.push(vec![Cell::Text(mu.to_string()), Cell::Int(d.height(&mu)), Cell::Int(n as i64)]);
    }
    Ok(Table { columns: vec!["mu".into(), "height".into(), "size".into()], rows })
}

/// One row per element of `Adm(mu)`, by length and then text.
pub fn strata(group: &AffineWeylGroup, mu: &Cocharacter) -> Result<Table> {
    let rows = group
        .a_mu_report(mu)?
        .into_iter()
        .map(|r| vec![Cell::Text(r.element), Cell::Int(r.length as i64)])
        .collect();
    Ok(Table { columns: vec!["element".into(), "length".into()], rows })
}

/// Matrix of `S^-1` from monomials to the basis `1_lambda`: row `lambda`,
/// column `mu`.
pub fn satake_matrix(group: &AffineWeylGroup, ring: PrimeField, height: i64) -> Result<Table> {
    let mus = super::dominant_window(group.datum(), height);
    let m = Satake::new(group, ring).satake_matrix(&mus)?;
    let mut columns = vec!["lambda".to_string()];
    columns.extend(mus.iter().map(|mu| mu.to_string()));
    let rows = mus
        .iter()
        .zip(m)
        .map(|(l, row)| {
            std::iter::once(Cell::Text(l.to_string()))
                .chain(row.into_iter().map(|c| Cell::Int(c as i64)))
                .collect()
        })
        .collect();
    Ok(Table { columns, rows })
}
