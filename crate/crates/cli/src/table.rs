//! The tabular interchange format: a rectangular table of one axis
//! column plus one column per series, carried around with enough
//! metadata to regenerate it bit-identically.
//!
//! CSV layout: UTF-8, `#`-prefixed metadata lines, a header row, then
//! data rows. Values serialize with 12 significant digits; unbounded
//! exponents serialize as the literal token `inf` so downstream plots
//! cannot mistake them for large finite values.

use std::fmt;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// One table cell: a number or the unbounded sentinel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Num(f64),
    Inf,
}

impl Cell {
    pub fn as_f64(self) -> f64 {
        match self {
            Cell::Num(v) => v,
            Cell::Inf => f64::INFINITY,
        }
    }

    pub fn is_inf(self) -> bool {
        matches!(self, Cell::Inf)
    }
}

impl From<mpae_core::Exponent> for Cell {
    fn from(e: mpae_core::Exponent) -> Self {
        match e {
            mpae_core::Exponent::Unbounded => Cell::Inf,
            other => Cell::Num(other.as_f64()),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // 12 significant digits.
            Cell::Num(v) => write!(f, "{v:.11e}"),
            Cell::Inf => write!(f, "inf"),
        }
    }
}

/// A swept curve set: axis column plus one column per series.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveTable {
    /// Name of the axis variable (first header entry).
    pub axis: String,
    /// Series names (remaining header entries).
    pub series: Vec<String>,
    /// `(axis value, series values)`, ordered by axis value.
    pub rows: Vec<(f64, Vec<Cell>)>,
    /// Key/value metadata emitted as `# key: value` lines; includes the
    /// full parameter record needed to regenerate the table.
    pub metadata: Vec<(String, String)>,
}

impl CurveTable {
    pub fn new(axis: impl Into<String>, series: Vec<String>) -> Self {
        CurveTable { axis: axis.into(), series, rows: Vec::new(), metadata: Vec::new() }
    }

    pub fn meta(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.metadata.push((key.into(), value.to_string()));
    }

    pub fn push_row(&mut self, axis_value: f64, values: Vec<Cell>) {
        debug_assert_eq!(values.len(), self.series.len());
        self.rows.push((axis_value, values));
    }

    /// Serializes the table; the output is a pure function of the
    /// contents (no timestamps), so identical tables give identical
    /// bytes.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out.push_str(&self.axis);
        for s in &self.series {
            out.push(',');
            out.push_str(s);
        }
        out.push('\n');
        for (x, vals) in &self.rows {
            out.push_str(&format!("{x:.11e}"));
            for v in vals {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_csv())
            .with_context(|| format!("writing {}", path.display()))
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut metadata = Vec::new();
        let mut lines = text.lines().peekable();
        while let Some(line) = lines.peek() {
            if let Some(rest) = line.strip_prefix('#') {
                if let Some((k, v)) = rest.split_once(':') {
                    metadata.push((k.trim().to_string(), v.trim().to_string()));
                } else {
                    metadata.push((rest.trim().to_string(), String::new()));
                }
                lines.next();
            } else {
                break;
            }
        }
        let header = lines.next().context("missing header row")?;
        let mut cols = header.split(',');
        let axis = cols.next().context("empty header")?.to_string();
        let series: Vec<String> = cols.map(str::to_string).collect();
        if series.is_empty() {
            bail!("header has no series columns");
        }
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut fields = line.split(',');
            let x: f64 = fields
                .next()
                .context("empty row")?
                .parse()
                .with_context(|| format!("row {}: bad axis value", i + 1))?;
            let vals: Vec<Cell> = fields
                .map(|f| {
                    if f == "inf" {
                        Ok(Cell::Inf)
                    } else {
                        f.parse::<f64>().map(Cell::Num).with_context(|| format!("row {}: bad value '{f}'", i + 1))
                    }
                })
                .collect::<Result<_>>()?;
            if vals.len() != series.len() {
                bail!("row {} has {} values, expected {}", i + 1, vals.len(), series.len());
            }
            rows.push((x, vals));
        }
        Ok(CurveTable { axis, series, rows, metadata })
    }

    pub fn read_csv(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        Self::from_csv(&text)
    }

    pub fn meta_value(&self, key: &str) -> Option<&str> {
        self.metadata.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}
