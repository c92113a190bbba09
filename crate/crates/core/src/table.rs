//! Comparison tables of closed-form values against direct graph computation.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::index::abc_gg_value;
use crate::scalar::{lemma35_extremal, s33_closed_form, theorem_bound, BoundValue};

/// Significant digits used for every number written to CSV.
pub const CSV_DIGITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    /// Maximum over graphs whose two cycles share one vertex.
    Lemma35,
    /// `B_n(n-3,1,1,1)` next to the best `S_n^{3,3}` graph of each order.
    TheoremVsS33,
}

impl TableName {
    pub fn name(self) -> &'static str {
        match self {
            TableName::Lemma35 => "lemma35",
            TableName::TheoremVsS33 => "theorem_vs_s33",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            TableName::Lemma35 => 6,
            TableName::TheoremVsS33 => 7,
        }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemma35" => Ok(TableName::Lemma35),
            "theorem_vs_s33" => Ok(TableName::TheoremVsS33),
            _ => Err(Error::InvalidParameters(format!("unknown table {s:?}; expected lemma35 or theorem_vs_s33"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub family_label: String,
    pub closed_form_value: f64,
    pub direct_value: f64,
    pub difference: f64,
}

fn row(bound: BoundValue, closed: f64) -> Result<TableRow> {
    let family = bound.family.expect("tabulated bounds name their family");
    let direct = abc_gg_value(&family.build()?)?;
    Ok(TableRow {
        n: bound.n,
        family_label: family.to_string(),
        closed_form_value: closed,
        direct_value: direct,
        difference: closed - direct,
    })
}

/// Rows for `from..=to`; an empty range (`from > to`) gives no rows.
pub fn table_rows(name: TableName, from: usize, to: usize) -> Result<Vec<TableRow>> {
    if from > to {
        return Ok(Vec::new());
    }
    if from < name.min_n() {
        return Err(Error::InvalidParameters(format!(
            "table {name} starts at n = {}, got --from {from}",
            name.min_n()
        )));
    }
    let mut rows = Vec::new();
    for n in from..=to {
        match name {
            TableName::Lemma35 => {
                let b = lemma35_extremal(n)?;
                let v = b.value;
                rows.push(row(b, v)?);
            }
            TableName::TheoremVsS33 => {
                let b = theorem_bound(n)?;
                let v = b.value;
                rows.push(row(b, v)?);
                // The best shared-vertex graph, evaluated through the s33 closed form.
                let s = lemma35_extremal(n)?;
                let (m1, n1) = match &s.family {
                    Some(FamilySpec::SRt { m, nn, .. }) => (m[0], nn[0]),
                    _ => unreachable!("shared-vertex maximiser is an S_n^{{3,3}} graph"),
                };
                let v = s33_closed_form(n, m1, n1)?;
                rows.push(row(s, v)?);
            }
        }
    }
    Ok(rows)
}

/// Fixed-width significant-digit rendering shared by all CSV output.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..10).contains(&mag) {
        return format!("{:.*e}", CSV_DIGITS - 1, x);
    }
    let decimals = (CSV_DIGITS as i32 - 1 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn write_table_csv<W: Write>(rows: &[TableRow], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Domain(format!("csv output failed: {e}"));
    let mut wtr = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::Necessary).from_writer(out);
    wtr.write_record(["n", "family_label", "closed_form_value", "direct_value", "difference"]).map_err(io)?;
    for r in rows {
        wtr.write_record([
            r.n.to_string(),
            r.family_label.clone(),
            format_sig(r.closed_form_value),
            format_sig(r.direct_value),
            format_sig(r.difference),
        ])
        .map_err(io)?;
    }
    wtr.flush().map_err(|e| Error::Domain(format!("csv output failed: {e}")))?;
    Ok(())
}
