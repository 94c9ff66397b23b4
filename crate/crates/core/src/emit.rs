//! Table, JSON and CSV rendering of command results.
//!
//! JSON objects are emitted with sorted keys and without floating-point
//! values; rationals are strings `"p/q"` (or `"p"` when integral), so
//! parsing and re-emitting a document reproduces it byte for byte.

use std::fmt::Write as _;
use std::str::FromStr;

use num_rational::Ratio;
use serde_json::{Map, Value};

use crate::chow::CiCurveData;
use crate::classification::{ClassificationReport, ClosureCheck, SweepTable};
use crate::hilbert::{ClosedFormReport, HilbertProfile, MaxGenusParams};
use crate::linkage::{LinkedCurve, ResidualQuadricData};
use crate::scroll::ScrollType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected table, json or csv)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Int(i64),
    Bool(bool),
    Text(String),
    Rational(Ratio<i64>),
    Ints(Vec<i64>),
    Missing,
}

impl Field {
    fn to_json(&self) -> Value {
        match self {
            Field::Int(v) => Value::from(*v),
            Field::Bool(b) => Value::from(*b),
            Field::Text(s) => Value::from(s.as_str()),
            Field::Rational(r) => Value::from(r.to_string()),
            Field::Ints(v) => Value::from(v.clone()),
            Field::Missing => Value::Null,
        }
    }

    fn to_text(&self) -> String {
        match self {
            Field::Int(v) => v.to_string(),
            Field::Bool(b) => b.to_string(),
            Field::Text(s) => s.clone(),
            Field::Rational(r) => r.to_string(),
            Field::Ints(v) => v.iter().map(i64::to_string).collect::<Vec<_>>().join(" "),
            Field::Missing => String::new(),
        }
    }
}

impl From<i64> for Field {
    fn from(v: i64) -> Self {
        Field::Int(v)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

impl From<Ratio<i64>> for Field {
    fn from(v: Ratio<i64>) -> Self {
        Field::Rational(v)
    }
}

impl<T: Into<Field>> From<Option<T>> for Field {
    fn from(v: Option<T>) -> Self {
        v.map_or(Field::Missing, Into::into)
    }
}

/// Ordered key/value pairs. Table and CSV output keep insertion order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record(pub Vec<(String, Field)>);

impl Record {
    pub fn new() -> Self {
        Record(Vec::new())
    }

    pub fn with(mut self, key: &str, value: impl Into<Field>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json_value(&self) -> Value {
        Value::Object(self.0.iter().map(|(k, v)| (k.clone(), v.to_json())).collect::<Map<_, _>>())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Record(Record),
    Table {
        columns: Vec<String>,
        rows: Vec<Record>,
        summary: Option<Record>,
    },
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Document {
    pub fn to_json_value(&self) -> Value {
        match self {
            Document::Record(r) => r.to_json_value(),
            Document::Table { rows, summary, .. } => {
                let mut m = Map::new();
                m.insert("rows".into(), Value::Array(rows.iter().map(Record::to_json_value).collect()));
                if let Some(s) = summary {
                    m.insert("summary".into(), s.to_json_value());
                }
                Value::Object(m)
            }
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = self.to_json_value().to_string();
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Table => self.to_table(),
        }
    }

    fn to_csv(&self) -> String {
        let line = |cells: Vec<String>| cells.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(",") + "\n";
        match self {
            Document::Record(r) => {
                line(r.0.iter().map(|(k, _)| k.clone()).collect())
                    + &line(r.0.iter().map(|(_, v)| v.to_text()).collect())
            }
            Document::Table { columns, rows, .. } => {
                let mut out = line(columns.clone());
                for r in rows {
                    out += &line(
                        columns
                            .iter()
                            .map(|c| r.get(c).map(Field::to_text).unwrap_or_default())
                            .collect(),
                    );
                }
                out
            }
        }
    }

    fn to_table(&self) -> String {
        let mut out = String::new();
        match self {
            Document::Record(r) => {
                let width = r.0.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                for (k, v) in &r.0 {
                    let _ = writeln!(out, "{k:<width$}  {}", v.to_text());
                }
            }
            Document::Table { columns, rows, summary } => {
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| columns.iter().map(|c| r.get(c).map(Field::to_text).unwrap_or_default()).collect())
                    .collect();
                let widths: Vec<usize> = columns
                    .iter()
                    .enumerate()
                    .map(|(i, c)| cells.iter().map(|row| row[i].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
                    .collect();
                let mut push_row = |row: &[String]| {
                    let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                    let _ = writeln!(out, "{}", line.join("  ").trim_end());
                };
                push_row(columns);
                for row in &cells {
                    push_row(row);
                }
                if let Some(s) = summary {
                    out.push('\n');
                    out += &Document::Record(s.clone()).to_table();
                }
            }
        }
        out
    }
}

pub fn scroll_record(x: &ScrollType) -> Record {
    Record::new()
        .with("degrees", Field::Ints(x.degrees().to_vec()))
        .with("dim", x.dim())
        .with("degree", x.degree())
        .with("embedding_dim", x.embedding_dim())
        .with("vertex_dim", x.vertex_dim())
        .with("smooth", x.is_smooth())
        .with("class_group", x.class_group().to_string())
        .with("canonical_class", x.canonical_class().to_string())
        .with("canonical_class_normalized", x.normalize_class(x.canonical_class()).to_string())
}

pub fn params_record(p: &MaxGenusParams) -> Record {
    Record::new()
        .with("d", p.d)
        .with("n", p.n)
        .with("s", p.s)
        .with("m", p.m)
        .with("eps", p.eps)
        .with("w", p.w)
        .with("v", p.v)
        .with("k", p.k)
        .with("delta", p.delta)
        .with("e", p.e)
        .with("in_asymptotic_range", p.in_asymptotic_range)
        .with("planar_residual_range", p.planar_residual_range)
}

pub fn bound_record(p: &MaxGenusParams, rep: &ClosedFormReport, castelnuovo: i64, castelnuovo_printed: i64) -> Record {
    Record::new()
        .with("d", p.d)
        .with("n", p.n)
        .with("s", p.s)
        .with("G_profile", rep.profile_sum)
        .with("G_closed_form", rep.closed_form)
        .with("discrepancy", rep.difference)
        .with("castelnuovo_G", castelnuovo)
        .with("castelnuovo_G_printed", castelnuovo_printed)
        .with("in_asymptotic_range", p.in_asymptotic_range)
}

pub fn profile_document(p: &MaxGenusParams, prof: &HilbertProfile) -> Document {
    let rows = (0..prof.deltas().len() as i64)
        .map(|r| {
            Record::new()
                .with("r", r)
                .with("delta_h", prof.delta(r))
                .with("h", prof.cumulative(r))
                .with("h1", prof.h1_points(r))
        })
        .collect();
    let summary = Record::new()
        .with("d", p.d)
        .with("n", p.n)
        .with("s", p.s)
        .with("mass", prof.mass())
        .with("genus", prof.acm_genus());
    Document::Table {
        columns: ["r", "delta_h", "h", "h1"].map(String::from).to_vec(),
        rows,
        summary: Some(summary),
    }
}

pub fn ci_record(x: &ScrollType, ci: &CiCurveData) -> Record {
    Record::new()
        .with("scroll", Field::Ints(x.degrees().to_vec()))
        .with("a", ci.a)
        .with("b", ci.b)
        .with("degree", ci.degree)
        .with("ruling_degree", ci.ruling_degree)
        .with("genus", ci.genus)
}

pub fn link_record(linked: &LinkedCurve) -> Record {
    Record::new()
        .with("variant", linked.variant.label())
        .with("ci_degree", linked.complete_intersection.degree)
        .with("ci_genus", linked.complete_intersection.genus)
        .with("degree", linked.curve.degree)
        .with("ruling_degree", linked.curve.ruling_degree)
        .with("genus", linked.curve.genus)
        .with("empty_curve", linked.empty_curve)
}

pub fn quadric_record(q: &ResidualQuadricData) -> Record {
    Record::new()
        .with("n", q.n)
        .with("yb_class", q.yb_class.to_string())
        .with("yb_degree", q.yb_degree)
        .with("pa_AH", q.pa_ah)
        .with("pa_BH", q.pa_bh)
}

pub fn closure_record(p: &MaxGenusParams, c: &ClosureCheck) -> Record {
    Record::new()
        .with("d", p.d)
        .with("n", p.n)
        .with("s", p.s)
        .with("scroll", Field::Ints(c.scroll.degrees().to_vec()))
        .with("a", c.a)
        .with("b", c.b)
        .with("G", c.bound_g)
        .with("ci_genus", c.ci_genus)
        .with("residual_degree", c.linked_degree)
        .with("linked_genus", c.linked_genus)
        .with("residual_genus", c.target_genus)
        .with("closure_ok", c.ok)
        .with("diagnostic", c.diagnostic.clone())
}

pub fn classification_record(r: &ClassificationReport) -> Record {
    let p = &r.params;
    params_record(p)
        .with("residual_degree", r.residual_degree)
        .with("residual_description", r.residual_description.label())
        .with("residual_genus", r.residual_genus)
        .with("surface_class", r.surface_class.to_string())
        .with("construction_D_degree", r.construction_d_degree)
        .with("D_degree_in_window", r.d_degree_in_window)
        .with("noether_t", r.noether_t)
        .with("G", r.bound_g)
        .with("G_closed_form", r.closed_form)
        .with("closure_ok", r.closure_ok())
        .with("linked_genus", r.closure.as_ref().map(|c| c.linked_genus))
        .with("ci_genus", r.closure.as_ref().map(|c| c.ci_genus))
        .with("line_vertex_h0_lower_bound", r.lower_bound_note_for_line_vertex)
}

/// Column order of sweep CSV output.
pub const SWEEP_COLUMNS: [&str; 16] = [
    "n",
    "s",
    "d",
    "m",
    "eps",
    "w",
    "v",
    "k",
    "delta",
    "e",
    "planar",
    "residual_deg",
    "residual_genus",
    "G_profile",
    "G_closed",
    "closure_ok",
];

pub fn sweep_row(r: &ClassificationReport) -> Record {
    let p = &r.params;
    Record::new()
        .with("n", p.n)
        .with("s", p.s)
        .with("d", p.d)
        .with("m", p.m)
        .with("eps", p.eps)
        .with("w", p.w)
        .with("v", p.v)
        .with("k", p.k)
        .with("delta", p.delta)
        .with("e", p.e)
        .with("planar", r.in_planar_range)
        .with("residual_deg", r.residual_degree)
        .with("residual_genus", r.residual_genus)
        .with("G_profile", r.bound_g)
        .with("G_closed", r.closed_form)
        .with("closure_ok", r.closure_ok())
}

pub fn sweep_document(t: &SweepTable) -> Document {
    let s = &t.summary;
    Document::Table {
        columns: SWEEP_COLUMNS.map(String::from).to_vec(),
        rows: t.rows.iter().map(sweep_row).collect(),
        summary: Some(
            Record::new()
                .with("rows", s.rows as i64)
                .with("planar_rows", s.planar_rows as i64)
                .with("closure_attempted", s.closure_attempted as i64)
                .with("closure_ok", s.closure_ok as i64),
        ),
    }
}
