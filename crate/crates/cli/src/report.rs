//! Tabular results and their three renderings.

use std::io::{self, Write};

use serde_json::{json, Map, Number, Value as Json};

use crate::units::UnitSystem;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
    Text(String),
    Bool(bool),
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl Value {
    fn as_f64(&self) -> Option<f64> {
        match *self {
            Value::Int(n) => Some(n as f64),
            Value::Real(x) => Some(x),
            _ => None,
        }
    }

    /// Exact text: shortest round-trip form for reals.
    pub fn exact(&self) -> String {
        match self {
            Value::Int(n) => n.to_string(),
            Value::Real(x) => format!("{x:?}"),
            Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Json {
        match self {
            Value::Int(n) => json!(n),
            Value::Real(x) => real_to_json(*x),
            Value::Text(s) => json!(s),
            Value::Bool(b) => json!(b),
        }
    }
}

/// 17 significant digits, kept verbatim in the JSON text. Non-finite values become null.
fn real_to_json(x: f64) -> Json {
    if !x.is_finite() {
        return Json::Null;
    }
    let number: Number = format!("{x:.16e}")
        .parse()
        .expect("formatted float is valid JSON");
    Json::Number(number)
}

/// How a column is shown in table mode. CSV and JSON always carry full precision.
#[derive(Debug, Clone, Copy)]
pub enum Style {
    Plain,
    Fixed(usize),
    Sci(usize),
    /// Fraction shown as a percentage.
    Percent(usize),
}

#[derive(Debug, Clone)]
pub struct Column {
    pub name: &'static str,
    pub unit: &'static str,
    pub style: Style,
}

pub fn col(name: &'static str, unit: &'static str, style: Style) -> Column {
    Column { name, unit, style }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Aggregate {
    Max,
    Min,
    Last,
    /// `max - min`
    Range,
    /// `(max - min) / max |x|`
    RelativeRange,
}

impl Aggregate {
    pub fn apply(self, xs: &[f64]) -> f64 {
        let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = xs.iter().copied().fold(f64::INFINITY, f64::min);
        match self {
            Aggregate::Max => max,
            Aggregate::Min => min,
            Aggregate::Last => *xs.last().unwrap_or(&f64::NAN),
            Aggregate::Range => max - min,
            Aggregate::RelativeRange => {
                let scale = xs.iter().fold(0.0f64, |m, x| m.max(x.abs()));
                if scale > 0.0 {
                    (max - min) / scale
                } else {
                    0.0
                }
            }
        }
    }

    fn name(self) -> &'static str {
        match self {
            Aggregate::Max => "max",
            Aggregate::Min => "min",
            Aggregate::Last => "last",
            Aggregate::Range => "range",
            Aggregate::RelativeRange => "relative_range",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SummaryItem {
    pub name: &'static str,
    pub column: &'static str,
    pub aggregate: Aggregate,
    pub value: f64,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub units: UnitSystem,
    pub parameters: Vec<(&'static str, Value)>,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Value>>,
    pub summary: Vec<SummaryItem>,
    pub diagnostics: Vec<(&'static str, Value)>,
    /// Table mode shows at most this many evenly spaced rows.
    pub preview: Option<usize>,
}

impl Report {
    pub fn new(command: &'static str, units: UnitSystem, columns: Vec<Column>) -> Self {
        Report {
            command,
            units,
            parameters: Vec::new(),
            columns,
            rows: Vec::new(),
            summary: Vec::new(),
            diagnostics: Vec::new(),
            preview: None,
        }
    }

    pub fn param(&mut self, name: &'static str, value: impl Into<Value>) {
        self.parameters.push((name, value.into()));
    }

    pub fn diagnostic(&mut self, name: &'static str, value: impl Into<Value>) {
        self.diagnostics.push((name, value.into()));
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn column_index(&self, name: &str) -> usize {
        self.columns
            .iter()
            .position(|c| c.name == name)
            .expect("summary refers to a known column")
    }

    /// Adds a summary statistic computed from one numeric column.
    pub fn summarize(
        &mut self,
        name: &'static str,
        column: &'static str,
        aggregate: Aggregate,
    ) -> f64 {
        let k = self.column_index(column);
        let xs: Vec<f64> = self.rows.iter().filter_map(|r| r[k].as_f64()).collect();
        let value = aggregate.apply(&xs);
        self.summary.push(SummaryItem {
            name,
            column,
            aggregate,
            value,
        });
        value
    }

    /// `summary: name=value ...`, empty when there is nothing to summarize.
    pub fn summary_line(&self) -> Option<String> {
        if self.summary.is_empty() {
            return None;
        }
        let parts: Vec<String> = self
            .summary
            .iter()
            .map(|s| format!("{}={:?}", s.name, s.value))
            .collect();
        Some(format!("summary: {}", parts.join(" ")))
    }

    pub fn write_csv(&self, out: impl Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.columns.iter().map(|c| c.name))?;
        for row in &self.rows {
            w.write_record(row.iter().map(Value::exact))?;
        }
        w.flush()
    }

    pub fn to_json(&self) -> Json {
        let object = |pairs: &[(&'static str, Value)]| {
            Json::Object(
                pairs
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.to_json()))
                    .collect::<Map<_, _>>(),
            )
        };
        let columns: Vec<Json> = self
            .columns
            .iter()
            .map(|c| json!({ "name": c.name, "unit": c.unit }))
            .collect();
        let summary: Vec<Json> = self
            .summary
            .iter()
            .map(|s| {
                json!({
                    "name": s.name,
                    "column": s.column,
                    "aggregate": s.aggregate.name(),
                    "value": real_to_json(s.value),
                })
            })
            .collect();
        let data: Vec<Json> = self
            .rows
            .iter()
            .map(|row| {
                Json::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| (c.name.to_string(), v.to_json()))
                        .collect::<Map<_, _>>(),
                )
            })
            .collect();
        json!({
            "meta": {
                "command": self.command,
                "unit_system": self.units.name(),
                "version": env!("CARGO_PKG_VERSION"),
                "parameters": object(&self.parameters),
                "columns": columns,
                "summary": summary,
                "diagnostics": object(&self.diagnostics),
            },
            "data": data,
        })
    }

    pub fn write_json(&self, mut out: impl Write) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json())?;
        writeln!(out)
    }

    fn shown_rows(&self) -> Vec<&Vec<Value>> {
        match self.preview {
            Some(limit) if limit >= 2 && self.rows.len() > limit => {
                let last = self.rows.len() - 1;
                let mut picks: Vec<usize> = (0..limit).map(|k| k * last / (limit - 1)).collect();
                picks.dedup();
                picks.into_iter().map(|k| &self.rows[k]).collect()
            }
            _ => self.rows.iter().collect(),
        }
    }

    pub fn write_table(&self, mut out: impl Write) -> io::Result<()> {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={}", v.exact()))
            .collect();
        writeln!(
            out,
            "# {} ({} units) {}",
            self.command,
            self.units.name(),
            params.join(" ")
        )?;

        let header: Vec<String> = self
            .columns
            .iter()
            .map(|c| match (c.style, c.unit) {
                (Style::Percent(_), _) => format!("{} [%]", c.name),
                (_, "1") | (_, "") => c.name.to_string(),
                (_, unit) => format!("{} [{unit}]", c.name),
            })
            .collect();
        let shown = self.shown_rows();
        let cells: Vec<Vec<String>> = shown
            .iter()
            .map(|row| {
                self.columns
                    .iter()
                    .zip(row.iter())
                    .map(|(c, v)| render_cell(c.style, v))
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|k| {
                cells
                    .iter()
                    .map(|r| r[k].len())
                    .chain([header[k].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |items: &[String]| {
            items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(&header))?;
        for row in &cells {
            writeln!(out, "{}", line(row))?;
        }
        if shown.len() < self.rows.len() {
            writeln!(out, "# showing {} of {} rows", shown.len(), self.rows.len())?;
        }
        for (k, v) in &self.diagnostics {
            writeln!(out, "# {k} = {}", v.exact())?;
        }
        if let Some(s) = self.summary_line() {
            writeln!(out, "{s}")?;
        }
        Ok(())
    }
}

fn render_cell(style: Style, v: &Value) -> String {
    match (style, v) {
        (Style::Fixed(d), Value::Real(x)) => format!("{x:.d$}"),
        (Style::Sci(d), Value::Real(x)) => format!("{x:.d$e}"),
        (Style::Percent(d), Value::Real(x)) => format!("{:.d$}", 100.0 * x),
        _ => v.exact(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new(
            "demo",
            UnitSystem::Natural,
            vec![col("n", "1", Style::Plain), col("x", "m", Style::Fixed(2))],
        );
        for (n, x) in [(1usize, 0.1), (2, 0.7), (3, -0.2)] {
            r.push(vec![n.into(), x.into()]);
        }
        r
    }

    #[test]
    fn aggregates() {
        let xs = [1.0, -3.0, 2.0];
        assert_eq!(Aggregate::Max.apply(&xs), 2.0);
        assert_eq!(Aggregate::Min.apply(&xs), -3.0);
        assert_eq!(Aggregate::Last.apply(&xs), 2.0);
        assert_eq!(Aggregate::Range.apply(&xs), 5.0);
        assert_eq!(Aggregate::RelativeRange.apply(&xs), 5.0 / 3.0);
        assert_eq!(Aggregate::RelativeRange.apply(&[0.0, 0.0]), 0.0);
    }

    #[test]
    fn summary_line_uses_shortest_round_trip() {
        let mut r = sample();
        assert_eq!(r.summary_line(), None);
        r.summarize("top", "x", Aggregate::Max);
        assert_eq!(r.summary_line().unwrap(), "summary: top=0.7");
        r.summarize("tiny", "x", Aggregate::Range);
        let text = r.summary_line().unwrap();
        let tiny: f64 = text.rsplit('=').next().unwrap().parse().unwrap();
        assert_eq!(tiny, 0.7 - -0.2);
    }

    #[test]
    fn json_numbers_keep_seventeen_digits() {
        let j = real_to_json(0.1);
        assert_eq!(j.to_string(), "1.0000000000000001e-1");
        assert_eq!(real_to_json(f64::NAN), Json::Null);
        assert_eq!(real_to_json(-2.5).to_string(), "-2.5000000000000000e+0");
    }

    #[test]
    fn csv_and_table() {
        let r = sample();
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,x\n1,0.1\n2,0.7\n3,-0.2\n"
        );
        let mut buf = Vec::new();
        r.write_table(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("x [m]"));
        assert!(text.contains("-0.20"));
    }

    #[test]
    fn preview_keeps_first_and_last() {
        let mut r = Report::new(
            "demo",
            UnitSystem::Natural,
            vec![col("k", "1", Style::Plain)],
        );
        for k in 0..100usize {
            r.push(vec![k.into()]);
        }
        r.preview = Some(5);
        let shown: Vec<String> = r.shown_rows().iter().map(|row| row[0].exact()).collect();
        assert_eq!(shown, ["0", "24", "49", "74", "99"]);
    }
}
