//! Rendering of command output as csv, json or markdown.

use std::fmt;
use std::str::FromStr;

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Md,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "md" => Ok(Format::Md),
            _ => Err(format!("unknown format {s:?} (expected csv, json or md)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Md => "md",
        })
    }
}

/// Rows of scalar cells under fixed column names.
#[derive(Clone, Debug)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    /// Render as one JSON object instead of an array of objects.
    pub single: bool,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
            single: false,
        }
    }

    pub fn record<S: Into<String>>(fields: impl IntoIterator<Item = (S, Value)>) -> Self {
        let (columns, row): (Vec<String>, Vec<Value>) = fields.into_iter().map(|(k, v)| (k.into(), v)).unzip();
        Table { columns, rows: vec![row], single: true }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn objects(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|r| {
                let m: Map<String, Value> = self.columns.iter().cloned().zip(r.iter().cloned()).collect();
                Value::Object(m)
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let mut objs = self.objects();
        if self.single && objs.len() == 1 {
            objs.pop().unwrap()
        } else {
            Value::Array(objs)
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json_string(&self.to_json()),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).expect("write to memory");
                for r in &self.rows {
                    w.write_record(r.iter().map(cell_text)).expect("write to memory");
                }
                String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 cells")
            }
            Format::Md => markdown(&self.columns, &self.rows),
        }
    }
}

pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn markdown(columns: &[String], rows: &[Vec<Value>]) -> String {
    let texts: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|v| cell_text(v).replace('|', "\\|")).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            texts
                .iter()
                .map(|r| r[i].chars().count())
                .chain([c.chars().count(), 3])
                .max()
                .unwrap()
        })
        .collect();
    let line = |cells: &mut dyn Iterator<Item = String>| {
        let body: Vec<String> = cells.zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("| {} |\n", body.join(" | "))
    };
    let mut out = line(&mut columns.iter().cloned());
    out += &line(&mut widths.iter().map(|w| "-".repeat(*w)));
    for r in texts {
        out += &line(&mut r.into_iter());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(["a", "b"]);
        t.push(vec![json!(1), json!("x, y")]);
        assert_eq!(t.render(Format::Csv), "a,b\n1,\"x, y\"\n");
    }

    #[test]
    fn markdown_aligns() {
        let mut t = Table::new(["name", "n"]);
        t.push(vec![json!("long name"), json!(12)]);
        let md = t.render(Format::Md);
        let widths: Vec<usize> = md.lines().map(|l| l.len()).collect();
        assert!(widths.windows(2).all(|w| w[0] == w[1]), "{md}");
        assert!(md.starts_with("| name      | n   |"));
    }

    #[test]
    fn single_record_is_an_object() {
        let t = Table::record([("h0", json!(1)), ("h1", json!(0))]);
        assert_eq!(t.to_json(), json!({"h0": 1, "h1": 0}));
        let s = t.render(Format::Json);
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(json_string(&back), s);
    }
}
