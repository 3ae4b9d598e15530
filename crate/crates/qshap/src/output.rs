//! Tables and their JSON, CSV and plain-text renderings.

use anyhow::Result;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_json(&self, meta: Value) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let m: Map<String, Value> = self.columns.iter().map(|c| c.to_string()).zip(r.iter().cloned()).collect();
                Value::Object(m)
            })
            .collect();
        let mut top = Map::new();
        top.insert("meta".into(), meta);
        top.insert("rows".into(), Value::Array(rows));
        Value::Object(top)
    }

    pub fn render(&self, format: Format, meta: Value) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.to_json(meta))? + "\n"),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r.iter().map(cell))?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
            Format::Table => {
                let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|k| cells.iter().map(|r| r[k].chars().count()).chain([self.columns[k].len()]).max().unwrap_or(0))
                    .collect();
                let line = |items: Vec<String>| {
                    let padded: Vec<String> =
                        items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}", w = *w)).collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                let mut out = line(self.columns.iter().map(|c| c.to_string()).collect());
                out += &line(widths.iter().map(|w| "-".repeat(*w)).collect());
                for r in cells {
                    out += &line(r);
                }
                Ok(out)
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("({})", items.iter().map(cell).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Table {
        let mut t = Table::new(&["nu", "dim", "det"]);
        t.push(vec![json!([1, 0]), json!(1), json!("1 - z^3")]);
        t.push(vec![json!([0, 2]), json!(0), json!("0")]);
        t
    }

    #[test]
    fn renderings() {
        let t = sample();
        let csv = t.render(Format::Csv, json!({})).unwrap();
        assert_eq!(csv, "nu,dim,det\n\"(1,0)\",1,1 - z^3\n\"(0,2)\",0,0\n");
        let table = t.render(Format::Table, json!({})).unwrap();
        assert!(table.starts_with("nu     dim  det\n"));
        let js: Value = serde_json::from_str(&t.render(Format::Json, json!({"a": 1})).unwrap()).unwrap();
        assert_eq!(js["rows"][0]["det"], "1 - z^3");
        assert_eq!(js["meta"]["a"], 1);
    }
}
