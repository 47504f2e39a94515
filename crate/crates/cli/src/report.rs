//! Output document shared by all commands, rendered as JSON, CSV or text.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use unimodal_core::combinat::Partition;
use unimodal_core::ring::{QPoly, Rational};

/// One value in a row or summary.
#[derive(Clone, Debug)]
pub enum Cell {
    Count(usize),
    Int(BigInt),
    Rational(Rational),
    Partition(Partition),
    Poly(QPoly),
    Text(String),
    Status(bool),
    Missing,
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Count(n) => json!(n),
            Cell::Int(i) => json!(i.to_string()),
            Cell::Rational(r) => rational_json(r),
            Cell::Partition(p) => json!(p.parts()),
            Cell::Poly(poly) => Value::Array(poly.coeffs().iter().map(rational_json).collect()),
            Cell::Text(s) => json!(s),
            Cell::Status(ok) => json!(status(*ok)),
            Cell::Missing => Value::Null,
        }
    }

    fn to_flat(&self) -> String {
        match self {
            Cell::Count(n) => n.to_string(),
            Cell::Int(i) => i.to_string(),
            Cell::Rational(r) => r.to_string(),
            Cell::Partition(p) => p.to_string(),
            Cell::Poly(poly) => {
                let cs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
                format!("[{}]", cs.join(","))
            }
            Cell::Text(s) => s.clone(),
            Cell::Status(ok) => status(*ok).to_string(),
            Cell::Missing => String::new(),
        }
    }
}

fn rational_json(r: &Rational) -> Value {
    json!([r.numer().to_string(), r.denom().to_string()])
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub params: Vec<(&'static str, Value)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Vec<(&'static str, Cell)>,
    /// Extra human-readable lines for text output.
    pub text_lines: Vec<String>,
    pub failed: bool,
}

impl Report {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Report {
            command,
            params: Vec::new(),
            columns,
            rows: Vec::new(),
            summary: Vec::new(),
            text_lines: Vec::new(),
            failed: false,
        }
    }

    pub fn param(&mut self, key: &'static str, value: Value) {
        self.params.push((key, value));
    }

    pub fn to_json(&self) -> String {
        let params: Map<String, Value> = self.params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(row).map(|(k, c)| (k.to_string(), c.to_json())).collect();
                Value::Object(obj)
            })
            .collect();
        let mut results = Map::new();
        results.insert("rows".into(), Value::Array(rows));
        for (k, c) in &self.summary {
            results.insert(k.to_string(), c.to_json());
        }
        let doc = json!({ "command": self.command, "params": params, "results": results });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_flat))?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
        out.push_str(&format!("{} {}\n", self.command, params.join(" ")));
        let flat: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::to_flat).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| flat.iter().map(|r| r[i].len()).chain([self.columns[i].len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        out.push_str(&line(self.columns.clone()));
        for r in &flat {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
        }
        for (k, c) in &self.summary {
            out.push_str(&format!("{k}: {}\n", c.to_flat()));
        }
        for l in &self.text_lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keys_are_sorted_and_integers_are_strings() {
        let mut r = Report::new("demo", vec!["z", "a"]);
        r.param("n", json!(3));
        r.rows.push(vec![Cell::Int(BigInt::from(5)), Cell::Poly(QPoly::from_ints(&[0, 1]))]);
        let s = r.to_json();
        assert!(s.find("\"command\"").unwrap() < s.find("\"params\"").unwrap());
        assert!(s.find("\"a\"").unwrap() < s.find("\"z\"").unwrap());
        assert!(s.contains("\"5\""));
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["results"]["rows"][0]["a"], json!([["0", "1"], ["1", "1"]]));
    }

    #[test]
    fn csv_has_header_and_flat_cells() {
        let mut r = Report::new("demo", vec!["cycle_type", "count"]);
        r.rows.push(vec![Cell::Partition(Partition::new(vec![2, 1]).unwrap()), Cell::Count(2)]);
        assert_eq!(r.to_csv().unwrap(), "cycle_type,count\n\"(2,1)\",2\n");
    }
}
