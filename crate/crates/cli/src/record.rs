//! Canonical result records and their JSON/CSV rendering.
//!
//! Keys are sorted (the default `serde_json` map is ordered), exact values
//! are strings, and floats carry 17 significant digits.

use std::str::FromStr;

use serde_json::{Map, Number, Value};
use spectral_core::ratpoly::Rational;
use spectral_core::verify::Field;

pub const FORMAT_TAG: &str = "spectral-records/1";

pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(
        Number::from_str(&format!("{x:.16e}")).expect("scientific notation is a JSON number"),
    )
}

pub fn exact(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn text(s: impl Into<String>) -> Value {
    Value::String(s.into())
}

pub fn field(f: &Field) -> Value {
    match f {
        Field::Bool(b) => Value::Bool(*b),
        Field::Int(i) => Value::from(*i),
        Field::Float(x) => float(*x),
        Field::Exact(s) | Field::Text(s) => text(s.clone()),
        Field::List(items) => Value::Array(items.iter().map(field).collect()),
    }
}

#[derive(Debug, Clone)]
pub struct Record {
    pub input: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub module: &'static str,
    pub operation: &'static str,
    pub anchor: &'static str,
}

impl Record {
    pub fn new(module: &'static str, operation: &'static str, anchor: &'static str) -> Self {
        Self {
            input: Map::new(),
            outputs: Map::new(),
            module,
            operation,
            anchor,
        }
    }

    pub fn input(mut self, key: &str, value: Value) -> Self {
        self.input.insert(key.to_string(), value);
        self
    }

    pub fn output(&mut self, key: &str, value: Value) {
        self.outputs.insert(key.to_string(), value);
    }

    fn to_value(&self) -> Value {
        let mut provenance = Map::new();
        provenance.insert("anchor".into(), text(self.anchor));
        provenance.insert("module".into(), text(self.module));
        provenance.insert("operation".into(), text(self.operation));
        let mut out = Map::new();
        out.insert("input".into(), Value::Object(self.input.clone()));
        out.insert("outputs".into(), Value::Object(self.outputs.clone()));
        out.insert("provenance".into(), Value::Object(provenance));
        Value::Object(out)
    }
}

/// `{"meta": {...}, "records": [...]}`, pretty printed with a trailing newline.
pub fn render_json(command: &str, records: &[Record]) -> String {
    let mut meta = Map::new();
    meta.insert("command".into(), text(command));
    meta.insert("format".into(), text(FORMAT_TAG));
    meta.insert("tool".into(), text(env!("CARGO_PKG_NAME")));
    meta.insert("version".into(), text(env!("CARGO_PKG_VERSION")));
    let mut doc = Map::new();
    doc.insert("meta".into(), Value::Object(meta));
    doc.insert(
        "records".into(),
        Value::Array(records.iter().map(Record::to_value).collect()),
    );
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("values serialize");
    s.push('\n');
    s
}

fn flatten(prefix: &str, value: &Value, out: &mut Map<String, Value>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        other => {
            out.insert(prefix.to_string(), other.clone());
        }
    }
}

fn cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

/// One row per record; columns are the sorted union of flattened keys.
pub fn render_csv(records: &[Record]) -> String {
    let rows: Vec<Map<String, Value>> = records
        .iter()
        .map(|r| {
            let mut flat = Map::new();
            flatten("", &r.to_value(), &mut flat);
            flat
        })
        .collect();
    let mut columns: Vec<&String> = rows.iter().flat_map(|r| r.keys()).collect();
    columns.sort();
    columns.dedup();
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(&columns).expect("in-memory write");
    for row in &rows {
        writer
            .write_record(
                columns
                    .iter()
                    .map(|c| row.get(*c).map(cell).unwrap_or_default()),
            )
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(float(881.7957).to_string(), "8.8179570000000001e+2");
        assert_eq!(float(-1.0e-10).to_string(), "-1.0000000000000000e-10");
        assert_eq!(float(f64::NAN), Value::Null);
    }

    #[test]
    fn json_keys_are_sorted_and_csv_flattens() {
        let mut r = Record::new("m", "op", "label")
            .input("z", float(1.0))
            .input("a", text("x"));
        r.output("list", Value::Array(vec![text("1"), text("2")]));
        let json = render_json("test", &[r.clone()]);
        assert!(json.find("\"a\"").unwrap() < json.find("\"z\"").unwrap());
        assert!(json.ends_with('\n'));
        let csv = render_csv(&[r]);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "input.a,input.z,outputs.list,provenance.anchor,provenance.module,provenance.operation"
        );
        assert_eq!(
            lines.next().unwrap(),
            "x,1.0000000000000000e+0,1;2,label,m,op"
        );
    }
}
