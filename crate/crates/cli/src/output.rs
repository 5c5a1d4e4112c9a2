use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::{Map, Value};

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A command result: a JSON object for machines and a rendering for people.
pub struct Report {
    pub fields: Map<String, Value>,
    pub text: String,
}

impl Report {
    pub fn new(value: Value, text: String) -> Self {
        let fields = match value {
            Value::Object(m) => m,
            other => Map::from_iter([("value".to_string(), other)]),
        };
        Report { fields, text }
    }

    pub fn render(&self, format: Format) -> Result<String, Failure> {
        match format {
            Format::Json => {
                let mut m = Map::new();
                m.insert("schema".into(), Value::from(1));
                m.extend(self.fields.clone());
                Ok(serde_json::to_string_pretty(&Value::Object(m)).expect("JSON values serialize") + "\n")
            }
            Format::Csv => {
                let scalars: Vec<(&String, String)> =
                    self.fields.iter().filter_map(|(k, v)| scalar(v).map(|s| (k, s))).collect();
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(scalars.iter().map(|(k, _)| k.as_str())).map_err(Failure::io)?;
                w.write_record(scalars.iter().map(|(_, v)| v.as_str())).map_err(Failure::io)?;
                finish_csv(w)
            }
            Format::Text => Ok(self.text.clone()),
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::new()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

pub fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, Failure> {
    let bytes = w.into_inner().map_err(|e| Failure::io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

pub fn print(s: &str) -> Result<(), Failure> {
    io::stdout().write_all(s.as_bytes()).map_err(Failure::io)
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}
