use std::fmt;
use std::path::PathBuf;

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Plain,
}

#[derive(Debug)]
pub enum CliError {
    Core(invario_core::Error),
    TablesMissing(PathBuf),
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::TablesMissing(_) => "tables_missing",
            CliError::Usage(_) => "usage",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::TablesMissing(dir) => write!(
                f,
                "no invariant tables in {}; run `invario gen-tables` first",
                dir.display()
            ),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<invario_core::Error> for CliError {
    fn from(e: invario_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub fn emit(format: Format, command: &str, field: &str, input: Value, result: Value) {
    let doc = json!({
        "artifact": concat!("invario ", env!("CARGO_PKG_VERSION")),
        "command": command,
        "field": field,
        "input": input,
        "result": result,
        "tables": invario_core::invgen::CACHE_VERSION,
    });
    print_doc(format, &doc);
}

pub fn emit_error(format: Format, command: Option<&str>, code: &str, message: &str) {
    let mut doc = Map::new();
    if let Some(c) = command {
        doc.insert("command".into(), c.into());
    }
    doc.insert("error".into(), json!({ "code": code, "message": message }));
    print_doc(format, &Value::Object(doc));
}

fn print_doc(format: Format, doc: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(doc).expect("serializable")),
        Format::Plain => {
            let mut lines = Vec::new();
            flatten("", doc, &mut lines);
            for l in lines {
                println!("{l}");
            }
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, v)| flatten(&key(k), v, out)),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push(format!("{prefix} = [{}]", items.join(", ")));
        }
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&format!("{prefix}[{i}]"), v, out)),
        other => out.push(format!("{prefix} = {}", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
