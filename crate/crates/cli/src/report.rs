//! Report envelope and its text/JSON renderings.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct Report {
    command: String,
    digest: String,
    result: Map<String, Value>,
    diagnostics: Vec<String>,
}

/// `sha256:` digest over the resolved inputs, separated by a unit separator.
pub fn input_digest(inputs: &[String]) -> String {
    let mut hasher = Sha256::new();
    for (i, input) in inputs.iter().enumerate() {
        if i > 0 {
            hasher.update([0x1f]);
        }
        hasher.update(input.as_bytes());
    }
    let bytes = hasher.finalize();
    let hex: String = bytes.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

impl Report {
    pub fn new(command: String, inputs: &[String]) -> Self {
        Self {
            command,
            digest: input_digest(inputs),
            result: Map::new(),
            diagnostics: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.to_string(), value.into());
    }

    pub fn diagnose(&mut self, message: impl Into<String>) {
        self.diagnostics.push(message.into());
    }

    pub fn diagnostics(&self) -> &[String] {
        &self.diagnostics
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let value = json!({
                    "schema": SCHEMA,
                    "command": self.command,
                    "input_digest": self.digest,
                    "result": self.result,
                    "diagnostics": self.diagnostics,
                });
                let mut out = serde_json::to_string_pretty(&value).expect("report serializes");
                out.push('\n');
                out
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input digest: {}\n", self.digest));
        for (key, value) in &self.result {
            write_entry(&mut out, 0, key, value);
        }
        if self.diagnostics.is_empty() {
            out.push_str("diagnostics: none\n");
        } else {
            out.push_str("diagnostics:\n");
            for d in &self.diagnostics {
                out.push_str(&format!("  - {d}\n"));
            }
        }
        out
    }
}

/// Identifier keys read as words in text; keys that are formulas stay verbatim.
fn label(key: &str) -> String {
    if key
        .chars()
        .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
    {
        key.replace('_', " ")
    } else {
        key.to_string()
    }
}

fn scalar_text(value: &Value) -> Option<String> {
    match value {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn is_table(map: &Map<String, Value>) -> bool {
    map.len() == 2
        && map.get("columns").is_some_and(Value::is_array)
        && map.get("rows").is_some_and(Value::is_array)
}

fn write_entry(out: &mut String, indent: usize, key: &str, value: &Value) {
    let pad = " ".repeat(indent);
    if let Some(text) = scalar_text(value) {
        out.push_str(&format!("{pad}{}: {text}\n", label(key)));
        return;
    }
    match value {
        Value::Array(items) if items.iter().all(|v| scalar_text(v).is_some()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar_text).collect();
            out.push_str(&format!("{pad}{}: [{}]\n", label(key), parts.join(", ")));
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{}:\n", label(key)));
            for item in items {
                write_item(out, indent + 2, item);
            }
        }
        Value::Object(map) if is_table(map) => {
            out.push_str(&format!("{pad}{}:\n", label(key)));
            write_table(out, indent + 2, map);
        }
        Value::Object(map) => {
            out.push_str(&format!("{pad}{}:\n", label(key)));
            for (k, v) in map {
                write_entry(out, indent + 2, k, v);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

fn write_item(out: &mut String, indent: usize, item: &Value) {
    let pad = " ".repeat(indent);
    match item {
        Value::Object(map) => {
            let mut first = true;
            for (k, v) in map {
                let mut entry = String::new();
                write_entry(&mut entry, indent + 2, k, v);
                if first {
                    entry.replace_range(indent..indent + 2, "- ");
                    first = false;
                }
                out.push_str(&entry);
            }
        }
        other => {
            let text = scalar_text(other).unwrap_or_else(|| other.to_string());
            out.push_str(&format!("{pad}- {text}\n"));
        }
    }
}

fn write_table(out: &mut String, indent: usize, map: &Map<String, Value>) {
    let cell = |v: &Value| scalar_text(v).unwrap_or_else(|| v.to_string());
    let mut grid: Vec<Vec<String>> = Vec::new();
    grid.push(
        map["columns"]
            .as_array()
            .into_iter()
            .flatten()
            .map(cell)
            .collect(),
    );
    for row in map["rows"].as_array().into_iter().flatten() {
        grid.push(row.as_array().into_iter().flatten().map(cell).collect());
    }
    let columns = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            grid.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let pad = " ".repeat(indent);
    for row in &grid {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect();
        out.push_str(&format!("{pad}{}\n", cells.join("  ").trim_end()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering() {
        let mut report = Report::new("cocal7 test".into(), &["a".into()]);
        report.set("lower_central_series", vec![6, 3, 0]);
        report.set("i_X sigma = 0", true);
        report.set(
            "table",
            json!({ "columns": ["x", "value"], "rows": [["psi_123", "1/2"], ["psi_124", "0"]] }),
        );
        report.set("rows", json!([{ "name": "1A", "status": "valid" }]));
        report.diagnose("careful");
        let text = report.render(Format::Text);
        let expected = "\
command: cocal7 test
input digest: sha256:ca978112ca1bbdcafac231b39a23dc4da786eff8147c4e72b9807785afee48bb
lower central series: [6, 3, 0]
i_X sigma = 0: true
table:
        x  value
  psi_123    1/2
  psi_124      0
rows:
  - name: 1A
    status: valid
diagnostics:
  - careful
";
        assert_eq!(text, expected);
    }

    #[test]
    fn json_envelope() {
        let report = Report::new("cocal7 test".into(), &["a".into(), "b".into()]);
        let value: Value = serde_json::from_str(&report.render(Format::Json)).unwrap();
        assert_eq!(value["schema"], 1);
        assert_eq!(value["diagnostics"], json!([]));
        assert_ne!(
            input_digest(&["a".into(), "b".into()]),
            input_digest(&["ab".into()])
        );
    }
}
