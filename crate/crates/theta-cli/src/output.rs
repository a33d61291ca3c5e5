//! JSON (default) and CSV report writers, versioned with "schema": "1".

use serde::Serialize;
use std::io::Write;
use std::path::Path;

pub struct Report {
    pub command: String,
    pub fields: serde_json::Map<String, serde_json::Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), fields: serde_json::Map::new() }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.fields.insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn merge_value(&mut self, key: &str, value: serde_json::Value) {
        self.fields.insert(key.to_string(), value);
    }

    pub fn push(&mut self, key: &str, value: serde_json::Value) {
        self.fields
            .entry(key.to_string())
            .or_insert_with(|| serde_json::Value::Array(Vec::new()))
            .as_array_mut()
            .expect("array field")
            .push(value);
    }
}

/// One comparison row of a reproduction suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteRow {
    pub id: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SuiteRow {
    pub fn close(id: impl Into<String>, expected: f64, got: f64, tol: f64) -> Self {
        SuiteRow {
            id: id.into(),
            expected: format!("{expected:.6}"),
            got: format!("{got:.6}"),
            pass: (expected - got).abs() <= tol,
            note: None,
        }
    }

    pub fn exact(id: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        let expected = expected.to_string();
        let got = got.to_string();
        let pass = expected == got;
        SuiteRow { id: id.into(), expected, got, pass, note: None }
    }

    pub fn flag(id: impl Into<String>, pass: bool, note: impl Into<String>) -> Self {
        SuiteRow {
            id: id.into(),
            expected: "true".into(),
            got: pass.to_string(),
            pass,
            note: Some(note.into()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteTable {
    pub suite: String,
    pub rows: Vec<SuiteRow>,
}

pub struct OutputSink {
    format: String,
    out: Option<std::path::PathBuf>,
}

impl OutputSink {
    pub fn new(format: &str, out: Option<&Path>) -> Result<Self, Box<dyn std::error::Error>> {
        Ok(OutputSink { format: format.to_string(), out: out.map(Path::to_path_buf) })
    }

    fn write(&self, text: &str) -> Result<(), Box<dyn std::error::Error>> {
        match &self.out {
            Some(path) => std::fs::write(path, text)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                if !text.ends_with('\n') {
                    stdout.write_all(b"\n")?;
                }
            }
        }
        Ok(())
    }

    pub fn raw(&self, text: &str) -> Result<(), Box<dyn std::error::Error>> {
        self.write(text)
    }

    pub fn report(&self, rep: &Report) -> Result<(), Box<dyn std::error::Error>> {
        match self.format.as_str() {
            "csv" => {
                let mut text = String::from("key,value\n");
                text.push_str(&format!("schema,1\ncommand,{}\n", rep.command));
                for (k, v) in &rep.fields {
                    text.push_str(&format!("{k},{}\n", csv_cell(v)));
                }
                self.write(&text)
            }
            _ => {
                let mut obj = serde_json::Map::new();
                obj.insert("schema".into(), "1".into());
                obj.insert("command".into(), rep.command.clone().into());
                for (k, v) in &rep.fields {
                    obj.insert(k.clone(), v.clone());
                }
                self.write(&serde_json::to_string_pretty(&serde_json::Value::Object(obj))?)
            }
        }
    }

    pub fn suite(&self, table: &SuiteTable) -> Result<(), Box<dyn std::error::Error>> {
        match self.format.as_str() {
            "csv" => {
                let mut text = String::from("id,expected,got,pass,note\n");
                for r in &table.rows {
                    text.push_str(&format!(
                        "{},{},{},{},{}\n",
                        r.id,
                        r.expected,
                        r.got,
                        r.pass,
                        r.note.as_deref().unwrap_or("")
                    ));
                }
                self.write(&text)
            }
            _ => {
                let value = serde_json::json!({
                    "schema": "1",
                    "command": "reproduce",
                    "suite": table.suite,
                    "pass": table.rows.iter().all(|r| r.pass),
                    "rows": table.rows,
                });
                self.write(&serde_json::to_string_pretty(&value)?)
            }
        }
    }
}

fn csv_cell(v: &serde_json::Value) -> String {
    let text = match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text
    }
}
