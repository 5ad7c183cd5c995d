//! The document every subcommand prints.

use homog_core::Error;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReportDocument {
    pub command: String,
    pub args: Vec<String>,
    pub params: Value,
    pub status: Status,
    pub exit_code: i32,
    pub result: Value,
    pub error: Option<(String, String)>,
}

impl ReportDocument {
    pub fn new(command: &str, args: Vec<String>, params: Value) -> Self {
        ReportDocument {
            command: command.to_string(),
            args,
            params,
            status: Status::Pass,
            exit_code: 0,
            result: Value::Null,
            error: None,
        }
    }

    pub fn finish(mut self, result: Value, passed: bool) -> Self {
        self.result = result;
        self.status = if passed { Status::Pass } else { Status::Fail };
        self.exit_code = if passed { 0 } else { 1 };
        self
    }

    pub fn failed(mut self, e: &Error) -> Self {
        self.status = Status::Error;
        self.exit_code = e.exit_code();
        self.error = Some((e.kind().to_string(), e.to_string()));
        self
    }

    /// Keys come out sorted, so equal inputs serialize to identical bytes.
    pub fn to_json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("command".into(), json!(self.command));
        doc.insert("args".into(), json!(self.args));
        doc.insert("params".into(), self.params.clone());
        doc.insert("status".into(), json!(self.status.name()));
        doc.insert("exit_code".into(), json!(self.exit_code));
        doc.insert("result".into(), self.result.clone());
        if let Some((kind, message)) = &self.error {
            doc.insert("error".into(), json!({"kind": kind, "message": message}));
        }
        Value::Object(doc)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("report serializes"),
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = Vec::new();
        if let Some((kind, message)) = &self.error {
            out.push(format!("error [{kind}]: {message}"));
        } else {
            text_lines(&self.result, "", &mut out);
        }
        out.push(format!("status: {} (exit {})", self.status.name(), self.exit_code));
        out.join("\n")
    }
}

fn is_check(v: &Value) -> bool {
    v.get("name").is_some() && v.get("passed").map(Value::is_boolean).unwrap_or(false)
}

fn text_lines(v: &Value, indent: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Array(items) if items.iter().all(is_check) && !items.is_empty() => {
                        out.push(format!("{indent}{k}:"));
                        for c in items {
                            let mark = if c["passed"] == json!(true) { "PASS" } else { "FAIL" };
                            let anchor =
                                c.get("anchor").and_then(Value::as_str).map(|a| format!("[{a}] ")).unwrap_or_default();
                            out.push(format!("{indent}  {mark} {anchor}{}", c["name"].as_str().unwrap_or("")));
                            if let Some(Value::Array(off)) = c.get("offending") {
                                for o in off {
                                    out.push(format!(
                                        "{indent}       {} {}",
                                        o["index"].as_str().unwrap_or(""),
                                        o["value"].as_str().unwrap_or("")
                                    ));
                                }
                            }
                        }
                    }
                    Value::Object(_) | Value::Array(_) => {
                        out.push(format!("{indent}{k}:"));
                        text_lines(x, &format!("{indent}  "), out);
                    }
                    _ => out.push(format!("{indent}{k}: {}", scalar_text(x))),
                }
            }
        }
        Value::Array(items) => {
            if items.iter().all(|x| !x.is_object() && !x.is_array()) {
                out.push(format!("{indent}[{}]", items.iter().map(scalar_text).collect::<Vec<_>>().join(", ")));
            } else {
                for x in items {
                    out.push(format!("{indent}-"));
                    text_lines(x, &format!("{indent}  "), out);
                }
            }
        }
        other => out.push(format!("{indent}{}", scalar_text(other))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
