//! The output document: one self-describing JSON object per invocation, or
//! the same content as JSON lines.

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Config;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize)]
pub struct Invocation {
    pub argv: Vec<String>,
    pub config: Config,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timestamps {
    pub started: String,
    pub finished: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub invocation: Invocation,
    pub reports: Vec<Value>,
    pub exit_status: i32,
    pub timestamps: Timestamps,
}

pub fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// A header line, one line per report, and a closing line with the
    /// status and finish time.
    pub fn to_jsonl(&self) -> String {
        let mut lines = vec![json!({
            "schema_version": SCHEMA_VERSION,
            "record": "invocation",
            "command": self.command,
            "invocation": self.invocation,
            "started": self.timestamps.started,
        })];
        for r in &self.reports {
            lines.push(json!({ "schema_version": SCHEMA_VERSION, "record": "report", "report": r }));
        }
        lines.push(json!({
            "schema_version": SCHEMA_VERSION,
            "record": "end",
            "exit_status": self.exit_status,
            "finished": self.timestamps.finished,
        }));
        let mut out: Vec<String> = lines.iter().map(Value::to_string).collect();
        out.push(String::new());
        out.join("\n")
    }
}
