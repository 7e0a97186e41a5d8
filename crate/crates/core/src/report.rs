//! The certificate document shared by every subcommand: a verdict, a list of
//! evidence items and the provenance of the inputs. The structured form is
//! JSON; the text form renders the same object.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::fixtures::Provenance;
use crate::TOOLKIT_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Info,
    External,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
            Status::External => "EXTERNAL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evidence {
    pub check: String,
    pub status: Status,
    pub summary: String,
    /// transcript lines for the text rendering
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub transcript: Vec<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
}

impl Evidence {
    pub fn new(check: impl Into<String>, status: Status, summary: impl Into<String>) -> Self {
        Evidence { check: check.into(), status, summary: summary.into(), transcript: Vec::new(), data: Value::Null }
    }

    pub fn with_data(mut self, data: Value) -> Self {
        self.data = data;
        self
    }

    pub fn with_transcript(mut self, lines: Vec<String>) -> Self {
        self.transcript = lines;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProvenanceRecord {
    pub version: String,
    pub fixtures: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Document {
    pub command: String,
    pub verdict: String,
    pub evidence: Vec<Evidence>,
    pub provenance: ProvenanceRecord,
}

impl Document {
    pub fn new(command: &str, verdict: impl Into<String>, evidence: Vec<Evidence>, prov: &Provenance) -> Self {
        Document {
            command: command.into(),
            verdict: verdict.into(),
            evidence,
            provenance: ProvenanceRecord { version: TOOLKIT_VERSION.into(), fixtures: prov.digests().clone() },
        }
    }

    /// True when no evidence item failed.
    pub fn all_passed(&self) -> bool {
        self.evidence.iter().all(|e| e.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document is serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {} ==", self.command);
        for e in &self.evidence {
            let _ = writeln!(out, "[{}] {}: {}", e.status.tag(), e.check, e.summary);
            for line in &e.transcript {
                let _ = writeln!(out, "    {line}");
            }
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(out, "version: {}", self.provenance.version);
        for (name, digest) in &self.provenance.fixtures {
            let _ = writeln!(out, "fixture {name}: sha256 {digest}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let doc = Document::new(
            "demo",
            "OK",
            vec![Evidence::new("count", Status::Pass, "16 lines").with_data(serde_json::json!({"lines": 16}))],
            &Provenance::default(),
        );
        let v: Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(v["verdict"], "OK");
        assert_eq!(v["evidence"][0]["status"], "PASS");
        assert_eq!(v["evidence"][0]["data"]["lines"], 16);
        assert_eq!(v["provenance"]["version"], TOOLKIT_VERSION);
        assert!(v["evidence"][0].get("transcript").is_none());
        assert!(doc.to_text().contains("[PASS] count: 16 lines"));
        assert!(doc.all_passed());
    }
}
