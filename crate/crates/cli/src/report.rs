use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn from_check(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Result of one command. `timing_ms` is only filled when timing was requested.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, status: Status, payload: Value) -> Self {
        Report {
            command: command.to_string(),
            status,
            payload,
            timing_ms: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.status == Status::Fail {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `key: value` lines, nested values as compact JSON.
    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        };
        let mut out = format!("{}: {status}\n", self.command);
        match &self.payload {
            Value::Object(map) => {
                for (k, v) in map {
                    let shown = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    out.push_str(&format!("  {k}: {shown}\n"));
                }
            }
            other => out.push_str(&format!("  {other}\n")),
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("  timing_ms: {ms}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn exit_code_follows_status() {
        assert_eq!(Report::new("gamma", Status::Info, json!({})).exit_code(), 0);
        assert_eq!(Report::new("gamma", Status::Pass, json!({})).exit_code(), 0);
        assert_eq!(Report::new("gamma", Status::Fail, json!({})).exit_code(), 1);
    }

    #[test]
    fn timing_omitted_unless_set() {
        let mut r = Report::new("gamma", Status::Pass, json!({"k": 1}));
        assert!(!r.to_json().contains("timing_ms"));
        r.timing_ms = Some(3);
        assert!(r.to_json().contains("\"timing_ms\": 3"));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn text_lists_payload_keys() {
        let r = Report::new("gamma", Status::Info, json!({"name": "x", "rows": [[1, 2]]}));
        assert_eq!(r.to_text(), "gamma: info\n  name: x\n  rows: [[1,2]]\n");
    }
}
