use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use scramble_lab::graph::io::write_graph;
use scramble_lab::width::CheckStatus;
use scramble_lab::MultiGraph;

/// Version of every JSON document the binary emits.
pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// The property being checked.
    pub statement: String,
    pub status: CheckStatus,
    /// Graph file text of the offending graph, on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    pub values: Value,
    pub runtime_ms: u64,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, ok: Option<bool>, values: Value, started: Instant) -> Self {
        let status = match ok {
            Some(true) => CheckStatus::Pass,
            Some(false) => CheckStatus::Fail,
            None => CheckStatus::Skipped,
        };
        CheckRecord {
            id: id.into(),
            statement: statement.into(),
            status,
            graph: None,
            values,
            runtime_ms: started.elapsed().as_millis() as u64,
        }
    }

    /// Attaches the graph when the check failed.
    pub fn on(mut self, g: &MultiGraph) -> Self {
        if self.status == CheckStatus::Fail {
            self.graph = Some(write_graph(g, None));
        }
        self
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub graphs_run: usize,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn new(suite: &str, graphs_run: usize, checks: Vec<CheckRecord>) -> Self {
        SuiteReport {
            schema: SCHEMA,
            suite: suite.to_string(),
            graphs_run,
            pass: !checks.iter().any(CheckRecord::failed),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.failed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn suite_passes_unless_a_check_fails() {
        let t = Instant::now();
        let pass = CheckRecord::new("a", "s", Some(true), json!({}), t);
        let skip = CheckRecord::new("b", "s", None, json!({}), t);
        let report = SuiteReport::new("x", 2, vec![pass.clone(), skip]);
        assert!(report.pass);
        assert_eq!(report.failures().count(), 0);

        let fail = CheckRecord::new("c", "s", Some(false), json!({}), t);
        let report = SuiteReport::new("x", 3, vec![pass, fail]);
        assert!(!report.pass);
        assert_eq!(report.failures().map(|c| c.id.as_str()).collect::<Vec<_>>(), ["c"]);
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["checks"][1]["status"], "fail");
    }

    #[test]
    fn failing_record_carries_its_graph() {
        let g = MultiGraph::new(2, [(0, 1, 2)]).unwrap();
        let t = Instant::now();
        assert!(CheckRecord::new("a", "s", Some(true), json!({}), t).on(&g).graph.is_none());
        let text = CheckRecord::new("a", "s", Some(false), json!({}), t).on(&g).graph.unwrap();
        assert!(text.contains("0 1 2"));
    }
}
