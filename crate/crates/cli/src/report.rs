//! Report assembly: every command produces a [`Report`], rendered either as
//! stable text or as JSON.

use std::collections::BTreeMap;

use bek_core::Graph;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().map(|(i, j)| [i, j]).collect() }
    }
}

/// Top-level JSON document. Nested values use sorted maps so that parsing
/// and re-serializing reproduces the same bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub graph: GraphJson,
    pub params: BTreeMap<String, Value>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub flags: Option<BTreeMap<String, Value>>,
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &str, graph: &Graph) -> Self {
        Report {
            command: command.to_string(),
            graph: graph.into(),
            params: BTreeMap::new(),
            result: Value::Null,
            witness: None,
            flags: None,
            text: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.text {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}
