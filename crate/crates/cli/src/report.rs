use serde::Serialize;
use serde_json::Value;

/// Uniform envelope for every command. Object keys serialise in sorted
/// order, so equal reports are byte-identical.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub oracle_budget: u64,
    pub search_depth: usize,
}

impl Provenance {
    pub fn new(oracle_budget: u64, search_depth: usize) -> Self {
        Provenance {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            oracle_budget,
            search_depth,
        }
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }
}
