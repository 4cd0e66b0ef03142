//! Comparison of command output against checked-in golden files.

use std::fmt;
use std::path::Path;

use serde_json::Value;

use crate::error::CliError;

/// Trims lines, collapses runs of whitespace and drops blank lines.
pub fn normalise(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .filter(|l| !l.is_empty())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineDiff {
    /// 1-based index into the normalised lines.
    pub line: usize,
    pub expected: Option<String>,
    pub actual: Option<String>,
}

impl fmt::Display for LineDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &Option<String>| s.clone().unwrap_or_else(|| "<missing>".into());
        write!(
            f,
            "line {}: expected `{}`, got `{}`",
            self.line,
            show(&self.expected),
            show(&self.actual)
        )
    }
}

/// Line-by-line diff of the normalised texts. Empty on match.
pub fn diff_text(expected: &str, actual: &str) -> Vec<LineDiff> {
    let (e, a) = (normalise(expected), normalise(actual));
    (0..e.len().max(a.len()))
        .filter_map(|i| {
            let (x, y) = (e.get(i).cloned(), a.get(i).cloned());
            (x != y).then_some(LineDiff {
                line: i + 1,
                expected: x,
                actual: y,
            })
        })
        .collect()
}

fn read_golden(path: &Path) -> Result<String, CliError> {
    if !path.exists() {
        return Err(CliError::MissingGolden(path.to_path_buf()));
    }
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn golden_compare(actual: &str, golden: &Path) -> Result<Vec<LineDiff>, CliError> {
    Ok(diff_text(&read_golden(golden)?, actual))
}

/// Paths at which two JSON documents differ, e.g. `$.result.members[2]`.
pub fn json_diff(expected: &Value, actual: &Value) -> Vec<String> {
    let mut out = Vec::new();
    walk("$", expected, actual, &mut out);
    out
}

fn walk(path: &str, e: &Value, a: &Value, out: &mut Vec<String>) {
    match (e, a) {
        (Value::Object(x), Value::Object(y)) => {
            let keys: std::collections::BTreeSet<&String> = x.keys().chain(y.keys()).collect();
            for k in keys {
                let sub = format!("{path}.{k}");
                match (x.get(k), y.get(k)) {
                    (Some(u), Some(v)) => walk(&sub, u, v, out),
                    (Some(_), None) => out.push(format!("{sub}: missing")),
                    (None, Some(_)) => out.push(format!("{sub}: unexpected")),
                    (None, None) => unreachable!(),
                }
            }
        }
        (Value::Array(x), Value::Array(y)) => {
            if x.len() != y.len() {
                out.push(format!("{path}: length {} vs {}", x.len(), y.len()));
            }
            for (i, (u, v)) in x.iter().zip(y).enumerate() {
                walk(&format!("{path}[{i}]"), u, v, out);
            }
        }
        _ if e != a => out.push(format!("{path}: expected {e}, got {a}")),
        _ => {}
    }
}

pub fn golden_compare_json(actual: &Value, golden: &Path) -> Result<Vec<String>, CliError> {
    let expected: Value = serde_json::from_str(&read_golden(golden)?)?;
    Ok(json_diff(&expected, actual))
}
