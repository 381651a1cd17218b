use super::LabeledMultigraph;
use crate::error::{Error, Result};

/// Reads either the JSON form `{"d": 3, "edges": [[1,2],[2,3]]}` or the
/// line form (`d 3`, then `e 1 2` per edge; `#` starts a comment).
pub fn parse_graph(input: &str) -> Result<LabeledMultigraph> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') {
        return serde_json::from_str(trimmed).map_err(|e| Error::Parse(format!("graph JSON: {e}")));
    }
    let mut d = None;
    let mut edges = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || Error::Parse(format!("line {}: cannot read {raw:?}", lineno + 1));
        let mut words = line.split_whitespace();
        let tag = words.next().ok_or_else(bad)?;
        let nums: Vec<usize> = words
            .map(|w| w.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (tag, nums.as_slice()) {
            ("d", [n]) if d.is_none() => d = Some(*n),
            ("e", [a, b]) => edges.push((*a, *b)),
            _ => return Err(bad()),
        }
    }
    let d = d.ok_or_else(|| Error::Parse("missing `d <vertices>` line".into()))?;
    LabeledMultigraph::from_edges(d, &edges)
}
