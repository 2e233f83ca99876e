//! Line-oriented graph text format.
//!
//! ```text
//! # comment
//! vertex <label> <weight>
//! dart <label> <inverse-label> <origin-label> <weight>
//! ```
//!
//! A dart whose inverse label is its own label is a folded loop. Both darts
//! of a pair must be declared. Labels are mapped to dense ids in order of
//! declaration.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{validate, Dart, WeightedGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: WeightedGraph,
    pub vertex_labels: Vec<String>,
    pub dart_labels: Vec<String>,
}

struct DartLine<'a> {
    line: usize,
    inverse: &'a str,
    origin: &'a str,
    weight: u64,
}

fn parse_weight(line: usize, tok: &str) -> Result<u64> {
    tok.parse::<u64>()
        .map_err(|_| Error::parse(line, format!("invalid weight {tok:?}")))
}

/// Parses and validates a graph. Syntax problems and dangling labels are
/// parse errors; well-formed syntax describing an invalid graph yields
/// [`Error::MalformedGraph`].
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut vertex_labels = Vec::new();
    let mut vertex_ids = HashMap::new();
    let mut vertex_weights = Vec::new();
    let mut dart_labels = Vec::new();
    let mut dart_ids = HashMap::new();
    let mut dart_lines = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "vertex" => {
                let [_, label, weight] = toks[..] else {
                    return Err(Error::parse(line, "expected `vertex <label> <weight>`"));
                };
                if vertex_ids.insert(label.to_string(), vertex_labels.len()).is_some() {
                    return Err(Error::parse(line, format!("duplicate vertex label {label:?}")));
                }
                vertex_labels.push(label.to_string());
                vertex_weights.push(parse_weight(line, weight)?);
            }
            "dart" => {
                let [_, label, inverse, origin, weight] = toks[..] else {
                    return Err(Error::parse(
                        line,
                        "expected `dart <label> <inverse-label> <origin-label> <weight>`",
                    ));
                };
                if dart_ids.insert(label.to_string(), dart_labels.len()).is_some() {
                    return Err(Error::parse(line, format!("duplicate dart label {label:?}")));
                }
                dart_labels.push(label.to_string());
                dart_lines.push(DartLine { line, inverse, origin, weight: parse_weight(line, weight)? });
            }
            other => return Err(Error::parse(line, format!("unknown record {other:?}"))),
        }
    }

    let mut darts = Vec::with_capacity(dart_lines.len());
    for d in &dart_lines {
        let origin = *vertex_ids
            .get(d.origin)
            .ok_or_else(|| Error::parse(d.line, format!("unknown vertex label {:?}", d.origin)))?;
        let inverse = *dart_ids
            .get(d.inverse)
            .ok_or_else(|| Error::parse(d.line, format!("undeclared inverse dart {:?}", d.inverse)))?;
        darts.push(Dart { origin, inverse, weight: d.weight });
    }

    let graph = WeightedGraph::from_parts(vertex_weights, darts);
    let report = validate(&graph);
    if !report.is_empty() {
        return Err(Error::MalformedGraph(report.to_string()));
    }
    Ok(LabeledGraph { graph, vertex_labels, dart_labels })
}

/// Renders a graph in the text format. Without labels, vertices are written
/// as `v<id>` and darts as `e<id>`.
pub fn write_graph(g: &WeightedGraph, vertex_labels: Option<&[String]>, dart_labels: Option<&[String]>) -> String {
    let vl = |v: usize| vertex_labels.map_or_else(|| format!("v{v}"), |l| l[v].clone());
    let dl = |e: usize| dart_labels.map_or_else(|| format!("e{e}"), |l| l[e].clone());
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "vertex {} {}", vl(v), g.vertex_weight(v));
    }
    for e in 0..g.dart_count() {
        let _ = writeln!(out, "dart {} {} {} {}", dl(e), dl(g.inverse(e)), vl(g.origin(e)), g.weight(e));
    }
    out
}
