//! Text serializations: the canonical edge list, Graphviz DOT and JSON.
//!
//! Edge list:
//!
//! ```text
//! mixedgraph 4
//! E 0 1
//! E 2 3
//! A 0 3
//! A 2 1
//! ```
//!
//! Edges are written once with `u < v`; both sections are sorted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::MixedGraph;

/// Output formats accepted by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Edges,
    Dot,
    Json,
}

pub fn render(g: &MixedGraph, format: Format) -> String {
    match format {
        Format::Edges => to_edge_list(g),
        Format::Dot => to_dot(g),
        Format::Json => to_json(g),
    }
}

pub fn to_edge_list(g: &MixedGraph) -> String {
    let mut out = format!("mixedgraph {}\n", g.n());
    for (u, v) in g.edge_list() {
        let _ = writeln!(out, "E {u} {v}");
    }
    for (u, v) in g.arc_list() {
        let _ = writeln!(out, "A {u} {v}");
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| parse_err(line, format!("{what} is not a non-negative integer")))
}

/// Parses the canonical edge-list format. Blank lines are ignored; anything
/// else that is not a header, `E u v` or `A u v` line is an error.
pub fn parse_edge_list(text: &str) -> Result<MixedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("mixedgraph") {
        return Err(parse_err(hline, "expected header `mixedgraph N`"));
    }
    let n = parse_usize(toks.next(), hline, "vertex count")?;
    if toks.next().is_some() {
        return Err(parse_err(hline, "trailing tokens after header"));
    }
    let mut g = MixedGraph::new(n);
    for (ln, line) in lines {
        let mut toks = line.split_whitespace();
        let kind = toks.next().unwrap_or_default();
        let u = parse_usize(toks.next(), ln, "tail")?;
        let v = parse_usize(toks.next(), ln, "head")?;
        if toks.next().is_some() {
            return Err(parse_err(ln, "trailing tokens"));
        }
        let added = match kind {
            "E" => g.add_edge(u, v),
            "A" => g.add_arc(u, v),
            other => return Err(parse_err(ln, format!("unknown record `{other}`"))),
        };
        added.map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok(g)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering: edges become `dir=none` edges, arcs plain edges.
pub fn to_dot(g: &MixedGraph) -> String {
    let mut out = String::from("digraph mixed {\n");
    for v in 0..g.n() {
        let label = g.label(v).map_or_else(|| v.to_string(), str::to_string);
        let _ = writeln!(out, "  {v} [label=\"{}\"];", dot_escape(&label));
    }
    for (u, v) in g.edge_list() {
        let _ = writeln!(out, "  {u} -> {v} [dir=none];");
    }
    for (u, v) in g.arc_list() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

struct Labels<'a>(Option<&'a [String]>);

impl Serialize for Labels<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let labels = self.0.unwrap_or(&[]);
        let mut map = s.serialize_map(Some(labels.len()))?;
        for (i, l) in labels.iter().enumerate() {
            map.serialize_entry(&i.to_string(), l)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    n: usize,
    edges: Vec<[usize; 2]>,
    arcs: Vec<[usize; 2]>,
    labels: Labels<'a>,
}

/// JSON object with keys `n`, `edges`, `arcs`, `labels` in that order.
pub fn to_json(g: &MixedGraph) -> String {
    let doc = JsonGraph {
        n: g.n(),
        edges: g.edge_list().into_iter().map(|(u, v)| [u, v]).collect(),
        arcs: g.arc_list().into_iter().map(|(u, v)| [u, v]).collect(),
        labels: Labels(g.labels()),
    };
    let mut s = serde_json::to_string(&doc).expect("graph serializes");
    s.push('\n');
    s
}

#[derive(Deserialize)]
struct JsonInput {
    n: usize,
    edges: Vec<[usize; 2]>,
    arcs: Vec<[usize; 2]>,
    #[serde(default)]
    labels: BTreeMap<String, String>,
}

/// Reads the JSON written by [`to_json`]. Labels must be absent or cover
/// every vertex.
pub fn parse_json(text: &str) -> Result<MixedGraph> {
    let doc: JsonInput = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let mut g = MixedGraph::new(doc.n);
    for [u, v] in doc.edges {
        g.add_edge(u, v)?;
    }
    for [u, v] in doc.arcs {
        g.add_arc(u, v)?;
    }
    if doc.labels.is_empty() {
        return Ok(g);
    }
    let mut labels = vec![None; doc.n];
    for (key, label) in doc.labels {
        let v: usize = key
            .parse()
            .ok()
            .filter(|&v| v < doc.n)
            .ok_or_else(|| parse_err(1, format!("bad label key `{key}`")))?;
        labels[v] = Some(label);
    }
    let labels = labels
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| parse_err(1, "labels do not cover every vertex"))?;
    Ok(g.with_labels(labels))
}

fn dot_unescape(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            out.extend(chars.next());
        } else {
            out.push(c);
        }
    }
    out
}

/// Reads the DOT subset written by [`to_dot`]. The vertex count is one more
/// than the largest id mentioned.
pub fn parse_dot(text: &str) -> Result<MixedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, l)) if l.starts_with("digraph") && l.ends_with('{') => {}
        Some((ln, _)) => return Err(parse_err(ln, "expected `digraph NAME {`")),
        None => return Err(parse_err(1, "empty input")),
    }
    let mut nodes = BTreeMap::new();
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    let mut closed = false;
    for (ln, line) in lines {
        if closed {
            return Err(parse_err(ln, "content after closing brace"));
        }
        if line == "}" {
            closed = true;
            continue;
        }
        let body = line
            .strip_suffix(';')
            .ok_or_else(|| parse_err(ln, "statement must end with `;`"))?;
        if let Some((u, rest)) = body.split_once(" -> ") {
            let u = parse_usize(Some(u.trim()), ln, "tail")?;
            match rest.split_once(' ') {
                Some((v, "[dir=none]")) => edges.push((u, parse_usize(Some(v), ln, "head")?)),
                None => arcs.push((u, parse_usize(Some(rest), ln, "head")?)),
                Some(_) => return Err(parse_err(ln, "unknown edge attributes")),
            }
        } else if let Some((v, rest)) = body.split_once(" [label=\"") {
            let v = parse_usize(Some(v.trim()), ln, "node id")?;
            let label = rest
                .strip_suffix("\"]")
                .ok_or_else(|| parse_err(ln, "unterminated label"))?;
            nodes.insert(v, dot_unescape(label));
        } else {
            return Err(parse_err(ln, "unrecognised statement"));
        }
    }
    if !closed {
        return Err(parse_err(text.lines().count(), "missing closing brace"));
    }
    let n = nodes
        .keys()
        .chain(edges.iter().flat_map(|(u, v)| [u, v]))
        .chain(arcs.iter().flat_map(|(u, v)| [u, v]))
        .max()
        .map_or(0, |&m| m + 1);
    let mut g = MixedGraph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v)?;
    }
    for (u, v) in arcs {
        g.add_arc(u, v)?;
    }
    let default = (0..n).all(|v| nodes.get(&v).is_none_or(|l| *l == v.to_string()));
    if default {
        return Ok(g);
    }
    let labels = (0..n)
        .map(|v| nodes.get(&v).cloned().unwrap_or_else(|| v.to_string()))
        .collect();
    Ok(g.with_labels(labels))
}

/// Dispatches on the first non-blank character: `{` is JSON, `d` is DOT,
/// anything else the edge list.
pub fn parse_any(text: &str) -> Result<MixedGraph> {
    match text.trim_start().chars().next() {
        Some('{') => parse_json(text),
        Some('d') => parse_dot(text),
        _ => parse_edge_list(text),
    }
}
