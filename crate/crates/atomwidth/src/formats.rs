//! Graph file formats: DIMACS `.col`, plain edge lists and JSON.

use std::fmt::Write as _;
use std::path::Path;

use atomwidth_core::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("DIMACS input has no `p edge` line")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown format `{0}`, expected dimacs, edgelist or json")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    EdgeList,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format, FormatError> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" | "col" => Ok(Format::Dimacs),
            "edgelist" | "edges" | "txt" => Ok(Format::EdgeList),
            "json" => Ok(Format::Json),
            _ => Err(FormatError::UnknownFormat(s.into())),
        }
    }

    /// Format implied by a file extension, if any.
    pub fn from_path(p: &Path) -> Option<Format> {
        Format::parse(p.extension()?.to_str()?).ok()
    }

    /// Guess from the content: `{` means JSON, a `p` line means DIMACS, else an edge list.
    pub fn sniff(text: &str) -> Format {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        match lines.next() {
            Some(l) if l.starts_with('{') => Format::Json,
            Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => Format::Dimacs,
            _ => Format::EdgeList,
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line, msg: msg.into() }
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, FormatError> {
    let t = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    t.parse().map_err(|_| parse_err(line, format!("bad {what} `{t}`")))
}

/// Reads DIMACS: `c` comments, one `p edge n m` header, `e u v` lines with 1-based ids.
pub fn read_dimacs(text: &str) -> Result<Graph, FormatError> {
    let mut header = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut t = raw.split_ascii_whitespace();
        match t.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second `p` line"));
                }
                let kind = t.next().unwrap_or("");
                if kind != "edge" && kind != "col" {
                    return Err(parse_err(line, format!("unsupported problem `{kind}`")));
                }
                header = Some((num(t.next(), line, "vertex count")?, num(t.next(), line, "edge count")?));
            }
            Some("e") => {
                let (n, _) = header.ok_or(FormatError::MissingHeader)?;
                let u = num(t.next(), line, "endpoint")?;
                let v = num(t.next(), line, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(line, format!("endpoint out of range 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader)?;
    let g = Graph::from_edges(n, &edges)?;
    if edges.len() != m && g.m() != m {
        return Err(FormatError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(g)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

/// Reads `u v` lines with 0-based ids. A `# n N` comment fixes the vertex count, otherwise it
/// is one more than the largest id. Other `#` lines are comments.
pub fn read_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if let Some(c) = l.strip_prefix('#') {
            let mut t = c.split_ascii_whitespace();
            if t.next() == Some("n") {
                declared = Some(num(t.next(), line, "vertex count")?);
            }
            continue;
        }
        if l.is_empty() {
            continue;
        }
        let mut t = l.split_ascii_whitespace();
        let u = num(t.next(), line, "endpoint")?;
        let v = num(t.next(), line, "endpoint")?;
        if t.next().is_some() {
            return Err(parse_err(line, "more than two fields"));
        }
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("# n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn of(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges() }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, &self.edges)
    }
}

pub fn read_json(text: &str) -> Result<Graph, FormatError> {
    let j: GraphJson = serde_json::from_str(text)?;
    Ok(j.to_graph()?)
}

pub fn write_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::of(g)).expect("graph JSON serializes")
}

pub fn read(text: &str, format: Format) -> Result<Graph, FormatError> {
    match format {
        Format::Dimacs => read_dimacs(text),
        Format::EdgeList => read_edge_list(text),
        Format::Json => read_json(text),
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => write_dimacs(g),
        Format::EdgeList => write_edge_list(g),
        Format::Json => write_json(g),
    }
}
