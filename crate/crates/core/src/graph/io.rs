//! DIMACS-style edge files: `c` comment lines, one `p edge <n> <m>` header,
//! then `e <u> <v>` lines with 1-based ids.

use std::fmt::Write as _;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header: {msg}")]
    Header { line: usize, msg: String },
    #[error("line {line}: missing `p edge <n> <m>` header before edges")]
    MissingHeader { line: usize },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: malformed edge line")]
    Edge { line: usize },
    #[error("line {line}: vertex id out of range ({id} not in 1..={n})")]
    OutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop on vertex {id}")]
    SelfLoop { line: usize, id: usize },
    #[error("line {line}: unknown line type `{kind}`")]
    UnknownLine { line: usize, kind: String },
    #[error("no `p edge` header found")]
    NoHeader,
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        let Some(kind) = tok.next() else { continue };
        match kind {
            "c" => {}
            "p" => {
                if graph.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                let fmt = tok.next();
                if fmt != Some("edge") && fmt != Some("col") {
                    return Err(ParseError::Header { line, msg: "expected `p edge <n> <m>`".into() });
                }
                let n = parse_num(tok.next()).ok_or(ParseError::Header { line, msg: "bad vertex count".into() })?;
                parse_num(tok.next()).ok_or(ParseError::Header { line, msg: "bad edge count".into() })?;
                if tok.next().is_some() {
                    return Err(ParseError::Header { line, msg: "trailing tokens".into() });
                }
                graph = Some(Graph::new(n));
            }
            "e" => {
                let g = graph.as_mut().ok_or(ParseError::MissingHeader { line })?;
                let (Some(u), Some(v), None) = (parse_num(tok.next()), parse_num(tok.next()), tok.next()) else {
                    return Err(ParseError::Edge { line });
                };
                let n = g.n();
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(ParseError::OutOfRange { line, id, n });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, id: u });
                }
                g.add_edge(u - 1, v - 1);
            }
            other => return Err(ParseError::UnknownLine { line, kind: other.to_string() }),
        }
    }
    graph.ok_or(ParseError::NoHeader)
}

fn parse_num(tok: Option<&str>) -> Option<usize> {
    tok?.parse().ok()
}

/// Writes `g` with 1-based ids, edges as `u < v` in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
