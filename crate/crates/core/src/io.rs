//! Line-oriented edge-list format.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! part 0 0        (either every vertex or none)
//! root 0          (at most once)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Graph, GraphError, RootedGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `n <N>`")]
    MissingHeader,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("vertex {0} labeled twice")]
    DuplicatePart(Vertex),
    #[error("part labels given for {labeled} of {n} vertices")]
    PartialParts { labeled: usize, n: usize },
    #[error("root given more than once")]
    DuplicateRoot,
    #[error("edge {0} {1} joins two vertices on the same side")]
    EdgeWithinSide(Vertex, Vertex),
}

/// A parsed edge-list file: a graph plus optional side labels and root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub sides: Option<Vec<u8>>,
    pub root: Option<Vertex>,
}

impl GraphDocument {
    pub fn plain(graph: Graph) -> Self {
        GraphDocument {
            graph,
            sides: None,
            root: None,
        }
    }

    pub fn bipartite(&self) -> Option<BipartiteGraph> {
        let sides = self.sides.clone()?;
        BipartiteGraph::new(self.graph.clone(), sides).ok()
    }

    pub fn rooted(&self) -> Option<RootedGraph> {
        RootedGraph::new(self.graph.clone(), self.root?).ok()
    }
}

impl From<Graph> for GraphDocument {
    fn from(g: Graph) -> Self {
        GraphDocument::plain(g)
    }
}

impl From<BipartiteGraph> for GraphDocument {
    fn from(b: BipartiteGraph) -> Self {
        let sides = b.sides().to_vec();
        GraphDocument {
            graph: b.into_graph(),
            sides: Some(sides),
            root: None,
        }
    }
}

impl From<RootedGraph> for GraphDocument {
    fn from(r: RootedGraph) -> Self {
        let root = r.root();
        GraphDocument {
            graph: r.into_graph(),
            sides: None,
            root: Some(root),
        }
    }
}

fn err(line: usize, kind: impl Into<ParseErrorKind>) -> ParseError {
    ParseError {
        line,
        kind: kind.into(),
    }
}

fn parse_num(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| {
        err(
            line,
            ParseErrorKind::Malformed(format!("not a number: {tok}")),
        )
    })
}

pub fn parse_graph(text: &str) -> Result<GraphDocument, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut parts: Vec<Option<u8>> = Vec::new();
    let mut labeled = 0;
    let mut root = None;
    let mut edge_lines = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some(g) = graph.as_mut() else {
            match toks.as_slice() {
                ["n", count] => {
                    let n = parse_num(count, line)?;
                    graph = Some(Graph::empty(n));
                    parts = vec![None; n];
                    continue;
                }
                _ => return Err(err(line, ParseErrorKind::MissingHeader)),
            }
        };
        match toks.as_slice() {
            ["part", v, s] => {
                let v = parse_num(v, line)?;
                let s = parse_num(s, line)?;
                g.check_vertex(v).map_err(|e| err(line, e))?;
                if s > 1 {
                    return Err(err(
                        line,
                        ParseErrorKind::Malformed(format!("side must be 0 or 1, got {s}")),
                    ));
                }
                if parts[v].replace(s as u8).is_some() {
                    return Err(err(line, ParseErrorKind::DuplicatePart(v)));
                }
                labeled += 1;
            }
            ["root", v] => {
                let v = parse_num(v, line)?;
                g.check_vertex(v).map_err(|e| err(line, e))?;
                if root.replace(v).is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateRoot));
                }
            }
            [u, v] => {
                let u = parse_num(u, line)?;
                let v = parse_num(v, line)?;
                g.try_add_edge(u, v).map_err(|e| err(line, e))?;
                edge_lines.push((u, v, line));
            }
            _ => return Err(err(line, ParseErrorKind::Malformed(content.to_string()))),
        }
    }

    let graph = graph.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?;
    let sides = match labeled {
        0 => None,
        k if k == graph.n() => {
            let sides: Vec<u8> = parts.into_iter().map(|p| p.unwrap()).collect();
            if let Some(&(u, v, line)) = edge_lines.iter().find(|&&(u, v, _)| sides[u] == sides[v])
            {
                return Err(err(line, ParseErrorKind::EdgeWithinSide(u, v)));
            }
            Some(sides)
        }
        k => {
            return Err(err(
                last_line,
                ParseErrorKind::PartialParts {
                    labeled: k,
                    n: graph.n(),
                },
            ))
        }
    };
    Ok(GraphDocument { graph, sides, root })
}

/// Emits the canonical text form: header, edges sorted, then parts and root.
pub fn serialize_graph(doc: &GraphDocument) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", doc.graph.n()).unwrap();
    for (u, v) in doc.graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    if let Some(sides) = &doc.sides {
        for (v, s) in sides.iter().enumerate() {
            writeln!(out, "part {v} {s}").unwrap();
        }
    }
    if let Some(r) = doc.root {
        writeln!(out, "root {r}").unwrap();
    }
    out
}
