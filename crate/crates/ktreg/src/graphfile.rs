//! The plain-text graph format.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines, 1-based)
//! name <vertex> <display name>   (optional, after the edges)
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use ktreg_core::graph::{Graph, GraphError, Vertex};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing \"n m\" header")]
    MissingHeader,
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub names: BTreeMap<Vertex, String>,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("{what} {tok:?} is not a nonnegative integer")))
}

impl GraphFile {
    pub fn new(graph: Graph) -> Self {
        GraphFile { graph, names: BTreeMap::new() }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let mut toks = header.split_whitespace();
        let n = number(toks.next(), hline, "vertex count")?;
        let m = number(toks.next(), hline, "edge count")?;
        if toks.next().is_some() {
            return Err(syntax(hline, "header must be exactly \"n m\""));
        }
        if n == 0 {
            return Err(ParseError::Graph { line: hline, source: GraphError::NoVertices });
        }

        let mut edges = Vec::with_capacity(m);
        let mut seen = BTreeSet::new();
        let mut names = BTreeMap::new();
        for (line, text) in lines {
            if let Some(rest) = text.strip_prefix("name").filter(|r| r.starts_with(char::is_whitespace)) {
                if edges.len() < m {
                    return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
                }
                let rest = rest.trim_start();
                let (label, display) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let v = number(Some(label), line, "vertex")?;
                if v == 0 || v > n {
                    return Err(ParseError::Graph {
                        line,
                        source: GraphError::VertexOutOfRange { vertex: v, n },
                    });
                }
                let display = display.trim();
                if display.is_empty() {
                    return Err(syntax(line, "empty display name"));
                }
                if names.insert(v, display.to_string()).is_some() {
                    return Err(syntax(line, format!("vertex {v} named twice")));
                }
                continue;
            }
            if !names.is_empty() {
                return Err(syntax(line, "edge lines must come before name lines"));
            }
            if edges.len() == m {
                return Err(ParseError::EdgeCount { expected: m, found: m + 1 });
            }
            let mut toks = text.split_whitespace();
            let u = number(toks.next(), line, "vertex")?;
            let v = number(toks.next(), line, "vertex")?;
            if toks.next().is_some() {
                return Err(syntax(line, "an edge line holds exactly two vertices"));
            }
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(ParseError::Graph {
                        line,
                        source: GraphError::VertexOutOfRange { vertex: w, n },
                    });
                }
            }
            if u == v {
                return Err(ParseError::Graph { line, source: GraphError::SelfLoop(u) });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(syntax(line, format!("edge {u} {v} repeated (multigraphs are not supported)")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
        }
        let graph =
            Graph::from_edge_list(n, edges).map_err(|source| ParseError::Graph { line: hline, source })?;
        Ok(GraphFile { graph, names })
    }

    pub fn read(path: &Path) -> Result<Self, ParseError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    /// Canonical text: header, edges in lexicographic order, names.
    pub fn print(&self) -> String {
        let g = &self.graph;
        let mut out = format!("{} {}\n", g.n(), g.m());
        for &(u, v) in g.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        for (v, name) in &self.names {
            let _ = writeln!(out, "name {v} {name}");
        }
        out
    }

    pub fn name_of(&self, v: Vertex) -> Option<&str> {
        self.names.get(&v).map(String::as_str)
    }

    /// A vertex given as a number or as a display name.
    pub fn resolve(&self, token: &str) -> Option<Vertex> {
        let token = token.trim();
        if let Ok(v) = token.parse::<usize>() {
            return (1..=self.graph.n()).contains(&v).then_some(v);
        }
        self.names.iter().find(|(_, name)| name.as_str() == token).map(|(&v, _)| v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ktreg_core::graph::{ladder, petersen};

    #[test]
    fn parses_comments_and_names() {
        let text = "# ladder\n6 7\n1 2\n2 3\n1 6\n2 5\n3 4\n\n6 5\n5 4\nname 1 a\nname 2 b\n";
        let f = GraphFile::parse(text).unwrap();
        assert_eq!(f.graph, ladder());
        assert_eq!(f.name_of(2), Some("b"));
        assert_eq!(f.resolve("b"), Some(2));
        assert_eq!(f.resolve("5"), Some(5));
        assert_eq!(f.resolve("7"), None);
        assert_eq!(f.resolve("zz"), None);
    }

    #[test]
    fn round_trip() {
        let mut f = GraphFile::new(petersen());
        f.names.insert(3, "three words here".into());
        assert_eq!(GraphFile::parse(&f.print()).unwrap(), f);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            "",
            "# only a comment\n",
            "3\n",
            "3 1 9\n1 2\n",
            "0 0\n",
            "3 2\n1 2\n",
            "3 1\n1 2\n2 3\n",
            "3 1\n1 1\n",
            "3 1\n1 4\n",
            "3 2\n1 2\n2 1\n",
            "3 1\n1 x\n",
            "3 1\n1 2 3\n",
            "3 1\nname 1 a\n1 2\n",
            "3 1\n1 2\nname 1 a\n2 3\n",
            "3 1\n1 2\nname 4 d\n",
            "3 1\n1 2\nname 1\n",
            "3 1\n1 2\nname 1 a\nname 1 b\n",
            "-3 1\n1 2\n",
        ];
        for text in bad {
            assert!(GraphFile::parse(text).is_err(), "{text:?}");
        }
    }

    #[test]
    fn isolated_vertices_allowed() {
        let f = GraphFile::parse("4 1\n1 2\n").unwrap();
        assert_eq!(f.graph.degree(4), 0);
        assert_eq!(f.print(), "4 1\n1 2\n");
    }
}
