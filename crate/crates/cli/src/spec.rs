//! Object specs on the command line: `K5`, `K3,3`, `C6`, `P4`, `W5`,
//! `tilde4`, `H5`, `R3^2`, a few named hypergraph fixtures, or `@file.json`.

use std::fmt;

use cycles_core::cells;
use cycles_core::graph::NamedGraph;
use cycles_core::hypergraph::{self, Hypergraph2, RookGrid};
use cycles_core::Graph;
use serde_json::Value;

#[derive(Debug, Clone)]
pub enum Object {
    Graph(Graph),
    Hypergraph(Hypergraph2),
    Rook(RookGrid),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for SpecError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError { position, message: message.into() })
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn number(&mut self) -> Result<usize, SpecError> {
        let digits: String = self.text[self.pos..].chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return err(self.pos, "expected a number");
        }
        let start = self.pos;
        self.pos += digits.len();
        digits.parse().or_else(|_| err(start, "number too large"))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn end(&self) -> Result<(), SpecError> {
        if self.pos < self.text.len() {
            return err(self.pos, format!("unexpected `{}`", &self.text[self.pos..]));
        }
        Ok(())
    }
}

pub fn parse_spec(text: &str) -> Result<Object, SpecError> {
    if let Some(path) = text.strip_prefix('@') {
        return load_file(path);
    }
    match text {
        "octahedron" => return Ok(Object::Hypergraph(hypergraph::octahedron())),
        "rp2" => return Ok(Object::Hypergraph(hypergraph::projective_plane())),
        "strip" => return Ok(Object::Hypergraph(hypergraph::disk_strip())),
        "k5bridge" => return Ok(Object::Graph(cells::two_k5_bridge())),
        _ => {}
    }
    let head_len = text.chars().take_while(char::is_ascii_alphabetic).count();
    let head = &text[..head_len];
    let mut cur = Cursor { text, pos: head_len };
    let built = match head {
        "K" => {
            let a = cur.number()?;
            if cur.eat(',') {
                let b = cur.number()?;
                cur.end()?;
                NamedGraph::CompleteBipartite(a, b).build()
            } else {
                cur.end()?;
                NamedGraph::Complete(a).build()
            }
        }
        "C" | "P" | "W" | "tilde" => {
            let n = cur.number()?;
            cur.end()?;
            match head {
                "C" => NamedGraph::Cycle(n),
                "P" => NamedGraph::Path(n),
                "W" => NamedGraph::Wheel(n),
                _ => NamedGraph::Tilde(n),
            }
            .build()
        }
        "H" => {
            let n = cur.number()?;
            cur.end()?;
            return Ok(Object::Hypergraph(Hypergraph2::complete(n)));
        }
        "R" => {
            let n = cur.number()?;
            if !cur.eat('^') {
                return err(cur.pos, "expected `^`");
            }
            let ell = cur.number()?;
            cur.end()?;
            return RookGrid::new(n, ell).map(Object::Rook).or_else(|e| err(0, e.to_string()));
        }
        "" => return err(0, "expected a generator name"),
        other => return err(0, format!("unknown generator `{other}`")),
    };
    built.map(Object::Graph).or_else(|e| err(0, e.to_string()))
}

fn load_file(path: &str) -> Result<Object, SpecError> {
    let text = std::fs::read_to_string(path).or_else(|e| err(1, format!("cannot read {path}: {e}")))?;
    let value: Value = serde_json::from_str(&text).or_else(|e| err(1, format!("{path}: {e}")))?;
    let kind = |v: &Value, key: &str| v.get(key).is_some();
    if kind(&value, "faces") {
        serde_json::from_value(value).map(Object::Hypergraph).or_else(|e| err(1, format!("{path}: {e}")))
    } else if kind(&value, "edges") {
        serde_json::from_value(value).map(Object::Graph).or_else(|e| err(1, format!("{path}: {e}")))
    } else if kind(&value, "ell") {
        let grid: RookGrid = serde_json::from_value(value).or_else(|e| err(1, format!("{path}: {e}")))?;
        RookGrid::new(grid.n, grid.ell).map(Object::Rook).or_else(|e| err(1, e.to_string()))
    } else {
        err(1, format!("{path}: expected a graph, hypergraph or rook grid"))
    }
}

/// Like [`parse_spec`] but requires a graph.
pub fn parse_graph(text: &str) -> Result<Graph, SpecError> {
    match parse_spec(text)? {
        Object::Graph(g) => Ok(g),
        _ => err(0, format!("`{text}` is not a graph")),
    }
}
