//! Plain-text rotation systems.
//!
//! ```text
//! # comments and blank lines are ignored
//! planegraph triangle
//! n 3
//! v 0: 1 2
//! v 1: 2 0
//! v 2: 0 1
//! ```
//!
//! Each `v` line lists the neighbours of a vertex in cyclic order.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{GraphError, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotationError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("no rotation given for vertex {0}")]
    MissingVertex(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RotationFile {
    pub name: String,
    pub graph: PlaneGraph,
}

fn syntax(line: usize, message: impl Into<String>) -> RotationError {
    RotationError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_rotation_file(text: &str) -> Result<RotationFile, RotationError> {
    let mut name: Option<String> = None;
    let mut rotations: Option<Vec<Option<Vec<usize>>>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "planegraph" => {
                if name.is_some() {
                    return Err(syntax(line_no, "repeated header"));
                }
                if rest.is_empty() {
                    return Err(syntax(line_no, "header needs a name"));
                }
                name = Some(rest.to_string());
            }
            "n" => {
                if name.is_none() {
                    return Err(syntax(line_no, "expected `planegraph <name>` first"));
                }
                if rotations.is_some() {
                    return Err(syntax(line_no, "repeated vertex count"));
                }
                let n: usize = rest
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad vertex count `{rest}`")))?;
                rotations = Some(vec![None; n]);
            }
            "v" => {
                let slots = rotations
                    .as_mut()
                    .ok_or_else(|| syntax(line_no, "expected `n <count>` before vertex lines"))?;
                let (id, nbrs) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(line_no, "expected `v <id>: <neighbours>`"))?;
                let id: usize = id
                    .trim()
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad vertex id `{}`", id.trim())))?;
                let count = slots.len();
                if id >= count {
                    return Err(syntax(line_no, format!("vertex id {id} outside 0..{count}")));
                }
                if slots[id].is_some() {
                    return Err(syntax(line_no, format!("vertex {id} listed twice")));
                }
                let nbrs = nbrs
                    .split_whitespace()
                    .map(|t| {
                        let w: usize = t
                            .parse()
                            .map_err(|_| syntax(line_no, format!("bad neighbour `{t}`")))?;
                        if w >= count {
                            return Err(syntax(line_no, format!("neighbour {w} outside 0..{count}")));
                        }
                        Ok(w)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                slots[id] = Some(nbrs);
            }
            other => return Err(syntax(line_no, format!("unknown keyword `{other}`"))),
        }
    }
    let name = name.ok_or(RotationError::Missing("`planegraph <name>` header"))?;
    let slots = rotations.ok_or(RotationError::Missing("`n <count>` line"))?;
    let rotations = slots
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or(RotationError::MissingVertex(v)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RotationFile {
        name,
        graph: PlaneGraph::from_rotations(rotations)?,
    })
}

/// Canonical text: header, count, then one line per vertex in id order.
pub fn write_rotation_file(name: &str, g: &PlaneGraph) -> String {
    let mut out = format!("planegraph {name}\nn {}\n", g.vertex_count());
    for v in 0..g.vertex_count() {
        let _ = write!(out, "v {v}:");
        for w in g.rotation(v) {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out
}
