//! Plain-text input and output formats.
//!
//! Edge lists:
//!
//! ```text
//! undirected
//! v 0 Utility
//! v 1 House
//! e 0 1 Elec
//! ```
//!
//! Molecule files hold one `<name> <smiles>` record per line. In both
//! formats blank lines and lines starting with `#` are skipped.

use std::collections::HashSet;
use std::fmt::Display;

use graphmml::graph::{Graph, GraphError, Label};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: molecule name {name:?} is used twice")]
    DuplicateName { line: usize, name: String },
    #[error("no header line; expected `undirected` or `directed`")]
    MissingHeader,
    #[error("vertex ids must be 0..{count} with each listed once; {missing} is missing")]
    MissingVertex { count: usize, missing: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    EdgeList,
    Molecules,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Edge lists start with a direction header; anything else is read as
/// molecules.
pub fn detect(text: &str) -> FileKind {
    match content_lines(text).next() {
        Some((_, "undirected" | "directed")) => FileKind::EdgeList,
        _ => FileKind::Molecules,
    }
}

pub type LabelledGraph = Graph<String, String>;

pub fn parse_edge_list(text: &str) -> Result<LabelledGraph, FileError> {
    let mut lines = content_lines(text);
    let directed = match lines.next() {
        Some((_, "undirected")) => false,
        Some((_, "directed")) => true,
        _ => return Err(FileError::MissingHeader),
    };
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut edges = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let malformed = |reason: &str| FileError::Malformed {
            line,
            reason: reason.to_string(),
        };
        let id = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| malformed("vertex id must be a non-negative integer"))
        };
        match fields.as_slice() {
            ["v", v, label] => {
                if !edges.is_empty() {
                    return Err(malformed("vertex lines must come before edge lines"));
                }
                let v = id(v)?;
                if labels.len() <= v {
                    labels.resize(v + 1, None);
                }
                if labels[v].replace(label.to_string()).is_some() {
                    return Err(malformed("vertex id listed twice"));
                }
            }
            ["e", u, v, label] => edges.push((id(u)?, id(v)?, label.to_string())),
            ["v", ..] => return Err(malformed("expected `v <id> <label>`")),
            ["e", ..] => return Err(malformed("expected `e <u> <v> <label>`")),
            _ => return Err(malformed("expected a `v` or `e` line")),
        }
    }
    let count = labels.len();
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or(FileError::MissingVertex { count, missing: i }))
        .collect::<Result<Vec<String>, _>>()?;
    Ok(Graph::build(directed, labels, edges)?)
}

pub fn write_edge_list<V: Label + Display, E: Label + Display>(g: &Graph<V, E>) -> String {
    let mut out = String::from(if g.is_directed() {
        "directed\n"
    } else {
        "undirected\n"
    });
    for (v, label) in g.labels().iter().enumerate() {
        out.push_str(&format!("v {v} {label}\n"));
    }
    for e in g.edges() {
        out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.label));
    }
    out
}

/// `(name, smiles)` records in file order.
pub fn parse_molecule_file(text: &str) -> Result<Vec<(String, String)>, FileError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (line, content) in content_lines(text) {
        let mut fields = content.split_whitespace();
        let (Some(name), Some(smiles), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(FileError::Malformed {
                line,
                reason: "expected `<name> <smiles>`".to_string(),
            });
        };
        if !seen.insert(name.to_string()) {
            return Err(FileError::DuplicateName {
                line,
                name: name.to_string(),
            });
        }
        out.push((name.to_string(), smiles.to_string()));
    }
    Ok(out)
}
