//! The rotation text format.
//!
//! One statement per line:
//!
//! ```text
//! # comment
//! vertex <name>: <dart> <dart> ...
//! signature <edge>: -1
//! ```
//!
//! A dart is `<edge><end>` with end `+` or `-`; `+` is end 0 and `-` end 1
//! of the edge. Names match `[A-Za-z0-9_]+`. Every edge must appear with
//! exactly one `+` and one `-` dart (a loop lists both on one vertex).
//! Signatures default to +1. Edge ids are assigned in order of first
//! appearance, vertex ids in declaration order.

use super::NameTable;
use crate::rotation::RotationEmbedding;
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        message: message.into(),
    })
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Parses the rotation text format.
pub fn parse_rotation(text: &str) -> Result<(RotationEmbedding, NameTable), ParseError> {
    let mut edge_names: Vec<String> = Vec::new();
    let mut edge_ids: HashMap<String, usize> = HashMap::new();
    let mut vertex_names: Vec<String> = Vec::new();
    let mut vertices: Vec<Vec<(usize, u8)>> = Vec::new();
    let mut signatures: HashMap<usize, (i8, usize)> = HashMap::new();

    for (lineno, raw_line) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        if content.trim().is_empty() {
            continue;
        }
        let colon = match content.find(':') {
            Some(pos) => pos,
            None => return err(line, content.len(), "expected ':' after statement head"),
        };
        let head = content[..colon].trim();
        let rest = &content[colon + 1..];
        let mut head_words = head.split_whitespace();
        match head_words.next() {
            Some("vertex") => {
                let name = match head_words.next() {
                    Some(n) if head_words.next().is_none() && n.chars().all(is_name_char) => n,
                    _ => return err(line, 7, "expected 'vertex <name>:'"),
                };
                if vertex_names.iter().any(|v| v == name) {
                    return err(line, 8, format!("vertex {name} declared twice"));
                }
                let mut ring = Vec::new();
                for token in rest.split_whitespace() {
                    let col = content.find(token).unwrap_or(colon) + 1;
                    let (edge_name, end) = match token.chars().last() {
                        Some('+') => (&token[..token.len() - 1], 0u8),
                        Some('-') => (&token[..token.len() - 1], 1u8),
                        _ => return err(line, col, format!("dart {token} must end in + or -")),
                    };
                    if edge_name.is_empty() || !edge_name.chars().all(is_name_char) {
                        return err(line, col, format!("bad edge name in dart {token}"));
                    }
                    let id = *edge_ids.entry(edge_name.to_string()).or_insert_with(|| {
                        edge_names.push(edge_name.to_string());
                        edge_names.len() - 1
                    });
                    ring.push((id, end));
                }
                vertex_names.push(name.to_string());
                vertices.push(ring);
            }
            Some("signature") => {
                let name = match head_words.next() {
                    Some(n) if head_words.next().is_none() && n.chars().all(is_name_char) => n,
                    _ => return err(line, 10, "expected 'signature <edge>:'"),
                };
                let value = match rest.trim() {
                    "-1" => -1,
                    "1" | "+1" => 1,
                    other => {
                        return err(line, colon + 2, format!("bad signature value '{other}'"))
                    }
                };
                let id = match edge_ids.get(name) {
                    Some(&id) => id,
                    None => return err(line, 11, format!("unknown edge {name} in signature")),
                };
                if signatures.insert(id, (value, line)).is_some() {
                    return err(line, 11, format!("duplicate signature for edge {name}"));
                }
            }
            _ => return err(line, 1, "expected 'vertex' or 'signature'"),
        }
    }

    if edge_names.is_empty() {
        return err(1, 1, "no edges declared");
    }

    let sigs: Vec<i8> = (0..edge_names.len())
        .map(|e| signatures.get(&e).map(|&(v, _)| v).unwrap_or(1))
        .collect();
    let rot = RotationEmbedding::new(vertices, sigs);
    if let Err(e) = rot.validate() {
        // name the edge in dart-count style errors
        let message = match &e {
            crate::rotation::RotationError::DartCount { edge, count } => {
                format!("edge {} has {} dart(s)", edge_names[*edge], count)
            }
            crate::rotation::RotationError::DuplicateEnd { edge, end } => {
                format!("edge {} has two {} ends", edge_names[*edge], end)
            }
            other => other.to_string(),
        };
        return err(1, 1, message);
    }
    let names = NameTable {
        edge_names,
        vertex_names,
    };
    Ok((rot, names))
}

/// Serializes a rotation embedding back to the text format.
pub fn rotation_to_text(rot: &RotationEmbedding, names: &NameTable) -> String {
    let mut out = String::new();
    for (vi, ring) in rot.vertices().iter().enumerate() {
        out.push_str("vertex ");
        out.push_str(&names.vertex_names[vi]);
        out.push(':');
        for &(e, end) in ring {
            out.push(' ');
            out.push_str(&names.edge_names[e]);
            out.push(if end == 0 { '+' } else { '-' });
        }
        out.push('\n');
    }
    for e in 0..rot.edge_count() {
        if rot.signature(e) == -1 {
            out.push_str(&format!("signature {}: -1\n", names.edge_names[e]));
        }
    }
    out
}
