//! File formats: the rotation text format, gem JSON, and DOT export.

pub mod dot;
pub mod gemjson;
pub mod rot;

pub use dot::{dot_gem, dot_jewel, dot_separation};
pub use gemjson::{gem_to_json, parse_gem_json};
pub use rot::{parse_rotation, rotation_to_text, ParseError};

/// User-facing names for edges and vertices, parallel to their dense ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NameTable {
    pub edge_names: Vec<String>,
    pub vertex_names: Vec<String>,
}

impl NameTable {
    /// Default names `e0, e1, ...` and `v0, v1, ...`.
    pub fn default_for(edge_count: usize, vertex_count: usize) -> Self {
        NameTable {
            edge_names: (0..edge_count).map(|e| format!("e{e}")).collect(),
            vertex_names: (0..vertex_count).map(|v| format!("v{v}")).collect(),
        }
    }

    pub fn edge_id(&self, name: &str) -> Option<usize> {
        self.edge_names.iter().position(|n| n == name)
    }
}
