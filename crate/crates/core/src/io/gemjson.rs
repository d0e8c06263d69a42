//! Gem JSON: `{"n", "red", "yellow", "blue", "edge_anchor"}` with matchings
//! as pair lists sorted pairwise and lexicographically, and the anchor
//! mapping edge names to their four-flag blocks.

use super::NameTable;
use crate::gem::{CandidateGem, Colour, Gem};
use serde_json::{json, Map, Value};

#[derive(Debug, thiserror::Error)]
pub enum GemJsonError {
    #[error("json: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("schema: {0}")]
    Schema(String),
    #[error("invalid gem: {0}")]
    Invalid(#[from] crate::gem::GemError),
}

fn pairs_value(pairs: &[(u32, u32)]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|&(a, b)| json!([a.min(b), a.max(b)]))
            .collect(),
    )
}

/// Serializes a gem to its canonical JSON text.
pub fn gem_to_json(gem: &Gem, names: &NameTable) -> String {
    let mut anchor = Map::new();
    for e in 0..gem.edge_count() {
        let base = (e * 4) as u64;
        anchor.insert(
            names.edge_names[e].clone(),
            json!([base, base + 1, base + 2, base + 3]),
        );
    }
    let doc = json!({
        "n": gem.n(),
        "red": pairs_value(&gem.pairs(Colour::Red)),
        "yellow": pairs_value(&gem.pairs(Colour::Yellow)),
        "blue": pairs_value(&gem.pairs(Colour::Blue)),
        "edge_anchor": Value::Object(anchor),
    });
    serde_json::to_string_pretty(&doc).expect("gem json serializes")
}

fn read_pairs(doc: &Value, key: &str) -> Result<Vec<(u32, u32)>, GemJsonError> {
    let arr = doc
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| GemJsonError::Schema(format!("missing array '{key}'")))?;
    let mut out = Vec::with_capacity(arr.len());
    for item in arr {
        let pair = item
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| GemJsonError::Schema(format!("'{key}' entries must be pairs")))?;
        let a = pair[0]
            .as_u64()
            .ok_or_else(|| GemJsonError::Schema(format!("'{key}' entries must be integers")))?;
        let b = pair[1]
            .as_u64()
            .ok_or_else(|| GemJsonError::Schema(format!("'{key}' entries must be integers")))?;
        out.push((a as u32, b as u32));
    }
    Ok(out)
}

/// Parses and validates gem JSON, recovering edge names from the anchor.
pub fn parse_gem_json(text: &str) -> Result<(Gem, NameTable), GemJsonError> {
    let doc: Value = serde_json::from_str(text)?;
    let n = doc
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| GemJsonError::Schema("missing integer 'n'".into()))? as usize;
    if n == 0 || !n.is_multiple_of(4) {
        return Err(GemJsonError::Schema(format!(
            "'n' must be a positive multiple of 4, got {n}"
        )));
    }
    let edge_count = n / 4;
    let candidate = CandidateGem {
        edge_count,
        red: read_pairs(&doc, "red")?,
        yellow: read_pairs(&doc, "yellow")?,
        blue: read_pairs(&doc, "blue")?,
    };

    let anchor = doc
        .get("edge_anchor")
        .and_then(Value::as_object)
        .ok_or_else(|| GemJsonError::Schema("missing object 'edge_anchor'".into()))?;
    if anchor.len() != edge_count {
        return Err(GemJsonError::Schema(format!(
            "edge_anchor has {} entries for {edge_count} edges",
            anchor.len()
        )));
    }
    let mut edge_names = vec![String::new(); edge_count];
    for (name, block) in anchor {
        let flags = block
            .as_array()
            .filter(|b| b.len() == 4)
            .ok_or_else(|| GemJsonError::Schema("anchor blocks must be 4-flag arrays".into()))?;
        let values: Vec<u64> = flags.iter().filter_map(Value::as_u64).collect();
        if values.len() != 4 {
            return Err(GemJsonError::Schema(
                "anchor blocks must be integer arrays".into(),
            ));
        }
        let base = values[0];
        if !base.is_multiple_of(4) || values != [base, base + 1, base + 2, base + 3] {
            return Err(GemJsonError::Schema(format!(
                "anchor block {values:?} is not a contiguous 4-flag block"
            )));
        }
        let e = (base / 4) as usize;
        if e >= edge_count || !edge_names[e].is_empty() {
            return Err(GemJsonError::Schema(format!(
                "anchor block for edge {e} repeated or out of range"
            )));
        }
        edge_names[e] = name.clone();
    }

    let report = candidate.validate();
    if !report.ok {
        let v = &report.violations[0];
        return Err(GemJsonError::Schema(format!("{}: {}", v.rule, v.witness)));
    }
    let gem = candidate.build()?;
    let vertex_count = gem.vertex_map().count();
    let names = NameTable {
        edge_names,
        vertex_names: (0..vertex_count).map(|v| format!("v{v}")).collect(),
    };
    Ok((gem, names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::gen_theta;

    #[test]
    fn round_trip() {
        let g = gen_theta(3);
        let names = NameTable::default_for(3, 2);
        let text = gem_to_json(&g, &names);
        let (g2, names2) = parse_gem_json(&text).unwrap();
        assert_eq!(g, g2);
        assert_eq!(names.edge_names, names2.edge_names);
        // serializing again is byte-identical
        assert_eq!(text, gem_to_json(&g2, &names2));
    }

    #[test]
    fn overlapping_matchings_rejected() {
        let g = gen_theta(2);
        let names = NameTable::default_for(2, 2);
        let text = gem_to_json(&g, &names).replace("\"yellow\"", "\"ignored\"");
        assert!(parse_gem_json(&text).is_err());
    }
}
