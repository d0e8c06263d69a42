//! Rotation-system embeddings and conversion to and from gems.
//!
//! An embedding is given by a cyclic dart order at each vertex plus a ±1
//! signature per edge. Each edge `e` contributes two darts, `(e, 0)` and
//! `(e, 1)`; a loop carries both its darts on one vertex.
//!
//! The gem of a rotation embedding places edge `e` on flags
//! `{4e, .., 4e+3}` with red pairs `{4e,4e+1}`, `{4e+2,4e+3}` (the two
//! ends) and blue pairs `{4e+1,4e+2}`, `{4e+3,4e}` (the two sides). Yellow
//! edges encode the corners: walking the rotation at a vertex, the corner
//! between consecutive darts joins the counterclockwise flag of the first
//! to the clockwise flag of the second, where a −1 signature swaps which
//! end-1 flag counts as clockwise.

use crate::gem::{CandidateGem, ColourPair, Gem};

/// A dart is an edge end: `(edge id, end)` with end 0 or 1.
pub type Dart = (usize, u8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationEmbedding {
    vertices: Vec<Vec<Dart>>,
    signatures: Vec<i8>,
    edge_count: usize,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RotationError {
    #[error("embedding has no edges")]
    NoEdges,
    #[error("edge {edge} has {count} dart(s)")]
    DartCount { edge: usize, count: usize },
    #[error("edge {edge} has two {end} ends")]
    DuplicateEnd { edge: usize, end: char },
    #[error("dart end {end} of edge {edge} is not 0 or 1")]
    BadEnd { edge: usize, end: u8 },
    #[error("edge id {edge} out of range for {edge_count} edges")]
    EdgeRange { edge: usize, edge_count: usize },
    #[error("signature of edge {edge} is {value}, expected +1 or -1")]
    BadSignature { edge: usize, value: i8 },
    #[error("{count} signatures given for {edge_count} edges")]
    SignatureCount { count: usize, edge_count: usize },
    #[error("underlying graph is disconnected")]
    Disconnected,
}

impl RotationEmbedding {
    /// Builds an embedding from per-vertex dart rings and per-edge signatures.
    /// The edge count is the signature count.
    pub fn new(vertices: Vec<Vec<Dart>>, signatures: Vec<i8>) -> Self {
        let edge_count = signatures.len();
        RotationEmbedding {
            vertices,
            signatures,
            edge_count,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vec<Dart>] {
        &self.vertices
    }

    pub fn signature(&self, edge: usize) -> i8 {
        self.signatures[edge]
    }

    pub fn signatures(&self) -> &[i8] {
        &self.signatures
    }

    /// A copy with the signatures of `edges` toggled.
    pub fn with_toggled_signatures(&self, edges: impl IntoIterator<Item = usize>) -> Self {
        let mut out = self.clone();
        for e in edges {
            out.signatures[e] = -out.signatures[e];
        }
        out
    }

    pub fn validate(&self) -> Result<(), RotationError> {
        if self.edge_count == 0 {
            return Err(RotationError::NoEdges);
        }
        if self.signatures.len() != self.edge_count {
            return Err(RotationError::SignatureCount {
                count: self.signatures.len(),
                edge_count: self.edge_count,
            });
        }
        for (e, &s) in self.signatures.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(RotationError::BadSignature { edge: e, value: s });
            }
        }
        let mut end_seen = vec![[false; 2]; self.edge_count];
        let mut counts = vec![0usize; self.edge_count];
        for ring in &self.vertices {
            for &(e, end) in ring {
                if e >= self.edge_count {
                    return Err(RotationError::EdgeRange {
                        edge: e,
                        edge_count: self.edge_count,
                    });
                }
                if end > 1 {
                    return Err(RotationError::BadEnd { edge: e, end });
                }
                counts[e] += 1;
                if end_seen[e][end as usize]
                    && counts[e] == 2 {
                        return Err(RotationError::DuplicateEnd {
                            edge: e,
                            end: if end == 0 { '+' } else { '-' },
                        });
                    }
                end_seen[e][end as usize] = true;
            }
        }
        for (e, &c) in counts.iter().enumerate() {
            if c != 2 {
                return Err(RotationError::DartCount { edge: e, count: c });
            }
        }
        // Connectivity of the underlying graph.
        let mut vertex_of_dart = vec![usize::MAX; self.edge_count * 2];
        for (vi, ring) in self.vertices.iter().enumerate() {
            for &(e, end) in ring {
                vertex_of_dart[e * 2 + end as usize] = vi;
            }
        }
        let nv = self.vertices.len();
        let mut seen = vec![false; nv];
        let mut stack = vec![0usize];
        if nv > 0 {
            seen[0] = true;
        }
        while let Some(v) = stack.pop() {
            for &(e, _) in &self.vertices[v] {
                for w in [vertex_of_dart[e * 2], vertex_of_dart[e * 2 + 1]] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(RotationError::Disconnected);
        }
        Ok(())
    }
}

/// Flag of a dart facing the counterclockwise side of its vertex.
///
/// End 0 exposes its base flag counterclockwise; which end-1 flag faces
/// which way depends on the signature, so that the fixed blue pairs join
/// matching geometric sides. This choice makes the yellow-first traversal
/// of `rotation_from_gem` run counterclockwise on constructed gems, which
/// keeps one canonicalization pass stable.
fn ccw_flag(dart: Dart, sig: i8) -> u32 {
    let (e, end) = dart;
    let base = (e * 4) as u32;
    if end == 0 {
        base
    } else if sig == 1 {
        base + 2
    } else {
        base + 3
    }
}

/// Flag of a dart facing the clockwise side of its vertex.
fn cw_flag(dart: Dart, sig: i8) -> u32 {
    let (e, end) = dart;
    let base = (e * 4) as u32;
    if end == 0 {
        base + 1
    } else if sig == 1 {
        base + 3
    } else {
        base + 2
    }
}

/// Builds the gem of a rotation embedding.
pub fn gem_from_rotation(rot: &RotationEmbedding) -> Result<Gem, RotationError> {
    rot.validate()?;
    let ec = rot.edge_count();
    let mut red = Vec::with_capacity(ec * 2);
    let mut blue = Vec::with_capacity(ec * 2);
    for e in 0..ec {
        let b = (e * 4) as u32;
        red.push((b, b + 1));
        red.push((b + 2, b + 3));
        blue.push((b + 1, b + 2));
        blue.push((b + 3, b));
    }
    let mut yellow = Vec::with_capacity(ec * 2);
    for ring in rot.vertices() {
        let k = ring.len();
        for i in 0..k {
            let d = ring[i];
            let dn = ring[(i + 1) % k];
            yellow.push((
                ccw_flag(d, rot.signature(d.0)),
                cw_flag(dn, rot.signature(dn.0)),
            ));
        }
    }
    Ok(CandidateGem {
        edge_count: ec,
        red,
        yellow,
        blue,
    }
    .build()
    .expect("gem of a valid rotation embedding is always a valid gem"))
}

/// Recovers a rotation embedding from a gem, in canonical form.
///
/// Graph vertices are ordered by the smallest flag of their red-yellow
/// bigon; the dart ring is read by traversing that bigon from the smallest
/// flag stepping yellow first, declaring the traversal direction
/// counterclockwise; edge ends are numbered by the smaller flag of their
/// red pair. One read-out can land on a relabelled twin of the gem, so the
/// read-rebuild step is iterated to its fixed point, which makes a single
/// canonicalization pass stable. The result always rebuilds to a gem
/// anchored-isomorphic to the input.
pub fn rotation_from_gem(gem: &Gem) -> RotationEmbedding {
    let mut stable = gem.clone();
    // read-rebuild converges quickly; the cap is a safety net
    for _ in 0..stable.n() + 8 {
        let next = gem_from_rotation(&recover_once(&stable))
            .expect("recovered rotation is always valid");
        if next == stable {
            break;
        }
        stable = next;
    }
    debug_assert_eq!(
        gem_from_rotation(&recover_once(&stable)).expect("valid"),
        stable,
        "canonical read-out did not stabilize"
    );
    recover_once(&stable)
}

fn recover_once(gem: &Gem) -> RotationEmbedding {
    let ec = gem.edge_count();
    // end index of each red pair within its block, by smaller flag
    let mut end_of_red = vec![0u8; gem.n()];
    for e in 0..ec {
        let [p0, p1] = gem.end_pairs(e);
        for v in [p0.0, p0.1] {
            end_of_red[v as usize] = 0;
        }
        for v in [p1.0, p1.1] {
            end_of_red[v as usize] = 1;
        }
    }

    let bigons = gem.bigons(ColourPair::RedYellow);
    let mut vertices = Vec::with_capacity(bigons.len());
    // (cw flag, ccw flag) per dart, filled during traversal
    let mut dart_flags = vec![[u32::MAX; 2]; ec * 2];
    for cycle in &bigons {
        // Traverse the bigon yellow-first from its smallest flag and declare
        // that direction counterclockwise.
        let start = cycle[0];
        let mut ring = Vec::with_capacity(cycle.len() / 2);
        let mut v = start;
        loop {
            let entry = gem.partner(crate::gem::Colour::Yellow, v);
            let exit = gem.partner(crate::gem::Colour::Red, entry);
            let e = gem.edge_of(entry);
            let end = end_of_red[entry as usize];
            // The traversal enters each dart at its clockwise flag and
            // leaves at its counterclockwise flag.
            dart_flags[e * 2 + end as usize] = [entry, exit];
            ring.push((e, end));
            v = exit;
            if v == start {
                break;
            }
        }
        // the cyclic order is what matters; start the listing at the
        // smallest dart so the flat form is stable under edge renaming
        let min_pos = ring
            .iter()
            .enumerate()
            .min_by_key(|(_, d)| **d)
            .map(|(i, _)| i)
            .unwrap_or(0);
        ring.rotate_left(min_pos);
        vertices.push(ring);
    }

    let mut signatures = Vec::with_capacity(ec);
    for e in 0..ec {
        let [_, ccw0] = dart_flags[e * 2];
        let [cw1, ccw1] = dart_flags[e * 2 + 1];
        let partner = gem.partner(crate::gem::Colour::Blue, ccw0);
        let sig = if partner == cw1 {
            1
        } else {
            debug_assert_eq!(partner, ccw1);
            -1
        };
        signatures.push(sig);
    }

    RotationEmbedding::new(vertices, signatures)
}
