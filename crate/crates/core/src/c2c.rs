//! Closed 2-cell detection and separating obstructions.
//!
//! An embedding is closed 2-cell when every face boundary walk is a cycle,
//! which fails exactly at bad vertex/face pairs: a red-yellow and a
//! blue-yellow bigon sharing two or more yellow edges. Monochromatic
//! 2-edge cuts of the gem are the features that no partial dual can
//! escape: the yellow ones are separating vertex/face pairs and persist
//! under every red/blue swap.

use crate::cuts::{edge_cuts_of_size_le, has_two_edge_cut};
use crate::gem::{Colour, Gem};
use crate::subset::EdgeSubset;
use crate::trace::corner_of_flag;
use serde::Serialize;
use std::collections::BTreeMap;

/// A vertex and face incident more than once; `corners` lists the shared
/// yellow edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadPair {
    pub vertex: usize,
    pub face: usize,
    pub corners: Vec<u32>,
}

/// Closed 2-cell verdict. Embeddings with fewer than two edges are
/// reported as degenerate rather than classified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "verdict")]
pub enum Verdict {
    Yes,
    No { witness: BadPair },
    Degenerate,
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes)
    }
}

/// All bad vertex/face pairs, ordered by vertex then face.
pub fn bad_pairs(gem: &Gem) -> Vec<BadPair> {
    let vmap = gem.vertex_map();
    let fmap = gem.face_map();
    let mut shared: BTreeMap<(usize, usize), Vec<u32>> = BTreeMap::new();
    for flag in 0..gem.n() as u32 {
        let corner = corner_of_flag(gem, flag);
        if corner != flag {
            continue;
        }
        shared
            .entry((vmap.of(corner), fmap.of(corner)))
            .or_default()
            .push(corner);
    }
    shared
        .into_iter()
        .filter(|(_, corners)| corners.len() >= 2)
        .map(|((vertex, face), corners)| BadPair {
            vertex,
            face,
            corners,
        })
        .collect()
}

/// Decides whether the embedding is closed 2-cell.
pub fn is_closed_2cell(gem: &Gem) -> Verdict {
    if gem.edge_count() < 2 {
        return Verdict::Degenerate;
    }
    let mut pairs = bad_pairs(gem);
    if pairs.is_empty() {
        // With at least two edges and no bad pair there can be no loop:
        // a loop's side faces each meet the loop vertex twice.
        debug_assert!({
            let vmap = gem.vertex_map();
            (0..gem.edge_count()).all(|e| !gem.is_loop(e, &vmap))
        });
        Verdict::Yes
    } else {
        Verdict::No {
            witness: pairs.swap_remove(0),
        }
    }
}

/// Features that block every partial dual from being closed 2-cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    /// Vertex/face pairs whose two shared yellow edges form a 2-edge cut.
    pub separating_pairs: Vec<BadPair>,
    /// Loops whose red block edges form a 2-edge cut.
    pub separating_loops: Vec<usize>,
    /// Edges whose blue block edges form a 2-edge cut.
    pub separating_coloops: Vec<usize>,
    pub blocks_all_partial_duals: bool,
}

/// Classifies every monochromatic 2-edge cut of the gem.
pub fn separating_features(gem: &Gem) -> ObstructionReport {
    let vmap = gem.vertex_map();
    let fmap = gem.face_map();
    let mut separating_pairs = Vec::new();
    let mut separating_loops = Vec::new();
    let mut separating_coloops = Vec::new();
    let mut any = false;
    for cut in edge_cuts_of_size_le(gem, 2) {
        if cut.size() != 2 {
            continue;
        }
        any = true;
        let colour = cut
            .colour()
            .expect("every 2-edge cut of a gem is monochromatic");
        let (e0, e1) = (cut.edges[0], cut.edges[1]);
        match colour {
            Colour::Yellow => {
                let vertex = vmap.of(e0.a);
                let face = fmap.of(e0.a);
                debug_assert_eq!(vertex, vmap.of(e1.a));
                debug_assert_eq!(face, fmap.of(e1.a));
                separating_pairs.push(BadPair {
                    vertex,
                    face,
                    corners: vec![e0.a.min(e0.b), e1.a.min(e1.b)],
                });
            }
            Colour::Red => {
                let edge = gem.edge_of(e0.a);
                debug_assert_eq!(edge, gem.edge_of(e1.a));
                if !separating_loops.contains(&edge) {
                    separating_loops.push(edge);
                }
            }
            Colour::Blue => {
                let edge = gem.edge_of(e0.a);
                debug_assert_eq!(edge, gem.edge_of(e1.a));
                if !separating_coloops.contains(&edge) {
                    separating_coloops.push(edge);
                }
            }
        }
    }
    separating_pairs.sort_by_key(|p| (p.vertex, p.face, p.corners.clone()));
    separating_loops.sort_unstable();
    separating_coloops.sort_unstable();
    ObstructionReport {
        separating_pairs,
        separating_loops,
        separating_coloops,
        blocks_all_partial_duals: any,
    }
}

/// True iff the gem has a 2-edge cut, which then survives into the gem of
/// every partial dual as a yellow 2-edge cut (for gems on more than four
/// vertices).
pub fn obstruction_persists(gem: &Gem, _dual: EdgeSubset) -> bool {
    has_two_edge_cut(gem)
}
