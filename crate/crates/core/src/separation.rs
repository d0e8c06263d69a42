//! The primal/dual separation graph and its Petrie walks.
//!
//! The separation graph Λ has the mixed vertices and mixed faces of the
//! graph as its vertices and the mixed corners as its edges, each corner
//! joining its vertex to its face. It inherits a rotation from the
//! embedding: at each Λ-vertex the mixed corners appear in their cyclic
//! order around the original vertex or face.
//!
//! Petrie walks of Λ are traced with a side-state: one family follows the
//! boundary of the dual region at faces and of the primal region at
//! vertices, the other family the opposite. The two families 2-colour the
//! faces of the Petrie dual of Λ and together cover every Λ-edge twice,
//! which is what the global condition consumes.

use crate::corner::{CornerRing, CornerTable, Side};
use crate::gem::Gem;
use crate::subset::EdgeSubset;
use crate::trace::CornerId;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A vertex of the separation graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaVertex {
    Vertex(usize),
    Face(usize),
}

/// An edge of the separation graph: a mixed corner joining its vertex to
/// its face. `ends[0]` is the vertex side, `ends[1]` the face side, as
/// indices into the Λ vertex list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaEdge {
    pub corner: CornerId,
    pub ends: [usize; 2],
}

/// Which family of Petrie walks a walk belongs to. Dual-region walks
/// correspond to partial-dual vertices coming from totally dual regions;
/// primal-region walks to faces coming from totally primal regions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WalkKind {
    #[serde(rename = "R")]
    DualRegion,
    #[serde(rename = "B")]
    PrimalRegion,
}

/// A closed Petrie walk in Λ, stored as the cyclic list of Λ-edge indices
/// it traverses, rotated so the smallest edge comes first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PetrieWalk {
    pub kind: WalkKind,
    pub edges: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct SeparationGraph {
    pub vertices: Vec<LambdaVertex>,
    pub edges: Vec<LambdaEdge>,
    /// Per Λ-vertex, its incident Λ-edges in inherited cyclic order.
    pub rotations: Vec<Vec<usize>>,
    pub petrie_walks: Vec<PetrieWalk>,
    /// Sides of the connected regions the surface splits into along Λ.
    pub region_colouring: Vec<Side>,
    /// Shared-edge counts for unordered pairs of distinct Petrie walks.
    pub shared_edges: BTreeMap<(usize, usize), usize>,
}

impl SeparationGraph {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn walk_uses_edge(&self, walk: usize, edge: usize) -> bool {
        self.petrie_walks[walk].edges.contains(&edge)
    }

    pub fn edge_index_of_corner(&self, corner: CornerId) -> Option<usize> {
        self.edges.iter().position(|e| e.corner == corner)
    }
}

struct Ring<'a> {
    ring: &'a CornerRing,
    /// positions of mixed corners within the ring, ascending
    mixed_positions: Vec<usize>,
}

impl Ring<'_> {
    /// From the mixed corner at ring position `pos`, scan through the flank
    /// of side `side` to the next mixed corner; returns its position.
    fn step(&self, pos: usize, side: Side) -> usize {
        let k = self.ring.corners.len();
        let forward = self.ring.gap_sides[pos] == side;
        debug_assert!(
            forward || self.ring.gap_sides[(pos + k - 1) % k] == side,
            "mixed corner must have a flank on each side"
        );
        let mut j = pos;
        loop {
            j = if forward { (j + 1) % k } else { (j + k - 1) % k };
            if self.mixed_positions.binary_search(&j).is_ok() {
                return j;
            }
        }
    }
}

/// Builds the separation graph of a gem against a dual set; `table` must
/// be the corner table of the same pair.
pub fn separation_graph(gem: &Gem, dual: EdgeSubset, table: &CornerTable) -> SeparationGraph {
    let mut vertices = Vec::new();
    let mut lambda_index: HashMap<LambdaVertex, usize> = HashMap::new();
    for &v in &table.mixed_vertices {
        lambda_index.insert(LambdaVertex::Vertex(v), vertices.len());
        vertices.push(LambdaVertex::Vertex(v));
    }
    for &f in &table.mixed_faces {
        lambda_index.insert(LambdaVertex::Face(f), vertices.len());
        vertices.push(LambdaVertex::Face(f));
    }

    let mut edges = Vec::new();
    let mut edge_of_corner: HashMap<CornerId, usize> = HashMap::new();
    for info in &table.corners {
        if info.class.is_mixed() {
            let ends = [
                lambda_index[&LambdaVertex::Vertex(info.nu)],
                lambda_index[&LambdaVertex::Face(info.phi)],
            ];
            edge_of_corner.insert(info.id, edges.len());
            edges.push(LambdaEdge {
                corner: info.id,
                ends,
            });
        }
    }

    let mut rings: Vec<Ring> = Vec::with_capacity(vertices.len());
    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(vertices.len());
    for lv in &vertices {
        let ring = match lv {
            LambdaVertex::Vertex(v) => &table.vertex_rings[*v],
            LambdaVertex::Face(f) => &table.face_rings[*f],
        };
        let mixed_positions: Vec<usize> = ring
            .corners
            .iter()
            .enumerate()
            .filter(|(_, c)| table.class_of(**c).is_mixed())
            .map(|(i, _)| i)
            .collect();
        rotations.push(
            mixed_positions
                .iter()
                .map(|&i| edge_of_corner[&ring.corners[i]])
                .collect(),
        );
        rings.push(Ring {
            ring,
            mixed_positions,
        });
    }

    let petrie_walks = trace_petrie_walks(&vertices, &edges, &rings, &edge_of_corner);
    let shared_edges = shared_edge_index(&petrie_walks);
    let region_colouring = region_colouring(gem, dual, table);

    SeparationGraph {
        vertices,
        edges,
        rotations,
        petrie_walks,
        region_colouring,
        shared_edges,
    }
}

fn follow_side(kind: WalkKind, at: LambdaVertex) -> Side {
    match (kind, at) {
        (WalkKind::DualRegion, LambdaVertex::Vertex(_)) => Side::Primal,
        (WalkKind::DualRegion, LambdaVertex::Face(_)) => Side::Dual,
        (WalkKind::PrimalRegion, LambdaVertex::Vertex(_)) => Side::Dual,
        (WalkKind::PrimalRegion, LambdaVertex::Face(_)) => Side::Primal,
    }
}

fn trace_petrie_walks(
    vertices: &[LambdaVertex],
    edges: &[LambdaEdge],
    rings: &[Ring],
    edge_of_corner: &HashMap<CornerId, usize>,
) -> Vec<PetrieWalk> {
    // position of a corner within the ring of a λ-vertex
    let mut pos_in_ring: HashMap<(usize, CornerId), usize> = HashMap::new();
    for (li, ring) in rings.iter().enumerate() {
        for (i, &c) in ring.ring.corners.iter().enumerate() {
            pos_in_ring.insert((li, c), i);
        }
    }

    let mut walks = Vec::new();
    let mut canonical_seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for kind in [WalkKind::DualRegion, WalkKind::PrimalRegion] {
        // state: (edge index, λ-vertex arrived at)
        let mut visited: BTreeSet<(usize, usize)> = BTreeSet::new();
        canonical_seen.clear();
        for start_edge in 0..edges.len() {
            for &start_at in &edges[start_edge].ends {
                if visited.contains(&(start_edge, start_at)) {
                    continue;
                }
                let mut sequence = Vec::new();
                let mut state = (start_edge, start_at);
                loop {
                    if !visited.insert(state) {
                        break;
                    }
                    let (edge, at) = state;
                    sequence.push(edge);
                    let side = follow_side(kind, vertices[at]);
                    let ring = &rings[at];
                    let pos = pos_in_ring[&(at, edges[edge].corner)];
                    let exit_pos = ring.step(pos, side);
                    let exit_corner = ring.ring.corners[exit_pos];
                    let exit_edge = edge_of_corner[&exit_corner];
                    let next_at = if edges[exit_edge].ends[0] == at {
                        edges[exit_edge].ends[1]
                    } else {
                        edges[exit_edge].ends[0]
                    };
                    state = (exit_edge, next_at);
                }
                if canonical_seen.insert(canonical_cyclic(&sequence)) {
                    walks.push(PetrieWalk {
                        kind,
                        edges: rotate_min_first(&sequence),
                    });
                }
            }
        }
    }
    walks
}

/// Lexicographically smallest rotation of the sequence or its reversal.
fn canonical_cyclic(seq: &[usize]) -> Vec<usize> {
    let m = seq.len();
    let mut best: Option<Vec<usize>> = None;
    for shift in 0..m {
        let rotated: Vec<usize> = (0..m).map(|i| seq[(i + shift) % m]).collect();
        let reversed: Vec<usize> = (0..m).map(|i| seq[(shift + m - i) % m]).collect();
        for candidate in [rotated, reversed] {
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    best.unwrap_or_default()
}

fn rotate_min_first(seq: &[usize]) -> Vec<usize> {
    if seq.is_empty() {
        return Vec::new();
    }
    let min = seq.iter().min().unwrap();
    let pos = seq.iter().position(|e| e == min).unwrap();
    (0..seq.len()).map(|i| seq[(i + pos) % seq.len()]).collect()
}

fn shared_edge_index(walks: &[PetrieWalk]) -> BTreeMap<(usize, usize), usize> {
    let counts: Vec<BTreeMap<usize, usize>> = walks
        .iter()
        .map(|w| {
            let mut m = BTreeMap::new();
            for &e in &w.edges {
                *m.entry(e).or_insert(0) += 1;
            }
            m
        })
        .collect();
    let mut out = BTreeMap::new();
    for i in 0..walks.len() {
        for j in i + 1..walks.len() {
            let mut shared = 0usize;
            for (e, ca) in counts[i].iter() {
                if let Some(cb) = counts[j].get(e) {
                    shared += ca.min(cb);
                }
            }
            if shared > 0 {
                out.insert((i, j), shared);
            }
        }
    }
    out
}

/// 2-face-colouring of the regions the surface splits into along Λ.
///
/// The gem's cell structure is cut into atoms: one disk per edge block,
/// one per pure vertex or face, and one sector per span between
/// consecutive mixed corners of a mixed vertex or face. Each flag
/// identifies a half-corner on its vertex disk and on its face disk, both
/// lying in the same region as the flag's edge block; gluing over all
/// flags yields the regions, each coloured by the side of its blocks.
fn region_colouring(gem: &Gem, dual: EdgeSubset, table: &CornerTable) -> Vec<Side> {
    let vmap = gem.vertex_map();
    let fmap = gem.face_map();
    let ec = gem.edge_count();

    struct Sectors {
        base: Vec<usize>,
        mixed_positions: Vec<Vec<usize>>,
    }

    let mut next_atom = ec;
    let mut build = |rings: &[CornerRing]| -> Sectors {
        let mut base = Vec::with_capacity(rings.len());
        let mut mixed_positions = Vec::with_capacity(rings.len());
        for ring in rings {
            let mixed: Vec<usize> = ring
                .corners
                .iter()
                .enumerate()
                .filter(|(_, c)| table.class_of(**c).is_mixed())
                .map(|(i, _)| i)
                .collect();
            base.push(next_atom);
            next_atom += mixed.len().max(1);
            mixed_positions.push(mixed);
        }
        Sectors {
            base,
            mixed_positions,
        }
    };
    let vsec = build(&table.vertex_rings);
    let fsec = build(&table.face_rings);

    let mut parent: Vec<usize> = (0..next_atom).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    fn union(parent: &mut Vec<usize>, a: usize, b: usize) {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }

    // Sector atom of the half-corner at ring position `pos`, on the side of
    // the gap before the corner (`before == true`) or after it. Sector j
    // starts at mixed corner m_j and runs up to m_{j+1}.
    let sector_atom = |sectors: &Sectors, idx: usize, pos: usize, before: bool| -> usize {
        let mixed = &sectors.mixed_positions[idx];
        let t = mixed.len();
        if t == 0 {
            return sectors.base[idx];
        }
        let j = match mixed.binary_search(&pos) {
            Ok(i) => {
                if before {
                    (i + t - 1) % t
                } else {
                    i
                }
            }
            Err(i) => (i + t - 1) % t,
        };
        sectors.base[idx] + j
    };

    // ring position and entry/exit role of every flag
    let mut vertex_pos = vec![(0usize, false); gem.n()];
    let mut face_pos = vec![(0usize, false); gem.n()];
    let fill = |bigons: &[Vec<u32>], out: &mut Vec<(usize, bool)>| {
        for cycle in bigons {
            let len = cycle.len();
            let mut pos = 0usize;
            let mut i = 1;
            while i < len {
                // yellow step cycle[i] -> cycle[i+1]: cycle[i] entered the
                // corner from the gap before it
                out[cycle[i] as usize] = (pos, true);
                out[cycle[(i + 1) % len] as usize] = (pos, false);
                pos += 1;
                i += 2;
            }
        }
    };
    fill(&vmap.bigons, &mut vertex_pos);
    fill(&fmap.bigons, &mut face_pos);

    for flag in 0..gem.n() as u32 {
        let v = vmap.of(flag);
        let f = fmap.of(flag);
        let (vp, ventry) = vertex_pos[flag as usize];
        let (fp, fentry) = face_pos[flag as usize];
        let va = sector_atom(&vsec, v, vp, ventry);
        let fa = sector_atom(&fsec, f, fp, fentry);
        let q = gem.edge_of(flag);
        union(&mut parent, va, q);
        union(&mut parent, fa, q);
    }

    let mut colour_of_root: BTreeMap<usize, Side> = BTreeMap::new();
    for e in 0..ec {
        let root = find(&mut parent, e);
        let side = Side::of(dual, e);
        let entry = colour_of_root.entry(root).or_insert(side);
        debug_assert_eq!(*entry, side, "region touches blocks of both sides");
    }
    colour_of_root.into_values().collect()
}
