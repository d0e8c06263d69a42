//! Tracing a partial dual inside the original gem.
//!
//! For a dual set D, the red-yellow bigons of the dualized gem are exactly
//! the cycles using yellow edges together with red edges of primal blocks
//! and blue edges of dual blocks; the blue-yellow bigons use the opposite
//! selection. Tracing those cycles in place yields the vertices and faces
//! of the partial dual without building it, each classified by where it
//! came from: an untouched vertex, a fully dualized face, or the boundary
//! of a totally dual (primal) region.

use crate::cuts::GemEdge;
use crate::gem::{BigonMap, Colour, ColourPair, Gem};
use crate::subset::EdgeSubset;
use serde::Serialize;
use std::collections::HashMap;

/// A corner is a yellow gem edge, identified by its smaller flag.
pub type CornerId = u32;

pub fn corner_of_flag(gem: &Gem, flag: u32) -> CornerId {
    flag.min(gem.partner(Colour::Yellow, flag))
}

/// A closed walk in the corner graph: corners joined by red or blue gem
/// edges. `links[i]` joins `corners[i]` to `corners[i+1]` cyclically. A
/// trivial walk has one corner and no links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerWalk {
    pub corners: Vec<CornerId>,
    pub links: Vec<GemEdge>,
}

/// A closed walk in the underlying graph; `edges[i]` joins `vertices[i]`
/// to `vertices[i+1]` cyclically. A trivial walk is a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphWalk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl GraphWalk {
    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// Equality as closed walks, up to rotation and reversal.
    pub fn same_closed_walk(&self, other: &GraphWalk) -> bool {
        if self.vertices.len() != other.vertices.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        if self.is_trivial() {
            return self.vertices == other.vertices;
        }
        let m = self.edges.len();
        for shift in 0..m {
            if (0..m).all(|i| {
                self.vertices[i] == other.vertices[(i + shift) % m]
                    && self.edges[i] == other.edges[(i + shift) % m]
            }) {
                return true;
            }
            // reversal: vertex i matches other vertex (shift - i), edge i
            // matches other edge (shift - i - 1)
            if (0..m).all(|i| {
                self.vertices[i] == other.vertices[(shift + m - i % m) % m]
                    && self.edges[i] == other.edges[(shift + m - 1 - i % m) % m]
            }) {
                return true;
            }
        }
        false
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum WalkError {
    #[error("walk is empty")]
    Empty,
    #[error("walk has {corners} corners but {links} links")]
    LengthMismatch { corners: usize, links: usize },
    #[error("link {index} has colour yellow; corner-graph edges are red or blue")]
    YellowLink { index: usize },
    #[error("link {index} is not incident with its corners")]
    NotIncident { index: usize },
    #[error("corner {0} is not a yellow edge of this gem")]
    BadCorner(u32),
}

/// Projects a closed walk in the corner graph to a closed walk in the
/// underlying graph: corners map to their vertices, blue links map to the
/// edge they run along, red links are dropped, and runs of one vertex are
/// collapsed.
pub fn project_walk(gem: &Gem, walk: &CornerWalk) -> Result<GraphWalk, WalkError> {
    let vmap = gem.vertex_map();
    project_walk_with(gem, walk, &vmap)
}

pub fn project_walk_with(
    gem: &Gem,
    walk: &CornerWalk,
    vmap: &BigonMap,
) -> Result<GraphWalk, WalkError> {
    if walk.corners.is_empty() {
        return Err(WalkError::Empty);
    }
    if !(walk.links.len() == walk.corners.len() || (walk.links.is_empty() && walk.corners.len() == 1))
    {
        return Err(WalkError::LengthMismatch {
            corners: walk.corners.len(),
            links: walk.links.len(),
        });
    }
    for &c in &walk.corners {
        if c as usize >= gem.n() || corner_of_flag(gem, c) != c {
            return Err(WalkError::BadCorner(c));
        }
    }
    let corner_flags = |c: CornerId| (c, gem.partner(Colour::Yellow, c));
    for (i, link) in walk.links.iter().enumerate() {
        if link.colour == Colour::Yellow {
            return Err(WalkError::YellowLink { index: i });
        }
        let (a1, a2) = corner_flags(walk.corners[i]);
        let (b1, b2) = corner_flags(walk.corners[(i + 1) % walk.corners.len()]);
        let touches = |f: u32| f == a1 || f == a2 || f == b1 || f == b2;
        if !(touches(link.a) && touches(link.b)) {
            return Err(WalkError::NotIncident { index: i });
        }
    }

    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, link) in walk.links.iter().enumerate() {
        if link.colour == Colour::Blue {
            vertices.push(vmap.of(walk.corners[i]));
            edges.push(gem.edge_of(link.a));
        }
    }
    if edges.is_empty() {
        return Ok(GraphWalk {
            vertices: vec![vmap.of(walk.corners[0])],
            edges,
        });
    }
    Ok(GraphWalk { vertices, edges })
}

/// Where a traced vertex of the partial dual came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RCycleClass {
    /// An untouched (primal-pure) vertex of the original embedding.
    #[serde(rename = "ppv")]
    UnchangedVertex(usize),
    /// A fully dualized face, now a vertex.
    #[serde(rename = "dpf")]
    DualizedFace(usize),
    /// A boundary component of a totally dual region.
    #[serde(rename = "tdb")]
    DualRegionBoundary(usize),
}

/// Where a traced face of the partial dual came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BCycleClass {
    /// A fully dualized vertex, now a face.
    #[serde(rename = "dpv")]
    DualizedVertex(usize),
    /// An untouched (primal-pure) face.
    #[serde(rename = "ppf")]
    UnchangedFace(usize),
    /// A boundary component of a totally primal region.
    #[serde(rename = "tpb")]
    PrimalRegionBoundary(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceCycle<C> {
    pub corners: Vec<CornerId>,
    #[serde(skip)]
    pub links: Vec<GemEdge>,
    pub class: C,
    pub projection: GraphWalk,
}

/// The vertices and faces of a partial dual, traced in the original gem.
#[derive(Clone, Debug, Serialize)]
pub struct PartialDualTrace {
    pub r_cycles: Vec<TraceCycle<RCycleClass>>,
    pub b_cycles: Vec<TraceCycle<BCycleClass>>,
    #[serde(skip)]
    corner_r: Vec<usize>,
    #[serde(skip)]
    corner_b: Vec<usize>,
}

impl PartialDualTrace {
    pub fn k(&self) -> usize {
        self.r_cycles.len()
    }

    pub fn l(&self) -> usize {
        self.b_cycles.len()
    }

    /// Index of the unique traced vertex cycle through a corner.
    pub fn r_cycle_of(&self, corner: CornerId) -> usize {
        self.corner_r[corner as usize]
    }

    /// Index of the unique traced face cycle through a corner.
    pub fn b_cycle_of(&self, corner: CornerId) -> usize {
        self.corner_b[corner as usize]
    }
}

struct SideSubgraph<'a> {
    gem: &'a Gem,
    dual: EdgeSubset,
    /// colour used inside dual blocks
    dual_colour: Colour,
    /// colour used inside primal blocks
    primal_colour: Colour,
}

impl SideSubgraph<'_> {
    fn link_partner(&self, flag: u32) -> (u32, Colour) {
        let colour = if self.dual.contains(self.gem.edge_of(flag)) {
            self.dual_colour
        } else {
            self.primal_colour
        };
        (self.gem.partner(colour, flag), colour)
    }
}

fn trace_cycles(gem: &Gem, side: &SideSubgraph) -> (Vec<CornerWalk>, Vec<usize>) {
    let n = gem.n();
    let mut cycle_of = vec![usize::MAX; n];
    let mut walks = Vec::new();
    for start_flag in 0..n as u32 {
        let corner = corner_of_flag(gem, start_flag);
        if corner != start_flag || cycle_of[corner as usize] != usize::MAX {
            continue;
        }
        let index = walks.len();
        let mut corners = Vec::new();
        let mut links = Vec::new();
        // proceed from the corner's smaller endpoint
        let mut flag = corner;
        loop {
            let here = corner_of_flag(gem, flag);
            corners.push(here);
            cycle_of[here as usize] = index;
            let (next, colour) = side.link_partner(flag);
            links.push(GemEdge {
                a: flag.min(next),
                b: flag.max(next),
                colour,
            });
            flag = gem.partner(Colour::Yellow, next);
            if flag == corner {
                break;
            }
        }
        walks.push(CornerWalk { corners, links });
    }
    (walks, cycle_of)
}

/// Edge set of a corner walk, as a sorted list of gem edges.
fn walk_edge_set(gem: &Gem, walk: &CornerWalk) -> Vec<GemEdge> {
    let mut edges: Vec<GemEdge> = walk
        .corners
        .iter()
        .map(|&c| GemEdge {
            a: c,
            b: gem.partner(Colour::Yellow, c),
            colour: Colour::Yellow,
        })
        .chain(walk.links.iter().copied())
        .collect();
    edges.sort();
    edges
}

fn bigon_edge_set(gem: &Gem, cycle: &[u32], pair: ColourPair) -> Vec<GemEdge> {
    let first = pair.first_step();
    let second = pair.second_step();
    let mut edges = Vec::with_capacity(cycle.len());
    for (i, &v) in cycle.iter().enumerate() {
        let colour = if i % 2 == 0 { first } else { second };
        let w = gem.partner(colour, v);
        edges.push(GemEdge {
            a: v.min(w),
            b: v.max(w),
            colour,
        });
    }
    edges.sort();
    edges
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Union-find over graph vertices spanned by one side's edges, with the
/// pure faces of that side merged along their boundaries.
fn region_components(
    gem: &Gem,
    vmap: &BigonMap,
    fmap: &BigonMap,
    side_edges: &[usize],
    pure_faces: &[usize],
) -> UnionFind {
    let mut uf = UnionFind::new(vmap.count());
    for &e in side_edges {
        let (a, b) = gem.endpoints(e, vmap);
        uf.union(a, b);
    }
    for &f in pure_faces {
        let cycle = &fmap.bigons[f];
        let verts: Vec<usize> = cycle.iter().map(|&v| vmap.of(v)).collect();
        for w in verts.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    uf
}

/// Traces the vertices and faces of `partial_dual(gem, dual)` inside `gem`.
pub fn trace_partial_dual(gem: &Gem, dual: EdgeSubset) -> PartialDualTrace {
    let vmap = gem.vertex_map();
    let fmap = gem.face_map();

    let mut vertex_sets: HashMap<Vec<GemEdge>, usize> = HashMap::new();
    for (v, cycle) in vmap.bigons.iter().enumerate() {
        vertex_sets.insert(bigon_edge_set(gem, cycle, ColourPair::RedYellow), v);
    }
    let mut face_sets: HashMap<Vec<GemEdge>, usize> = HashMap::new();
    for (f, cycle) in fmap.bigons.iter().enumerate() {
        face_sets.insert(bigon_edge_set(gem, cycle, ColourPair::BlueYellow), f);
    }

    let dual_edge_ids: Vec<usize> = dual.iter().collect();
    let primal_edge_ids: Vec<usize> = dual.complement(gem.edge_count()).iter().collect();
    let dual_pure_faces: Vec<usize> = pure_faces(gem, &fmap, |e| dual.contains(e));
    let primal_pure_faces: Vec<usize> = pure_faces(gem, &fmap, |e| !dual.contains(e));

    let mut uf_dual = region_components(gem, &vmap, &fmap, &dual_edge_ids, &dual_pure_faces);
    let mut uf_primal = region_components(gem, &vmap, &fmap, &primal_edge_ids, &primal_pure_faces);

    // Vertices of the dual: yellow with red on primal blocks, blue on dual blocks.
    let r_side = SideSubgraph {
        gem,
        dual,
        dual_colour: Colour::Blue,
        primal_colour: Colour::Red,
    };
    // Faces of the dual: yellow with blue on primal blocks, red on dual blocks.
    let b_side = SideSubgraph {
        gem,
        dual,
        dual_colour: Colour::Red,
        primal_colour: Colour::Blue,
    };

    let (r_walks, corner_r) = trace_cycles(gem, &r_side);
    let (b_walks, corner_b) = trace_cycles(gem, &b_side);

    let mut r_regions: HashMap<usize, usize> = HashMap::new();
    let r_cycles = r_walks
        .into_iter()
        .map(|walk| {
            let set = walk_edge_set(gem, &walk);
            let class = if let Some(&v) = vertex_sets.get(&set) {
                RCycleClass::UnchangedVertex(v)
            } else if let Some(&f) = face_sets.get(&set) {
                RCycleClass::DualizedFace(f)
            } else {
                let root = boundary_region(gem, &walk, &vmap, Colour::Blue, &mut uf_dual);
                let next = r_regions.len();
                RCycleClass::DualRegionBoundary(*r_regions.entry(root).or_insert(next))
            };
            let projection = project_walk_with(gem, &walk, &vmap)
                .expect("traced cycles are valid corner walks");
            TraceCycle {
                corners: walk.corners,
                links: walk.links,
                class,
                projection,
            }
        })
        .collect();

    let mut b_regions: HashMap<usize, usize> = HashMap::new();
    let b_cycles = b_walks
        .into_iter()
        .map(|walk| {
            let set = walk_edge_set(gem, &walk);
            let class = if let Some(&v) = vertex_sets.get(&set) {
                BCycleClass::DualizedVertex(v)
            } else if let Some(&f) = face_sets.get(&set) {
                BCycleClass::UnchangedFace(f)
            } else {
                let root = boundary_region(gem, &walk, &vmap, Colour::Blue, &mut uf_primal);
                let next = b_regions.len();
                BCycleClass::PrimalRegionBoundary(*b_regions.entry(root).or_insert(next))
            };
            let projection = project_walk_with(gem, &walk, &vmap)
                .expect("traced cycles are valid corner walks");
            TraceCycle {
                corners: walk.corners,
                links: walk.links,
                class,
                projection,
            }
        })
        .collect();

    PartialDualTrace {
        r_cycles,
        b_cycles,
        corner_r,
        corner_b,
    }
}

fn pure_faces(gem: &Gem, fmap: &BigonMap, in_side: impl Fn(usize) -> bool) -> Vec<usize> {
    fmap.bigons
        .iter()
        .enumerate()
        .filter(|(_, cycle)| cycle.iter().all(|&v| in_side(gem.edge_of(v))))
        .map(|(f, _)| f)
        .collect()
}

/// Region root of a boundary cycle: the component of any side edge it runs
/// along. `side_colour` is the link colour used on that side's blocks.
fn boundary_region(
    gem: &Gem,
    walk: &CornerWalk,
    vmap: &BigonMap,
    side_colour: Colour,
    uf: &mut UnionFind,
) -> usize {
    let link = walk
        .links
        .iter()
        .find(|l| l.colour == side_colour)
        .expect("a region boundary cycle runs along at least one side edge");
    let e = gem.edge_of(link.a);
    let (a, _) = gem.endpoints(e, vmap);
    uf.find(a)
}

/// The boundary walks of all faces, as closed walks in the graph.
pub fn face_boundary_walks(gem: &Gem) -> Vec<GraphWalk> {
    trace_partial_dual(gem, EdgeSubset::empty())
        .b_cycles
        .into_iter()
        .map(|c| c.projection)
        .collect()
}
