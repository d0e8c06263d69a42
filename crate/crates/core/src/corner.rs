//! The corner table: classifying vertex/face incidences against a dual set.
//!
//! A corner marks a place where a vertex, a face and two edge ends of the
//! graph meet; in the gem it is a yellow edge. Relative to a dual set D a
//! corner is mixed when its two edges straddle D, and otherwise pure on
//! one side with a count of how many of its vertex and face are pure.

use crate::gem::{BigonMap, Colour, Gem};
use crate::subset::EdgeSubset;
use crate::trace::CornerId;
use serde::Serialize;

/// Which side of the primal/dual split something lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Primal,
    Dual,
}

impl Side {
    pub fn of(dual: EdgeSubset, edge: usize) -> Side {
        if dual.contains(edge) {
            Side::Dual
        } else {
            Side::Primal
        }
    }
}

/// Purity of a vertex or face of the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Purity {
    Mixed,
    Pure(Side),
}

impl Purity {
    pub fn is_mixed(self) -> bool {
        self == Purity::Mixed
    }

    pub fn is_pure(self) -> bool {
        !self.is_mixed()
    }
}

/// Classification of a corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CornerClass {
    Mixed,
    Pure { side: Side, pure_count: u8 },
}

impl CornerClass {
    pub fn is_mixed(self) -> bool {
        self == CornerClass::Mixed
    }

    pub fn pure_count(self) -> Option<u8> {
        match self {
            CornerClass::Mixed => None,
            CornerClass::Pure { pure_count, .. } => Some(pure_count),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CornerInfo {
    pub id: CornerId,
    /// Vertex of the corner.
    pub nu: usize,
    /// Face of the corner.
    pub phi: usize,
    /// The two (possibly equal) graph edges at the corner.
    pub eps: (usize, usize),
    pub class: CornerClass,
}

/// A cyclic ring of corners around a vertex or face, with the side of the
/// graph edge between consecutive corners.
#[derive(Clone, Debug)]
pub struct CornerRing {
    pub corners: Vec<CornerId>,
    /// `gap_sides[i]` is the side of the edge between `corners[i]` and
    /// `corners[i+1]`.
    pub gap_sides: Vec<Side>,
}

#[derive(Debug, Serialize)]
pub struct CornerTable {
    pub corners: Vec<CornerInfo>,
    pub vertex_purity: Vec<Purity>,
    pub face_purity: Vec<Purity>,
    pub mixed_vertices: Vec<usize>,
    pub mixed_faces: Vec<usize>,
    pub pure_vertices: Vec<(usize, Side)>,
    pub pure_faces: Vec<(usize, Side)>,
    pub exposed_vertices: Vec<usize>,
    pub exposed_faces: Vec<usize>,
    #[serde(skip)]
    pub vertex_rings: Vec<CornerRing>,
    #[serde(skip)]
    pub face_rings: Vec<CornerRing>,
    #[serde(skip)]
    class_of: Vec<CornerClass>,
    #[serde(skip)]
    nu_of: Vec<usize>,
    #[serde(skip)]
    phi_of: Vec<usize>,
}

impl CornerTable {
    pub fn class_of(&self, corner: CornerId) -> CornerClass {
        self.class_of[corner as usize]
    }

    /// Vertex of a corner.
    pub fn nu_of(&self, corner: CornerId) -> usize {
        self.nu_of[corner as usize]
    }

    /// Face of a corner.
    pub fn phi_of(&self, corner: CornerId) -> usize {
        self.phi_of[corner as usize]
    }

    pub fn corner_info(&self, corner: CornerId) -> &CornerInfo {
        self.corners
            .binary_search_by_key(&corner, |c| c.id)
            .map(|i| &self.corners[i]).expect("corner id present in table")
    }

    /// All corners classified 0-pure.
    pub fn zero_pure_corners(&self) -> Vec<CornerId> {
        self.corners
            .iter()
            .filter(|c| c.class.pure_count() == Some(0))
            .map(|c| c.id)
            .collect()
    }
}

/// Ring of corners around one bigon, with the gap edge sides. The bigon
/// alternates its non-yellow colour and yellow starting with the non-yellow
/// step, so corners sit at odd step positions.
fn ring_of_bigon(gem: &Gem, cycle: &[u32], dual: EdgeSubset) -> CornerRing {
    let mut corners = Vec::with_capacity(cycle.len() / 2);
    let mut gap_sides = Vec::with_capacity(cycle.len() / 2);
    let len = cycle.len();
    let mut i = 1;
    while i < len {
        // cycle[i] -> cycle[i+1 mod len] is a yellow step
        let corner = cycle[i].min(cycle[(i + 1) % len]);
        corners.push(corner);
        // the following non-yellow step crosses a graph edge
        let next_flag = cycle[(i + 1) % len];
        gap_sides.push(Side::of(dual, gem.edge_of(next_flag)));
        i += 2;
    }
    CornerRing { corners, gap_sides }
}

/// Builds the corner table of a gem against a dual set.
pub fn corner_table(gem: &Gem, dual: EdgeSubset) -> CornerTable {
    let vmap = gem.vertex_map();
    let fmap = gem.face_map();

    let purity_of = |bigons: &BigonMap| -> Vec<Purity> {
        bigons
            .bigons
            .iter()
            .map(|cycle| {
                let mut saw_dual = false;
                let mut saw_primal = false;
                for &flag in cycle {
                    match Side::of(dual, gem.edge_of(flag)) {
                        Side::Dual => saw_dual = true,
                        Side::Primal => saw_primal = true,
                    }
                }
                match (saw_primal, saw_dual) {
                    (true, true) => Purity::Mixed,
                    (true, false) => Purity::Pure(Side::Primal),
                    (false, true) => Purity::Pure(Side::Dual),
                    (false, false) => unreachable!("bigon with no flags"),
                }
            })
            .collect()
    };
    let vertex_purity = purity_of(&vmap);
    let face_purity = purity_of(&fmap);

    let mut corners = Vec::with_capacity(gem.n() / 2);
    let mut class_of = vec![CornerClass::Mixed; gem.n()];
    let mut nu_of = vec![usize::MAX; gem.n()];
    let mut phi_of = vec![usize::MAX; gem.n()];
    let mut one_pure_at_vertex = vec![0usize; vmap.count()];
    let mut one_pure_at_face = vec![0usize; fmap.count()];
    for flag in 0..gem.n() as u32 {
        let partner = gem.partner(Colour::Yellow, flag);
        if partner < flag {
            continue;
        }
        let id = flag;
        let nu = vmap.of(flag);
        let phi = fmap.of(flag);
        let (ea, eb) = (gem.edge_of(flag), gem.edge_of(partner));
        let eps = (ea.min(eb), ea.max(eb));
        let sides = (Side::of(dual, eps.0), Side::of(dual, eps.1));
        let class = if sides.0 != sides.1 {
            CornerClass::Mixed
        } else {
            let mut pure_count = 0u8;
            if vertex_purity[nu].is_pure() {
                pure_count += 1;
            }
            if face_purity[phi].is_pure() {
                pure_count += 1;
            }
            CornerClass::Pure {
                side: sides.0,
                pure_count,
            }
        };
        if class.pure_count() == Some(1) {
            if vertex_purity[nu].is_pure() {
                one_pure_at_vertex[nu] += 1;
            } else {
                one_pure_at_face[phi] += 1;
            }
        }
        class_of[id as usize] = class;
        nu_of[id as usize] = nu;
        phi_of[id as usize] = phi;
        corners.push(CornerInfo {
            id,
            nu,
            phi,
            eps,
            class,
        });
    }

    let mixed_vertices: Vec<usize> = vertex_purity
        .iter()
        .enumerate()
        .filter(|(_, p)| p.is_mixed())
        .map(|(v, _)| v)
        .collect();
    let mixed_faces: Vec<usize> = face_purity
        .iter()
        .enumerate()
        .filter(|(_, p)| p.is_mixed())
        .map(|(f, _)| f)
        .collect();
    let pure_vertices: Vec<(usize, Side)> = vertex_purity
        .iter()
        .enumerate()
        .filter_map(|(v, p)| match p {
            Purity::Pure(side) => Some((v, *side)),
            Purity::Mixed => None,
        })
        .collect();
    let pure_faces: Vec<(usize, Side)> = face_purity
        .iter()
        .enumerate()
        .filter_map(|(f, p)| match p {
            Purity::Pure(side) => Some((f, *side)),
            Purity::Mixed => None,
        })
        .collect();
    let exposed_vertices: Vec<usize> = pure_vertices
        .iter()
        .filter(|(v, _)| one_pure_at_vertex[*v] > 1)
        .map(|(v, _)| *v)
        .collect();
    let exposed_faces: Vec<usize> = pure_faces
        .iter()
        .filter(|(f, _)| one_pure_at_face[*f] > 1)
        .map(|(f, _)| *f)
        .collect();

    let vertex_rings = vmap
        .bigons
        .iter()
        .map(|cycle| ring_of_bigon(gem, cycle, dual))
        .collect();
    let face_rings = fmap
        .bigons
        .iter()
        .map(|cycle| ring_of_bigon(gem, cycle, dual))
        .collect();

    CornerTable {
        corners,
        vertex_purity,
        face_purity,
        mixed_vertices,
        mixed_faces,
        pure_vertices,
        pure_faces,
        exposed_vertices,
        exposed_faces,
        vertex_rings,
        face_rings,
        class_of,
        nu_of,
        phi_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::{gem_from_rotation, RotationEmbedding};

    fn theta3() -> Gem {
        let rot = RotationEmbedding::new(
            vec![vec![(0, 0), (1, 0), (2, 0)], vec![(2, 1), (1, 1), (0, 1)]],
            vec![1, 1, 1],
        );
        gem_from_rotation(&rot).unwrap()
    }

    #[test]
    fn empty_dual_everything_primal_pure() {
        let g = theta3();
        let ct = corner_table(&g, EdgeSubset::empty());
        assert!(ct.mixed_vertices.is_empty());
        assert!(ct.mixed_faces.is_empty());
        assert!(ct.corners.iter().all(|c| c.class
            == CornerClass::Pure {
                side: Side::Primal,
                pure_count: 2
            }));
        assert!(ct.exposed_vertices.is_empty());
        assert!(ct.exposed_faces.is_empty());
    }

    #[test]
    fn full_dual_everything_dual_pure() {
        let g = theta3();
        let d = EdgeSubset::full(3).unwrap();
        let ct = corner_table(&g, d);
        assert!(ct.corners.iter().all(|c| c.class
            == CornerClass::Pure {
                side: Side::Dual,
                pure_count: 2
            }));
    }

    #[test]
    fn single_dual_edge_in_theta() {
        let g = theta3();
        let d = EdgeSubset::from_edges([0], 3).unwrap();
        let ct = corner_table(&g, d);
        // both endpoints of edge 0 become mixed
        assert_eq!(ct.mixed_vertices.len(), 2);
        // corners straddling edge 0 and another edge are mixed
        let mixed = ct.corners.iter().filter(|c| c.class.is_mixed()).count();
        assert_eq!(mixed, 4);
        // the two faces flanking edge 0 are mixed, the third is pure
        assert_eq!(ct.mixed_faces.len(), 2);
        assert_eq!(ct.pure_faces.len(), 1);
    }

    #[test]
    fn corner_count_is_two_per_edge() {
        let g = theta3();
        let ct = corner_table(&g, EdgeSubset::empty());
        assert_eq!(ct.corners.len(), 2 * g.edge_count());
    }
}
