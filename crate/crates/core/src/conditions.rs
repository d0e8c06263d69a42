//! The local, midrange and global conditions deciding whether a partial
//! dual is closed 2-cell, evaluated without constructing the dual gem.
//!
//! * LC: every bad vertex/face pair of the original embedding must have a
//!   mixed member.
//! * MC: an exposed pure vertex or face may meet each region boundary walk
//!   of the matching family at most once.
//! * GC: no two Petrie-dual faces of the separation graph share two or
//!   more edges; a 0-pure corner's pair of region walks may share none and
//!   no two 0-pure corners may select the same pair.
//!
//! The conjunction of the three is equivalent to the direct check on the
//! dualized gem, which the search harness verifies exhaustively.

use crate::c2c::bad_pairs;
use crate::corner::{corner_table, CornerTable, Side};
use crate::gem::Gem;
use crate::separation::{separation_graph, SeparationGraph, WalkKind};
use crate::subset::EdgeSubset;
use crate::trace::{trace_partial_dual, BCycleClass, CornerId, PartialDualTrace, RCycleClass};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "status")]
pub enum CheckOutcome<W> {
    Pass,
    Fail { witnesses: Vec<W> },
}

impl<W> CheckOutcome<W> {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    fn from_witnesses(witnesses: Vec<W>) -> Self {
        if witnesses.is_empty() {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail { witnesses }
        }
    }
}

/// A bad pair of the original embedding with both members pure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcWitness {
    pub vertex: usize,
    pub face: usize,
    pub corners: Vec<CornerId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum McTarget {
    Vertex(usize),
    Face(usize),
}

/// A region boundary walk meeting an exposed pure vertex or face more
/// than once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McWitness {
    pub walk_kind: WalkKind,
    pub cycle_index: usize,
    pub target: McTarget,
    pub corners: Vec<CornerId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "clause")]
pub enum GcWitness {
    /// Two Petrie-dual faces sharing two or more edges.
    SharedEdges {
        walks: (usize, usize),
        count: usize,
    },
    /// A 0-pure corner whose region walks also share an edge.
    TangentAndCrossing {
        corner: CornerId,
        walks: (usize, usize),
    },
    /// Two 0-pure corners selecting the same pair of region walks.
    RepeatedTangency {
        corners: Vec<CornerId>,
        walks: (usize, usize),
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Predicted {
    Yes,
    No,
    Degenerate,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionVerdict {
    pub lc: CheckOutcome<LcWitness>,
    pub mc: CheckOutcome<McWitness>,
    pub gc: CheckOutcome<GcWitness>,
    pub predicted_c2c: Predicted,
}

impl ConditionVerdict {
    pub fn all_pass(&self) -> bool {
        self.lc.passed() && self.mc.passed() && self.gc.passed()
    }
}

/// Everything the conditions path computes, kept for explanation output.
pub struct ConditionAnalysis {
    pub table: CornerTable,
    pub trace: PartialDualTrace,
    pub separation: SeparationGraph,
    pub verdict: ConditionVerdict,
}

/// LC: for every bad vertex/face pair, at least one member is mixed.
pub fn check_lc(gem: &Gem, table: &CornerTable) -> CheckOutcome<LcWitness> {
    let witnesses = bad_pairs(gem)
        .into_iter()
        .filter(|p| {
            table.vertex_purity[p.vertex].is_pure() && table.face_purity[p.face].is_pure()
        })
        .map(|p| LcWitness {
            vertex: p.vertex,
            face: p.face,
            corners: p.corners,
        })
        .collect();
    CheckOutcome::from_witnesses(witnesses)
}

/// MC: every region boundary walk of the matching family passes each
/// exposed pure vertex (face) at most once. Primal-pure vertices pair with
/// totally primal walks and dual-pure vertices with totally dual walks;
/// for faces the pairing is reversed.
pub fn check_mc(table: &CornerTable, trace: &PartialDualTrace) -> CheckOutcome<McWitness> {
    let mut witnesses = Vec::new();

    let exposed_side = |v: usize, purity: &[crate::corner::Purity]| match purity[v] {
        crate::corner::Purity::Pure(side) => side,
        crate::corner::Purity::Mixed => unreachable!("exposed elements are pure"),
    };

    let mut check_cycles = |target: McTarget,
                            use_dual_walks: bool,
                            matches: &dyn Fn(CornerId) -> bool| {
        if use_dual_walks {
            for (i, cycle) in trace.r_cycles.iter().enumerate() {
                if !matches!(cycle.class, RCycleClass::DualRegionBoundary(_)) {
                    continue;
                }
                let hits: Vec<CornerId> =
                    cycle.corners.iter().copied().filter(|&c| matches(c)).collect();
                if hits.len() >= 2 {
                    witnesses.push(McWitness {
                        walk_kind: WalkKind::DualRegion,
                        cycle_index: i,
                        target,
                        corners: hits,
                    });
                }
            }
        } else {
            for (i, cycle) in trace.b_cycles.iter().enumerate() {
                if !matches!(cycle.class, BCycleClass::PrimalRegionBoundary(_)) {
                    continue;
                }
                let hits: Vec<CornerId> =
                    cycle.corners.iter().copied().filter(|&c| matches(c)).collect();
                if hits.len() >= 2 {
                    witnesses.push(McWitness {
                        walk_kind: WalkKind::PrimalRegion,
                        cycle_index: i,
                        target,
                        corners: hits,
                    });
                }
            }
        }
    };

    for &v in &table.exposed_vertices {
        let side = exposed_side(v, &table.vertex_purity);
        // a primal-pure vertex can collide only with totally primal walks,
        // a dual-pure vertex only with totally dual walks
        let use_dual_walks = side == Side::Dual;
        check_cycles(McTarget::Vertex(v), use_dual_walks, &|c| table.nu_of(c) == v);
    }
    for &f in &table.exposed_faces {
        let side = exposed_side(f, &table.face_purity);
        // a primal-pure face collides with totally dual walks and vice versa
        let use_dual_walks = side == Side::Primal;
        check_cycles(McTarget::Face(f), use_dual_walks, &|c| table.phi_of(c) == f);
    }

    CheckOutcome::from_witnesses(witnesses)
}

/// Pairs each dual-region Petrie walk with its traced vertex cycle and
/// each primal-region walk with its traced face cycle; index maps are
/// keyed by trace cycle index.
pub fn walk_of_cycle_maps(
    trace: &PartialDualTrace,
    sep: &SeparationGraph,
) -> (HashMap<usize, usize>, HashMap<usize, usize>) {
    let mut r_map = HashMap::new();
    let mut b_map = HashMap::new();
    for (wi, walk) in sep.petrie_walks.iter().enumerate() {
        let Some(&first_edge) = walk.edges.first() else {
            continue;
        };
        let corner = sep.edges[first_edge].corner;
        match walk.kind {
            WalkKind::DualRegion => {
                r_map.insert(trace.r_cycle_of(corner), wi);
            }
            WalkKind::PrimalRegion => {
                b_map.insert(trace.b_cycle_of(corner), wi);
            }
        }
    }
    (r_map, b_map)
}

/// GC: no two Petrie-dual faces of Λ share two or more edges, no 0-pure
/// corner's walk pair shares an edge, and no walk pair carries two 0-pure
/// corners.
pub fn check_gc(
    table: &CornerTable,
    trace: &PartialDualTrace,
    sep: &SeparationGraph,
) -> CheckOutcome<GcWitness> {
    let mut witnesses = Vec::new();

    for (&(i, j), &count) in &sep.shared_edges {
        if count >= 2 {
            witnesses.push(GcWitness::SharedEdges {
                walks: (i, j),
                count,
            });
        }
    }

    let (r_walk_of, b_walk_of) = walk_of_cycle_maps(trace, sep);
    let mut tangencies: BTreeMap<(usize, usize), Vec<CornerId>> = BTreeMap::new();
    for corner in table.zero_pure_corners() {
        let rc = trace.r_cycle_of(corner);
        let bc = trace.b_cycle_of(corner);
        debug_assert!(matches!(
            trace.r_cycles[rc].class,
            RCycleClass::DualRegionBoundary(_)
        ));
        debug_assert!(matches!(
            trace.b_cycles[bc].class,
            BCycleClass::PrimalRegionBoundary(_)
        ));
        let (rw, bw) = (r_walk_of[&rc], b_walk_of[&bc]);
        let key = (rw.min(bw), rw.max(bw));
        if sep.shared_edges.get(&key).copied().unwrap_or(0) > 0 {
            witnesses.push(GcWitness::TangentAndCrossing {
                corner,
                walks: key,
            });
        }
        tangencies.entry(key).or_default().push(corner);
    }
    for (key, corners) in tangencies {
        if corners.len() >= 2 {
            witnesses.push(GcWitness::RepeatedTangency {
                corners,
                walks: key,
            });
        }
    }

    CheckOutcome::from_witnesses(witnesses)
}

/// Runs the full conditions path against a dual set.
pub fn analyze(gem: &Gem, dual: EdgeSubset) -> ConditionAnalysis {
    let table = corner_table(gem, dual);
    let trace = trace_partial_dual(gem, dual);
    let separation = separation_graph(gem, dual, &table);
    let lc = check_lc(gem, &table);
    let mc = check_mc(&table, &trace);
    let gc = check_gc(&table, &trace, &separation);
    let predicted_c2c = if gem.edge_count() < 2 {
        Predicted::Degenerate
    } else if lc.passed() && mc.passed() && gc.passed() {
        Predicted::Yes
    } else {
        Predicted::No
    };
    ConditionAnalysis {
        table,
        trace,
        separation,
        verdict: ConditionVerdict {
            lc,
            mc,
            gc,
            predicted_c2c,
        },
    }
}

/// Predicts whether the partial dual over `dual` is closed 2-cell.
pub fn conditions_predict_c2c(gem: &Gem, dual: EdgeSubset) -> ConditionVerdict {
    analyze(gem, dual).verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c2c::is_closed_2cell;
    use crate::duality::partial_dual;
    use crate::rotation::{gem_from_rotation, RotationEmbedding};

    fn theta3() -> Gem {
        let rot = RotationEmbedding::new(
            vec![vec![(0, 0), (1, 0), (2, 0)], vec![(2, 1), (1, 1), (0, 1)]],
            vec![1, 1, 1],
        );
        gem_from_rotation(&rot).unwrap()
    }

    #[test]
    fn empty_and_full_dual_of_theta_pass() {
        let g = theta3();
        for d in [EdgeSubset::empty(), EdgeSubset::full(3).unwrap()] {
            let verdict = conditions_predict_c2c(&g, d);
            assert_eq!(verdict.predicted_c2c, Predicted::Yes);
        }
    }

    #[test]
    fn single_link_fails_via_gc_shared_edges() {
        let g = theta3();
        let d = EdgeSubset::from_edges([0], 3).unwrap();
        let verdict = conditions_predict_c2c(&g, d);
        assert_eq!(verdict.predicted_c2c, Predicted::No);
        assert!(verdict.lc.passed());
        match &verdict.gc {
            CheckOutcome::Fail { witnesses } => {
                assert!(witnesses
                    .iter()
                    .any(|w| matches!(w, GcWitness::SharedEdges { count, .. } if *count >= 2)));
            }
            CheckOutcome::Pass => panic!("gc should fail"),
        }
    }

    #[test]
    fn conditions_match_direct_on_theta() {
        let g = theta3();
        for mask in 0..8u64 {
            let d = EdgeSubset::from_mask(mask, 3).unwrap();
            let predicted = conditions_predict_c2c(&g, d).predicted_c2c;
            let direct = is_closed_2cell(&partial_dual(&g, d));
            assert_eq!(
                predicted == Predicted::Yes,
                direct.is_yes(),
                "mask {mask:#b}"
            );
        }
    }
}
