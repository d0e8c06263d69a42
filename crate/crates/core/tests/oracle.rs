//! The gem construction against an independent face-tracing oracle.
//!
//! Face structure and orientability of every corpus rotation are computed
//! directly on the rotation lists (no gem code involved) and compared with
//! the blue-yellow bigons and bipartiteness of the constructed gem.

mod common;

use common::{oracle_face_degrees, oracle_orientable, sweep_corpus};
use gembed::duality::partial_dual;
use gembed::gem::ColourPair;
use gembed::rotation::{gem_from_rotation, rotation_from_gem};
use gembed::subset::EdgeSubset;
use gembed::trace::face_boundary_walks;

#[test]
fn gem_faces_match_oracle_on_corpus() {
    for entry in sweep_corpus() {
        let rot = entry.rotation.as_ref().unwrap();
        let expected = oracle_face_degrees(rot);
        let mut got: Vec<usize> = entry
            .gem
            .bigons(ColourPair::BlueYellow)
            .iter()
            .map(|cycle| cycle.len() / 2)
            .collect();
        got.sort_unstable();
        assert_eq!(got, expected, "face degrees differ for {}", entry.name);
        assert_eq!(
            entry.gem.is_bipartite(),
            oracle_orientable(rot),
            "orientability differs for {}",
            entry.name
        );
    }
}

#[test]
fn vertex_bigons_match_rotation_degrees() {
    for entry in sweep_corpus() {
        let rot = entry.rotation.as_ref().unwrap();
        let mut expected: Vec<usize> = rot.vertices().iter().map(|ring| ring.len()).collect();
        expected.sort_unstable();
        let mut got: Vec<usize> = entry
            .gem
            .bigons(ColourPair::RedYellow)
            .iter()
            .map(|cycle| cycle.len() / 2)
            .collect();
        got.sort_unstable();
        assert_eq!(got, expected, "vertex degrees differ for {}", entry.name);
    }
}

#[test]
fn k4_planar_face_count_from_oracle() {
    let rot = common::rot_k4_planar();
    let degrees = oracle_face_degrees(&rot);
    assert_eq!(degrees, vec![3, 3, 3, 3]);
    let s = gem_from_rotation(&rot).unwrap().summary();
    assert_eq!(s.face_count(), 4);
    assert_eq!(s.euler_characteristic, 2);
    assert!(s.orientable);
}

#[test]
fn negative_loop_blue_yellow_bigon_covers_everything() {
    let rot = common::rot_bouquet(&[-1]);
    let gem = gem_from_rotation(&rot).unwrap();
    let by = gem.bigons(ColourPair::BlueYellow);
    assert_eq!(by.len(), 1);
    assert_eq!(by[0].len(), 4);
}

#[test]
fn partial_dual_of_theta_counts_by_oracle() {
    // brute-force check of the traced counts for the single-edge dual
    let gem = gem_from_rotation(&common::rot_theta(3)).unwrap();
    let d = EdgeSubset::from_edges([0], 3).unwrap();
    let s = partial_dual(&gem, d).summary();
    assert_eq!(
        (s.vertex_count(), s.edge_count(), s.face_count()),
        (1, 3, 2)
    );
    assert_eq!(s.euler_characteristic, 0);
    assert!(s.orientable);
}

#[test]
fn round_trips_are_isomorphic_and_stable() {
    for entry in sweep_corpus() {
        let gem = &entry.gem;
        let rot = rotation_from_gem(gem);
        rot.validate()
            .unwrap_or_else(|e| panic!("{}: invalid recovered rotation: {e}", entry.name));
        let rebuilt = gem_from_rotation(&rot).unwrap();
        assert!(
            gembed::iso::anchored_isomorphism(gem, &rebuilt).is_some(),
            "{}: rebuilt gem not anchored-isomorphic",
            entry.name
        );
        // one more round trip is exactly stable
        let rot2 = rotation_from_gem(&rebuilt);
        let rebuilt2 = gem_from_rotation(&rot2).unwrap();
        assert_eq!(rebuilt, rebuilt2, "{}: second round trip moved", entry.name);
    }
}

#[test]
fn bad_pairs_agree_with_boundary_walks() {
    // a gem has no bad pair exactly when every face boundary walk repeats
    // no vertex
    for entry in sweep_corpus() {
        let gem = &entry.gem;
        let no_bad_pairs = gembed::c2c::bad_pairs(gem).is_empty();
        let walks_simple = face_boundary_walks(gem).iter().all(|walk| {
            let mut verts = walk.vertices.clone();
            verts.sort_unstable();
            verts.dedup();
            verts.len() == walk.vertices.len()
        });
        assert_eq!(
            no_bad_pairs, walks_simple,
            "{}: bad pairs vs boundary walks",
            entry.name
        );
    }
}
