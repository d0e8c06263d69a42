//! Property tests over randomly generated embeddings.

mod common;

use common::Rng;
use gembed::c2c::bad_pairs;
use gembed::cuts::edge_cuts_of_size_le;
use gembed::duality::{partial_dual, partial_petrie};
use gembed::gem::{Colour, ColourPair, Gem};
use gembed::io::{gem_to_json, parse_gem_json, parse_rotation, rotation_to_text, NameTable};
use gembed::iso::anchored_isomorphism;
use gembed::rotation::{gem_from_rotation, rotation_from_gem, RotationEmbedding};
use gembed::subset::EdgeSubset;
use gembed::trace::{corner_of_flag, trace_partial_dual};
use proptest::prelude::*;

/// A random connected rotation embedding: a spanning tree plus extra
/// edges (loops allowed), random dart orders, random signatures.
fn random_rotation(seed: u64, nv: usize, extra: usize) -> RotationEmbedding {
    let mut rng = Rng(seed);
    let nv = nv.max(1);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..nv {
        let u = (rng.next() % v as u64) as usize;
        edges.push((u, v));
    }
    let extra = if nv == 1 { extra.max(1) } else { extra };
    for _ in 0..extra {
        let a = (rng.next() % nv as u64) as usize;
        let b = (rng.next() % nv as u64) as usize;
        edges.push((a, b));
    }
    let mut darts_at: Vec<Vec<(usize, u8)>> = vec![Vec::new(); nv];
    for (e, &(a, b)) in edges.iter().enumerate() {
        darts_at[a].push((e, 0));
        darts_at[b].push((e, 1));
    }
    for ring in darts_at.iter_mut() {
        // Fisher-Yates
        for i in (1..ring.len()).rev() {
            let j = (rng.next() % (i as u64 + 1)) as usize;
            ring.swap(i, j);
        }
    }
    let signatures: Vec<i8> = (0..edges.len())
        .map(|_| if rng.next().is_multiple_of(2) { 1 } else { -1 })
        .collect();
    RotationEmbedding::new(darts_at, signatures)
}

fn arb_gem() -> impl Strategy<Value = Gem> {
    (any::<u64>(), 1usize..4, 0usize..4).prop_map(|(seed, nv, extra)| {
        let rot = random_rotation(seed, nv, extra);
        gem_from_rotation(&rot).expect("random rotation is valid")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_dual_is_involution(gem in arb_gem(), mask: u64) {
        let d = EdgeSubset::from_mask(mask & ((1 << gem.edge_count()) - 1), gem.edge_count()).unwrap();
        prop_assert_eq!(partial_dual(&partial_dual(&gem, d), d), gem);
    }

    #[test]
    fn partial_dual_composes_by_symmetric_difference(gem in arb_gem(), m1: u64, m2: u64) {
        let full = (1u64 << gem.edge_count()) - 1;
        let d1 = EdgeSubset::from_mask(m1 & full, gem.edge_count()).unwrap();
        let d2 = EdgeSubset::from_mask(m2 & full, gem.edge_count()).unwrap();
        let lhs = partial_dual(&partial_dual(&gem, d1), d2);
        let rhs = partial_dual(&gem, d1.symmetric_difference(d2));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_dual_preserves_validity_and_orientability(gem in arb_gem(), mask: u64) {
        let full = (1u64 << gem.edge_count()) - 1;
        let d = EdgeSubset::from_mask(mask & full, gem.edge_count()).unwrap();
        let dual = partial_dual(&gem, d);
        prop_assert!(dual.to_candidate().validate().ok);
        prop_assert_eq!(dual.is_bipartite(), gem.is_bipartite());
    }

    #[test]
    fn petrie_is_involution_and_preserves_graph(gem in arb_gem(), mask: u64) {
        let full = (1u64 << gem.edge_count()) - 1;
        let d = EdgeSubset::from_mask(mask & full, gem.edge_count()).unwrap();
        let petrie = partial_petrie(&gem, d);
        prop_assert!(petrie.to_candidate().validate().ok);
        prop_assert_eq!(partial_petrie(&petrie, d), gem.clone());
        // same underlying graph: identical vertex bigon structure
        let vs = |g: &Gem| {
            let mut v: Vec<Vec<u32>> = g.bigons(ColourPair::RedYellow);
            for c in v.iter_mut() { c.sort_unstable(); }
            v.sort();
            v
        };
        prop_assert_eq!(vs(&petrie), vs(&gem));
    }

    #[test]
    fn round_trip_rotation_gem(gem in arb_gem()) {
        let rot = rotation_from_gem(&gem);
        prop_assert!(rot.validate().is_ok());
        let rebuilt = gem_from_rotation(&rot).unwrap();
        prop_assert!(anchored_isomorphism(&gem, &rebuilt).is_some());
        // a second pass is exactly stable
        let rot2 = rotation_from_gem(&rebuilt);
        prop_assert_eq!(gem_from_rotation(&rot2).unwrap(), rebuilt);
    }

    #[test]
    fn text_and_json_round_trips(gem in arb_gem()) {
        // the parser numbers edges by first appearance, so the right
        // round-trip property is byte stability of the canonical text
        let rot = rotation_from_gem(&gem);
        let names = NameTable::default_for(rot.edge_count(), rot.vertex_count());
        let text = rotation_to_text(&rot, &names);
        // one canonicalization pass (edge names renumbered by appearance)
        // makes the text stable
        let (r1, n1) = parse_rotation(&text).unwrap();
        let text1 = rotation_to_text(&r1, &n1);
        let (r2, n2) = parse_rotation(&text1).unwrap();
        prop_assert_eq!(rotation_to_text(&r2, &n2), text1);
        // and the parsed embedding is the same map up to edge relabelling
        let s1 = gem_from_rotation(&r1).unwrap().summary();
        let s2 = gem.summary();
        prop_assert_eq!(s1.euler_characteristic, s2.euler_characteristic);
        prop_assert_eq!(s1.orientable, s2.orientable);
        prop_assert_eq!(s1.vertex_count(), s2.vertex_count());

        let json = gem_to_json(&gem, &NameTable::default_for(gem.edge_count(), 0));
        let (reparsed, names2) = parse_gem_json(&json).unwrap();
        prop_assert_eq!(&reparsed, &gem);
        prop_assert_eq!(gem_to_json(&reparsed, &names2), json);
    }

    #[test]
    fn yellow_two_cuts_survive_duality(gem in arb_gem(), mask: u64) {
        let full = (1u64 << gem.edge_count()) - 1;
        let d = EdgeSubset::from_mask(mask & full, gem.edge_count()).unwrap();
        let yellow_cuts = |g: &Gem| {
            let mut cuts: Vec<Vec<(u32, u32)>> = edge_cuts_of_size_le(g, 2)
                .into_iter()
                .filter(|c| c.size() == 2 && c.colour() == Some(Colour::Yellow))
                .map(|c| c.edges.iter().map(|e| (e.a, e.b)).collect())
                .collect();
            cuts.sort();
            cuts
        };
        prop_assert_eq!(yellow_cuts(&partial_dual(&gem, d)), yellow_cuts(&gem));
    }

    #[test]
    fn trace_cycles_match_dual_bigons(gem in arb_gem(), mask: u64) {
        let full = (1u64 << gem.edge_count()) - 1;
        let d = EdgeSubset::from_mask(mask & full, gem.edge_count()).unwrap();
        let trace = trace_partial_dual(&gem, d);
        let dual = partial_dual(&gem, d);
        let corner_sets = |cycles: Vec<Vec<u32>>, g: &Gem| {
            let mut sets: Vec<Vec<u32>> = cycles
                .iter()
                .map(|cycle| {
                    let mut s: Vec<u32> =
                        cycle.iter().map(|&v| corner_of_flag(g, v)).collect();
                    s.sort_unstable();
                    s.dedup();
                    s
                })
                .collect();
            sets.sort();
            sets
        };
        let mut traced: Vec<Vec<u32>> = trace
            .r_cycles
            .iter()
            .map(|c| {
                let mut s = c.corners.clone();
                s.sort_unstable();
                s
            })
            .collect();
        traced.sort();
        prop_assert_eq!(traced, corner_sets(dual.bigons(ColourPair::RedYellow), &dual));

        let mut traced_b: Vec<Vec<u32>> = trace
            .b_cycles
            .iter()
            .map(|c| {
                let mut s = c.corners.clone();
                s.sort_unstable();
                s
            })
            .collect();
        traced_b.sort();
        prop_assert_eq!(traced_b, corner_sets(dual.bigons(ColourPair::BlueYellow), &dual));
    }

    #[test]
    fn every_cut_satisfies_colour_parity(gem in arb_gem()) {
        for cut in edge_cuts_of_size_le(&gem, 3) {
            prop_assert!(cut.satisfies_colour_parity());
            if cut.size() == 2 {
                prop_assert!(cut.is_monochromatic());
            }
            prop_assert!(cut.size() >= 2, "gems are 2-edge-connected");
        }
    }

    #[test]
    fn boundary_walk_cross_check(gem in arb_gem()) {
        // no bad pairs exactly when every face boundary walk is vertex-simple
        let simple = gembed::trace::face_boundary_walks(&gem).iter().all(|w| {
            let mut v = w.vertices.clone();
            v.sort_unstable();
            v.dedup();
            v.len() == w.vertices.len()
        });
        prop_assert_eq!(bad_pairs(&gem).is_empty(), simple);
    }
}
