#![allow(dead_code)]

//! Shared test support: an independent face-tracing oracle on rotation
//! systems, the test corpus, a small deterministic RNG, and helpers.
//!
//! The oracle never touches the gem machinery: it walks (dart, facing)
//! states directly on the rotation lists, so it can vouch for the gem
//! construction.

use gembed::gem::Gem;
use gembed::rotation::{gem_from_rotation, RotationEmbedding};
use gembed::search::{gen_diamond_band, gen_grid_separation, gen_theta, gen_toroidal_grid};
use gembed::subset::EdgeSubset;

/// Face degrees of a rotation embedding, sorted ascending, computed by
/// orbit-tracing (dart, facing) states: step to the neighbouring corner
/// flag at the same vertex, then cross the edge, staying on the same
/// geometric side (a -1 signature keeps the facing, a +1 flips it).
pub fn oracle_face_degrees(rot: &RotationEmbedding) -> Vec<usize> {
    let vertices = rot.vertices();
    // dart slots: (vertex, position) per (edge, end)
    let mut slot = vec![[usize::MAX; 2]; rot.edge_count()];
    let mut ring_len = Vec::new();
    let mut dart_ids = Vec::new(); // flattened (vertex, pos) -> dart id
    let mut base = Vec::new();
    for (v, ring) in vertices.iter().enumerate() {
        base.push(dart_ids.len());
        ring_len.push(ring.len());
        for (i, &(e, end)) in ring.iter().enumerate() {
            slot[e][end as usize] = dart_ids.len();
            dart_ids.push((v, i));
        }
    }
    let dart_count = dart_ids.len();
    let edge_end_of = {
        let mut out = vec![(0usize, 0u8); dart_count];
        for (v, ring) in vertices.iter().enumerate() {
            for (i, &(e, end)) in ring.iter().enumerate() {
                out[base[v] + i] = (e, end);
                let _ = v;
            }
        }
        out
    };

    // facing 0 = clockwise, 1 = counterclockwise
    let next_state = |dart: usize, facing: u8| -> (usize, u8) {
        let (v, pos) = dart_ids[dart];
        // corner step at the vertex
        let (dart2, facing2) = if facing == 1 {
            (base[v] + (pos + 1) % ring_len[v], 0u8)
        } else {
            (base[v] + (pos + ring_len[v] - 1) % ring_len[v], 1u8)
        };
        // edge crossing to the other end, keeping the geometric side
        let (e, end) = edge_end_of[dart2];
        let other = slot[e][1 - end as usize];
        let facing3 = if rot.signature(e) == 1 {
            1 - facing2
        } else {
            facing2
        };
        (other, facing3)
    };

    let mut seen = vec![[false; 2]; dart_count];
    let mut orbit_lengths = Vec::new();
    for dart in 0..dart_count {
        for facing in 0..2u8 {
            if seen[dart][facing as usize] {
                continue;
            }
            let mut len = 0usize;
            let mut state = (dart, facing);
            while !seen[state.0][state.1 as usize] {
                seen[state.0][state.1 as usize] = true;
                len += 1;
                state = next_state(state.0, state.1);
            }
            orbit_lengths.push(len);
        }
    }
    // each face appears as two mirror orbits of equal length
    orbit_lengths.sort_unstable();
    assert_eq!(orbit_lengths.len() % 2, 0);
    let mut degrees: Vec<usize> = orbit_lengths.iter().step_by(2).copied().collect();
    let paired: Vec<usize> = orbit_lengths.iter().skip(1).step_by(2).copied().collect();
    assert_eq!(degrees, paired, "mirror orbits must pair up");
    degrees.sort_unstable();
    degrees
}

/// Orientability of a rotation embedding: the signature must vanish on
/// every cycle, i.e. vertices can be signed so that every non-loop edge
/// multiplies to its signature and every loop is positive.
pub fn oracle_orientable(rot: &RotationEmbedding) -> bool {
    let mut end_vertex = vec![[usize::MAX; 2]; rot.edge_count()];
    for (v, ring) in rot.vertices().iter().enumerate() {
        for &(e, end) in ring {
            end_vertex[e][end as usize] = v;
        }
    }
    let nv = rot.vertices().len();
    let mut sign = vec![2i8; nv];
    sign[0] = 1;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for &(e, _) in &rot.vertices()[v] {
            let (a, b) = (end_vertex[e][0], end_vertex[e][1]);
            if a == b {
                if rot.signature(e) == -1 {
                    return false;
                }
                continue;
            }
            let w = if a == v { b } else { a };
            let want = sign[v] * rot.signature(e);
            if sign[w] == 2 {
                sign[w] = want;
                stack.push(w);
            } else if sign[w] != want {
                return false;
            }
        }
    }
    true
}

pub struct CorpusEntry {
    pub name: &'static str,
    pub rotation: Option<RotationEmbedding>,
    pub gem: Gem,
}

pub fn rot_k4_planar() -> RotationEmbedding {
    // outer triangle a, b, c with d inside; edges 0=ab 1=ac 2=ad 3=bc 4=bd 5=cd
    RotationEmbedding::new(
        vec![
            vec![(0, 0), (2, 0), (1, 0)],
            vec![(3, 0), (4, 0), (0, 1)],
            vec![(1, 1), (5, 0), (3, 1)],
            vec![(2, 1), (4, 1), (5, 1)],
        ],
        vec![1; 6],
    )
}

pub fn rot_bowtie() -> RotationEmbedding {
    // two triangles sharing the centre vertex, drawn in the plane
    RotationEmbedding::new(
        vec![
            vec![(0, 0), (2, 1), (3, 0), (5, 1)],
            vec![(1, 0), (0, 1)],
            vec![(2, 0), (1, 1)],
            vec![(4, 0), (3, 1)],
            vec![(5, 0), (4, 1)],
        ],
        vec![1; 6],
    )
}

pub fn rot_loop_plus_link() -> RotationEmbedding {
    RotationEmbedding::new(
        vec![vec![(0, 0), (0, 1), (1, 0)], vec![(1, 1)]],
        vec![1, 1],
    )
}

pub fn rot_dumbbell() -> RotationEmbedding {
    // loop at each end of a bridge, on the sphere
    RotationEmbedding::new(
        vec![vec![(0, 0), (0, 1), (1, 0)], vec![(1, 1), (2, 0), (2, 1)]],
        vec![1; 3],
    )
}

pub fn rot_theta(k: usize) -> RotationEmbedding {
    let fwd: Vec<(usize, u8)> = (0..k).map(|e| (e, 0)).collect();
    let bwd: Vec<(usize, u8)> = (0..k).rev().map(|e| (e, 1)).collect();
    RotationEmbedding::new(vec![fwd, bwd], vec![1; k])
}

pub fn rot_toroidal_theta() -> RotationEmbedding {
    RotationEmbedding::new(
        vec![vec![(0, 0), (1, 0), (2, 0)], vec![(0, 1), (1, 1), (2, 1)]],
        vec![1; 3],
    )
}

pub fn rot_bouquet(signs: &[i8]) -> RotationEmbedding {
    let mut ring: Vec<(usize, u8)> = (0..signs.len()).map(|e| (e, 0)).collect();
    ring.extend((0..signs.len()).map(|e| (e, 1)));
    RotationEmbedding::new(vec![ring], signs.to_vec())
}

fn entry(name: &'static str, rot: RotationEmbedding) -> CorpusEntry {
    let gem = gem_from_rotation(&rot).expect("corpus rotation is valid");
    CorpusEntry {
        name,
        rotation: Some(rot),
        gem,
    }
}

fn entry_gem(name: &'static str, gem: Gem) -> CorpusEntry {
    CorpusEntry {
        name,
        rotation: None,
        gem,
    }
}

/// The small gems used for exhaustive sweeps: all have at most 8 edges.
pub fn sweep_corpus() -> Vec<CorpusEntry> {
    vec![
        entry("theta2", rot_theta(2)),
        entry("theta3", rot_theta(3)),
        entry("theta4", rot_theta(4)),
        entry("toroidal-theta", rot_toroidal_theta()),
        entry("loop+", rot_bouquet(&[1])),
        entry("loop-", rot_bouquet(&[-1])),
        entry("bouquet++", rot_bouquet(&[1, 1])),
        entry("bouquet-+", rot_bouquet(&[-1, 1])),
        entry("k4", rot_k4_planar()),
        entry("bowtie", rot_bowtie()),
        entry("loop-plus-link", rot_loop_plus_link()),
        entry("dumbbell", rot_dumbbell()),
    ]
}

/// The full corpus, adding the generated torus structures.
pub fn full_corpus() -> Vec<CorpusEntry> {
    let mut corpus = sweep_corpus();
    corpus.push(entry_gem("theta6", gen_theta(6)));
    corpus.push(entry_gem("grid-2-2", gen_toroidal_grid(2, 2)));
    corpus.push(entry_gem("grid-2-3", gen_toroidal_grid(2, 3)));
    corpus.push(entry_gem("band-2", gen_diamond_band(2).0));
    corpus.push(entry_gem("band-4", gen_diamond_band(4).0));
    corpus.push(entry_gem("grid-separation-2-2", gen_grid_separation(2, 2).0));
    corpus
}

/// Deterministic splitmix64.
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn mask(&mut self, edge_count: usize) -> u64 {
        let full = if edge_count == 64 {
            u64::MAX
        } else {
            (1u64 << edge_count) - 1
        };
        self.next() & full
    }
}

/// All spanning-tree edge subsets of the underlying graph.
pub fn spanning_tree_subsets(gem: &Gem) -> Vec<EdgeSubset> {
    let vmap = gem.vertex_map();
    let nv = vmap.count();
    let ec = gem.edge_count();
    let endpoints: Vec<(usize, usize)> = (0..ec).map(|e| gem.endpoints(e, &vmap)).collect();
    let mut out = Vec::new();
    let t = nv - 1;
    if t == 0 || t > ec {
        return out;
    }
    // enumerate subsets of size t
    let mut pick: Vec<usize> = (0..t).collect();
    loop {
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut acyclic = true;
        for &e in &pick {
            let (a, b) = endpoints[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                acyclic = false;
                break;
            }
            parent[ra] = rb;
        }
        if acyclic {
            out.push(EdgeSubset::from_edges(pick.iter().copied(), ec).unwrap());
        }
        // next combination
        let mut i = t;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pick[i] != i + ec - t {
                pick[i] += 1;
                for j in i + 1..t {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}
