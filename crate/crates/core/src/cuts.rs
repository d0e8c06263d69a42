//! Exhaustive enumeration of small minimal edge cuts in a gem.
//!
//! Cuts of size two are the obstruction currency of the whole analysis: a
//! yellow 2-cut is a separating vertex/face pair, a red one a separating
//! loop, a blue one a separating coloop, and yellow 2-cuts survive every
//! partial dual. Sizes up to three are enumerated by pairing subsets with
//! bridge computations on the punctured graph, which keeps the search
//! exhaustive without cubic subset scans.

use crate::gem::{Colour, Gem};
use serde::Serialize;
use std::collections::BTreeSet;

/// An edge of the gem graph, endpoints ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GemEdge {
    pub a: u32,
    pub b: u32,
    pub colour: Colour,
}

/// A minimal edge cut annotated with its colour counts (red, yellow, blue).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub edges: Vec<GemEdge>,
    pub colour_counts: [usize; 3],
}

impl EdgeCut {
    fn new(mut edges: Vec<GemEdge>) -> Self {
        edges.sort();
        let mut colour_counts = [0usize; 3];
        for e in &edges {
            colour_counts[colour_slot(e.colour)] += 1;
        }
        EdgeCut {
            edges,
            colour_counts,
        }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_monochromatic(&self) -> bool {
        self.colour_counts.iter().filter(|&&c| c > 0).count() == 1
    }

    pub fn colour(&self) -> Option<Colour> {
        if self.is_monochromatic() {
            self.edges.first().map(|e| e.colour)
        } else {
            None
        }
    }

    /// Per-colour parity check: |S| ≡ |S_c| (mod 2) for each colour c.
    pub fn satisfies_colour_parity(&self) -> bool {
        let total = self.size();
        self.colour_counts.iter().all(|&c| c % 2 == total % 2)
    }
}

pub fn colour_slot(c: Colour) -> usize {
    match c {
        Colour::Red => 0,
        Colour::Yellow => 1,
        Colour::Blue => 2,
    }
}

/// All edges of the gem graph in deterministic order.
pub fn gem_edges(gem: &Gem) -> Vec<GemEdge> {
    let mut out = Vec::with_capacity(gem.n() * 3 / 2);
    for v in 0..gem.n() as u32 {
        for colour in [Colour::Red, Colour::Yellow, Colour::Blue] {
            let w = gem.partner(colour, v);
            if v < w {
                out.push(GemEdge { a: v, b: w, colour });
            }
        }
    }
    out.sort();
    out
}

struct CutGraph {
    n: usize,
    /// adjacency as (neighbour, edge index)
    adj: Vec<Vec<(u32, u32)>>,
}

impl CutGraph {
    fn new(gem: &Gem, edges: &[GemEdge]) -> Self {
        let mut adj = vec![Vec::with_capacity(3); gem.n()];
        for (i, e) in edges.iter().enumerate() {
            adj[e.a as usize].push((e.b, i as u32));
            adj[e.b as usize].push((e.a, i as u32));
        }
        CutGraph { n: gem.n(), adj }
    }

    /// Bridges of the graph with `skip` edges removed, or None when the
    /// remaining graph is already disconnected.
    fn bridges_without(&self, skip: &[u32]) -> Option<Vec<u32>> {
        let n = self.n;
        let mut disc = vec![0u32; n];
        let mut low = vec![0u32; n];
        let mut visited = vec![false; n];
        let mut bridges = Vec::new();
        let mut timer = 1u32;
        // iterative DFS from vertex 0
        let mut stack: Vec<(u32, usize, u32)> = Vec::new(); // (vertex, adj position, parent edge)
        visited[0] = true;
        disc[0] = timer;
        low[0] = timer;
        stack.push((0, 0, u32::MAX));
        let mut count = 1usize;
        while let Some(&mut (v, ref mut pos, pedge)) = stack.last_mut() {
            let vu = v as usize;
            if *pos < self.adj[vu].len() {
                let (w, ei) = self.adj[vu][*pos];
                *pos += 1;
                if skip.contains(&ei) || ei == pedge {
                    continue;
                }
                let wu = w as usize;
                if visited[wu] {
                    low[vu] = low[vu].min(disc[wu]);
                } else {
                    visited[wu] = true;
                    timer += 1;
                    disc[wu] = timer;
                    low[wu] = timer;
                    count += 1;
                    stack.push((w, 0, ei));
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    let pu = p as usize;
                    low[pu] = low[pu].min(low[vu]);
                    if low[vu] > disc[pu] {
                        bridges.push(pedge);
                    }
                }
            }
        }
        if count != n {
            None
        } else {
            Some(bridges)
        }
    }
}

/// All minimal edge cuts of size at most `k` (k ≤ 3), exhaustively.
pub fn edge_cuts_of_size_le(gem: &Gem, k: usize) -> Vec<EdgeCut> {
    assert!(k <= 3, "cut enumeration supports sizes up to 3");
    let edges = gem_edges(gem);
    let graph = CutGraph::new(gem, &edges);
    let m = edges.len();

    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();

    // size 1: bridges of the whole graph
    let whole_bridges = graph
        .bridges_without(&[])
        .expect("a valid gem is connected");
    let single: BTreeSet<u32> = whole_bridges.iter().copied().collect();
    if k >= 1 {
        for &b in &single {
            found.insert(vec![b]);
        }
    }

    // size 2: {i, b} with b a bridge of the graph minus i
    let mut pair_cuts: BTreeSet<(u32, u32)> = BTreeSet::new();
    if k >= 2 {
        for i in 0..m as u32 {
            if let Some(bridges) = graph.bridges_without(&[i]) {
                for b in bridges {
                    if b != i && !single.contains(&i) && !single.contains(&b) {
                        pair_cuts.insert((i.min(b), i.max(b)));
                    }
                }
            }
        }
        for &(i, j) in &pair_cuts {
            found.insert(vec![i, j]);
        }
    }

    // size 3: {i, j, b} with b a bridge of the graph minus {i, j}
    if k >= 3 {
        for i in 0..m as u32 {
            if single.contains(&i) {
                continue;
            }
            for j in i + 1..m as u32 {
                if single.contains(&j) {
                    continue;
                }
                let Some(bridges) = graph.bridges_without(&[i, j]) else {
                    continue;
                };
                for b in bridges {
                    if b == i || b == j {
                        continue;
                    }
                    let mut triple = vec![i, j, b];
                    triple.sort();
                    // minimality: no sub-pair may already be a cut
                    let minimal = !pair_cuts.contains(&(triple[0], triple[1]))
                        && !pair_cuts.contains(&(triple[0], triple[2]))
                        && !pair_cuts.contains(&(triple[1], triple[2]))
                        && !single.contains(&triple[0])
                        && !single.contains(&triple[1])
                        && !single.contains(&triple[2]);
                    if minimal {
                        found.insert(triple);
                    }
                }
            }
        }
    }

    let mut cuts: Vec<EdgeCut> = found
        .into_iter()
        .filter(|c| c.len() <= k)
        .map(|c| EdgeCut::new(c.iter().map(|&i| edges[i as usize]).collect()))
        .collect();
    cuts.sort_by(|a, b| (a.size(), &a.edges).cmp(&(b.size(), &b.edges)));
    cuts
}

/// True iff the gem has any 2-edge cut.
pub fn has_two_edge_cut(gem: &Gem) -> bool {
    edge_cuts_of_size_le(gem, 2).iter().any(|c| c.size() == 2)
}
