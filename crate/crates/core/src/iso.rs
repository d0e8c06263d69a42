//! Colour-preserving gem isomorphism anchored at the edge blocks.
//!
//! The anchor structure pins block `e` of one gem to block `e` of the
//! other, so an isomorphism is a choice of one block bijection per edge,
//! each preserving the red and blue pairs inside the block, that is
//! consistent with the yellow matching. A backtracking search over blocks
//! is ample at the scales this library targets.

use crate::gem::{Colour, Gem};

/// Searches for a colour-preserving isomorphism from `a` to `b` mapping
/// each edge block to the same-numbered block. Returns the flag mapping if
/// one exists.
pub fn anchored_isomorphism(a: &Gem, b: &Gem) -> Option<Vec<u32>> {
    if a.edge_count() != b.edge_count() {
        return None;
    }
    let ec = a.edge_count();

    // Per block, the candidate bijections preserving red and blue pairs.
    let mut candidates: Vec<Vec<[u32; 4]>> = Vec::with_capacity(ec);
    for e in 0..ec {
        let base = (e * 4) as u32;
        let mut block_maps = Vec::new();
        let perms = permutations_of_four();
        for perm in perms.iter() {
            let map = |v: u32| base + perm[(v - base) as usize] as u32;
            let ok = (base..base + 4).all(|v| {
                b.partner(Colour::Red, map(v)) == map(a.partner(Colour::Red, v))
                    && b.partner(Colour::Blue, map(v)) == map(a.partner(Colour::Blue, v))
            });
            if ok {
                block_maps.push([map(base), map(base + 1), map(base + 2), map(base + 3)]);
            }
        }
        if block_maps.is_empty() {
            return None;
        }
        candidates.push(block_maps);
    }

    let mut assignment: Vec<u32> = vec![u32::MAX; a.n()];
    let mut chosen: Vec<usize> = vec![0; ec];
    if assign_block(a, b, &candidates, &mut assignment, &mut chosen, 0) {
        Some(assignment)
    } else {
        None
    }
}

fn assign_block(
    a: &Gem,
    b: &Gem,
    candidates: &[Vec<[u32; 4]>],
    assignment: &mut Vec<u32>,
    chosen: &mut Vec<usize>,
    e: usize,
) -> bool {
    if e == candidates.len() {
        return true;
    }
    let base = e * 4;
    'next: for (ci, map) in candidates[e].iter().enumerate() {
        assignment[base..base + 4].copy_from_slice(map);
        // Check yellow edges with both endpoints assigned so far.
        for i in 0..4 {
            let v = (base + i) as u32;
            let w = a.partner(Colour::Yellow, v);
            if assignment[w as usize] != u32::MAX
                && b.partner(Colour::Yellow, assignment[v as usize]) != assignment[w as usize]
            {
                for j in 0..4 {
                    assignment[base + j] = u32::MAX;
                }
                continue 'next;
            }
        }
        chosen[e] = ci;
        if assign_block(a, b, candidates, assignment, chosen, e + 1) {
            return true;
        }
        for j in 0..4 {
            assignment[base + j] = u32::MAX;
        }
    }
    false
}

fn permutations_of_four() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    let mut items = [0u8, 1, 2, 3];
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut [u8; 4], k: usize, out: &mut Vec<[u8; 4]>) {
    if k == 4 {
        out.push(*items);
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}
