//! Partial geometric duality, jewels, and the edgewise colour-group action
//! that also yields partial Petrie duality.
//!
//! Geometric duality swaps red and blue inside the chosen edge blocks and
//! is therefore an exact involution on the stored matchings. Adding the
//! green diagonals of each red-blue 4-cycle turns the gem into a jewel, on
//! which any per-edge permutation of {red, blue, green} acts; swapping
//! blue and green is Petrie duality.

use crate::gem::{Colour, Gem};
use crate::subset::EdgeSubset;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Partial dual of the embedding: red and blue exchange inside the block
/// of every edge in `dual_edges`.
pub fn partial_dual(gem: &Gem, dual_edges: EdgeSubset) -> Gem {
    let n = gem.n();
    let mut red = Vec::with_capacity(n);
    let mut yellow = Vec::with_capacity(n);
    let mut blue = Vec::with_capacity(n);
    for v in 0..n as u32 {
        yellow.push(gem.partner(Colour::Yellow, v));
        if dual_edges.contains(gem.edge_of(v)) {
            red.push(gem.partner(Colour::Blue, v));
            blue.push(gem.partner(Colour::Red, v));
        } else {
            red.push(gem.partner(Colour::Red, v));
            blue.push(gem.partner(Colour::Blue, v));
        }
    }
    Gem::from_involutions_unchecked(gem.edge_count(), red, yellow, blue)
}

/// The three edge colours that the per-edge group permutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriColour {
    Red,
    Blue,
    Green,
}

/// A permutation of {red, blue, green}.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColourPerm {
    /// Images of red, blue, green in that order.
    images: [TriColour; 3],
}

impl ColourPerm {
    pub const IDENTITY: ColourPerm = ColourPerm {
        images: [TriColour::Red, TriColour::Blue, TriColour::Green],
    };
    pub const SWAP_RED_BLUE: ColourPerm = ColourPerm {
        images: [TriColour::Blue, TriColour::Red, TriColour::Green],
    };
    pub const SWAP_RED_GREEN: ColourPerm = ColourPerm {
        images: [TriColour::Green, TriColour::Blue, TriColour::Red],
    };
    pub const SWAP_BLUE_GREEN: ColourPerm = ColourPerm {
        images: [TriColour::Red, TriColour::Green, TriColour::Blue],
    };
    /// red -> blue -> green -> red
    pub const CYCLE_RBG: ColourPerm = ColourPerm {
        images: [TriColour::Blue, TriColour::Green, TriColour::Red],
    };
    /// red -> green -> blue -> red
    pub const CYCLE_RGB: ColourPerm = ColourPerm {
        images: [TriColour::Green, TriColour::Red, TriColour::Blue],
    };

    pub const ALL: [ColourPerm; 6] = [
        Self::IDENTITY,
        Self::SWAP_RED_BLUE,
        Self::SWAP_RED_GREEN,
        Self::SWAP_BLUE_GREEN,
        Self::CYCLE_RBG,
        Self::CYCLE_RGB,
    ];

    pub fn apply(self, c: TriColour) -> TriColour {
        self.images[c as usize]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: ColourPerm) -> ColourPerm {
        ColourPerm {
            images: [
                self.apply(other.apply(TriColour::Red)),
                self.apply(other.apply(TriColour::Blue)),
                self.apply(other.apply(TriColour::Green)),
            ],
        }
    }

    pub fn inverse(self) -> ColourPerm {
        let mut images = [TriColour::Red; 3];
        for c in [TriColour::Red, TriColour::Blue, TriColour::Green] {
            images[self.apply(c) as usize] = c;
        }
        ColourPerm { images }
    }

    /// Parses `id`, `rb`, `rg`, `bg`, `rbg` or `rgb`.
    pub fn parse(s: &str) -> Option<ColourPerm> {
        match s {
            "id" => Some(Self::IDENTITY),
            "rb" | "br" => Some(Self::SWAP_RED_BLUE),
            "rg" | "gr" => Some(Self::SWAP_RED_GREEN),
            "bg" | "gb" => Some(Self::SWAP_BLUE_GREEN),
            "rbg" => Some(Self::CYCLE_RBG),
            "rgb" => Some(Self::CYCLE_RGB),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self.images {
            [TriColour::Red, TriColour::Blue, TriColour::Green] => "id",
            [TriColour::Blue, TriColour::Red, TriColour::Green] => "rb",
            [TriColour::Green, TriColour::Blue, TriColour::Red] => "rg",
            [TriColour::Red, TriColour::Green, TriColour::Blue] => "bg",
            [TriColour::Blue, TriColour::Green, TriColour::Red] => "rbg",
            _ => "rgb",
        }
    }
}

impl fmt::Debug for ColourPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ColourPerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ColourPerm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        ColourPerm::parse(&s).ok_or_else(|| serde::de::Error::custom("unknown colour permutation"))
    }
}

/// Per-edge colour permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    perms: Vec<ColourPerm>,
}

impl TwistSpec {
    pub fn identity(edge_count: usize) -> Self {
        TwistSpec {
            perms: vec![ColourPerm::IDENTITY; edge_count],
        }
    }

    pub fn uniform(perm: ColourPerm, edge_count: usize) -> Self {
        TwistSpec {
            perms: vec![perm; edge_count],
        }
    }

    /// The permutation `perm` on the edges of `subset`, identity elsewhere.
    pub fn on_subset(perm: ColourPerm, subset: EdgeSubset, edge_count: usize) -> Self {
        let mut spec = Self::identity(edge_count);
        for e in subset.iter() {
            spec.perms[e] = perm;
        }
        spec
    }

    pub fn set(&mut self, edge: usize, perm: ColourPerm) {
        self.perms[edge] = perm;
    }

    pub fn get(&self, edge: usize) -> ColourPerm {
        self.perms[edge]
    }

    pub fn edge_count(&self) -> usize {
        self.perms.len()
    }

    /// Edgewise composition: apply `first`, then `self`.
    pub fn compose(&self, first: &TwistSpec) -> TwistSpec {
        debug_assert_eq!(self.perms.len(), first.perms.len());
        TwistSpec {
            perms: self
                .perms
                .iter()
                .zip(&first.perms)
                .map(|(a, b)| a.compose(*b))
                .collect(),
        }
    }
}

/// A gem extended with the green diagonals of each red-blue 4-cycle, each
/// edge block becoming a copy of K4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jewel {
    red: Vec<u32>,
    yellow: Vec<u32>,
    blue: Vec<u32>,
    green: Vec<u32>,
    edge_count: usize,
}

impl Jewel {
    pub fn from_gem(gem: &Gem) -> Jewel {
        let n = gem.n();
        let mut red = Vec::with_capacity(n);
        let mut yellow = Vec::with_capacity(n);
        let mut blue = Vec::with_capacity(n);
        for v in 0..n as u32 {
            red.push(gem.partner(Colour::Red, v));
            yellow.push(gem.partner(Colour::Yellow, v));
            blue.push(gem.partner(Colour::Blue, v));
        }
        // The green partner of v is the block vertex that is neither its
        // red nor its blue partner: the diagonal of the 4-cycle.
        let mut green = vec![u32::MAX; n];
        for v in 0..n as u32 {
            let base = v & !3;
            for w in base..base + 4 {
                if w != v && red[v as usize] != w && blue[v as usize] != w {
                    green[v as usize] = w;
                }
            }
        }
        Jewel {
            red,
            yellow,
            blue,
            green,
            edge_count: gem.edge_count(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn n(&self) -> usize {
        self.edge_count * 4
    }

    pub fn green_pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.n() / 2);
        for v in 0..self.n() as u32 {
            let w = self.green[v as usize];
            if v < w {
                out.push((v, w));
            }
        }
        out
    }

    /// Drops the green matching, returning the underlying gem.
    pub fn strip_green(&self) -> Gem {
        Gem::from_involutions_unchecked(
            self.edge_count,
            self.red.clone(),
            self.yellow.clone(),
            self.blue.clone(),
        )
    }

    /// Applies a per-edge permutation of {red, blue, green} inside each
    /// block. Yellow is untouched.
    pub fn twist(&self, spec: &TwistSpec) -> Jewel {
        assert_eq!(spec.edge_count(), self.edge_count);
        let mut out = self.clone();
        for e in 0..self.edge_count {
            let perm = spec.get(e);
            if perm == ColourPerm::IDENTITY {
                continue;
            }
            let base = (e * 4) as u32;
            for v in base..base + 4 {
                let old = [
                    self.red[v as usize],
                    self.blue[v as usize],
                    self.green[v as usize],
                ];
                for (ci, &partner) in old.iter().enumerate() {
                    let target = perm.apply([TriColour::Red, TriColour::Blue, TriColour::Green][ci]);
                    match target {
                        TriColour::Red => out.red[v as usize] = partner,
                        TriColour::Blue => out.blue[v as usize] = partner,
                        TriColour::Green => out.green[v as usize] = partner,
                    }
                }
            }
        }
        out
    }
}

/// Partial Petrie dual: swap blue and green inside the chosen blocks of the
/// jewel, then drop green.
pub fn partial_petrie(gem: &Gem, edges: EdgeSubset) -> Gem {
    let jewel = Jewel::from_gem(gem);
    let spec = TwistSpec::on_subset(ColourPerm::SWAP_BLUE_GREEN, edges, gem.edge_count());
    jewel.twist(&spec).strip_green()
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
    fn empty_dual_is_identity() {
        let g = theta3();
        assert_eq!(partial_dual(&g, EdgeSubset::empty()), g);
    }

    #[test]
    fn full_dual_of_theta_is_triangle() {
        let g = theta3();
        let d = EdgeSubset::full(3).unwrap();
        let s = partial_dual(&g, d).summary();
        assert_eq!(
            (s.vertex_count(), s.edge_count(), s.face_count()),
            (3, 3, 2)
        );
        assert_eq!(s.euler_characteristic, 2);
    }

    #[test]
    fn single_edge_dual_of_theta() {
        let g = theta3();
        let d = EdgeSubset::from_edges([0], 3).unwrap();
        let s = partial_dual(&g, d).summary();
        assert_eq!(
            (s.vertex_count(), s.edge_count(), s.face_count()),
            (1, 3, 2)
        );
        assert_eq!(s.euler_characteristic, 0);
        assert!(s.orientable);
    }

    #[test]
    fn dual_is_involution() {
        let g = theta3();
        for mask in 0..8u64 {
            let d = EdgeSubset::from_mask(mask, 3).unwrap();
            assert_eq!(partial_dual(&partial_dual(&g, d), d), g);
        }
    }

    #[test]
    fn dual_preserves_validity() {
        let g = theta3();
        for mask in 0..8u64 {
            let d = EdgeSubset::from_mask(mask, 3).unwrap();
            assert!(partial_dual(&g, d).to_candidate().validate().ok);
        }
    }

    #[test]
    fn jewel_green_strip_round_trip() {
        let g = theta3();
        let j = Jewel::from_gem(&g);
        assert_eq!(j.green_pairs().len(), 3 * 2);
        assert_eq!(j.strip_green(), g);
    }

    #[test]
    fn twist_red_blue_matches_partial_dual() {
        let g = theta3();
        let d = EdgeSubset::from_edges([0, 2], 3).unwrap();
        let spec = TwistSpec::on_subset(ColourPerm::SWAP_RED_BLUE, d, 3);
        let twisted = Jewel::from_gem(&g).twist(&spec).strip_green();
        assert_eq!(twisted, partial_dual(&g, d));
    }

    #[test]
    fn twist_composition_law() {
        let g = theta3();
        let j = Jewel::from_gem(&g);
        let mut t1 = TwistSpec::identity(3);
        t1.set(0, ColourPerm::CYCLE_RBG);
        t1.set(2, ColourPerm::SWAP_BLUE_GREEN);
        let mut t2 = TwistSpec::identity(3);
        t2.set(0, ColourPerm::SWAP_RED_GREEN);
        t2.set(1, ColourPerm::SWAP_RED_BLUE);
        assert_eq!(j.twist(&t1).twist(&t2), j.twist(&t2.compose(&t1)));
    }

    #[test]
    fn colour_perm_group_laws() {
        for a in ColourPerm::ALL {
            assert_eq!(a.compose(a.inverse()), ColourPerm::IDENTITY);
            assert_eq!(a.compose(ColourPerm::IDENTITY), a);
            for b in ColourPerm::ALL {
                for c in ColourPerm::ALL {
                    assert_eq!(a.compose(b).compose(c), a.compose(b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn petrie_is_involution() {
        let g = theta3();
        for mask in 0..8u64 {
            let d = EdgeSubset::from_mask(mask, 3).unwrap();
            assert_eq!(partial_petrie(&partial_petrie(&g, d), d), g);
        }
    }

    #[test]
    fn petrie_matches_signature_toggle() {
        // Petrie dual over a subset is the same embedding as toggling those
        // signatures in the rotation representation.
        let rot = RotationEmbedding::new(
            vec![vec![(0, 0), (1, 0), (2, 0)], vec![(2, 1), (1, 1), (0, 1)]],
            vec![1, 1, 1],
        );
        let g = gem_from_rotation(&rot).unwrap();
        for mask in 0..8u64 {
            let d = EdgeSubset::from_mask(mask, 3).unwrap();
            let via_jewel = partial_petrie(&g, d);
            let toggled = gem_from_rotation(&rot.with_toggled_signatures(d.iter())).unwrap();
            let s1 = via_jewel.summary();
            let s2 = toggled.summary();
            assert_eq!(s1.euler_characteristic, s2.euler_characteristic);
            assert_eq!(s1.orientable, s2.orientable);
            assert!(crate::iso::anchored_isomorphism(&via_jewel, &toggled).is_some());
        }
    }

    #[test]
    fn petrie_of_planar_four_cycle() {
        // The left-right walks of the planar 4-cycle are two 4-cycles, so
        // its Petrie dual is again a sphere embedding of C4.
        let rot = RotationEmbedding::new(
            vec![
                vec![(0, 0), (3, 1)],
                vec![(1, 0), (0, 1)],
                vec![(2, 0), (1, 1)],
                vec![(3, 0), (2, 1)],
            ],
            vec![1; 4],
        );
        let g = gem_from_rotation(&rot).unwrap();
        assert_eq!(g.summary().euler_characteristic, 2);
        let p = partial_petrie(&g, EdgeSubset::full(4).unwrap());
        let sp = p.summary();
        assert_eq!(sp.euler_characteristic, 2);
        assert!(sp.orientable);
        assert_eq!(sp.face_count(), 2);
        assert!(sp.face_bigons.iter().all(|f| f.len() == 8));
    }

    #[test]
    fn petrie_of_planar_theta_is_toroidal() {
        // The left-right walks of the planar theta double-cover its three
        // edges in a single walk, so the Petrie dual lives on the torus.
        let g = theta3();
        let p = partial_petrie(&g, EdgeSubset::full(3).unwrap());
        let sp = p.summary();
        assert_eq!(
            (sp.vertex_count(), sp.edge_count(), sp.face_count()),
            (2, 3, 1)
        );
        assert_eq!(sp.euler_characteristic, 0);
        assert!(sp.orientable);
    }
}
