//! Graph-encoded maps.
//!
//! A gem is a connected, properly 3-edge-coloured cubic graph on `4|E|`
//! vertices whose red-blue bigons are all 4-cycles. Red-yellow bigons play
//! the role of graph vertices, blue-yellow bigons the role of faces, and
//! each red-blue 4-cycle the role of an edge. Edge `e` owns the vertex
//! block `{4e, 4e+1, 4e+2, 4e+3}`, which pins its red-blue bigon in place
//! and makes duality operations and serialization deterministic.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Edge colour of a gem. The derived order is declaration order; use
/// `lex_rank` for colour-name order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Red,
    Yellow,
    Blue,
}

impl Colour {
    /// Rank in colour-name order: blue < red < yellow.
    pub fn lex_rank(self) -> u8 {
        match self {
            Colour::Blue => 0,
            Colour::Red => 1,
            Colour::Yellow => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Colour::Red => "red",
            Colour::Yellow => "yellow",
            Colour::Blue => "blue",
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the three alternating-colour cycle families of a gem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColourPair {
    /// Cycles standing for graph vertices.
    RedYellow,
    /// Cycles standing for faces.
    BlueYellow,
    /// Cycles standing for edges; always 4-cycles.
    RedBlue,
}

impl ColourPair {
    pub fn colours(self) -> (Colour, Colour) {
        match self {
            ColourPair::RedYellow => (Colour::Red, Colour::Yellow),
            ColourPair::BlueYellow => (Colour::Blue, Colour::Yellow),
            ColourPair::RedBlue => (Colour::Red, Colour::Blue),
        }
    }

    /// The colour a canonical traversal steps along first (the one earlier
    /// in colour-name order).
    pub fn first_step(self) -> Colour {
        let (a, b) = self.colours();
        if a.lex_rank() <= b.lex_rank() {
            a
        } else {
            b
        }
    }

    pub fn second_step(self) -> Colour {
        let (a, b) = self.colours();
        if a.lex_rank() <= b.lex_rank() {
            b
        } else {
            a
        }
    }
}

/// A validated gem. Matchings are stored as partner involutions indexed by
/// gem vertex; `red[v]` is the red partner of `v` and so on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gem {
    edge_count: usize,
    red: Vec<u32>,
    yellow: Vec<u32>,
    blue: Vec<u32>,
}

impl fmt::Debug for Gem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Gem")
            .field("edge_count", &self.edge_count)
            .field("red", &self.pairs(Colour::Red))
            .field("yellow", &self.pairs(Colour::Yellow))
            .field("blue", &self.pairs(Colour::Blue))
            .finish()
    }
}

/// Candidate gem data: three pair lists that may or may not satisfy the gem
/// axioms. `validate` reports every violation; `build` converts to a `Gem`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateGem {
    pub edge_count: usize,
    pub red: Vec<(u32, u32)>,
    pub yellow: Vec<(u32, u32)>,
    pub blue: Vec<(u32, u32)>,
}

/// Outcome of validating a candidate gem. `ok` holds exactly when
/// `violations` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// A single validation failure with a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: String,
    pub witness: String,
}

impl Violation {
    fn new(rule: &str, witness: String) -> Self {
        Violation {
            rule: rule.to_string(),
            witness,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GemError {
    #[error("invalid gem: {rule}: {witness}")]
    Invalid { rule: String, witness: String },
}

impl CandidateGem {
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.edge_count * 4;

        if self.edge_count == 0 {
            violations.push(Violation::new("edge-count-zero", "gem has no edges".into()));
            return ValidationReport {
                ok: false,
                violations,
            };
        }

        let mut partners: Vec<Option<Vec<u32>>> = Vec::new();
        for (colour, pairs) in [
            (Colour::Red, &self.red),
            (Colour::Yellow, &self.yellow),
            (Colour::Blue, &self.blue),
        ] {
            partners.push(check_matching(colour, pairs, n, &mut violations));
        }

        let (red, yellow, blue) = (&partners[0], &partners[1], &partners[2]);

        // Red and blue pairs may never connect two different edge blocks and
        // may never be parallel to each other: together they must form the
        // 4-cycle of their block.
        for (colour, pairs) in [(Colour::Red, &self.red), (Colour::Blue, &self.blue)] {
            for &(a, b) in pairs.iter() {
                if (a as usize) < n && (b as usize) < n && a / 4 != b / 4 {
                    violations.push(Violation::new(
                        "Q-bigon-not-4-cycle",
                        format!(
                            "{colour} pair ({a},{b}) joins blocks of edges {} and {}",
                            a / 4,
                            b / 4
                        ),
                    ));
                }
            }
        }
        if let (Some(red), Some(blue)) = (red, blue) {
            for v in 0..n as u32 {
                if red[v as usize] == blue[v as usize] && v < red[v as usize] {
                    violations.push(Violation::new(
                        "red-blue-parallel",
                        format!("red and blue both pair {v} with {}", red[v as usize]),
                    ));
                }
            }
        }

        if let (Some(red), Some(yellow), Some(blue)) = (red, yellow, blue) {
            if violations.is_empty() {
                // Connectivity over the union of the three matchings.
                let mut seen = vec![false; n];
                let mut stack = vec![0u32];
                seen[0] = true;
                let mut count = 0usize;
                while let Some(v) = stack.pop() {
                    count += 1;
                    for m in [red, yellow, blue] {
                        let w = m[v as usize];
                        if !seen[w as usize] {
                            seen[w as usize] = true;
                            stack.push(w);
                        }
                    }
                }
                if count != n {
                    let missing = seen.iter().position(|s| !s).unwrap();
                    violations.push(Violation::new(
                        "disconnected",
                        format!("vertex {missing} not reachable from vertex 0"),
                    ));
                }
            }
        }

        ValidationReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn build(self) -> Result<Gem, GemError> {
        let report = self.validate();
        if let Some(v) = report.violations.into_iter().next() {
            return Err(GemError::Invalid {
                rule: v.rule,
                witness: v.witness,
            });
        }
        let n = self.edge_count * 4;
        Ok(Gem {
            edge_count: self.edge_count,
            red: involution(&self.red, n),
            yellow: involution(&self.yellow, n),
            blue: involution(&self.blue, n),
        })
    }
}

fn involution(pairs: &[(u32, u32)], n: usize) -> Vec<u32> {
    let mut out = vec![u32::MAX; n];
    for &(a, b) in pairs {
        out[a as usize] = b;
        out[b as usize] = a;
    }
    out
}

/// Checks that `pairs` is a perfect matching on `0..n` without loops.
/// Returns the partner array when the pairs at least form a partial
/// matching in range.
fn check_matching(
    colour: Colour,
    pairs: &[(u32, u32)],
    n: usize,
    violations: &mut Vec<Violation>,
) -> Option<Vec<u32>> {
    let mut partner = vec![u32::MAX; n];
    let mut ok = true;
    for &(a, b) in pairs {
        if a as usize >= n || b as usize >= n {
            violations.push(Violation::new(
                "pair-out-of-range",
                format!("{colour} pair ({a},{b}) exceeds vertex count {n}"),
            ));
            ok = false;
            continue;
        }
        if a == b {
            violations.push(Violation::new("loop", format!("{colour} pair ({a},{a})")));
            ok = false;
            continue;
        }
        for v in [a, b] {
            if partner[v as usize] != u32::MAX {
                violations.push(Violation::new(
                    "not-a-matching",
                    format!("vertex {v} covered twice by {colour} pairs"),
                ));
                ok = false;
            }
        }
        if ok {
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
    }
    if let Some(v) = partner.iter().position(|&p| p == u32::MAX) {
        if ok {
            violations.push(Violation::new(
                "not-a-matching",
                format!("vertex {v} not covered by any {colour} pair"),
            ));
        }
        ok = false;
    }
    if ok {
        Some(partner)
    } else {
        None
    }
}

impl Gem {
    /// Number of graph edges `|E(G)|`.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Number of gem vertices, `4|E|`.
    pub fn n(&self) -> usize {
        self.edge_count * 4
    }

    /// The graph edge owning gem vertex `v`.
    pub fn edge_of(&self, v: u32) -> usize {
        (v / 4) as usize
    }

    pub fn partner(&self, colour: Colour, v: u32) -> u32 {
        match colour {
            Colour::Red => self.red[v as usize],
            Colour::Yellow => self.yellow[v as usize],
            Colour::Blue => self.blue[v as usize],
        }
    }

    /// The matching of one colour as pairs `(min, max)` sorted lexicographically.
    pub fn pairs(&self, colour: Colour) -> Vec<(u32, u32)> {
        let arr = match colour {
            Colour::Red => &self.red,
            Colour::Yellow => &self.yellow,
            Colour::Blue => &self.blue,
        };
        let mut out = Vec::with_capacity(self.n() / 2);
        for v in 0..self.n() as u32 {
            let w = arr[v as usize];
            if v < w {
                out.push((v, w));
            }
        }
        out
    }

    pub fn to_candidate(&self) -> CandidateGem {
        CandidateGem {
            edge_count: self.edge_count,
            red: self.pairs(Colour::Red),
            yellow: self.pairs(Colour::Yellow),
            blue: self.pairs(Colour::Blue),
        }
    }

    pub(crate) fn from_involutions_unchecked(
        edge_count: usize,
        red: Vec<u32>,
        yellow: Vec<u32>,
        blue: Vec<u32>,
    ) -> Gem {
        Gem {
            edge_count,
            red,
            yellow,
            blue,
        }
    }

    /// Partition of the gem vertices into alternating-colour cycles.
    ///
    /// Each cycle is listed from its smallest vertex, first stepping along
    /// the colour earlier in name order, and cycles are ordered by their
    /// smallest vertex.
    pub fn bigons(&self, pair: ColourPair) -> Vec<Vec<u32>> {
        let first = pair.first_step();
        let second = pair.second_step();
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            let mut colour = first;
            loop {
                cycle.push(v);
                seen[v as usize] = true;
                v = self.partner(colour, v);
                colour = if colour == first { second } else { first };
                if v == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// True iff the gem graph is bipartite, i.e. the embedding is orientable.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut colour = vec![u8::MAX; n];
        colour[0] = 0;
        let mut stack = vec![0u32];
        while let Some(v) = stack.pop() {
            for m in [&self.red, &self.yellow, &self.blue] {
                let w = m[v as usize];
                let want = 1 - colour[v as usize];
                if colour[w as usize] == u8::MAX {
                    colour[w as usize] = want;
                    stack.push(w);
                } else if colour[w as usize] != want {
                    return false;
                }
            }
        }
        true
    }

    /// V/E/F counts, Euler characteristic, orientability and genus data.
    pub fn summary(&self) -> EmbeddingSummary {
        let vertex_bigons = self.bigons(ColourPair::RedYellow);
        let face_bigons = self.bigons(ColourPair::BlueYellow);
        let edge_bigons = self.bigons(ColourPair::RedBlue);
        debug_assert!(edge_bigons.iter().all(|c| c.len() == 4));
        let v = vertex_bigons.len() as i64;
        let e = self.edge_count as i64;
        let f = face_bigons.len() as i64;
        let chi = v - e + f;
        EmbeddingSummary {
            vertex_bigons,
            face_bigons,
            edge_bigons,
            euler_characteristic: chi,
            orientable: self.is_bipartite(),
            euler_genus: 2 - chi,
        }
    }

    /// Dense vertex ids: `vertex_of[flag]` is the index of the red-yellow
    /// bigon containing the flag.
    pub fn vertex_map(&self) -> BigonMap {
        BigonMap::new(self, ColourPair::RedYellow)
    }

    /// Dense face ids from blue-yellow bigons.
    pub fn face_map(&self) -> BigonMap {
        BigonMap::new(self, ColourPair::BlueYellow)
    }

    /// The two red pairs of edge `e`'s block, sorted by smaller flag; these
    /// are the attachment points of the edge's two ends.
    pub fn end_pairs(&self, e: usize) -> [(u32, u32); 2] {
        let base = (e * 4) as u32;
        let mut ends = Vec::with_capacity(2);
        for v in base..base + 4 {
            let w = self.red[v as usize];
            if v < w {
                ends.push((v, w));
            }
        }
        debug_assert_eq!(ends.len(), 2);
        [ends[0], ends[1]]
    }

    /// Endpoint vertex ids of edge `e` under a vertex map.
    pub fn endpoints(&self, e: usize, vmap: &BigonMap) -> (usize, usize) {
        let [p0, p1] = self.end_pairs(e);
        (vmap.of(p0.0), vmap.of(p1.0))
    }

    /// True iff edge `e` is a loop (both ends attach to the same vertex).
    pub fn is_loop(&self, e: usize, vmap: &BigonMap) -> bool {
        let (a, b) = self.endpoints(e, vmap);
        a == b
    }

    /// Stable 64-bit fingerprint of the exact matchings.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |x: u64| {
            h ^= x;
            h = h.wrapping_mul(0x100000001b3);
        };
        eat(self.edge_count as u64);
        for arr in [&self.red, &self.yellow, &self.blue] {
            for &v in arr.iter() {
                eat(v as u64);
            }
        }
        h
    }
}

/// Assignment of gem vertices to bigon indices for one colour pair, along
/// with the bigons themselves.
pub struct BigonMap {
    pub bigons: Vec<Vec<u32>>,
    index_of: Vec<usize>,
}

impl BigonMap {
    fn new(gem: &Gem, pair: ColourPair) -> Self {
        let bigons = gem.bigons(pair);
        let mut index_of = vec![usize::MAX; gem.n()];
        for (i, cycle) in bigons.iter().enumerate() {
            for &v in cycle {
                index_of[v as usize] = i;
            }
        }
        BigonMap { bigons, index_of }
    }

    pub fn of(&self, flag: u32) -> usize {
        self.index_of[flag as usize]
    }

    pub fn count(&self) -> usize {
        self.bigons.len()
    }
}

/// Summary of the embedding encoded by a gem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingSummary {
    pub vertex_bigons: Vec<Vec<u32>>,
    pub face_bigons: Vec<Vec<u32>>,
    pub edge_bigons: Vec<Vec<u32>>,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub euler_genus: i64,
}

impl EmbeddingSummary {
    pub fn vertex_count(&self) -> usize {
        self.vertex_bigons.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_bigons.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_bigons.len()
    }
}

impl fmt::Display for EmbeddingSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V={} E={} F={} χ={} {} genus={}",
            self.vertex_count(),
            self.edge_count(),
            self.face_count(),
            self.euler_characteristic,
            if self.orientable {
                "orientable"
            } else {
                "nonorientable"
            },
            self.euler_genus
        )
    }
}
