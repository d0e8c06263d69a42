//! Exhaustive search over edge subsets and the standard generators.
//!
//! The search iterates all bitmask subsets in increasing order, deciding
//! closed-2-cellness either directly on the dualized gem, through the
//! conditions path, or both with a cross-check. Whenever the gem has a
//! 2-edge cut no partial dual can be closed 2-cell, so the search
//! short-circuits unless auditing is requested.

use crate::c2c::is_closed_2cell;
use crate::conditions::{analyze, Predicted};
use crate::cuts::has_two_edge_cut;
use crate::duality::partial_dual;
use crate::gem::Gem;
use crate::iso::anchored_isomorphism;
use crate::rotation::{gem_from_rotation, RotationEmbedding};
use crate::subset::EdgeSubset;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Direct,
    Conditions,
    CrossCheck,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub mode: SearchMode,
    /// Maximum edge count the search will accept.
    pub cap: usize,
    /// Evaluate subsets even when an obstruction blocks them all.
    pub audit_blocked: bool,
    /// Also report one representative per anchored-isomorphism class.
    pub dedup_isomorphic: bool,
    pub parallelism: usize,
}

impl SearchOptions {
    pub fn new(mode: SearchMode) -> Self {
        SearchOptions {
            mode,
            cap: match mode {
                SearchMode::CrossCheck => 16,
                _ => 20,
            },
            audit_blocked: false,
            dedup_isomorphic: false,
            parallelism: 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("gem has {edges} edges, above the cap of {cap}; raise the cap to proceed")]
    CapExceeded { edges: usize, cap: usize },
}

/// Per-subset outcome, used for CSV export.
#[derive(Clone, Debug, Serialize)]
pub struct SubsetRow {
    pub mask: u64,
    pub closed_2cell: bool,
    pub degenerate: bool,
    /// First failing condition on the conditions path, if it ran.
    pub failing: Option<String>,
    pub disagreement: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub fingerprint: String,
    pub edge_count: usize,
    pub mode: SearchMode,
    pub total_subsets: u64,
    pub evaluated: u64,
    pub pruned_by_obstruction: u64,
    pub c2c_subsets: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c2c_representatives: Option<Vec<u64>>,
    pub disagreements: Vec<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Category {
    Yes,
    No,
    Degenerate,
}

fn direct_category(gem: &Gem, d: EdgeSubset) -> Category {
    match is_closed_2cell(&partial_dual(gem, d)) {
        crate::c2c::Verdict::Yes => Category::Yes,
        crate::c2c::Verdict::No { .. } => Category::No,
        crate::c2c::Verdict::Degenerate => Category::Degenerate,
    }
}

fn conditions_category(gem: &Gem, d: EdgeSubset) -> (Category, Option<String>) {
    let verdict = analyze(gem, d).verdict;
    let category = match verdict.predicted_c2c {
        Predicted::Yes => Category::Yes,
        Predicted::No => Category::No,
        Predicted::Degenerate => Category::Degenerate,
    };
    let failing = if !verdict.lc.passed() {
        Some("lc".to_string())
    } else if !verdict.mc.passed() {
        Some("mc".to_string())
    } else if !verdict.gc.passed() {
        Some("gc".to_string())
    } else {
        None
    };
    (category, failing)
}

fn evaluate(gem: &Gem, mask: u64, mode: SearchMode) -> SubsetRow {
    let d = EdgeSubset::from_mask(mask, gem.edge_count()).expect("mask within range");
    let (category, failing, disagreement) = match mode {
        SearchMode::Direct => (direct_category(gem, d), None, false),
        SearchMode::Conditions => {
            let (c, f) = conditions_category(gem, d);
            (c, f, false)
        }
        SearchMode::CrossCheck => {
            let direct = direct_category(gem, d);
            let (cond, f) = conditions_category(gem, d);
            (direct, f, direct != cond)
        }
    };
    SubsetRow {
        mask,
        closed_2cell: category == Category::Yes,
        degenerate: category == Category::Degenerate,
        failing,
        disagreement,
    }
}

/// Searches all `2^{|E|}` subsets for closed 2-cell partial duals.
pub fn find_c2c_duals(gem: &Gem, opts: &SearchOptions) -> Result<SearchReport, SearchError> {
    Ok(find_c2c_duals_rows(gem, opts)?.0)
}

/// As `find_c2c_duals`, also returning the per-subset rows.
pub fn find_c2c_duals_rows(
    gem: &Gem,
    opts: &SearchOptions,
) -> Result<(SearchReport, Vec<SubsetRow>), SearchError> {
    let edges = gem.edge_count();
    if edges > opts.cap {
        return Err(SearchError::CapExceeded {
            edges,
            cap: opts.cap,
        });
    }
    let total = 1u64 << edges;
    let blocked = has_two_edge_cut(gem);

    let mut report = SearchReport {
        fingerprint: format!("{:016x}", gem.fingerprint()),
        edge_count: edges,
        mode: opts.mode,
        total_subsets: total,
        evaluated: 0,
        pruned_by_obstruction: 0,
        c2c_subsets: Vec::new(),
        c2c_representatives: None,
        disagreements: Vec::new(),
    };

    if blocked && !opts.audit_blocked {
        report.pruned_by_obstruction = total;
        return Ok((report, Vec::new()));
    }

    let rows = if opts.parallelism > 1 {
        let threads = opts.parallelism.min(total as usize).max(1);
        let chunk = total.div_ceil(threads as u64);
        let mut pieces: Vec<Vec<SubsetRow>> = Vec::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads as u64)
                .map(|t| {
                    let lo = t * chunk;
                    let hi = ((t + 1) * chunk).min(total);
                    scope.spawn(move || {
                        (lo..hi)
                            .map(|mask| evaluate(gem, mask, opts.mode))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for h in handles {
                pieces.push(h.join().expect("search worker panicked"));
            }
        });
        pieces.concat()
    } else {
        (0..total)
            .map(|mask| evaluate(gem, mask, opts.mode))
            .collect()
    };

    report.evaluated = rows.len() as u64;
    for row in &rows {
        if row.closed_2cell {
            report.c2c_subsets.push(row.mask);
        }
        if row.disagreement {
            report.disagreements.push(row.mask);
        }
    }
    if blocked {
        report.pruned_by_obstruction = total;
    }
    if opts.dedup_isomorphic {
        report.c2c_representatives = Some(dedup_by_isomorphism(gem, &report.c2c_subsets));
    }
    Ok((report, rows))
}

fn dedup_by_isomorphism(gem: &Gem, masks: &[u64]) -> Vec<u64> {
    let mut reps: Vec<(u64, Gem)> = Vec::new();
    for &mask in masks {
        let d = EdgeSubset::from_mask(mask, gem.edge_count()).expect("mask within range");
        let dual = partial_dual(gem, d);
        if !reps.iter().any(|(_, g)| anchored_isomorphism(g, &dual).is_some()) {
            reps.push((mask, dual));
        }
    }
    reps.into_iter().map(|(m, _)| m).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GemSweep {
    pub fingerprint: String,
    pub edge_count: usize,
    pub subsets: u64,
    pub disagreements: Vec<u64>,
    pub lc_failures: u64,
    pub mc_failures: u64,
    pub gc_failures: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub gems: Vec<GemSweep>,
    pub total_subsets: u64,
    pub total_disagreements: u64,
}

/// Checks the conditions path against the direct path for every subset of
/// every gem in the corpus.
pub fn oracle_equivalence_sweep(corpus: &[Gem], cap: usize) -> SweepReport {
    let mut gems = Vec::new();
    let mut total_subsets = 0u64;
    let mut total_disagreements = 0u64;
    for gem in corpus {
        assert!(
            gem.edge_count() <= cap,
            "sweep corpus gem exceeds cap {cap}"
        );
        let total = 1u64 << gem.edge_count();
        let mut sweep = GemSweep {
            fingerprint: format!("{:016x}", gem.fingerprint()),
            edge_count: gem.edge_count(),
            subsets: total,
            disagreements: Vec::new(),
            lc_failures: 0,
            mc_failures: 0,
            gc_failures: 0,
        };
        for mask in 0..total {
            let d = EdgeSubset::from_mask(mask, gem.edge_count()).expect("mask within range");
            let verdict = analyze(gem, d).verdict;
            if !verdict.lc.passed() {
                sweep.lc_failures += 1;
            }
            if !verdict.mc.passed() {
                sweep.mc_failures += 1;
            }
            if !verdict.gc.passed() {
                sweep.gc_failures += 1;
            }
            let cond = match verdict.predicted_c2c {
                Predicted::Yes => Category::Yes,
                Predicted::No => Category::No,
                Predicted::Degenerate => Category::Degenerate,
            };
            if cond != direct_category(gem, d) {
                sweep.disagreements.push(mask);
            }
        }
        total_subsets += total;
        total_disagreements += sweep.disagreements.len() as u64;
        gems.push(sweep);
    }
    SweepReport {
        gems,
        total_subsets,
        total_disagreements,
    }
}

// ---------------------------------------------------------------------------
// generators

/// Planar dipole: two vertices joined by `k` parallel edges.
pub fn gen_theta(k: usize) -> Gem {
    assert!(k >= 2, "theta needs at least two edges");
    let fwd: Vec<(usize, u8)> = (0..k).map(|e| (e, 0)).collect();
    let bwd: Vec<(usize, u8)> = (0..k).rev().map(|e| (e, 1)).collect();
    let rot = RotationEmbedding::new(vec![fwd, bwd], vec![1; k]);
    gem_from_rotation(&rot).expect("theta rotation is valid")
}

/// One-vertex bouquet with the given loop signatures; the rotation
/// interleaves the loops (all first ends, then all second ends).
pub fn gen_bouquet(signs: &[i8]) -> Gem {
    assert!(!signs.is_empty(), "bouquet needs at least one loop");
    let mut ring: Vec<(usize, u8)> = (0..signs.len()).map(|e| (e, 0)).collect();
    ring.extend((0..signs.len()).map(|e| (e, 1)));
    let rot = RotationEmbedding::new(vec![ring], signs.to_vec());
    gem_from_rotation(&rot).expect("bouquet rotation is valid")
}

/// Standard toroidal embedding of the cartesian product of cycles
/// C_{2m} x C_{2n}: a quadrangulation of the torus.
pub fn gen_toroidal_grid(m: usize, n: usize) -> Gem {
    assert!(m >= 2 && n >= 2, "grid needs m, n >= 2");
    let w = 2 * m;
    let h = 2 * n;
    let right = |x: usize, y: usize| y * w + x;
    let up = |x: usize, y: usize| w * h + y * w + x;
    let mut vertices = Vec::with_capacity(w * h);
    for y in 0..h {
        for x in 0..w {
            vertices.push(vec![
                (right(x, y), 0),
                (up(x, y), 0),
                (right((x + w - 1) % w, y), 1),
                (up(x, (y + h - 1) % h), 1),
            ]);
        }
    }
    let rot = RotationEmbedding::new(vertices, vec![1; 2 * w * h]);
    gem_from_rotation(&rot).expect("toroidal grid rotation is valid")
}

/// Toroidal band of `2k` diamonds (copies of K4 minus an edge), half of
/// them chained tip-to-tip into vertical runs and half into horizontal
/// runs, the runs crossing at shared side-tip vertices. Returns the gem
/// and the subset holding every edge of the vertically oriented diamonds.
///
/// With the vertical diamonds dualized, every pure vertex and face touches
/// exactly one mixed element and every corner is mixed, 1-pure, or one of
/// the four 2-pure corners flanking a chord, so the partial dual is closed
/// 2-cell precisely because opposite region boundary walks cross once.
pub fn gen_diamond_band(k: usize) -> (Gem, EdgeSubset) {
    assert!(k >= 2 && k.is_multiple_of(2), "diamond band needs even k >= 2");
    let q = k / 2;
    let slot = |i: usize, j: usize| i * 2 + j; // i in 0..q, j in 0..2
    // vertex ids
    let m_v = |i: usize, j: usize| slot(i % q, j % 2);
    let e_v = |i: usize, j: usize| 2 * q + slot(i, j);
    let w_v = |i: usize, j: usize| 4 * q + slot(i, j);
    let n_v = |i: usize, j: usize| 6 * q + slot(i, j);
    let s_v = |i: usize, j: usize| 8 * q + slot(i, j);
    let vertex_count = 10 * q;

    // edge ids: the k vertical diamonds first, then the k horizontal ones
    const VSE: usize = 0;
    const VNE: usize = 1;
    const VNW: usize = 2;
    const VSW: usize = 3;
    const VCHORD: usize = 4;
    let v_edge = |i: usize, j: usize, which: usize| 5 * slot(i, j) + which;
    const HNW: usize = 0;
    const HNE: usize = 1;
    const HSE: usize = 2;
    const HSW: usize = 3;
    const HCHORD: usize = 4;
    let h_edge = |i: usize, j: usize, which: usize| 5 * k + 5 * slot(i, j) + which;
    let edge_count = 10 * k; // 2k diamonds, five edges each


    let mut rings: Vec<Vec<(usize, u8)>> = vec![Vec::new(); vertex_count];
    for i in 0..q {
        for j in 0..2 {
            // crossing vertex M(i,j): diamonds around it in cyclic order
            rings[m_v(i, j)] = vec![
                (v_edge(i, j, VSE), 0),
                (v_edge(i, j, VSW), 1),
                (h_edge((i + q - 1) % q, j, HNE), 1),
                (h_edge((i + q - 1) % q, j, HSE), 0),
                (v_edge(i, (j + 1) % 2, VNW), 0),
                (v_edge(i, (j + 1) % 2, VNE), 1),
                (h_edge(i, j, HSW), 1),
                (h_edge(i, j, HNW), 0),
            ];
            // chord tips of the vertical diamond V(i,j)
            rings[e_v(i, j)] = vec![
                (v_edge(i, j, VNE), 0),
                (v_edge(i, j, VCHORD), 0),
                (v_edge(i, j, VSE), 1),
            ];
            rings[w_v(i, j)] = vec![
                (v_edge(i, j, VNW), 1),
                (v_edge(i, j, VSW), 0),
                (v_edge(i, j, VCHORD), 1),
            ];
            // chord tips of the horizontal diamond H(i,j)
            rings[n_v(i, j)] = vec![
                (h_edge(i, j, HNW), 1),
                (h_edge(i, j, HCHORD), 0),
                (h_edge(i, j, HNE), 0),
            ];
            rings[s_v(i, j)] = vec![
                (h_edge(i, j, HSE), 1),
                (h_edge(i, j, HCHORD), 1),
                (h_edge(i, j, HSW), 0),
            ];
        }
    }
    let rot = RotationEmbedding::new(rings, vec![1; edge_count]);
    let gem = gem_from_rotation(&rot).expect("diamond band rotation is valid");
    let dual = EdgeSubset::from_mask((1u64 << (5 * k)) - 1, edge_count)
        .expect("vertical diamond edges form a valid subset");
    (gem, dual)
}

/// A toroidal embedding with a dual set whose separation graph is the
/// standard 2-face-colourable toroidal grid C_{2m} x C_{2n}: the graph on
/// one checkerboard class of the grid with both diagonal edge families,
/// one family dualized. Its Petrie walks in the separation graph are
/// stair-step walks, so opposite walks share at least two edges and no
/// such partial dual is closed 2-cell.
pub fn gen_grid_separation(m: usize, n: usize) -> (Gem, EdgeSubset) {
    assert!(m >= 2 && n >= 2, "grid separation instance needs m, n >= 2");
    let w = 2 * m;
    let h = 2 * n;
    let mut black_index = vec![usize::MAX; w * h];
    let mut blacks = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if (x + y) % 2 == 0 {
                black_index[y * w + x] = blacks.len();
                blacks.push((x, y));
            }
        }
    }
    let b = blacks.len();
    let ne = |x: usize, y: usize| black_index[y * w + x];
    let se = |x: usize, y: usize| b + black_index[y * w + x];
    let mut rings = Vec::with_capacity(b);
    for &(x, y) in &blacks {
        let xm = (x + w - 1) % w;
        let yp = (y + 1) % h;
        let ym = (y + h - 1) % h;
        rings.push(vec![
            (ne(x, y), 0),
            (se(xm, yp), 1),
            (ne(xm, ym), 1),
            (se(x, y), 0),
        ]);
    }
    let rot = RotationEmbedding::new(rings, vec![1; 2 * b]);
    let gem = gem_from_rotation(&rot).expect("diagonal grid rotation is valid");
    let dual = EdgeSubset::from_mask((1u64 << b) - 1, 2 * b).expect("NE family fits the mask");
    (gem, dual)
}
