//! Bigraded homology over GF(2): Khovanov homology of Gauss codes and the
//! matched-edge cube homology of perfect matching drawings.

mod cube;
pub mod gf2;

pub use cube::{BifurcationPolicy, Cube};

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{check_limit, Error, Result};
use crate::fixtures;
use crate::functor::{k_map_labeled, k_map_oriented};
use crate::gauss::GaussCode;
use crate::invariants::{natural_cycle_orientation, require_genus_zero, SiteModel};
use crate::matched::{MatchedGraph, Sign};
use crate::poly::{LaurentPoly, Var};

pub const MAX_CROSSINGS: usize = 14;

/// Ranks indexed by `(i, j)`; zero ranks are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BigradedDims {
    pub ranks: BTreeMap<(i32, i32), u64>,
}

impl BigradedDims {
    pub fn rank(&self, i: i32, j: i32) -> u64 {
        self.ranks.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.ranks.values().sum()
    }

    pub fn shifted(&self, di: i32, dj: i32) -> Self {
        Self { ranks: self.ranks.iter().map(|(&(i, j), &r)| ((i + di, j + dj), r)).collect() }
    }

    /// Tensor with one free circle: ranks at `j - 1` and `j + 1`.
    fn with_free_circle(&self) -> Self {
        let mut ranks = BTreeMap::new();
        for (&(i, j), &r) in &self.ranks {
            *ranks.entry((i, j - 1)).or_insert(0) += r;
            *ranks.entry((i, j + 1)).or_insert(0) += r;
        }
        Self { ranks }
    }

    pub fn parse(text: &str) -> Option<Self> {
        let mut ranks = BTreeMap::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let mut f = line.split_whitespace();
            let i = f.next()?.strip_prefix("i=")?.parse().ok()?;
            let j = f.next()?.strip_prefix("j=")?.parse().ok()?;
            let r = f.next()?.strip_prefix("rank=")?.parse().ok()?;
            ranks.insert((i, j), r);
        }
        Some(Self { ranks })
    }
}

impl fmt::Display for BigradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(i, j), r) in &self.ranks {
            writeln!(f, "i={i} j={j} rank={r}")?;
        }
        Ok(())
    }
}

/// `Σ (-1)^i q^j rank(i, j)`.
pub fn graded_euler_characteristic(b: &BigradedDims) -> LaurentPoly {
    LaurentPoly::from_terms(Var::Q, b.ranks.iter().map(|(&(i, j), &r)| (j, if i % 2 == 0 { r as i64 } else { -(r as i64) })))
}

fn cube_homology(model: SiteModel, limit: usize, policy: BifurcationPolicy) -> Result<BigradedDims> {
    check_limit("homology sites", model.site_count(), limit.min(MAX_CROSSINGS))?;
    let extra = model.extra;
    let cube = Cube::new(model, policy)?;
    assert!(cube.check_d_squared(), "d∘d ≠ 0");
    let mut b = BigradedDims { ranks: cube.homology() };
    for _ in 0..extra {
        b = b.with_free_circle();
    }
    Ok(b)
}

/// Khovanov homology over GF(2) for the orientation given by the pass order.
/// Diagrams whose cube has a single-cycle bifurcation are refused.
pub fn khovanov_z2(d: &GaussCode) -> Result<BigradedDims> {
    khovanov_z2_with(d, MAX_CROSSINGS, BifurcationPolicy::Reject)
}

pub fn khovanov_z2_with(d: &GaussCode, limit: usize, policy: BifurcationPolicy) -> Result<BigradedDims> {
    let (np, nn) = (d.positive_count() as i32, d.negative_count() as i32);
    Ok(cube_homology(SiteModel::from_code(d), limit, policy)?.shifted(-nn, np - 2 * nn))
}

fn require_positive(g: &MatchedGraph) -> Result<()> {
    match g.matched_edges().find(|&m| g.edges()[m].matching.unwrap().sign == Sign::Neg) {
        Some(m) => Err(Error::NegativeEdge(g.edges()[m].id.clone())),
        None => Ok(()),
    }
}

/// Cube on the matched edges, 0 = parallel and 1 = cross, in raw gradings.
fn baldridge_raw(g: &MatchedGraph, limit: usize) -> Result<BigradedDims> {
    require_genus_zero(g)?;
    require_positive(g)?;
    cube_homology(SiteModel::from_graph(g), limit, BifurcationPolicy::ZeroMap)
}

/// Per-matched-edge quantum offset `κ`, fixed once by requiring the shift
/// identity on the theta graph.
pub fn baldridge_calibration() -> i32 {
    static KAPPA: OnceLock<i32> = OnceLock::new();
    *KAPPA.get_or_init(|| {
        let g = MatchedGraph::parse(fixtures::THETA).expect("fixture");
        let n = g.matched_count() as i32;
        let raw = baldridge_raw(&g, MAX_CROSSINGS).expect("theta is a perfect matching drawing");
        let o = natural_cycle_orientation(&g).expect("theta has a natural orientation");
        let kh = khovanov_z2(&k_map_oriented(&g, &o).expect("k")).expect("theta's cube has no bifurcation");
        let lo = |b: &BigradedDims| b.ranks.keys().map(|k| k.1).min().unwrap();
        let offset = lo(&kh) + n - lo(&raw);
        assert_eq!(raw.shifted(0, offset), kh.shifted(0, n), "theta calibration");
        offset / n
    })
}

/// Cube homology of a perfect matching drawing, with quantum grading
/// `deg + |s| + κ n`. Single-cycle bifurcations get the zero map.
pub fn baldridge_homology(g: &MatchedGraph) -> Result<BigradedDims> {
    baldridge_homology_limited(g, MAX_CROSSINGS)
}

pub fn baldridge_homology_limited(g: &MatchedGraph, limit: usize) -> Result<BigradedDims> {
    let n = g.matched_count() as i32;
    Ok(baldridge_raw(g, limit)?.shifted(0, baldridge_calibration() * n))
}

/// For genus-0 `g`: circle counts of the matched-edge cube and of the cube
/// of `K(g)` agree at every state, matching sites through K.
pub fn state_circle_agreement(g: &MatchedGraph) -> Result<bool> {
    require_genus_zero(g)?;
    let o = natural_cycle_orientation(g)?;
    let (d, labels) = k_map_labeled(g, &o)?;
    let gm = SiteModel::from_graph(g);
    let dm = SiteModel::from_code(&d);
    check_limit("homology sites", gm.site_count(), MAX_CROSSINGS)?;
    let site_of_edge: Vec<usize> = {
        let mut v = vec![usize::MAX; g.edges().len()];
        for (k, m) in g.matched_edges().enumerate() {
            v[m] = k;
        }
        v
    };
    let mut scratch = Vec::new();
    let ok = (0..1u64 << gm.site_count()).all(|s| {
        let mut t = 0u64;
        for (c, &m) in labels.crossing_edge.iter().enumerate() {
            t |= (s >> site_of_edge[m] & 1) << c;
        }
        gm.circle_count(s, &mut scratch) == dm.circle_count(t, &mut scratch)
    });
    Ok(ok)
}

/// `Kh^{i,j}(K(g)) = H^{i,j+n}(g)` with `K(g)` naturally oriented. Both
/// sides give single-cycle bifurcations the zero map.
pub fn check_shift_iso(g: &MatchedGraph) -> Result<bool> {
    let n = g.matched_count() as i32;
    let h = baldridge_homology(g)?;
    let o = natural_cycle_orientation(g)?;
    let kh = khovanov_z2_with(&k_map_oriented(g, &o)?, MAX_CROSSINGS, BifurcationPolicy::ZeroMap)?;
    Ok(kh.shifted(0, n) == h && state_circle_agreement(g)?)
}
