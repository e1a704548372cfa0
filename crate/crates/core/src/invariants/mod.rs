//! Polynomial and counting invariants of Gauss codes and matched graphs.

mod group;
mod orientation;
pub mod statesum;

pub use group::{fox_colorings, wirtinger_presentation, FoxCount, GroupPresentation, Letter};
pub use orientation::{natural_cycle_orientation, sum_jones_at_one, with_matching};
pub use statesum::{count_colorings, SiteModel, StateCircles, DEFAULT_LIMIT};

use crate::error::{Error, Result};
use crate::gauss::GaussCode;
use crate::matched::MatchedGraph;
use crate::poly::{LaurentPoly, Var};
use crate::surface::genus;

fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(Var::Q, [(-1, 1), (1, 1)])
}

/// `Σ (-q)^b (q^-1 + q)^c` over a `(b, c)` histogram.
fn bracket_from_histogram(hist: &[Vec<u64>]) -> LaurentPoly {
    let max_c = hist.iter().map(Vec::len).max().unwrap_or(0);
    let delta = loop_value();
    let powers: Vec<LaurentPoly> = (0..max_c as u32).map(|c| delta.pow(c)).collect();
    let mut out = LaurentPoly::zero(Var::Q);
    for (b, row) in hist.iter().enumerate() {
        let mut inner = LaurentPoly::zero(Var::Q);
        for (c, &count) in row.iter().enumerate() {
            if count > 0 {
                inner += &powers[c].scale(count as i64);
            }
        }
        let sign = if b % 2 == 0 { 1 } else { -1 };
        out += &inner.shift(b as i32).scale(sign);
    }
    out
}

pub fn kauffman_bracket(d: &GaussCode) -> Result<LaurentPoly> {
    kauffman_bracket_limited(d, DEFAULT_LIMIT)
}

pub fn kauffman_bracket_limited(d: &GaussCode, limit: usize) -> Result<LaurentPoly> {
    let m = SiteModel::from_code(d);
    m.check(limit)?;
    Ok(bracket_from_histogram(&m.histogram()))
}

/// `(-1)^{n-} q^{n+ - 2n-} <D>` for the orientation given by the pass order.
pub fn jones(d: &GaussCode) -> Result<LaurentPoly> {
    jones_limited(d, DEFAULT_LIMIT)
}

pub fn jones_limited(d: &GaussCode, limit: usize) -> Result<LaurentPoly> {
    let (np, nn) = (d.positive_count() as i32, d.negative_count() as i32);
    let b = kauffman_bracket_limited(d, limit)?;
    Ok(b.shift(np - 2 * nn).scale(if nn % 2 == 0 { 1 } else { -1 }))
}

/// Bracket of a matched graph with matched edges resolved parallel/cross.
pub fn two_factor_bracket(g: &MatchedGraph) -> Result<LaurentPoly> {
    two_factor_bracket_limited(g, DEFAULT_LIMIT)
}

pub fn two_factor_bracket_limited(g: &MatchedGraph, limit: usize) -> Result<LaurentPoly> {
    let m = SiteModel::from_graph(g);
    m.check(limit)?;
    Ok(bracket_from_histogram(&m.histogram()))
}

/// Penrose sum with loop value 3. The flag is `true` when the ribbon surface
/// has positive genus, where the value need not count Tait colorings.
pub fn penrose_number(g: &MatchedGraph) -> Result<(i64, bool)> {
    penrose_number_limited(g, DEFAULT_LIMIT)
}

pub fn penrose_number_limited(g: &MatchedGraph, limit: usize) -> Result<(i64, bool)> {
    let m = SiteModel::from_graph(g);
    m.check(limit)?;
    let mut total: i64 = 0;
    for (b, row) in m.histogram().iter().enumerate() {
        let sign = if b % 2 == 0 { 1 } else { -1 };
        for (c, &count) in row.iter().enumerate() {
            total += sign * count as i64 * 3i64.pow(c as u32);
        }
    }
    Ok((total, genus(g)? > 0))
}

/// Tait colorings by state expansion: every state contributes the number of
/// 3-labelings of its circles with the two strands at each site distinct.
pub fn tait_count_expansion(g: &MatchedGraph) -> Result<u64> {
    tait_count_expansion_limited(g, DEFAULT_LIMIT)
}

pub fn tait_count_expansion_limited(g: &MatchedGraph, limit: usize) -> Result<u64> {
    let m = SiteModel::from_graph(g);
    m.check(limit)?;
    let sum = m.sum_states(|s, c| count_colorings(c.count, &m.conflicts(s, c), 3) as i128);
    Ok(sum as u64 * 3u64.pow(m.extra as u32))
}

/// Binary bracket: A-smoothings weigh `A`, B-smoothings `A^-1`, and a state
/// counts its proper 2-labelings.
pub fn binary_bracket(d: &GaussCode) -> Result<LaurentPoly> {
    binary_bracket_limited(d, DEFAULT_LIMIT)
}

pub fn binary_bracket_limited(d: &GaussCode, limit: usize) -> Result<LaurentPoly> {
    let m = SiteModel::from_code(d);
    m.check(limit)?;
    let n = m.site_count() as i32;
    let per_b = m.sum_states_by_b(|s, c| count_colorings(c.count, &m.conflicts(s, c), 2) as i128);
    let mut p = LaurentPoly::zero(Var::A);
    for (b, &v) in per_b.iter().enumerate() {
        p.add_term(n - 2 * b as i32, v as i64 * (1i64 << m.extra));
    }
    Ok(p)
}

/// `A^{-w} {D}`.
pub fn normalized_binary(d: &GaussCode) -> Result<LaurentPoly> {
    normalized_binary_limited(d, DEFAULT_LIMIT)
}

pub fn normalized_binary_limited(d: &GaussCode, limit: usize) -> Result<LaurentPoly> {
    Ok(binary_bracket_limited(d, limit)?.shift(-d.writhe()))
}

pub(crate) fn require_genus_zero(g: &MatchedGraph) -> Result<()> {
    match genus(g)? {
        0 => Ok(()),
        k => Err(Error::NonzeroGenus(k)),
    }
}
