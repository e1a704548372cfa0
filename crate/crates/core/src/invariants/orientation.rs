use crate::error::{check_limit, Error, Result};
use crate::functor::{k_map_oriented, CycleOrientation};
use crate::matched::{Edge, MatchData, MatchedGraph, Side, Sign};
use crate::simple::enumerate_perfect_matchings;
use crate::surface::complement_cycles;

use super::{jones_limited, require_genus_zero, DEFAULT_LIMIT};

/// First cycle orientation, in binary counting order, under which every
/// crossing of K is positive.
pub fn natural_cycle_orientation(g: &MatchedGraph) -> Result<CycleOrientation> {
    require_genus_zero(g)?;
    let l = complement_cycles(g).len();
    check_limit("complement cycles", l, 20)?;
    let k = l + g.free_loops().len();
    for bits in 0..1u64 << l {
        let o = CycleOrientation::from_bits(bits, k);
        if k_map_oriented(g, &o)?.signs().iter().all(|&s| s == Sign::Pos) {
            return Ok(o);
        }
    }
    Err(Error::NoPositiveOrientation)
}

/// Sum over all perfect matchings of the underlying graph, keeping the
/// rotation system of `g`, of the Jones polynomial at `q = 1` under the
/// natural orientation.
pub fn sum_jones_at_one(g: &MatchedGraph) -> Result<i64> {
    let matchings = enumerate_perfect_matchings(&g.underlying())?;
    let mut total = 0;
    for m in matchings {
        let gi = with_matching(g, &m);
        let o = natural_cycle_orientation(&gi)?;
        total += jones_limited(&k_map_oriented(&gi, &o)?, DEFAULT_LIMIT)?.eval_at_one();
    }
    Ok(total)
}

/// Same rotations, with exactly the listed edges matched (positive, dot at A).
pub fn with_matching(g: &MatchedGraph, matched: &[usize]) -> MatchedGraph {
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| Edge {
            id: e.id.clone(),
            ends: e.ends,
            matching: matched.contains(&i).then_some(MatchData { sign: Sign::Pos, dot: Side::A }),
        })
        .collect();
    g.with_parts_unchecked(g.vertices().to_vec(), edges)
}
