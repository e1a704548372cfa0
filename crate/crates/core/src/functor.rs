//! The functor K from matched graphs to Gauss codes, its inverse, and the
//! local crossing template that both share.
//!
//! For a matched edge `m = (u, v)` with effective rotations `u: (m, x1, x2)`
//! and `v: (m, y1, y2)`, the two ways to resolve `m` are
//!
//! * parallel: `{x1-y2, x2-y1}`
//! * cross: `{x1-y1, x2-y2}`
//!
//! The strand through the dotted endpoint is the over strand. A positive
//! edge has the parallel resolution as its A-smoothing, a negative edge the
//! cross one. The Gauss sign of the crossing is then whatever makes the
//! crossing's A-smoothing (oriented for `+`, unoriented for `-`) agree.

use crate::error::Result;
use crate::gauss::{GaussCode, Pass, Strand};
use crate::matched::{Decoration, EndRef, MatchData, MatchedGraph, MatchedGraphBuilder, Side, Sign, VertexSpec};
use crate::surface::{complement_cycles, effective_rotation, ComplementCycle};

/// A traversal sense for every complement cycle and free loop: `true`
/// reverses the default direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CycleOrientation {
    pub reversed: Vec<bool>,
}

impl CycleOrientation {
    pub fn default_for(g: &MatchedGraph) -> Self {
        Self { reversed: vec![false; complement_cycles(g).len() + g.free_loops().len()] }
    }

    /// Orientation number `bits` of `2^k`, bit `i` reversing component `i`.
    pub fn from_bits(bits: u64, k: usize) -> Self {
        Self { reversed: (0..k).map(|i| bits >> i & 1 == 1).collect() }
    }
}

/// Which smoothing of a matched edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    Parallel,
    Cross,
}

/// The four unmatched ends around a matched edge: `[x1, x2, y1, y2]`, where
/// `x` are at end A of the edge and `y` at end B.
pub fn edge_frame(g: &MatchedGraph, m: usize) -> [EndRef; 4] {
    let e = &g.edges()[m];
    let around = |side: Side| {
        let v = e.vertex_at(side);
        let rot = effective_rotation(&g.vertices()[v]);
        let k = rot.iter().position(|r| *r == EndRef { edge: m, side }).expect("matched end in rotation");
        [rot[(k + 1) % 3], rot[(k + 2) % 3]]
    };
    let [x1, x2] = around(Side::A);
    let [y1, y2] = around(Side::B);
    [x1, x2, y1, y2]
}

/// End pairs joined by a resolution.
pub fn resolution_pairs(frame: [EndRef; 4], r: Resolution) -> [[EndRef; 2]; 2] {
    let [x1, x2, y1, y2] = frame;
    match r {
        Resolution::Parallel => [[x1, y2], [x2, y1]],
        Resolution::Cross => [[x1, y1], [x2, y2]],
    }
}

/// The resolution playing the role of the A-smoothing for a given edge sign.
pub fn a_resolution(sign: Sign) -> Resolution {
    match sign {
        Sign::Pos => Resolution::Parallel,
        Sign::Neg => Resolution::Cross,
    }
}

fn same_pairing(p: [[EndRef; 2]; 2], q: [[EndRef; 2]; 2]) -> bool {
    let norm = |mut a: [[EndRef; 2]; 2]| {
        for x in a.iter_mut() {
            x.sort();
        }
        a.sort();
        a
    };
    norm(p) == norm(q)
}

/// Provenance of every piece of `k_map(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KLabels {
    /// Matched edge behind each crossing.
    pub crossing_edge: Vec<usize>,
    /// Vertex behind each pass, per component (empty for free loops).
    pub pass_vertex: Vec<Vec<usize>>,
    /// Unmatched edge leaving each pass, per component.
    pub arc_edge: Vec<Vec<usize>>,
    /// Free loop behind each crossing-free component, if any.
    pub component_loop: Vec<Option<usize>>,
}

/// K with the default cycle orientation.
pub fn k_map(g: &MatchedGraph) -> Result<GaussCode> {
    Ok(k_map_labeled(g, &CycleOrientation::default_for(g))?.0)
}

/// K with an explicit traversal sense per component.
pub fn k_map_oriented(g: &MatchedGraph, orientation: &CycleOrientation) -> Result<GaussCode> {
    Ok(k_map_labeled(g, orientation)?.0)
}

pub fn k_map_labeled(g: &MatchedGraph, orientation: &CycleOrientation) -> Result<(GaussCode, KLabels)> {
    let mut cycles = complement_cycles(g);
    for (c, r) in cycles.iter_mut().zip(&orientation.reversed) {
        if *r {
            *c = c.reversed();
        }
    }
    Ok(assemble(g, &cycles))
}

fn assemble(g: &MatchedGraph, cycles: &[ComplementCycle]) -> (GaussCode, KLabels) {
    let nv = g.vertices().len();
    let mut enter = vec![EndRef { edge: 0, side: Side::A }; nv];
    let mut leave = enter.clone();
    for c in cycles {
        for p in c.passes.iter() {
            enter[p.vertex] = p.enter;
            leave[p.vertex] = p.leave;
        }
    }
    let mut crossing_of = vec![usize::MAX; g.edges().len()];
    let mut crossing_edge = Vec::new();
    let mut components = Vec::new();
    let mut pass_vertex = Vec::new();
    let mut arc_edge = Vec::new();
    let mut component_loop = Vec::new();
    for c in cycles {
        let mut comp = Vec::with_capacity(c.len());
        for p in &c.passes {
            let m = g.matched_end(p.vertex);
            if crossing_of[m.edge] == usize::MAX {
                crossing_of[m.edge] = crossing_edge.len();
                crossing_edge.push(m.edge);
            }
            let data = g.edges()[m.edge].matching.unwrap();
            let strand = if m.side == data.dot { Strand::Over } else { Strand::Under };
            comp.push(Pass { crossing: crossing_of[m.edge], strand });
        }
        components.push(comp);
        pass_vertex.push(c.vertices().collect());
        arc_edge.push(c.edges().collect());
        component_loop.push(None);
    }
    for i in 0..g.free_loops().len() {
        components.push(Vec::new());
        pass_vertex.push(Vec::new());
        arc_edge.push(Vec::new());
        component_loop.push(Some(i));
    }
    let signs = crossing_edge
        .iter()
        .map(|&m| {
            let data = g.edges()[m].matching.unwrap();
            let e = &g.edges()[m];
            let o = e.vertex_at(data.dot);
            let u = e.vertex_at(data.dot.other());
            let oriented = [[enter[o], leave[u]], [enter[u], leave[o]]];
            let a = resolution_pairs(edge_frame(g, m), a_resolution(data.sign));
            if same_pairing(a, oriented) {
                Sign::Pos
            } else {
                Sign::Neg
            }
        })
        .collect();
    let code = GaussCode::from_parts_unchecked(signs, components);
    (code, KLabels { crossing_edge, pass_vertex, arc_edge, component_loop })
}

/// K inverse: each crossing becomes a positive matched edge dotted at its
/// over vertex; each arc becomes an unmatched edge from tail (`.a`) to head
/// (`.b`); crossing-free components become free loops.
pub fn k_inverse(d: &GaussCode) -> MatchedGraph {
    let offsets = d.offsets();
    let vid = |k: usize, i: usize| format!("v{}", offsets[k] + i + 1);
    let aid = |k: usize, i: usize| format!("a{}", offsets[k] + i + 1);
    let mid = |c: usize| format!("m{}", d.label(c));
    let mut b = MatchedGraphBuilder::new();
    let mut loops = 0;
    for (k, comp) in d.components().iter().enumerate() {
        if comp.is_empty() {
            loops += 1;
            b.push_loop(format!("l{loops}"));
            continue;
        }
        let len = comp.len();
        for (i, p) in comp.iter().enumerate() {
            let m_side = match p.strand {
                Strand::Over => Side::A,
                Strand::Under => Side::B,
            };
            let inn = (aid(k, (i + len - 1) % len), Side::B);
            let out = (aid(k, i), Side::A);
            let m = (mid(p.crossing), m_side);
            let rotation = match (p.strand, d.sign(p.crossing)) {
                (Strand::Under, Sign::Neg) => [m, out, inn],
                _ => [m, inn, out],
            };
            b.push_vertex(VertexSpec { id: vid(k, i), decoration: Decoration::Solid, rotation });
        }
        for i in 0..len {
            b = b.edge(&aid(k, i));
        }
    }
    for c in 0..d.crossing_count() {
        b = b.medge(&mid(c), Sign::Pos, Side::A);
    }
    b.build().expect("K inverse of a valid code is valid")
}

/// Replaces every dot by end A. The result only carries information up to
/// the Z-move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZGraph {
    pub graph: MatchedGraph,
}

pub fn forget_direction(g: &MatchedGraph) -> ZGraph {
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            let mut e = e.clone();
            if let Some(m) = e.matching {
                e.matching = Some(MatchData { sign: m.sign, dot: Side::A });
            }
            e
        })
        .collect();
    ZGraph { graph: g.with_parts_unchecked(g.vertices().to_vec(), edges) }
}
