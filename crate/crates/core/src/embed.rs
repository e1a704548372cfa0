//! 2-colorings of Gauss codes, bicolored multicycles of matched graphs, the
//! bijection between them, and the strong embeddings multicycles define.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result, ValidationReport};
use crate::functor::{k_map_labeled, CycleOrientation};
use crate::gauss::GaussCode;
use crate::matched::{EndRef, MatchedGraph};
use crate::surface::{complement_cycles, reversed, trace_faces, unmatched_ends, vertex_components};

/// Colors `1` or `2` on the segments of each component: segment `k` runs
/// from pass `k` to pass `k + 1`, and a crossing-free component has one
/// segment. Every strand changes color at every classical crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoColoring {
    pub colors: Vec<Vec<u8>>,
}

impl fmt::Display for TwoColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.colors.iter().enumerate() {
            let s: Vec<String> = c.iter().map(u8::to_string).collect();
            writeln!(f, "component {k}: {}", s.join(" "))?;
        }
        Ok(())
    }
}

fn alternating(len: usize, start: u8) -> Vec<u8> {
    (0..len.max(1)).map(|k| if k % 2 == 0 { start } else { 3 - start }).collect()
}

/// All 2-colorings: none unless every component has an even number of
/// passes, otherwise one per choice of starting colors.
pub fn two_colorings(d: &GaussCode) -> Vec<TwoColoring> {
    if !d.is_even() {
        return Vec::new();
    }
    let k = d.component_count();
    let out: Vec<TwoColoring> = (0..1u64 << k)
        .map(|bits| TwoColoring {
            colors: d
                .components()
                .iter()
                .enumerate()
                .map(|(i, c)| alternating(c.len(), 1 + (bits >> i & 1) as u8))
                .collect(),
        })
        .collect();
    assert_eq!(out.len(), 1 << k);
    out
}

/// Rank of doubled Lee homology, read off as the number of 2-colorings.
pub fn dkh_rank(d: &GaussCode) -> usize {
    two_colorings(d).len()
}

/// A color per unmatched edge (`None` on matched edges) and per free loop,
/// with the two unmatched ends at every vertex colored differently.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multicycle {
    pub edge_colors: Vec<Option<u8>>,
    pub loop_colors: Vec<u8>,
}

impl Multicycle {
    pub fn check(&self, g: &MatchedGraph) -> Result<()> {
        let mut report = ValidationReport::default();
        if self.edge_colors.len() != g.edges().len() || self.loop_colors.len() != g.free_loops().len() {
            report.push("multicycle-shape", "one color per edge and free loop expected", Vec::new());
            return report.into_result();
        }
        for (e, c) in g.edges().iter().zip(&self.edge_colors) {
            if e.is_matched() != c.is_none() || c.is_some_and(|c| c != 1 && c != 2) {
                report.push("multicycle-color", format!("edge {} has a bad color", e.id), vec![e.id.clone()]);
            }
        }
        if report.is_empty() {
            for (v, vert) in g.vertices().iter().enumerate() {
                let [x, y] = unmatched_ends(g, v);
                if self.edge_colors[x.edge] == self.edge_colors[y.edge] {
                    report.push(
                        "multicycle-vertex",
                        format!("both unmatched edges at {} have the same color", vert.id),
                        vec![vert.id.clone()],
                    );
                }
            }
        }
        report.into_result()
    }

    pub fn display(&self, g: &MatchedGraph) -> String {
        let mut parts: Vec<String> = g
            .edges()
            .iter()
            .zip(&self.edge_colors)
            .filter_map(|(e, c)| c.map(|c| format!("{}={c}", e.id)))
            .collect();
        parts.extend(g.free_loops().iter().zip(&self.loop_colors).map(|(l, c)| format!("{l}={c}")));
        parts.join(" ")
    }
}

/// All bicolored multicycles: colors alternate along each complement cycle,
/// two choices per cycle and per free loop; none if some cycle is odd.
pub fn bicolored_multicycles(g: &MatchedGraph) -> Vec<Multicycle> {
    let cycles = complement_cycles(g);
    if cycles.iter().any(|c| c.len() % 2 == 1) {
        return Vec::new();
    }
    let l = cycles.len() + g.free_loops().len();
    let out: Vec<Multicycle> = (0..1u64 << l)
        .map(|bits| {
            let mut edge_colors = vec![None; g.edges().len()];
            for (i, c) in cycles.iter().enumerate() {
                let cols = alternating(c.len(), 1 + (bits >> i & 1) as u8);
                for (e, col) in c.edges().zip(cols) {
                    edge_colors[e] = Some(col);
                }
            }
            let loop_colors = (0..g.free_loops().len()).map(|j| 1 + (bits >> (cycles.len() + j) & 1) as u8).collect();
            Multicycle { edge_colors, loop_colors }
        })
        .collect();
    assert_eq!(out.len(), 1 << l);
    out
}

/// The 2-coloring of `k_map(g)` whose segment leaving each pass has the color
/// of the unmatched edge behind it.
pub fn multicycle_bijection(g: &MatchedGraph, c: &Multicycle) -> Result<TwoColoring> {
    c.check(g)?;
    let (_, labels) = k_map_labeled(g, &CycleOrientation::default_for(g))?;
    let colors = labels
        .arc_edge
        .iter()
        .zip(&labels.component_loop)
        .map(|(arcs, lp)| match lp {
            Some(i) => vec![c.loop_colors[*i]],
            None => arcs.iter().map(|&e| c.edge_colors[e].expect("unmatched")).collect(),
        })
        .collect();
    Ok(TwoColoring { colors })
}

/// Face label: `X` on faces made of unmatched edges, `Y` on the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceLabel {
    X,
    Y,
}

/// A rotation system on the underlying graph with twisted edges, its faces
/// as `(vertex, outgoing edge)` walks, and the surface type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonEmbedding {
    pub vertex_ids: Vec<String>,
    pub edge_ids: Vec<String>,
    pub rotations: Vec<[EndRef; 3]>,
    pub twisted: Vec<bool>,
    pub faces: Vec<Vec<(usize, usize)>>,
    pub labels: Vec<FaceLabel>,
    pub orientable: bool,
    pub euler_genus: usize,
}

impl RibbonEmbedding {
    /// Orientable genus, or the number of crosscaps.
    pub fn genus(&self) -> usize {
        if self.orientable {
            self.euler_genus / 2
        } else {
            self.euler_genus
        }
    }

    pub fn all_faces_simple(&self) -> bool {
        self.faces.iter().all(|f| {
            let mut v: Vec<usize> = f.iter().map(|s| s.0).collect();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Faces on the two sides of each edge, as a pair of face indices.
    pub fn edge_sides(&self) -> Vec<Vec<usize>> {
        let mut sides = vec![Vec::new(); self.edge_ids.len()];
        for (k, f) in self.faces.iter().enumerate() {
            for &(_, e) in f {
                sides[e].push(k);
            }
        }
        sides
    }
}

impl fmt::Display for RibbonEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, rot) in self.vertex_ids.iter().zip(&self.rotations) {
            write!(f, "vertex {id}")?;
            for r in rot {
                write!(f, " {}.{}", self.edge_ids[r.edge], r.side.letter())?;
            }
            writeln!(f)?;
        }
        let tw: Vec<&str> =
            self.edge_ids.iter().zip(&self.twisted).filter(|(_, &t)| t).map(|(e, _)| e.as_str()).collect();
        if !tw.is_empty() {
            writeln!(f, "twisted {}", tw.join(" "))?;
        }
        for (k, (face, label)) in self.faces.iter().zip(&self.labels).enumerate() {
            write!(f, "face {}:", k + 1)?;
            for &(v, e) in face {
                write!(f, " {} {}", self.vertex_ids[v], self.edge_ids[e])?;
            }
            writeln!(f, " [{}]", if *label == FaceLabel::X { "X" } else { "Y" })?;
        }
        writeln!(f, "genus {} orientable {}", self.genus(), if self.orientable { "yes" } else { "no" })
    }
}

/// Reverses a face walk, keeping its first vertex.
fn reverse_walk(w: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let n = w.len();
    (0..n).map(|k| (w[(n - k) % n].0, w[(2 * n - k - 1) % n].1)).collect()
}

/// Strong embedding of the underlying graph attached to a multicycle.
///
/// With the matching as a third color, every vertex gets the rotation
/// (color 1, color 2, matched) and every edge a half-twist; the faces are
/// then the two-colored cycles, each simple. Faces made of unmatched edges
/// are labeled `X` and the others `Y`, so the two sides of every unmatched
/// edge carry distinct labels. When the twists can be removed by reversing
/// rotations, they are, and the result is orientable. `reversed` only sets
/// the direction in which `X` faces are listed.
pub fn strong_embedding(g: &MatchedGraph, c: &Multicycle, reversed_cycles: &[bool]) -> Result<RibbonEmbedding> {
    c.check(g)?;
    let cycles = complement_cycles(g);
    if reversed_cycles.len() != cycles.len() {
        return Err(Error::Construction(format!(
            "expected {} cycle directions, got {}",
            cycles.len(),
            reversed_cycles.len()
        )));
    }
    let n = g.vertices().len();
    let ne = g.edges().len();
    let color_of = |r: EndRef| c.edge_colors[r.edge].unwrap_or(3);
    let mut rotations: Vec<[EndRef; 3]> = g
        .vertices()
        .iter()
        .map(|v| {
            let mut rot = v.rotation;
            rot.sort_by_key(|&r| color_of(r));
            rot
        })
        .collect();
    let ends: Vec<[usize; 2]> = g.edges().iter().map(|e| e.ends).collect();
    let mut twisted = vec![true; ne];

    let mut flip: Vec<Option<bool>> = vec![None; n];
    let mut orientable = true;
    for root in 0..n {
        if flip[root].is_some() {
            continue;
        }
        flip[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for r in rotations[v] {
                let w = ends[r.edge][r.side.other().index()];
                let want = !flip[v].unwrap();
                match flip[w] {
                    None => {
                        flip[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(fw) if fw != want => orientable = false,
                    Some(_) => {}
                }
            }
        }
    }
    if orientable {
        for v in 0..n {
            if flip[v] == Some(true) {
                rotations[v] = reversed(rotations[v]);
            }
        }
        twisted = vec![false; ne];
    }

    let mut faces = trace_faces(&rotations, &ends, &twisted);
    let labels: Vec<FaceLabel> = faces
        .iter()
        .map(|f| if f.iter().all(|&(_, e)| !g.edges()[e].is_matched()) { FaceLabel::X } else { FaceLabel::Y })
        .collect();
    for (face, label) in faces.iter_mut().zip(&labels) {
        if *label != FaceLabel::X {
            continue;
        }
        let (v0, e0) = face[0];
        let (ci, cyc) = cycles.iter().enumerate().find(|(_, cy)| cy.edges().any(|e| e == e0)).expect("X face is a cycle");
        let forward = cyc.passes.iter().any(|p| p.vertex == v0 && p.leave.edge == e0);
        if forward == reversed_cycles[ci] {
            *face = reverse_walk(face);
        }
    }

    let (_, comps) = vertex_components(n, &ends);
    let chi = n as i64 - ne as i64 + faces.len() as i64;
    let eg = 2 * comps as i64 - chi;
    let emb = RibbonEmbedding {
        vertex_ids: g.vertices().iter().map(|v| v.id.clone()).collect(),
        edge_ids: g.edges().iter().map(|e| e.id.clone()).collect(),
        rotations,
        twisted,
        faces,
        labels,
        orientable,
        euler_genus: eg.max(0) as usize,
    };
    if eg < 0 || (orientable && eg % 2 != 0) {
        return Err(Error::Construction(format!("Euler characteristic {chi} is impossible")));
    }
    if !emb.all_faces_simple() {
        return Err(Error::Construction("a face boundary repeats a vertex".into()));
    }
    let sides = emb.edge_sides();
    for (e, s) in sides.iter().enumerate() {
        if s.len() != 2 {
            return Err(Error::Construction(format!("edge {} lies on {} face sides", emb.edge_ids[e], s.len())));
        }
        if !g.edges()[e].is_matched() && emb.labels[s[0]] == emb.labels[s[1]] {
            return Err(Error::Construction(format!("both faces along {} have the same label", emb.edge_ids[e])));
        }
    }
    Ok(emb)
}

/// Default directions for [`strong_embedding`]: no cycle reversed.
pub fn default_directions(g: &MatchedGraph) -> Vec<bool> {
    vec![false; complement_cycles(g).len()]
}
