//! Ribbon-surface combinatorics: solid normalization, complement cycles,
//! face tracing and genus.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matched::{Decoration, EndRef, MatchedGraph, Side, Vertex};

/// Rotation with two of its three entries exchanged, keeping slot 0 fixed.
pub fn reversed(rot: [EndRef; 3]) -> [EndRef; 3] {
    [rot[0], rot[2], rot[1]]
}

/// Rotation read from the outward side of the surface: hollow vertices are
/// solid vertices viewed from behind.
pub fn effective_rotation(v: &Vertex) -> [EndRef; 3] {
    match v.decoration {
        Decoration::Solid => v.rotation,
        Decoration::Hollow => reversed(v.rotation),
    }
}

/// Converts every vertex to solid. Edge twists are implied by decorations
/// (an edge twists iff its endpoint decorations differ).
pub fn normalize_solid(g: &MatchedGraph) -> Result<MatchedGraph> {
    normalize_with_twists(g, &vec![false; g.edges().len()])
}

/// Like [`normalize_solid`] but with additional half-twists on the marked
/// edges. Flips are propagated along a BFS forest; an odd twist count on any
/// cycle means the surface is not orientable.
pub fn normalize_with_twists(g: &MatchedGraph, extra_twist: &[bool]) -> Result<MatchedGraph> {
    assert_eq!(extra_twist.len(), g.edges().len());
    let verts = g.vertices();
    let twisted = |e: usize| {
        let edge = &g.edges()[e];
        let d = verts[edge.ends[0]].decoration != verts[edge.ends[1]].decoration;
        d ^ extra_twist[e]
    };
    let mut flip: Vec<Option<bool>> = vec![None; verts.len()];
    for root in 0..verts.len() {
        if flip[root].is_some() {
            continue;
        }
        flip[root] = Some(verts[root].decoration == Decoration::Hollow);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let fv = flip[v].unwrap();
            for r in verts[v].rotation {
                let w = g.edges()[r.edge].vertex_at(r.side.other());
                let want = fv ^ twisted(r.edge);
                match flip[w] {
                    None => {
                        flip[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(fw) if fw != want => {
                        return Err(Error::NonOrientable(verts[w].id.clone()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let vertices = verts
        .iter()
        .zip(&flip)
        .map(|(v, f)| Vertex {
            id: v.id.clone(),
            decoration: Decoration::Solid,
            rotation: if f.unwrap() { reversed(v.rotation) } else { v.rotation },
        })
        .collect();
    Ok(g.with_parts_unchecked(vertices, g.edges().to_vec()))
}

/// One visit of a complement cycle to a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclePass {
    pub vertex: usize,
    pub enter: EndRef,
    pub leave: EndRef,
}

/// A cycle of the unmatched edges, traversed in its default direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementCycle {
    pub passes: Vec<CyclePass>,
}

impl ComplementCycle {
    pub fn len(&self) -> usize {
        self.passes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passes.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.passes.iter().map(|p| p.vertex)
    }

    /// Unmatched edges in traversal order; edge `k` leaves pass `k`.
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.passes.iter().map(|p| p.leave.edge)
    }

    pub fn reversed(&self) -> Self {
        let mut passes: Vec<CyclePass> =
            self.passes.iter().map(|p| CyclePass { vertex: p.vertex, enter: p.leave, leave: p.enter }).collect();
        passes[1..].reverse();
        Self { passes }
    }
}

/// The two unmatched ends at `v`, in effective rotation order after the
/// matched end.
pub fn unmatched_ends(g: &MatchedGraph, v: usize) -> [EndRef; 2] {
    let rot = effective_rotation(&g.vertices()[v]);
    let m = rot.iter().position(|r| g.edges()[r.edge].is_matched()).expect("perfect matching");
    [rot[(m + 1) % 3], rot[(m + 2) % 3]]
}

/// Cycles of the complement of the matching, ordered by lowest vertex.
///
/// Each cycle starts at its lowest vertex and leaves it through the unique
/// `.a` end there; if both or neither unmatched ends are `.a`, it leaves
/// along the lower-numbered edge. The direction never depends on rotations
/// or decorations.
pub fn complement_cycles(g: &MatchedGraph) -> Vec<ComplementCycle> {
    let n = g.vertices().len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let [x1, x2] = unmatched_ends(g, start);
        let first = match (x1.side, x2.side) {
            (Side::A, Side::B) => x1,
            (Side::B, Side::A) => x2,
            _ if x2.edge < x1.edge => x2,
            _ => x1,
        };
        let other = |v: usize, e: EndRef| {
            let [a, b] = unmatched_ends(g, v);
            if a == e {
                b
            } else {
                a
            }
        };
        let mut passes = Vec::new();
        let mut v = start;
        let mut leave = first;
        loop {
            let enter = other(v, leave);
            passes.push(CyclePass { vertex: v, enter, leave });
            seen[v] = true;
            let arrive = EndRef { edge: leave.edge, side: leave.side.other() };
            let w = g.end_vertex(arrive);
            if w == start && arrive == other(start, first) {
                break;
            }
            v = w;
            leave = other(w, arrive);
        }
        cycles.push(ComplementCycle { passes });
    }
    cycles
}

/// True iff every complement cycle has even length. Free loops count as even.
pub fn is_even_matching(g: &MatchedGraph) -> bool {
    complement_cycles(g).iter().all(|c| c.len() % 2 == 0)
}

/// A boundary component: corners visited in order, each followed by the edge
/// that leads to the next corner. Free loops bound two faces each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceWalk {
    Walk(Vec<(usize, usize)>),
    Loop(usize),
}

impl FaceWalk {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            FaceWalk::Walk(w) => w.iter().map(|s| s.0).collect(),
            FaceWalk::Loop(_) => Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            FaceWalk::Walk(w) => w.len(),
            FaceWalk::Loop(_) => 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// No vertex repeats along the walk.
    pub fn is_simple(&self) -> bool {
        let mut v = self.vertices();
        let n = v.len();
        v.sort_unstable();
        v.dedup();
        v.len() == n
    }
}

/// Face tracing for a general (possibly twisted) rotation system on
/// trivalent vertices. `edge_ends[e]` gives the vertices holding end A and B.
pub fn trace_faces(rotations: &[[EndRef; 3]], edge_ends: &[[usize; 2]], twisted: &[bool]) -> Vec<Vec<(usize, usize)>> {
    let nc = rotations.len() * 3;
    // link[corner][port] = (corner, port, edge)
    let mut link = vec![[(usize::MAX, 0usize, usize::MAX); 2]; nc];
    let slot = |end: EndRef| -> (usize, usize) {
        let v = edge_ends[end.edge][end.side.index()];
        (v, rotations[v].iter().position(|&r| r == end).expect("end in rotation"))
    };
    for (e, &tw) in twisted.iter().enumerate() {
        let (v, i) = slot(EndRef { edge: e, side: Side::A });
        let (w, j) = slot(EndRef { edge: e, side: Side::B });
        let before = |v: usize, i: usize| (v * 3 + (i + 2) % 3, 1usize);
        let after = |v: usize, i: usize| (v * 3 + i, 0usize);
        let pairs = if tw {
            [(before(v, i), before(w, j)), (after(v, i), after(w, j))]
        } else {
            [(before(v, i), after(w, j)), (after(v, i), before(w, j))]
        };
        for ((c1, p1), (c2, p2)) in pairs {
            link[c1][p1] = (c2, p2, e);
            link[c2][p2] = (c1, p1, e);
        }
    }
    let mut seen = vec![false; nc];
    let mut faces = Vec::new();
    for start in 0..nc {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let (mut c, mut out) = (start, 1usize);
        loop {
            seen[c] = true;
            let (nc2, np, e) = link[c][out];
            walk.push((c / 3, e));
            c = nc2;
            out = 1 - np;
            if c == start && out == 1 {
                break;
            }
        }
        faces.push(walk);
    }
    faces
}

/// Boundary components of the ribbon surface, after solid normalization.
pub fn boundary_components(g: &MatchedGraph) -> Result<Vec<FaceWalk>> {
    let n = normalize_solid(g)?;
    let rotations: Vec<[EndRef; 3]> = n.vertices().iter().map(|v| v.rotation).collect();
    let ends: Vec<[usize; 2]> = n.edges().iter().map(|e| e.ends).collect();
    let mut faces: Vec<FaceWalk> =
        trace_faces(&rotations, &ends, &vec![false; ends.len()]).into_iter().map(FaceWalk::Walk).collect();
    for i in 0..g.free_loops().len() {
        faces.push(FaceWalk::Loop(i));
        faces.push(FaceWalk::Loop(i));
    }
    Ok(faces)
}

/// Connected components of the underlying graph, as a vertex-to-component map.
pub(crate) fn vertex_components(n: usize, edge_ends: &[[usize; 2]]) -> (Vec<usize>, usize) {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for &[a, b] in edge_ends {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut comp = vec![0; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        comp[v] = label[r];
    }
    (comp, count)
}

/// Euler characteristic `V - E + F` of each connected component.
pub(crate) fn component_euler(n: usize, edge_ends: &[[usize; 2]], faces: &[Vec<(usize, usize)>]) -> Vec<i64> {
    let (comp, k) = vertex_components(n, edge_ends);
    let mut chi = vec![0i64; k];
    for v in 0..n {
        chi[comp[v]] += 1;
    }
    for &[a, _] in edge_ends {
        chi[comp[a]] -= 1;
    }
    for f in faces {
        chi[comp[f[0].0]] += 1;
    }
    chi
}

/// Sum over connected components of the orientable genus.
pub fn genus(g: &MatchedGraph) -> Result<usize> {
    let faces = boundary_components(g)?;
    let walks: Vec<Vec<(usize, usize)>> = faces
        .into_iter()
        .filter_map(|f| match f {
            FaceWalk::Walk(w) => Some(w),
            FaceWalk::Loop(_) => None,
        })
        .collect();
    let ends: Vec<[usize; 2]> = g.edges().iter().map(|e| e.ends).collect();
    let chi = component_euler(g.vertices().len(), &ends, &walks);
    Ok(chi.iter().map(|&c| ((2 - c) / 2) as usize).sum())
}

/// Number of boundary components, free loops included.
pub fn face_count(g: &MatchedGraph) -> Result<usize> {
    Ok(boundary_components(g)?.len())
}
