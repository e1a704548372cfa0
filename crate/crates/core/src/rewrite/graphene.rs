//! Graphene moves. G1, G2 and G3 act through K: map to the Gauss code, apply
//! the Reidemeister move there, and map back with K inverse.

use std::fmt;
use std::str::FromStr;

use super::canon::canonical_key;
use super::moves::{apply, RMove};
use super::search::{equivalent_within, Budget, SearchResult};
use crate::error::{Error, Result};
use crate::functor::{k_inverse, k_map};
use crate::gauss::GaussCode;
use crate::invariants::require_genus_zero;
use crate::matched::{MatchedGraph, Side};
use crate::surface::{genus, reversed};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrapheneMove {
    /// G1, G2 or G3 (by the rank of the move), given as a Reidemeister move
    /// on `k_map(g)`.
    Conjugate(RMove),
    /// Toggle both endpoint decorations of a matched edge.
    G4 { edge: String },
    /// Toggle the decoration at one end of a matched edge and flip its sign.
    G5 { edge: String, side: Side },
    /// Reverse one rotation and toggle its decoration.
    M5 { vertex: String },
    /// Reverse the rotations of a set of vertices; see [`flip_region`].
    Flip { vertices: Vec<String> },
}

impl GrapheneMove {
    pub fn name(&self) -> &'static str {
        match self {
            GrapheneMove::Conjugate(r) => ["G1", "G2", "G3"][r.rank() as usize - 1],
            GrapheneMove::G4 { .. } => "G4",
            GrapheneMove::G5 { .. } => "G5",
            GrapheneMove::M5 { .. } => "M5",
            GrapheneMove::Flip { .. } => "FLIP",
        }
    }
}

impl fmt::Display for GrapheneMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrapheneMove::Conjugate(r) => write!(f, "{} @ {} {}", self.name(), r.name(), r.site()),
            GrapheneMove::G4 { edge } => write!(f, "G4 @ {edge}"),
            GrapheneMove::G5 { edge, side } => write!(f, "G5 @ {edge} {}", side.letter()),
            GrapheneMove::M5 { vertex } => write!(f, "M5 @ {vertex}"),
            GrapheneMove::Flip { vertices } => write!(f, "FLIP @ {}", vertices.join(" ")),
        }
    }
}

impl FromStr for GrapheneMove {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let bad = || Error::PatternMismatch(format!("cannot read move `{line}`"));
        let (name, site) = line.split_once('@').ok_or_else(bad)?;
        let toks: Vec<&str> = site.split_whitespace().collect();
        let mv = match (name.trim(), toks.as_slice()) {
            ("G1" | "G2" | "G3", _) => {
                let (rname, rsite) = site.trim().split_once(' ').ok_or_else(bad)?;
                let r: RMove = format!("{rname} @ {rsite}").parse()?;
                if name.trim() != ["G1", "G2", "G3"][r.rank() as usize - 1] {
                    return Err(bad());
                }
                GrapheneMove::Conjugate(r)
            }
            ("G4", [e]) => GrapheneMove::G4 { edge: e.to_string() },
            ("G5", [e, s]) => GrapheneMove::G5 {
                edge: e.to_string(),
                side: match *s {
                    "a" => Side::A,
                    "b" => Side::B,
                    _ => return Err(bad()),
                },
            },
            ("M5", [v]) => GrapheneMove::M5 { vertex: v.to_string() },
            ("FLIP", vs) => GrapheneMove::Flip { vertices: vs.iter().map(|v| v.to_string()).collect() },
            _ => return Err(bad()),
        };
        Ok(mv)
    }
}

fn matched_edge(g: &MatchedGraph, id: &str) -> Result<usize> {
    match g.edge_index(id) {
        Some(e) if g.edges()[e].is_matched() => Ok(e),
        Some(_) => Err(Error::PatternMismatch(format!("edge {id} is not matched"))),
        None => Err(Error::PatternMismatch(format!("no edge {id}"))),
    }
}

pub fn graphene_move(g: &MatchedGraph, mv: &GrapheneMove) -> Result<MatchedGraph> {
    let mut vertices = g.vertices().to_vec();
    let mut edges = g.edges().to_vec();
    match mv {
        GrapheneMove::Conjugate(r) => return Ok(k_inverse(&apply(&k_map(g)?, r)?)),
        GrapheneMove::G4 { edge } => {
            let e = matched_edge(g, edge)?;
            for v in edges[e].ends {
                vertices[v].decoration = vertices[v].decoration.toggled();
            }
        }
        GrapheneMove::G5 { edge, side } => {
            let e = matched_edge(g, edge)?;
            let v = edges[e].vertex_at(*side);
            vertices[v].decoration = vertices[v].decoration.toggled();
            let m = edges[e].matching.as_mut().unwrap();
            m.sign = m.sign.flipped();
        }
        GrapheneMove::M5 { vertex } => {
            let v = g.vertex_index(vertex).ok_or_else(|| Error::PatternMismatch(format!("no vertex {vertex}")))?;
            vertices[v].decoration = vertices[v].decoration.toggled();
            vertices[v].rotation = reversed(vertices[v].rotation);
        }
        GrapheneMove::Flip { vertices: ids } => {
            let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
            return flip_region(g, &ids);
        }
    }
    g.with_parts(vertices, edges)
}

/// Number of edges with exactly one end in `region`.
pub fn cut_size(g: &MatchedGraph, region: &[bool]) -> usize {
    g.edges().iter().filter(|e| region[e.ends[0]] != region[e.ends[1]]).count()
}

/// Turns a region of a planar drawing over: every rotation in the region is
/// reversed and decorations stay as they are. The region may meet the rest
/// of the graph in at most two edges.
pub fn flip_region(g: &MatchedGraph, region: &[&str]) -> Result<MatchedGraph> {
    require_genus_zero(g)?;
    let mut inside = vec![false; g.vertices().len()];
    for id in region {
        let v = g.vertex_index(id).ok_or_else(|| Error::PatternMismatch(format!("no vertex {id}")))?;
        inside[v] = true;
    }
    let cut = cut_size(g, &inside);
    if cut > 2 {
        return Err(Error::CutTooLarge(cut));
    }
    let mut vertices = g.vertices().to_vec();
    for (v, _) in inside.iter().enumerate().filter(|(_, &i)| i) {
        vertices[v].rotation = reversed(vertices[v].rotation);
    }
    let out = g.with_parts(vertices, g.edges().to_vec())?;
    match genus(&out)? {
        0 => Ok(out),
        k => Err(Error::Construction(format!("flipped drawing has genus {k}"))),
    }
}

/// `k_map(k_inverse(d))` equals `d` up to relabeling and rotation.
pub fn round_trip_code(d: &GaussCode) -> bool {
    canonical_key(&k_map(&k_inverse(d)).expect("K inverse output is a perfect matching drawing")) == canonical_key(d)
}

/// Searches for graphene moves from `k_inverse(k_map(g))` back to `g`. The
/// graphene moves are Reidemeister moves under K, and M5, G4 and G5 leave K
/// unchanged, so the search runs on the two Gauss codes.
pub fn round_trip_graph(g: &MatchedGraph, budget: Budget) -> Result<SearchResult> {
    let d = k_map(g)?;
    let back = k_map(&k_inverse(&d))?;
    Ok(equivalent_within(&back, &d, budget))
}
