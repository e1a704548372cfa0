//! Matched diagrams: trivalent ribbon graphs with solid/hollow vertices and a
//! directed, signed perfect matching. Also the line-based text codec.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result, ValidationReport};
use crate::ids::natural_cmp;
use crate::simple::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    Solid,
    Hollow,
}

impl Decoration {
    pub fn toggled(self) -> Self {
        match self {
            Decoration::Solid => Decoration::Hollow,
            Decoration::Hollow => Decoration::Solid,
        }
    }
}

/// One of the two ends of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Self {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::A => 'a',
            Side::B => 'b',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flipped(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_value(v: i32) -> Self {
        if v >= 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// Reference to one end of an edge, by edge index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndRef {
    pub edge: usize,
    pub side: Side,
}

/// Sign and dotted end of a matched edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MatchData {
    pub sign: Sign,
    pub dot: Side,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub id: String,
    pub decoration: Decoration,
    /// Incident edge-ends in cyclic order.
    pub rotation: [EndRef; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub matching: Option<MatchData>,
    /// Vertex index holding end A and end B.
    pub ends: [usize; 2],
}

impl Edge {
    pub fn is_matched(&self) -> bool {
        self.matching.is_some()
    }

    pub fn vertex_at(&self, side: Side) -> usize {
        self.ends[side.index()]
    }
}

/// A trivalent ribbon graph with a directed perfect matching.
///
/// Vertices and edges are kept sorted by natural id order, so every traversal
/// that starts from "the lowest id" is just index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatchedGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    free_loops: Vec<String>,
}

/// String-keyed description of a vertex, as written in the text format.
#[derive(Clone, Debug)]
pub struct VertexSpec {
    pub id: String,
    pub decoration: Decoration,
    pub rotation: [(String, Side); 3],
}

#[derive(Clone, Debug)]
pub struct EdgeSpec {
    pub id: String,
    pub matching: Option<MatchData>,
}

#[derive(Clone, Debug, Default)]
pub struct MatchedGraphBuilder {
    vertices: Vec<VertexSpec>,
    edges: Vec<EdgeSpec>,
    loops: Vec<String>,
}

impl MatchedGraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, id: &str, decoration: Decoration, rotation: [(&str, Side); 3]) -> Self {
        self.push_vertex(VertexSpec {
            id: id.to_string(),
            decoration,
            rotation: rotation.map(|(e, s)| (e.to_string(), s)),
        });
        self
    }

    pub fn edge(mut self, id: &str) -> Self {
        self.push_edge(EdgeSpec { id: id.to_string(), matching: None });
        self
    }

    pub fn medge(mut self, id: &str, sign: Sign, dot: Side) -> Self {
        self.push_edge(EdgeSpec { id: id.to_string(), matching: Some(MatchData { sign, dot }) });
        self
    }

    pub fn free_loop(mut self, id: &str) -> Self {
        self.loops.push(id.to_string());
        self
    }

    pub fn push_vertex(&mut self, v: VertexSpec) {
        self.vertices.push(v);
    }

    pub fn push_edge(&mut self, e: EdgeSpec) {
        self.edges.push(e);
    }

    pub fn push_loop(&mut self, id: String) {
        self.loops.push(id);
    }

    pub fn build(self) -> Result<MatchedGraph> {
        MatchedGraph::from_specs(self.vertices, self.edges, self.loops)
    }
}

impl MatchedGraph {
    pub fn builder() -> MatchedGraphBuilder {
        MatchedGraphBuilder::new()
    }

    pub fn from_specs(
        mut vspecs: Vec<VertexSpec>,
        mut especs: Vec<EdgeSpec>,
        mut loops: Vec<String>,
    ) -> Result<Self> {
        let mut report = ValidationReport::default();
        vspecs.sort_by(|a, b| natural_cmp(&a.id, &b.id));
        especs.sort_by(|a, b| natural_cmp(&a.id, &b.id));
        loops.sort_by(|a, b| natural_cmp(a, b));

        for w in vspecs.windows(2) {
            if w[0].id == w[1].id {
                report.push("duplicate-vertex", "duplicate vertex id", vec![w[0].id.clone()]);
            }
        }
        let mut names: Vec<&str> = especs.iter().map(|e| e.id.as_str()).chain(loops.iter().map(String::as_str)).collect();
        names.sort_by(|a, b| natural_cmp(a, b));
        for w in names.windows(2) {
            if w[0] == w[1] {
                report.push("duplicate-edge", "duplicate edge id", vec![w[0].to_string()]);
            }
        }

        let edge_index: HashMap<&str, usize> = especs.iter().enumerate().map(|(i, e)| (e.id.as_str(), i)).collect();
        let mut holder: Vec<[Vec<usize>; 2]> = vec![[Vec::new(), Vec::new()]; especs.len()];
        let mut vertices = Vec::with_capacity(vspecs.len());
        for (vi, vs) in vspecs.iter().enumerate() {
            let mut rot = [EndRef { edge: 0, side: Side::A }; 3];
            let mut ok = true;
            for (k, (eid, side)) in vs.rotation.iter().enumerate() {
                match edge_index.get(eid.as_str()) {
                    Some(&ei) => {
                        rot[k] = EndRef { edge: ei, side: *side };
                        holder[ei][side.index()].push(vi);
                    }
                    None => {
                        ok = false;
                        report.push("unknown-edge", "rotation names an undeclared edge", vec![vs.id.clone(), eid.clone()]);
                    }
                }
            }
            if ok && (rot[0] == rot[1] || rot[1] == rot[2] || rot[0] == rot[2]) {
                report.push("repeated-end", "rotation repeats an edge-end", vec![vs.id.clone()]);
            }
            vertices.push(Vertex { id: vs.id.clone(), decoration: vs.decoration, rotation: rot });
        }

        let mut edges = Vec::with_capacity(especs.len());
        for (ei, es) in especs.iter().enumerate() {
            let mut ends = [usize::MAX; 2];
            for side in [Side::A, Side::B] {
                let h = &holder[ei][side.index()];
                match h.len() {
                    1 => ends[side.index()] = h[0],
                    0 => report.push(
                        "dangling-end",
                        format!("edge-end {}.{} is not in any rotation", es.id, side.letter()),
                        vec![es.id.clone()],
                    ),
                    _ => report.push(
                        "shared-end",
                        format!("edge-end {}.{} appears in more than one rotation", es.id, side.letter()),
                        vec![es.id.clone()],
                    ),
                }
            }
            edges.push(Edge { id: es.id.clone(), matching: es.matching, ends });
        }

        if report.is_empty() {
            let mut matched_at = vec![0usize; vertices.len()];
            for e in &edges {
                if e.is_matched() {
                    if e.ends[0] == e.ends[1] {
                        report.push("matched-self-loop", "matched edge is a self-loop", vec![e.id.clone()]);
                    }
                    matched_at[e.ends[0]] += 1;
                    matched_at[e.ends[1]] += 1;
                }
            }
            for (v, &count) in vertices.iter().zip(&matched_at) {
                if count != 1 {
                    report.push(
                        "matching-not-perfect",
                        format!("matching not perfect: vertex {} meets {} matched edge-ends", v.id, count),
                        vec![v.id.clone()],
                    );
                }
            }
        }
        report.into_result()?;
        let g = MatchedGraph { vertices, edges, free_loops: loops };
        debug_assert!(g.check_complement_is_cycles());
        Ok(g)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn free_loops(&self) -> &[String] {
        &self.free_loops
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| natural_cmp(&v.id, id)).ok()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.binary_search_by(|e| natural_cmp(&e.id, id)).ok()
    }

    pub fn end_vertex(&self, end: EndRef) -> usize {
        self.edges[end.edge].vertex_at(end.side)
    }

    /// Slot of `end` inside its vertex's rotation.
    pub fn slot_of(&self, end: EndRef) -> usize {
        let v = self.end_vertex(end);
        self.vertices[v].rotation.iter().position(|&r| r == end).expect("end in its rotation")
    }

    /// The matched edge-end at vertex `v`.
    pub fn matched_end(&self, v: usize) -> EndRef {
        *self.vertices[v]
            .rotation
            .iter()
            .find(|r| self.edges[r.edge].is_matched())
            .expect("perfect matching")
    }

    pub fn matched_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(|(_, e)| e.is_matched()).map(|(i, _)| i)
    }

    pub fn matched_count(&self) -> usize {
        self.matched_edges().count()
    }

    pub fn is_all_solid(&self) -> bool {
        self.vertices.iter().all(|v| v.decoration == Decoration::Solid)
    }

    /// Rebuilds with modified vertex and edge records; re-validates.
    pub(crate) fn with_parts(&self, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        let g = MatchedGraph { vertices, edges, free_loops: self.free_loops.clone() };
        Self::parse(&g.to_string())
    }

    pub(crate) fn with_parts_unchecked(&self, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Self {
        MatchedGraph { vertices, edges, free_loops: self.free_loops.clone() }
    }

    /// Abstract multigraph underneath, forgetting rotations and decorations.
    pub fn underlying(&self) -> Graph {
        Graph::new(
            self.vertices.iter().map(|v| v.id.clone()).collect(),
            self.edges.iter().map(|e| (e.ends[0], e.ends[1])).collect(),
            self.free_loops.len(),
        )
    }

    fn check_complement_is_cycles(&self) -> bool {
        self.vertices.iter().enumerate().all(|(vi, v)| {
            v.rotation.iter().filter(|r| !self.edges[r.edge].is_matched()).count() == 2
                && self.end_vertex(self.matched_end(vi)) == vi
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_matched_graph(text)
    }

    fn end_token(&self, end: EndRef) -> String {
        format!("{}.{}", self.edges[end.edge].id, end.side.letter())
    }
}

impl fmt::Display for MatchedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            let dec = match v.decoration {
                Decoration::Solid => "solid",
                Decoration::Hollow => "hollow",
            };
            writeln!(
                f,
                "vertex {} {} {} {} {}",
                v.id,
                dec,
                self.end_token(v.rotation[0]),
                self.end_token(v.rotation[1]),
                self.end_token(v.rotation[2])
            )?;
        }
        for e in &self.edges {
            match e.matching {
                None => writeln!(f, "edge {}", e.id)?,
                Some(m) => writeln!(f, "medge {} {} {}", e.id, m.sign.symbol(), m.dot.letter())?,
            }
        }
        for l in &self.free_loops {
            writeln!(f, "loop {l}")?;
        }
        Ok(())
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

/// Splits a line into `(column, token)` pairs, dropping any `#` comment.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in body.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &body[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &body[s..]));
    }
    out
}

fn parse_end(tok: &str, line: usize, col: usize) -> Result<(String, Side)> {
    let (e, s) = tok.rsplit_once('.').ok_or_else(|| syntax(line, col, format!("expected <edge>.a or <edge>.b, got `{tok}`")))?;
    let side = match s {
        "a" => Side::A,
        "b" => Side::B,
        _ => return Err(syntax(line, col + e.len() + 1, format!("edge-end suffix must be a or b, got `{s}`"))),
    };
    if e.is_empty() {
        return Err(syntax(line, col, "empty edge id"));
    }
    Ok((e.to_string(), side))
}

pub fn parse_matched_graph(text: &str) -> Result<MatchedGraph> {
    let mut b = MatchedGraphBuilder::new();
    for (ln, line) in text.lines().enumerate() {
        let ln = ln + 1;
        let toks = tokens(line);
        let Some(&(col, kw)) = toks.first() else { continue };
        let want = |n: usize| -> Result<()> {
            if toks.len() != n {
                let c = toks.get(n).map(|t| t.0).unwrap_or(line.len() + 1);
                Err(syntax(ln, c, format!("`{kw}` takes {} fields, found {}", n - 1, toks.len() - 1)))
            } else {
                Ok(())
            }
        };
        match kw {
            "vertex" => {
                want(6)?;
                let decoration = match toks[2].1 {
                    "solid" => Decoration::Solid,
                    "hollow" => Decoration::Hollow,
                    other => return Err(syntax(ln, toks[2].0, format!("expected solid or hollow, got `{other}`"))),
                };
                let r0 = parse_end(toks[3].1, ln, toks[3].0)?;
                let r1 = parse_end(toks[4].1, ln, toks[4].0)?;
                let r2 = parse_end(toks[5].1, ln, toks[5].0)?;
                b.push_vertex(VertexSpec { id: toks[1].1.to_string(), decoration, rotation: [r0, r1, r2] });
            }
            "edge" => {
                want(2)?;
                b.push_edge(EdgeSpec { id: toks[1].1.to_string(), matching: None });
            }
            "medge" => {
                want(4)?;
                let sign = match toks[2].1 {
                    "+" => Sign::Pos,
                    "-" => Sign::Neg,
                    other => return Err(syntax(ln, toks[2].0, format!("expected + or -, got `{other}`"))),
                };
                let dot = match toks[3].1 {
                    "a" => Side::A,
                    "b" => Side::B,
                    other => return Err(syntax(ln, toks[3].0, format!("expected a or b, got `{other}`"))),
                };
                b.push_edge(EdgeSpec { id: toks[1].1.to_string(), matching: Some(MatchData { sign, dot }) });
            }
            "loop" => {
                want(2)?;
                b.push_loop(toks[1].1.to_string());
            }
            other => return Err(syntax(ln, col, format!("unknown keyword `{other}`"))),
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn theta_fixture_parses() {
        let g = MatchedGraph::parse(fixtures::THETA).unwrap();
        assert_eq!(g.vertices().len(), 2);
        assert_eq!(g.edges().len(), 3);
        assert_eq!(g.matched_count(), 1);
        assert_eq!(g.to_string(), fixtures::THETA);
    }

    #[test]
    fn single_loop_is_the_ungraph() {
        let g = MatchedGraph::parse("loop l1").unwrap();
        assert_eq!(g.vertices().len(), 0);
        assert_eq!(g.free_loops(), ["l1"]);
    }

    #[test]
    fn vertex_with_two_matched_edges_is_rejected() {
        let text = "vertex u solid e1.a e2.a e3.a\nvertex v solid e1.b e3.b e2.b\nmedge e1 + a\nmedge e2 + a\nedge e3\n";
        let err = MatchedGraph::parse(text).unwrap_err();
        assert!(err.to_string().contains("matching not perfect"), "{err}");
    }

    #[test]
    fn matched_self_loop_is_rejected() {
        let text = "vertex u solid e1.a e1.b e2.a\nvertex v solid e2.b e3.a e3.b\nmedge e1 + a\nedge e2\nedge e3\n";
        let Err(Error::Invalid(r)) = MatchedGraph::parse(text) else { panic!() };
        assert!(r.violations.iter().any(|v| v.code == "matched-self-loop"));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = MatchedGraph::parse("vertex u solid e1.a e2.a\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, .. }));
        let err = MatchedGraph::parse("edge e1\nvertex u plaid e1.a e1.b e2.a").unwrap_err();
        assert_eq!(err, syntax(2, 10, "expected solid or hollow, got `plaid`"));
        let err = MatchedGraph::parse("frob x").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, column: 1, .. }));
    }

    #[test]
    fn dangling_and_shared_ends() {
        let text = "vertex u solid e1.a e2.a e3.a\nvertex v solid e1.b e2.a e3.b\nmedge e1 + a\nedge e2\nedge e3\n";
        let Err(Error::Invalid(r)) = MatchedGraph::parse(text) else { panic!() };
        let codes: Vec<_> = r.violations.iter().map(|v| v.code).collect();
        assert!(codes.contains(&"shared-end") && codes.contains(&"dangling-end"), "{codes:?}");
    }

    #[test]
    fn comments_and_order_are_ignored() {
        let text = "# theta, shuffled\nedge e3\nmedge e1 + a # matched\nvertex v solid e1.b e3.b e2.b\nedge e2\nvertex u solid e1.a e2.a e3.a\n";
        assert_eq!(MatchedGraph::parse(text).unwrap(), MatchedGraph::parse(fixtures::THETA).unwrap());
    }
}
