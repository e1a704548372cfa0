//! Abstract multigraphs: isomorphism, perfect matchings, Tait colorings.

use std::collections::HashMap;
use std::fmt;

use crate::error::{check_limit, Error, Result};
use crate::ids::natural_cmp;
use crate::matched::tokens;

pub const ISOMORPHISM_VERTEX_LIMIT: usize = 16;
pub const MATCHING_VERTEX_LIMIT: usize = 20;
pub const TAIT_EDGE_LIMIT: usize = 20;

/// Undirected multigraph, possibly with self-loops, plus a count of
/// vertex-free circles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    free_loops: usize,
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: Vec<(usize, usize)>, free_loops: usize) -> Self {
        Self { labels, edges, free_loops }
    }

    /// Unlabelled graph on `n` vertices named `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect(), edges.to_vec(), 0)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.degree(v) == 3)
    }

    fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0u32; n]; n];
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut raw_edges: Vec<(String, String)> = Vec::new();
        let mut free_loops = 0;
        for (ln, line) in text.lines().enumerate() {
            let toks = tokens(line);
            let Some(&(col, kw)) = toks.first() else { continue };
            let err = |c: usize, m: &str| Error::Syntax { line: ln + 1, column: c, message: m.to_string() };
            match (kw, toks.len()) {
                ("vertex", 2) => labels.push(toks[1].1.to_string()),
                ("edge", 3) => raw_edges.push((toks[1].1.to_string(), toks[2].1.to_string())),
                ("loop", 1) | ("loop", 2) => free_loops += 1,
                ("vertex" | "edge" | "loop", _) => return Err(err(col, "wrong number of fields")),
                _ => return Err(err(col, "expected `vertex <v>`, `edge <u> <v>` or `loop`")),
            }
        }
        for (a, b) in &raw_edges {
            for x in [a, b] {
                if !labels.contains(x) {
                    labels.push(x.clone());
                }
            }
        }
        labels.sort_by(|a, b| natural_cmp(a, b));
        labels.dedup();
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let edges = raw_edges.iter().map(|(a, b)| (index[a.as_str()], index[b.as_str()])).collect();
        Ok(Self { labels, edges, free_loops })
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.labels {
            writeln!(f, "vertex {l}")?;
        }
        for &(a, b) in &self.edges {
            writeln!(f, "edge {} {}", self.labels[a], self.labels[b])?;
        }
        for _ in 0..self.free_loops {
            writeln!(f, "loop")?;
        }
        Ok(())
    }
}

/// Backtracking isomorphism test on multigraphs (labels, matchings and
/// rotations are ignored).
pub fn graph_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    check_limit("graph", g1.vertex_count().max(g2.vertex_count()), ISOMORPHISM_VERTEX_LIMIT)?;
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edges.len() != g2.edges.len() || g1.free_loops != g2.free_loops {
        return Ok(false);
    }
    let m1 = g1.multiplicity_matrix();
    let m2 = g2.multiplicity_matrix();
    let profile = |m: &Vec<Vec<u32>>, v: usize| {
        let mut row: Vec<u32> = m[v].clone();
        let lp = row[v];
        row.sort_unstable();
        (lp, row)
    };
    let p1: Vec<_> = (0..n).map(|v| profile(&m1, v)).collect();
    let p2: Vec<_> = (0..n).map(|v| profile(&m2, v)).collect();
    let mut s1 = p1.clone();
    let mut s2 = p2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(false);
    }

    fn extend(
        k: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        m1: &[Vec<u32>],
        m2: &[Vec<u32>],
        p1: &[(u32, Vec<u32>)],
        p2: &[(u32, Vec<u32>)],
    ) -> bool {
        let n = map.len();
        if k == n {
            return true;
        }
        for t in 0..n {
            if used[t] || p1[k] != p2[t] {
                continue;
            }
            if (0..k).all(|j| m1[k][j] == m2[t][map[j]]) {
                map[k] = t;
                used[t] = true;
                if extend(k + 1, map, used, m1, m2, p1, p2) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(0, &mut map, &mut used, &m1, &m2, &p1, &p2))
}

/// All perfect matchings as sorted edge-index lists, in lexicographic order.
pub fn enumerate_perfect_matchings(g: &Graph) -> Result<Vec<Vec<usize>>> {
    check_limit("graph", g.vertex_count(), MATCHING_VERTEX_LIMIT)?;
    let n = g.vertex_count();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(a, b)) in g.edges.iter().enumerate() {
        if a != b {
            incident[a].push(i);
            incident[b].push(i);
        }
    }
    let mut out = Vec::new();
    let mut covered = vec![false; n];
    let mut chosen = Vec::new();

    fn go(
        g: &Graph,
        incident: &[Vec<usize>],
        covered: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(v) = covered.iter().position(|c| !c) else {
            let mut m = chosen.clone();
            m.sort_unstable();
            out.push(m);
            return;
        };
        for &e in &incident[v] {
            let (a, b) = g.edges[e];
            let w = if a == v { b } else { a };
            if covered[w] {
                continue;
            }
            covered[v] = true;
            covered[w] = true;
            chosen.push(e);
            go(g, incident, covered, chosen, out);
            chosen.pop();
            covered[v] = false;
            covered[w] = false;
        }
    }

    go(g, &incident, &mut covered, &mut chosen, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

/// Number of proper 3-edge-colorings. Each vertex-free circle contributes a
/// factor of 3; a self-loop forces zero.
pub fn tait_count_bruteforce(g: &Graph) -> Result<u64> {
    check_limit("graph edges", g.edges.len(), TAIT_EDGE_LIMIT)?;
    if g.edges.iter().any(|&(a, b)| a == b) {
        return Ok(0);
    }
    let n = g.vertex_count();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(a, b)) in g.edges.iter().enumerate() {
        incident[a].push(i);
        incident[b].push(i);
    }
    let mut colors = vec![u8::MAX; g.edges.len()];

    fn go(k: usize, g: &Graph, incident: &[Vec<usize>], colors: &mut Vec<u8>) -> u64 {
        if k == colors.len() {
            return 1;
        }
        let (a, b) = g.edges[k];
        let mut total = 0;
        for c in 0..3u8 {
            let clash = incident[a].iter().chain(&incident[b]).any(|&e| e != k && colors[e] == c);
            if !clash {
                colors[k] = c;
                total += go(k + 1, g, incident, colors);
                colors[k] = u8::MAX;
            }
        }
        total
    }

    let count = go(0, g, &incident, &mut colors);
    Ok(count * 3u64.pow(g.free_loops as u32))
}

/// Standard graphs used throughout the tests.
pub mod named {
    use super::Graph;

    pub fn theta() -> Graph {
        Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)])
    }

    pub fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    pub fn k33() -> Graph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        Graph::from_edges(6, &e)
    }

    pub fn cube() -> Graph {
        let mut e = Vec::new();
        for v in 0..8usize {
            for bit in 0..3 {
                let w = v ^ (1 << bit);
                if v < w {
                    e.push((v, w));
                }
            }
        }
        Graph::from_edges(8, &e)
    }

    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &e)
    }

    pub fn franklin() -> Graph {
        let mut e = Vec::new();
        for i in 0..12usize {
            e.push((i, (i + 1) % 12));
        }
        for i in (0..12usize).step_by(2) {
            e.push((i, (i + 5) % 12));
        }
        Graph::from_edges(12, &e)
    }
}
