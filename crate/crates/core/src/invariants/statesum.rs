//! Shared state-sum machinery: a list of sites, each with two ways of
//! reconnecting strands, over a fixed set of strand pieces.

use rayon::prelude::*;

use crate::error::{check_limit, Result};
use crate::functor::{a_resolution, edge_frame, resolution_pairs, Resolution};
use crate::gauss::GaussCode;
use crate::matched::{MatchedGraph, Sign};

pub const DEFAULT_LIMIT: usize = 20;

/// Strand pieces are `0..nodes`. Site `i` in state bit `b` joins the two
/// node pairs `sites[i][b]`. Bit 0 is the A-smoothing. `extra` counts
/// circles that meet no site.
#[derive(Clone, Debug)]
pub struct SiteModel {
    pub nodes: usize,
    pub extra: usize,
    pub sites: Vec<[[[usize; 2]; 2]; 2]>,
}

/// Circle structure of one state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateCircles {
    /// Circle index of every node; circles numbered by lowest node.
    pub label: Vec<usize>,
    /// Number of circles through sites (`extra` not included).
    pub count: usize,
}

impl SiteModel {
    pub fn from_code(d: &GaussCode) -> Self {
        let off = d.offsets();
        let comps = d.components();
        let out_arc = |(k, i): (usize, usize)| off[k] + i;
        let in_arc = |(k, i): (usize, usize)| off[k] + (i + comps[k].len() - 1) % comps[k].len();
        let pos = d.positions();
        let sites = pos
            .iter()
            .enumerate()
            .map(|(c, &[o, u])| {
                let oriented = [[in_arc(o), out_arc(u)], [in_arc(u), out_arc(o)]];
                let unoriented = [[in_arc(o), in_arc(u)], [out_arc(o), out_arc(u)]];
                match d.sign(c) {
                    Sign::Pos => [oriented, unoriented],
                    Sign::Neg => [unoriented, oriented],
                }
            })
            .collect();
        let extra = comps.iter().filter(|c| c.is_empty()).count();
        SiteModel { nodes: d.pass_count(), extra, sites }
    }

    /// Sites are the matched edges in index order; nodes are the unmatched
    /// edges in index order. Bit 0 is the resolution that K sends to the
    /// A-smoothing.
    pub fn from_graph(g: &MatchedGraph) -> Self {
        let mut node = vec![usize::MAX; g.edges().len()];
        let mut n = 0;
        for (i, e) in g.edges().iter().enumerate() {
            if !e.is_matched() {
                node[i] = n;
                n += 1;
            }
        }
        let sites = g
            .matched_edges()
            .map(|m| {
                let frame = edge_frame(g, m);
                let sign = g.edges()[m].matching.unwrap().sign;
                let a = a_resolution(sign);
                let b = match a {
                    Resolution::Parallel => Resolution::Cross,
                    Resolution::Cross => Resolution::Parallel,
                };
                let map = |r| resolution_pairs(frame, r).map(|p| p.map(|e| node[e.edge]));
                [map(a), map(b)]
            })
            .collect();
        SiteModel { nodes: n, extra: g.free_loops().len(), sites }
    }

    pub fn site_count(&self) -> usize {
        self.sites.len()
    }

    /// Circles of the state whose bit `i` is the choice at site `i`.
    pub fn circles(&self, state: u64) -> StateCircles {
        let mut parent: Vec<usize> = (0..self.nodes).collect();
        let count = self.union_state(state, &mut parent);
        let mut label = vec![usize::MAX; self.nodes];
        let mut root_label = vec![usize::MAX; self.nodes];
        let mut next = 0;
        for v in 0..self.nodes {
            let r = find(&mut parent, v);
            if root_label[r] == usize::MAX {
                root_label[r] = next;
                next += 1;
            }
            label[v] = root_label[r];
        }
        StateCircles { label, count }
    }

    fn union_state(&self, state: u64, parent: &mut [usize]) -> usize {
        let mut count = self.nodes;
        for (i, site) in self.sites.iter().enumerate() {
            for [a, b] in site[(state >> i & 1) as usize] {
                let (ra, rb) = (find(parent, a), find(parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    count -= 1;
                }
            }
        }
        count
    }

    /// Number of circles, `extra` included.
    pub fn circle_count(&self, state: u64, scratch: &mut Vec<usize>) -> usize {
        scratch.clear();
        scratch.extend(0..self.nodes);
        self.union_state(state, scratch) + self.extra
    }

    /// `hist[b][c]` = number of states with `b` B-smoothings and `c` circles.
    pub fn histogram(&self) -> Vec<Vec<u64>> {
        let n = self.site_count();
        let max_c = self.nodes + self.extra + 1;
        let total: u64 = 1 << n;
        let chunk = 1u64 << n.saturating_sub(6).min(14);
        let chunks = total.div_ceil(chunk);
        let empty = || vec![vec![0u64; max_c + 1]; n + 1];
        (0..chunks)
            .into_par_iter()
            .map(|k| {
                let mut h = empty();
                let mut scratch = Vec::with_capacity(self.nodes);
                for s in k * chunk..((k + 1) * chunk).min(total) {
                    h[s.count_ones() as usize][self.circle_count(s, &mut scratch)] += 1;
                }
                h
            })
            .reduce(empty, |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    for (x, y) in ra.iter_mut().zip(rb) {
                        *x += y;
                    }
                }
                a
            })
    }

    /// Sum over states of `f(state, circles)`, in parallel.
    pub fn sum_states<F>(&self, f: F) -> i128
    where
        F: Fn(u64, &StateCircles) -> i128 + Sync,
    {
        let n = self.site_count();
        (0..1u64 << n).into_par_iter().map(|s| f(s, &self.circles(s))).sum()
    }

    /// Like [`sum_states`](Self::sum_states), split by number of B-smoothings.
    pub fn sum_states_by_b<F>(&self, f: F) -> Vec<i128>
    where
        F: Fn(u64, &StateCircles) -> i128 + Sync,
    {
        let n = self.site_count();
        (0..1u64 << n)
            .into_par_iter()
            .fold(
                || vec![0i128; n + 1],
                |mut acc, s| {
                    acc[s.count_ones() as usize] += f(s, &self.circles(s));
                    acc
                },
            )
            .reduce(
                || vec![0i128; n + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    }

    /// Circle pairs that must receive different labels in state `s`: the two
    /// strands at every site.
    pub fn conflicts(&self, state: u64, c: &StateCircles) -> Vec<[usize; 2]> {
        self.sites
            .iter()
            .enumerate()
            .map(|(i, site)| {
                let pairs = site[(state >> i & 1) as usize];
                [c.label[pairs[0][0]], c.label[pairs[1][0]]]
            })
            .collect()
    }

    pub(crate) fn check(&self, limit: usize) -> Result<()> {
        check_limit("state-sum sites", self.site_count(), limit.min(62))
    }
}

pub(crate) fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// Number of proper `k`-colorings of a graph on `n` vertices; `0` if any
/// edge is a loop.
pub fn count_colorings(n: usize, edges: &[[usize; 2]], k: u32) -> u128 {
    if edges.iter().any(|e| e[0] == e[1]) {
        return 0;
    }
    let mut adj = vec![Vec::new(); n];
    for &[a, b] in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // components color independently
    let mut comp = vec![usize::MAX; n];
    let mut total: u128 = 1;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut order = vec![s];
        comp[s] = s;
        let mut i = 0;
        while i < order.len() {
            for &w in &adj[order[i]] {
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    order.push(w);
                }
            }
            i += 1;
        }
        let pos: std::collections::HashMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let back: Vec<Vec<usize>> =
            order.iter().map(|&v| adj[v].iter().map(|w| pos[w]).filter(|&j| j < pos[&v]).collect()).collect();
        let mut color = vec![0u32; order.len()];
        total *= count_rec(0, &back, &mut color, k);
        if total == 0 {
            return 0;
        }
    }
    total
}

fn count_rec(i: usize, back: &[Vec<usize>], color: &mut [u32], k: u32) -> u128 {
    if i == back.len() {
        return 1;
    }
    // the first vertex of a component is symmetric under color permutations
    if i == 0 {
        color[0] = 0;
        return k as u128 * count_rec(1, back, color, k);
    }
    let mut sum = 0;
    for c in 0..k {
        if back[i].iter().all(|&j| color[j] != c) {
            color[i] = c;
            sum += count_rec(i + 1, back, color, k);
        }
    }
    sum
}
