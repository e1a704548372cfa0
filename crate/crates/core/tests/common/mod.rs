#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use grk_core::matched::{EdgeSpec, VertexSpec};
use grk_core::{
    reidemeister_neighbors, Decoration, GaussCode, MatchData, MatchedGraph, MatchedGraphBuilder, MoveTrace, Pass,
    Side, Sign, Strand,
};

pub fn gc(text: &str) -> GaussCode {
    GaussCode::parse(text).unwrap()
}

pub fn mg(text: &str) -> MatchedGraph {
    MatchedGraph::parse(text).unwrap()
}

fn sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

fn side(rng: &mut ChaCha8Rng) -> Side {
    if rng.gen() {
        Side::A
    } else {
        Side::B
    }
}

/// Random matched graph with `m` matched edges: a random 2-factor on `2m`
/// vertices (cycles of length at least 2), a random perfect matching on
/// top, random rotations, decorations, signs and dots, and sometimes a
/// free loop.
pub fn random_matched_graph(m: usize, rng: &mut ChaCha8Rng) -> MatchedGraph {
    let n = 2 * m;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = &order[..];
    while !rest.is_empty() {
        let mut len = if rest.len() <= 3 { rest.len() } else { rng.gen_range(2..=rest.len()) };
        if rest.len() - len == 1 {
            len = rest.len();
        }
        cycles.push(rest[..len].to_vec());
        rest = &rest[len..];
    }
    let mut ends: Vec<Vec<(String, Side)>> = vec![Vec::new(); n];
    let mut b = MatchedGraphBuilder::new();
    let mut k = 0;
    for c in &cycles {
        for i in 0..c.len() {
            let id = format!("u{k}");
            k += 1;
            ends[c[i]].push((id.clone(), Side::A));
            ends[c[(i + 1) % c.len()]].push((id.clone(), Side::B));
            b.push_edge(EdgeSpec { id, matching: None });
        }
    }
    let mut pairing: Vec<usize> = (0..n).collect();
    pairing.shuffle(rng);
    for (j, p) in pairing.chunks(2).enumerate() {
        let id = format!("m{j}");
        ends[p[0]].push((id.clone(), Side::A));
        ends[p[1]].push((id.clone(), Side::B));
        b.push_edge(EdgeSpec { id, matching: Some(MatchData { sign: sign(rng), dot: side(rng) }) });
    }
    for (v, mut e) in ends.into_iter().enumerate() {
        if rng.gen() {
            e.swap(1, 2);
        }
        let decoration = if rng.gen() { Decoration::Solid } else { Decoration::Hollow };
        let rotation = [e[0].clone(), e[1].clone(), e[2].clone()];
        b.push_vertex(VertexSpec { id: format!("v{v}"), decoration, rotation });
    }
    if rng.gen_ratio(1, 4) {
        b.push_loop("l0".into());
    }
    b.build().expect("random matched graph is well formed")
}

/// Random signed Gauss code with `n` crossings spread over `k` components
/// (some possibly empty).
pub fn random_code(n: usize, k: usize, rng: &mut ChaCha8Rng) -> GaussCode {
    let mut passes: Vec<Pass> = (0..n)
        .flat_map(|c| [Pass { crossing: c, strand: Strand::Over }, Pass { crossing: c, strand: Strand::Under }])
        .collect();
    passes.shuffle(rng);
    let mut cuts: Vec<usize> = (0..k - 1).map(|_| rng.gen_range(0..=passes.len())).collect();
    cuts.sort_unstable();
    let mut comps = Vec::new();
    let mut start = 0;
    for c in cuts.into_iter().chain([passes.len()]) {
        comps.push(passes[start..c].to_vec());
        start = c;
    }
    let signs = (0..n).map(|_| sign(rng)).collect();
    GaussCode::new(signs, comps).expect("each crossing has one over and one under pass")
}

/// Random walk that picks a move kind first, then a site of that kind.
pub fn random_walk(d: &GaussCode, steps: usize, rng: &mut ChaCha8Rng) -> (GaussCode, MoveTrace) {
    let mut cur = d.clone();
    let mut trace = MoveTrace::default();
    for _ in 0..steps {
        let ns = reidemeister_neighbors(&cur);
        let mut kinds: Vec<&str> = ns.iter().map(|(_, m)| m.name()).collect();
        kinds.sort_unstable();
        kinds.dedup();
        let Some(&kind) = kinds.choose(rng) else { break };
        let pick: Vec<_> = ns.iter().filter(|(_, m)| m.name() == kind).collect();
        let (next, m) = (*pick.choose(rng).unwrap()).clone();
        trace.steps.push(m);
        cur = next;
    }
    (cur, trace)
}

/// Arcs of a diagram: a new arc starts after every under pass. Returns the
/// arc count and, per crossing, `(over arc, arc in, arc out)`.
fn arcs(d: &GaussCode) -> (usize, Vec<[usize; 3]>) {
    let n = d.crossing_count();
    let mut rel = vec![[usize::MAX; 3]; n];
    let mut count = 0;
    for comp in d.components() {
        if comp.is_empty() {
            count += 1;
            continue;
        }
        let Some(first_under) = comp.iter().position(|p| p.strand == Strand::Under) else {
            for p in comp {
                rel[p.crossing][0] = count;
            }
            count += 1;
            continue;
        };
        let len = comp.len();
        let base = count;
        let unders = comp.iter().filter(|p| p.strand == Strand::Under).count();
        let mut arc = 0;
        for i in 1..=len {
            let p = comp[(first_under + i) % len];
            match p.strand {
                Strand::Over => rel[p.crossing][0] = base + arc,
                Strand::Under => {
                    rel[p.crossing][1] = base + arc;
                    arc = (arc + 1) % unders;
                    rel[p.crossing][2] = base + arc;
                }
            }
        }
        count += unders;
    }
    (count, rel)
}

/// Fox colorings mod `p` by trying every assignment of colors to arcs.
pub fn fox_oracle(d: &GaussCode, p: u64) -> u64 {
    let (count, rel) = arcs(d);
    let total = p.pow(count as u32);
    (0..total)
        .filter(|&x| {
            let col = |a: usize| (x / p.pow(a as u32)) % p;
            rel.iter().all(|&[o, i, j]| (2 * col(o) + 2 * p - col(i) - col(j)) % p == 0)
        })
        .count() as u64
}

/// 2-colorings by trying every assignment of colors to segments.
pub fn two_coloring_oracle(d: &GaussCode) -> usize {
    let lens: Vec<usize> = d.components().iter().map(|c| c.len().max(1)).collect();
    let total: usize = lens.iter().sum();
    (0..1u64 << total)
        .filter(|&bits| {
            let mut off = 0;
            lens.iter().zip(d.components()).all(|(&l, comp)| {
                let ok = comp.is_empty() || (0..l).all(|k| (bits >> (off + k) & 1) != (bits >> (off + (k + 1) % l) & 1));
                off += l;
                ok
            })
        })
        .count()
}
