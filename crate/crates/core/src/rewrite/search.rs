//! Bounded bidirectional breadth-first search for Reidemeister equivalence.

use std::collections::HashMap;

use rayon::prelude::*;

use super::canon::{canonical_key, CanonKey};
use super::moves::{reidemeister_neighbors, MoveTrace};
use crate::gauss::GaussCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Total number of moves on the two sides together.
    pub max_depth: usize,
    /// Codes stored over both sides.
    pub max_nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_depth: 6, max_nodes: 200_000 }
    }
}

impl Budget {
    pub fn depth(max_depth: usize) -> Self {
        Budget { max_depth, ..Self::default() }
    }
}

/// Outcome of a bounded search. The search never concludes inequivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchResult {
    Found(MoveTrace),
    NotFoundWithinBudget,
}

impl SearchResult {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchResult::Found(_))
    }
}

struct Tree {
    keys: Vec<CanonKey>,
    codes: Vec<GaussCode>,
    parent: Vec<usize>,
    index: HashMap<CanonKey, usize>,
    layer: std::ops::Range<usize>,
    depth: usize,
}

impl Tree {
    fn new(d: &GaussCode) -> Self {
        let k = canonical_key(d);
        Tree {
            keys: vec![k.clone()],
            codes: vec![d.clone()],
            parent: vec![usize::MAX],
            index: HashMap::from([(k, 0)]),
            layer: 0..1,
            depth: 0,
        }
    }

    fn chain(&self, mut i: usize) -> Vec<CanonKey> {
        let mut out = Vec::new();
        while i != usize::MAX {
            out.push(self.keys[i].clone());
            i = self.parent[i];
        }
        out
    }
}

enum Step {
    Met(usize, usize),
    Continue,
    Exhausted,
}

/// Expands one layer of `tree`; reports the first new code (in a fixed
/// order) that `other` already holds.
fn expand(tree: &mut Tree, other: &Tree, max_nodes: usize, forward: bool) -> Step {
    let layer = tree.layer.clone();
    let found: Vec<Vec<(CanonKey, GaussCode)>> = layer
        .clone()
        .into_par_iter()
        .map(|i| {
            reidemeister_neighbors(&tree.codes[i]).into_iter().map(|(c, _)| (canonical_key(&c), c)).collect()
        })
        .collect();
    let start = tree.keys.len();
    for (i, list) in layer.zip(found) {
        for (k, c) in list {
            if tree.index.contains_key(&k) {
                continue;
            }
            let id = tree.keys.len();
            tree.index.insert(k.clone(), id);
            tree.keys.push(k.clone());
            tree.codes.push(c);
            tree.parent.push(i);
            if let Some(&j) = other.index.get(&k) {
                return if forward { Step::Met(id, j) } else { Step::Met(j, id) };
            }
            if tree.keys.len() + other.keys.len() > max_nodes {
                return Step::Exhausted;
            }
        }
    }
    tree.layer = start..tree.keys.len();
    tree.depth += 1;
    if tree.layer.is_empty() {
        Step::Exhausted
    } else {
        Step::Continue
    }
}

/// Replays a chain of canonical keys from `d` with concrete moves.
fn realize(d: &GaussCode, path: &[CanonKey]) -> MoveTrace {
    let mut cur = d.clone();
    let mut steps = Vec::new();
    for k in path {
        let (next, m) = reidemeister_neighbors(&cur)
            .into_iter()
            .find(|(c, _)| canonical_key(c) == *k)
            .expect("consecutive search nodes are one move apart");
        steps.push(m);
        cur = next;
    }
    MoveTrace { steps }
}

/// Searches for a sequence of Reidemeister moves from `d1` to a code equal
/// to `d2` up to relabeling, rotation and reordering of components.
pub fn equivalent_within(d1: &GaussCode, d2: &GaussCode, budget: Budget) -> SearchResult {
    let mut fwd = Tree::new(d1);
    let mut bwd = Tree::new(d2);
    if fwd.keys[0] == bwd.keys[0] {
        return SearchResult::Found(MoveTrace::default());
    }
    loop {
        if fwd.depth + bwd.depth >= budget.max_depth {
            return SearchResult::NotFoundWithinBudget;
        }
        let step = if fwd.layer.len() <= bwd.layer.len() {
            expand(&mut fwd, &bwd, budget.max_nodes, true)
        } else {
            expand(&mut bwd, &fwd, budget.max_nodes, false)
        };
        match step {
            Step::Continue => {}
            Step::Exhausted => return SearchResult::NotFoundWithinBudget,
            Step::Met(i, j) => {
                let mut path = fwd.chain(i);
                path.reverse();
                path.extend(bwd.chain(j).into_iter().skip(1));
                return SearchResult::Found(realize(d1, &path[1..]));
            }
        }
    }
}
