//! Canonical forms of Gauss codes up to relabeling, rotation and reordering
//! of components.

use crate::gauss::{GaussCode, Pass, Strand};
use crate::matched::Sign;

/// Key whose lexicographic minimum over all presentations is taken: for
/// each component its length, then one number per pass
/// (`4 * label + 2 * under + negative`), labels by first appearance.
pub type CanonKey = Vec<u32>;

struct Search<'a> {
    d: &'a GaussCode,
    used: Vec<bool>,
    map: Vec<u32>,
    next: u32,
    key: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    /// `true` while `key` is not above the best key on their common prefix.
    fn promising(&self) -> bool {
        match &self.best {
            None => true,
            Some(b) => self.key.as_slice() <= &b[..self.key.len()],
        }
    }

    fn rec(&mut self) {
        let k = self.d.component_count();
        if self.used.iter().all(|&u| u) {
            if self.best.as_ref().is_none_or(|b| self.key < *b) {
                self.best = Some(self.key.clone());
            }
            return;
        }
        for c in 0..k {
            if self.used[c] {
                continue;
            }
            let comp = &self.d.components()[c];
            let len = comp.len();
            self.used[c] = true;
            for r in 0..len.max(1) {
                let (mark, saved_next) = (self.key.len(), self.next);
                let mut assigned = Vec::new();
                self.key.push(len as u32);
                let mut ok = self.promising();
                for i in 0..len {
                    if !ok {
                        break;
                    }
                    let p = comp[(r + i) % len];
                    if self.map[p.crossing] == u32::MAX {
                        self.map[p.crossing] = self.next;
                        self.next += 1;
                        assigned.push(p.crossing);
                    }
                    let under = (p.strand == Strand::Under) as u32;
                    let neg = (self.d.sign(p.crossing) == Sign::Neg) as u32;
                    self.key.push(4 * self.map[p.crossing] + 2 * under + neg);
                    ok = self.promising();
                }
                if ok {
                    self.rec();
                }
                for x in assigned {
                    self.map[x] = u32::MAX;
                }
                self.next = saved_next;
                self.key.truncate(mark);
            }
            self.used[c] = false;
        }
    }
}

pub fn canonical_key(d: &GaussCode) -> CanonKey {
    let mut s = Search {
        d,
        used: vec![false; d.component_count()],
        map: vec![u32::MAX; d.crossing_count()],
        next: 0,
        key: Vec::with_capacity(d.pass_count() + d.component_count()),
        best: None,
    };
    s.rec();
    s.best.unwrap_or_default()
}

/// The code a key describes, with labels `1..`.
pub fn code_from_key(key: &[u32]) -> GaussCode {
    let mut comps = Vec::new();
    let mut signs = Vec::new();
    let mut i = 0;
    while i < key.len() {
        let len = key[i] as usize;
        let comp: Vec<Pass> = key[i + 1..i + 1 + len]
            .iter()
            .map(|&v| {
                let c = (v / 4) as usize;
                if signs.len() <= c {
                    signs.resize(c + 1, Sign::Pos);
                }
                signs[c] = if v & 1 == 1 { Sign::Neg } else { Sign::Pos };
                Pass { crossing: c, strand: if v & 2 == 2 { Strand::Under } else { Strand::Over } }
            })
            .collect();
        comps.push(comp);
        i += 1 + len;
    }
    GaussCode::from_parts_unchecked(signs, comps)
}

/// Text of the minimal presentation; equal exactly for codes that differ
/// only by crossing labels, rotation of components and their order.
pub fn canonical_code(d: &GaussCode) -> String {
    code_from_key(&canonical_key(d)).to_string()
}
