//! Resolution cube over GF(2) with the Frobenius-algebra merge and split maps.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::gf2::EchelonBasis;
use crate::error::{Error, Result};
use crate::invariants::{SiteModel, StateCircles};

/// Generator bit `k` set means circle `k` carries `v-`.
type Gen = (u64, u64);

enum Kind {
    Merge { a: usize, b: usize, c: usize },
    Split { a: usize, b: usize, c: usize },
    Zero,
}

/// Treatment of cube edges along which the circle count does not change.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BifurcationPolicy {
    /// Refuse to build the cube.
    #[default]
    Reject,
    /// Assign the zero map, as is standard over GF(2).
    ZeroMap,
}

struct EdgeMap {
    target: u64,
    kind: Kind,
    /// Uninvolved circles: `(source circle, target circle)`.
    other: Vec<(usize, usize)>,
}

impl EdgeMap {
    fn apply(&self, x: u64, out: &mut Vec<Gen>) {
        let mut base = 0u64;
        for &(s, t) in &self.other {
            base |= (x >> s & 1) << t;
        }
        match self.kind {
            Kind::Merge { a, b, c } => {
                let (xa, xb) = (x >> a & 1, x >> b & 1);
                if xa & xb == 0 {
                    out.push((self.target, base | (xa | xb) << c));
                }
            }
            Kind::Split { a, b, c } => {
                if x >> a & 1 == 0 {
                    out.push((self.target, base | 1 << c));
                    out.push((self.target, base | 1 << b));
                } else {
                    out.push((self.target, base | 1 << b | 1 << c));
                }
            }
            Kind::Zero => {}
        }
    }
}

pub struct Cube {
    model: SiteModel,
    circles: Vec<StateCircles>,
}

impl Cube {
    pub fn new(model: SiteModel, policy: BifurcationPolicy) -> Result<Self> {
        let n = model.site_count();
        let circles: Vec<StateCircles> = (0..1u64 << n).into_par_iter().map(|s| model.circles(s)).collect();
        for s in (0..1u64 << n).take_while(|_| policy == BifurcationPolicy::Reject) {
            for i in 0..n {
                if s >> i & 1 == 0 && circles[s as usize].count == circles[(s | 1 << i) as usize].count {
                    return Err(Error::Bifurcation(i));
                }
            }
        }
        Ok(Self { model, circles })
    }

    pub fn circle_counts(&self) -> Vec<usize> {
        self.circles.iter().map(|c| c.count).collect()
    }

    fn edge(&self, s: u64, i: usize) -> EdgeMap {
        let t = s | 1 << i;
        let (cs, ct) = (&self.circles[s as usize], &self.circles[t as usize]);
        let nodes: Vec<usize> = self.model.sites[i][0].iter().flatten().copied().collect();
        let mut inv_s: Vec<usize> = nodes.iter().map(|&v| cs.label[v]).collect();
        let mut inv_t: Vec<usize> = nodes.iter().map(|&v| ct.label[v]).collect();
        inv_s.sort_unstable();
        inv_s.dedup();
        inv_t.sort_unstable();
        inv_t.dedup();
        let mut rep = vec![usize::MAX; cs.count];
        for (v, &l) in cs.label.iter().enumerate() {
            if rep[l] == usize::MAX {
                rep[l] = v;
            }
        }
        let other = (0..cs.count).filter(|k| !inv_s.contains(k)).map(|k| (k, ct.label[rep[k]])).collect();
        let kind = match (inv_s.len(), inv_t.len()) {
            (2, 1) => Kind::Merge { a: inv_s[0], b: inv_s[1], c: inv_t[0] },
            (1, 2) => Kind::Split { a: inv_s[0], b: inv_t[0], c: inv_t[1] },
            _ => Kind::Zero,
        };
        EdgeMap { target: t, kind, other }
    }

    fn differential(&self, (_, x): Gen, maps: &[EdgeMap], out: &mut Vec<Gen>) {
        for m in maps {
            m.apply(x, out);
        }
    }

    fn maps_from(&self, s: u64) -> Vec<EdgeMap> {
        (0..self.model.site_count()).filter(|&i| s >> i & 1 == 0).map(|i| self.edge(s, i)).collect()
    }

    /// Checks `d∘d = 0` on every generator.
    pub fn check_d_squared(&self) -> bool {
        let n = self.model.site_count();
        (0..1u64 << n).into_par_iter().all(|s| {
            let maps = self.maps_from(s);
            let c = self.circles[s as usize].count;
            (0..1u64 << c).all(|x| {
                let mut once = Vec::new();
                self.differential((s, x), &maps, &mut once);
                let mut twice: HashMap<Gen, bool> = HashMap::new();
                for g in once {
                    let mut out = Vec::new();
                    self.differential(g, &self.maps_from(g.0), &mut out);
                    for h in out {
                        *twice.entry(h).or_default() ^= true;
                    }
                }
                twice.values().all(|&v| !v)
            })
        })
    }

    /// Ranks of homology in raw gradings `(|s|, deg + |s|)`, where `deg` is
    /// the number of `v+` minus the number of `v-`.
    pub fn homology(&self) -> BTreeMap<(i32, i32), u64> {
        let n = self.model.site_count();
        let mut blocks: BTreeMap<(i32, i32), Vec<Gen>> = BTreeMap::new();
        for s in 0..1u64 << n {
            let c = self.circles[s as usize].count;
            let h = s.count_ones() as i32;
            for x in 0..1u64 << c {
                let deg = c as i32 - 2 * x.count_ones() as i32;
                blocks.entry((h, deg + h)).or_default().push((s, x));
            }
        }
        let keys: Vec<(i32, i32)> = blocks.keys().copied().collect();
        let ranks: HashMap<(i32, i32), usize> = keys
            .par_iter()
            .map(|&(i, j)| {
                let Some(targets) = blocks.get(&(i + 1, j)) else { return ((i, j), 0) };
                let index: HashMap<Gen, usize> = targets.iter().enumerate().map(|(k, &g)| (g, k)).collect();
                let mut basis = EchelonBasis::new(targets.len());
                let mut cached: Option<(u64, Vec<EdgeMap>)> = None;
                let mut img = Vec::new();
                for &g in &blocks[&(i, j)] {
                    if cached.as_ref().map(|c| c.0) != Some(g.0) {
                        cached = Some((g.0, self.maps_from(g.0)));
                    }
                    img.clear();
                    self.differential(g, &cached.as_ref().unwrap().1, &mut img);
                    let support: Vec<usize> = img.iter().map(|h| index[h]).collect();
                    basis.insert(&support);
                }
                ((i, j), basis.rank())
            })
            .collect();
        let mut out = BTreeMap::new();
        for (&(i, j), gens) in &blocks {
            let r_out = ranks[&(i, j)];
            let r_in = ranks.get(&(i - 1, j)).copied().unwrap_or(0);
            let h = gens.len() - r_out - r_in;
            if h > 0 {
                out.insert((i, j), h as u64);
            }
        }
        out
    }
}
