use std::fmt;

use crate::error::{Error, Result};
use crate::gauss::{GaussCode, Strand};
use crate::matched::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// Finite presentation with generators `x1..xn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Vec<Letter>>,
}

impl GroupPresentation {
    /// Exponent-sum matrix, one row per relator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|w| {
                let mut row = vec![0i64; self.generators];
                for l in w {
                    row[l.generator] += if l.inverse { -1 } else { 1 };
                }
                row
            })
            .collect()
    }

    /// Rank of the free part of the abelianization.
    pub fn abelianization_rank(&self) -> usize {
        self.generators - rational_rank(self.exponent_matrix())
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generators).map(|i| format!("x{i}")).collect();
        write!(f, "gens: {}; rels:", gens.join(","))?;
        for (k, w) in self.relators.iter().enumerate() {
            write!(f, "{}", if k == 0 { " " } else { "; " })?;
            let word: Vec<String> = w
                .iter()
                .map(|l| format!("x{}{}", l.generator + 1, if l.inverse { "^-1" } else { "" }))
                .collect();
            write!(f, "{}", word.join(" "))?;
        }
        Ok(())
    }
}

fn rational_rank(mut m: Vec<Vec<i64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                let g = gcd(a.abs(), b.abs());
                let (fa, fb) = (b / g, a / g);
                for k in 0..cols {
                    m[r][k] = m[r][k] * fb - m[rank][k] * fa;
                }
                let g = m[r].iter().fold(0, |acc, &x| gcd(acc, x.abs()));
                if g > 1 {
                    for x in m[r].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Arc structure: generator of the arc containing each pass, and for each
/// crossing `(over, incoming under, outgoing under)`.
pub(crate) fn arcs(d: &GaussCode) -> (usize, Vec<[usize; 3]>) {
    let mut gens = 0;
    let mut arc_of: Vec<Vec<usize>> = Vec::new();
    // arc started right after each pass, for under passes
    for comp in d.components() {
        let unders: Vec<usize> = (0..comp.len()).filter(|&i| comp[i].strand == Strand::Under).collect();
        if unders.is_empty() {
            arc_of.push(vec![gens; comp.len()]);
            gens += 1;
            continue;
        }
        let base = gens;
        gens += unders.len();
        // pass i lies on the arc begun by the last under pass at or before i
        let mut lab = vec![0; comp.len()];
        let mut cur = base + unders.len() - 1;
        for (i, p) in comp.iter().enumerate() {
            if p.strand == Strand::Under {
                cur = base + unders.iter().position(|&u| u == i).unwrap();
            }
            lab[i] = cur;
        }
        arc_of.push(lab);
    }
    let pos = d.positions();
    let rel = pos
        .iter()
        .map(|&[o, u]| {
            let comp = &d.components()[u.0];
            let prev = (u.1 + comp.len() - 1) % comp.len();
            [arc_of[o.0][o.1], arc_of[u.0][prev], arc_of[u.0][u.1]]
        })
        .collect();
    (gens, rel)
}

pub fn wirtinger_presentation(d: &GaussCode) -> GroupPresentation {
    let (gens, rel) = arcs(d);
    let l = |g, inverse| Letter { generator: g, inverse };
    let relators = rel
        .iter()
        .enumerate()
        .map(|(c, &[o, i, j])| match d.sign(c) {
            Sign::Pos => vec![l(o, false), l(i, false), l(o, true), l(j, true)],
            Sign::Neg => vec![l(o, true), l(i, false), l(o, false), l(j, true)],
        })
        .collect();
    GroupPresentation { generators: gens, relators }
}

/// Number of Fox colorings mod `p`, as `p^nullity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoxCount {
    pub prime: u64,
    pub nullity: u32,
}

impl FoxCount {
    pub fn count(&self) -> Option<u128> {
        (self.prime as u128).checked_pow(self.nullity)
    }
}

impl fmt::Display for FoxCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.count() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "{}^{}", self.prime, self.nullity),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| p % k != 0)
}

/// Solutions of `2 x_over = x_in + x_out (mod p)` over all crossings.
pub fn fox_colorings(d: &GaussCode, p: u64) -> Result<FoxCount> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p > 97 {
        return Err(Error::SizeLimit { what: "prime", size: p as usize, limit: 97 });
    }
    let (gens, rel) = arcs(d);
    let mut m: Vec<Vec<u64>> = rel
        .iter()
        .map(|&[o, i, j]| {
            let mut row = vec![0u64; gens];
            row[o] = (row[o] + 2) % p;
            row[i] = (row[i] + p - 1) % p;
            row[j] = (row[j] + p - 1) % p;
            row
        })
        .collect();
    let rank = rank_mod_p(&mut m, p);
    Ok(FoxCount { prime: p, nullity: (gens - rank) as u32 })
}

fn rank_mod_p(m: &mut [Vec<u64>], p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |a: u64| {
        let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let s = inv(m[rank][c]);
        for x in m[rank].iter_mut() {
            *x = *x * s % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p * p - f * m[rank][k]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn gc(s: &str) -> GaussCode {
        GaussCode::parse(s).unwrap()
    }

    fn uf_rank(p: &GroupPresentation) -> usize {
        let mut parent: Vec<usize> = (0..p.generators).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] == x {
                x
            } else {
                let r = find(p, p[x]);
                p[x] = r;
                r
            }
        }
        for w in &p.relators {
            let (a, b) = (find(&mut parent, w[1].generator), find(&mut parent, w[3].generator));
            parent[a] = b;
        }
        (0..p.generators).filter(|&x| find(&mut parent, x) == x).count()
    }

    fn fox_oracle(d: &GaussCode, p: u64) -> u64 {
        let (gens, rel) = arcs(d);
        let mut count = 0;
        let mut x = vec![0u64; gens];
        loop {
            if rel.iter().all(|&[o, i, j]| (2 * x[o] + 2 * p - x[i] - x[j]) % p == 0) {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == gens {
                    return count;
                }
                x[k] += 1;
                if x[k] < p {
                    break;
                }
                x[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn presentations() {
        let u = wirtinger_presentation(&gc(fixtures::UNKNOT0));
        assert_eq!(u.to_string(), "gens: x1; rels:");
        let t = wirtinger_presentation(&gc(fixtures::TREFOIL));
        assert_eq!((t.generators, t.relators.len()), (3, 3));
        assert_eq!(t.abelianization_rank(), 1);
        assert_eq!(uf_rank(&t), 1);
        let h = wirtinger_presentation(&gc(fixtures::HOPF2));
        assert_eq!(h.abelianization_rank(), 2);
        for (name, s) in fixtures::ALL_CODES {
            let d = gc(s);
            let p = wirtinger_presentation(&d);
            assert_eq!(p.abelianization_rank(), d.component_count(), "{name}");
            assert_eq!(uf_rank(&p), d.component_count(), "{name}");
        }
    }

    #[test]
    fn fox_counts() {
        let t = gc(fixtures::TREFOIL);
        assert_eq!(fox_colorings(&t, 3).unwrap().count(), Some(9));
        assert_eq!(fox_colorings(&t, 5).unwrap().count(), Some(5));
        assert_eq!(fox_oracle(&t, 3), 9);
        assert_eq!(fox_oracle(&t, 5), 5);
        assert_eq!(fox_colorings(&gc(fixtures::UNKNOT0), 7).unwrap().count(), Some(7));
        for (name, s) in fixtures::ALL_CODES {
            let d = gc(s);
            if arcs(&d).0 <= 6 {
                for p in [3, 5, 7] {
                    assert_eq!(fox_colorings(&d, p).unwrap().count(), Some(fox_oracle(&d, p) as u128), "{name}");
                }
            }
        }
        assert!(matches!(fox_colorings(&t, 9), Err(Error::NotOddPrime(9))));
        assert!(matches!(fox_colorings(&t, 2), Err(Error::NotOddPrime(2))));
    }
}
