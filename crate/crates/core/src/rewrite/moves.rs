//! Reidemeister moves on signed Gauss codes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gauss::{GaussCode, Pass, Strand};
use crate::matched::Sign;

/// One classical Reidemeister move. Existing crossings are named by label;
/// new crossings get the next free labels.
///
/// Gaps are insertion points: gap `g` of a component sits before its pass
/// `g`, and an empty component has the single gap `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RMove {
    R1Remove { x: u32 },
    R1Add { component: usize, gap: usize, over_first: bool, sign: Sign },
    R2Remove { x: u32, y: u32 },
    /// Two crossings with signs `sign` and `-sign`. The over strand passes
    /// them in order; the under strand in order, or in reverse if `reversed`.
    /// When both strands use the same gap, `under_first` puts the under
    /// passes first.
    R2Add { over: (usize, usize), under: (usize, usize), sign: Sign, reversed: bool, under_first: bool },
    /// `a`: top over middle, `b`: top over bottom, `c`: middle over bottom.
    R3 { a: u32, b: u32, c: u32 },
}

impl RMove {
    pub fn name(&self) -> &'static str {
        match self {
            RMove::R1Remove { .. } => "R1-",
            RMove::R1Add { .. } => "R1+",
            RMove::R2Remove { .. } => "R2-",
            RMove::R2Add { .. } => "R2+",
            RMove::R3 { .. } => "R3",
        }
    }

    /// `1`, `2` or `3`.
    pub fn rank(&self) -> u8 {
        match self {
            RMove::R1Remove { .. } | RMove::R1Add { .. } => 1,
            RMove::R2Remove { .. } | RMove::R2Add { .. } => 2,
            RMove::R3 { .. } => 3,
        }
    }

    pub fn site(&self) -> String {
        match self {
            RMove::R1Remove { x } => format!("x{x}"),
            RMove::R1Add { component, gap, over_first, sign } => {
                format!("c{component} g{gap} {} {}", if *over_first { "OU" } else { "UO" }, sign.symbol())
            }
            RMove::R2Remove { x, y } => format!("x{x} x{y}"),
            RMove::R2Add { over, under, sign, reversed, under_first } => {
                let mut s = format!(
                    "c{} g{} c{} g{} {} {}",
                    over.0,
                    over.1,
                    under.0,
                    under.1,
                    sign.symbol(),
                    if *reversed { "rev" } else { "same" }
                );
                if *under_first {
                    s.push_str(" under-first");
                }
                s
            }
            RMove::R3 { a, b, c } => format!("x{a} x{b} x{c}"),
        }
    }

    pub fn apply(&self, d: &GaussCode) -> Result<GaussCode> {
        apply(d, self)
    }
}

impl fmt::Display for RMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.name(), self.site())
    }
}

fn bad(s: &str) -> Error {
    Error::PatternMismatch(format!("cannot read move `{s}`"))
}

fn num(tok: Option<&str>, prefix: char, line: &str) -> Result<usize> {
    tok.and_then(|t| t.strip_prefix(prefix)).and_then(|t| t.parse().ok()).ok_or_else(|| bad(line))
}

fn sign_tok(tok: Option<&str>, line: &str) -> Result<Sign> {
    match tok {
        Some("+") => Ok(Sign::Pos),
        Some("-") => Ok(Sign::Neg),
        _ => Err(bad(line)),
    }
}

impl FromStr for RMove {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let (name, site) = line.split_once('@').ok_or_else(|| bad(line))?;
        let mut t = site.split_whitespace();
        let x = |t: &mut std::str::SplitWhitespace| num(t.next(), 'x', line).map(|v| v as u32);
        let mv = match name.trim() {
            "R1-" => RMove::R1Remove { x: x(&mut t)? },
            "R1+" => {
                let component = num(t.next(), 'c', line)?;
                let gap = num(t.next(), 'g', line)?;
                let over_first = match t.next() {
                    Some("OU") => true,
                    Some("UO") => false,
                    _ => return Err(bad(line)),
                };
                RMove::R1Add { component, gap, over_first, sign: sign_tok(t.next(), line)? }
            }
            "R2-" => RMove::R2Remove { x: x(&mut t)?, y: x(&mut t)? },
            "R2+" => {
                let over = (num(t.next(), 'c', line)?, num(t.next(), 'g', line)?);
                let under = (num(t.next(), 'c', line)?, num(t.next(), 'g', line)?);
                let sign = sign_tok(t.next(), line)?;
                let reversed = match t.next() {
                    Some("same") => false,
                    Some("rev") => true,
                    _ => return Err(bad(line)),
                };
                let under_first = match t.next() {
                    None => false,
                    Some("under-first") => true,
                    Some(_) => return Err(bad(line)),
                };
                RMove::R2Add { over, under, sign, reversed, under_first }
            }
            "R3" => RMove::R3 { a: x(&mut t)?, b: x(&mut t)?, c: x(&mut t)? },
            _ => return Err(bad(line)),
        };
        if t.next().is_some() {
            return Err(bad(line));
        }
        Ok(mv)
    }
}

struct Work {
    labels: Vec<u32>,
    signs: Vec<Sign>,
    comps: Vec<Vec<Pass>>,
}

impl Work {
    fn of(d: &GaussCode) -> Self {
        Work { labels: d.labels().to_vec(), signs: d.signs().to_vec(), comps: d.components().to_vec() }
    }

    fn done(self) -> GaussCode {
        GaussCode::from_labeled_unchecked(self.labels, self.signs, self.comps)
    }

    fn add_crossing(&mut self, sign: Sign) -> usize {
        let next = self.labels.iter().max().map_or(1, |m| m + 1);
        self.labels.push(next);
        self.signs.push(sign);
        self.signs.len() - 1
    }

    fn remove(mut self, gone: &[usize]) -> Self {
        let n = self.signs.len();
        let mut map = vec![usize::MAX; n];
        let mut k = 0;
        for (c, m) in map.iter_mut().enumerate() {
            if !gone.contains(&c) {
                *m = k;
                k += 1;
            }
        }
        self.labels = (0..n).filter(|c| !gone.contains(c)).map(|c| self.labels[c]).collect();
        self.signs = (0..n).filter(|c| !gone.contains(c)).map(|c| self.signs[c]).collect();
        for comp in &mut self.comps {
            comp.retain(|p| !gone.contains(&p.crossing));
            for p in comp.iter_mut() {
                p.crossing = map[p.crossing];
            }
        }
        self
    }
}

fn index_of(d: &GaussCode, label: u32) -> Result<usize> {
    d.labels()
        .iter()
        .position(|&l| l == label)
        .ok_or_else(|| Error::PatternMismatch(format!("no crossing labeled {label}")))
}

fn mismatch(m: &RMove, why: &str) -> Error {
    Error::PatternMismatch(format!("{m}: {why}"))
}

/// Directions `d` with `next^d(p) = q` on one component: `+1` if `q` follows
/// `p`, `-1` if `p` follows `q`.
fn directions(d: &GaussCode, p: (usize, usize), q: (usize, usize)) -> Vec<i32> {
    if p.0 != q.0 {
        return Vec::new();
    }
    let len = d.components()[p.0].len();
    let mut out = Vec::new();
    if (p.1 + 1) % len == q.1 {
        out.push(1);
    }
    if (q.1 + 1) % len == p.1 {
        out.push(-1);
    }
    out
}

fn gap_count(d: &GaussCode, k: usize) -> usize {
    d.components()[k].len().max(1)
}

pub fn apply(d: &GaussCode, m: &RMove) -> Result<GaussCode> {
    let pos = d.positions();
    const O: usize = Strand::Over as usize;
    const U: usize = Strand::Under as usize;
    match *m {
        RMove::R1Remove { x } => {
            let c = index_of(d, x)?;
            if directions(d, pos[c][O], pos[c][U]).is_empty() {
                return Err(mismatch(m, "over and under passes are not adjacent"));
            }
            Ok(Work::of(d).remove(&[c]).done())
        }
        RMove::R2Remove { x, y } => {
            let (a, b) = (index_of(d, x)?, index_of(d, y)?);
            if a == b {
                return Err(mismatch(m, "needs two crossings"));
            }
            if d.sign(a) == d.sign(b) {
                return Err(mismatch(m, "signs must differ"));
            }
            if directions(d, pos[a][O], pos[b][O]).is_empty() || directions(d, pos[a][U], pos[b][U]).is_empty() {
                return Err(mismatch(m, "passes are not adjacent on both strands"));
            }
            Ok(Work::of(d).remove(&[a, b]).done())
        }
        RMove::R3 { a, b, c } => {
            let (ia, ib, ic) = (index_of(d, a)?, index_of(d, b)?, index_of(d, c)?);
            if ia == ib || ib == ic || ia == ic {
                return Err(mismatch(m, "needs three crossings"));
            }
            let t = directions(d, pos[ia][O], pos[ib][O]);
            let mid = directions(d, pos[ia][U], pos[ic][O]);
            let bot = directions(d, pos[ib][U], pos[ic][U]);
            let s = |i: usize| d.sign(i).value();
            let ok = t.iter().any(|&t| {
                mid.iter().any(|&mm| {
                    bot.iter().any(|&bb| {
                        let v = s(ia) * t * mm;
                        v == s(ib) * t * bb && v == s(ic) * mm * bb
                    })
                })
            });
            if !ok {
                return Err(mismatch(m, "not a triangle with compatible signs"));
            }
            let mut w = Work::of(d);
            for (p, q) in [(pos[ia][O], pos[ib][O]), (pos[ia][U], pos[ic][O]), (pos[ib][U], pos[ic][U])] {
                let comp = &mut w.comps[p.0];
                comp.swap(p.1, q.1);
            }
            Ok(w.done())
        }
        RMove::R1Add { component, gap, over_first, sign } => {
            if component >= d.component_count() || gap >= gap_count(d, component) {
                return Err(mismatch(m, "no such gap"));
            }
            let mut w = Work::of(d);
            let c = w.add_crossing(sign);
            let (first, second) = if over_first { (Strand::Over, Strand::Under) } else { (Strand::Under, Strand::Over) };
            let comp = &mut w.comps[component];
            comp.insert(gap, Pass { crossing: c, strand: second });
            comp.insert(gap, Pass { crossing: c, strand: first });
            Ok(w.done())
        }
        RMove::R2Add { over, under, sign, reversed, under_first } => {
            for (k, g) in [over, under] {
                if k >= d.component_count() || g >= gap_count(d, k) {
                    return Err(mismatch(m, "no such gap"));
                }
            }
            if under_first && over != under {
                return Err(mismatch(m, "under-first needs both strands in one gap"));
            }
            let mut w = Work::of(d);
            let p = w.add_crossing(sign);
            let q = w.add_crossing(sign.flipped());
            let overs = [Pass { crossing: p, strand: Strand::Over }, Pass { crossing: q, strand: Strand::Over }];
            let mut unders = [Pass { crossing: p, strand: Strand::Under }, Pass { crossing: q, strand: Strand::Under }];
            if reversed {
                unders.reverse();
            }
            if over == under {
                let block: Vec<Pass> =
                    if under_first { unders.iter().chain(&overs).copied().collect() } else { overs.iter().chain(&unders).copied().collect() };
                w.comps[over.0].splice(over.1..over.1, block);
            } else {
                let mut inserts = [(over, overs), (under, unders)];
                inserts.sort_by_key(|&((k, g), _)| std::cmp::Reverse((k, g)));
                for ((k, g), block) in inserts {
                    w.comps[k].splice(g..g, block);
                }
            }
            Ok(w.done())
        }
    }
}

/// Every single R1, R2 and R3 move applicable to `d`, in a fixed order.
pub fn reidemeister_neighbors(d: &GaussCode) -> Vec<(GaussCode, RMove)> {
    let mut out = Vec::new();
    for m in candidate_moves(d) {
        if let Ok(e) = apply(d, &m) {
            out.push((e, m));
        }
    }
    out
}

fn candidate_moves(d: &GaussCode) -> Vec<RMove> {
    let n = d.crossing_count();
    let pos = d.positions();
    let label = |c: usize| d.label(c);
    let adj = |p, q| !directions(d, p, q).is_empty();
    const O: usize = Strand::Over as usize;
    const U: usize = Strand::Under as usize;
    let mut out = Vec::new();
    for c in 0..n {
        if adj(pos[c][O], pos[c][U]) {
            out.push(RMove::R1Remove { x: label(c) });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if d.sign(a) != d.sign(b) && adj(pos[a][O], pos[b][O]) && adj(pos[a][U], pos[b][U]) {
                out.push(RMove::R2Remove { x: label(a), y: label(b) });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if b == a || !adj(pos[a][O], pos[b][O]) {
                continue;
            }
            for c in 0..n {
                if c != a && c != b && adj(pos[a][U], pos[c][O]) && adj(pos[b][U], pos[c][U]) {
                    out.push(RMove::R3 { a: label(a), b: label(b), c: label(c) });
                }
            }
        }
    }
    let gaps: Vec<(usize, usize)> =
        (0..d.component_count()).flat_map(|k| (0..gap_count(d, k)).map(move |g| (k, g))).collect();
    for &(component, gap) in &gaps {
        for over_first in [true, false] {
            for sign in [Sign::Pos, Sign::Neg] {
                out.push(RMove::R1Add { component, gap, over_first, sign });
            }
        }
    }
    for &over in &gaps {
        for &under in &gaps {
            for sign in [Sign::Pos, Sign::Neg] {
                for reversed in [false, true] {
                    out.push(RMove::R2Add { over, under, sign, reversed, under_first: false });
                    if over == under {
                        out.push(RMove::R2Add { over, under, sign, reversed, under_first: true });
                    }
                }
            }
        }
    }
    out
}

/// A replayable sequence of Reidemeister moves, one `<move> @ <site>` per line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveTrace {
    pub steps: Vec<RMove>,
}

impl MoveTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn replay(&self, d: &GaussCode) -> Result<GaussCode> {
        self.steps.iter().try_fold(d.clone(), |cur, m| apply(&cur, m))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let steps = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(str::parse).collect::<Result<_>>()?;
        Ok(Self { steps })
    }
}

impl fmt::Display for MoveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.steps {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}
