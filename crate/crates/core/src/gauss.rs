//! Signed Gauss codes of virtual link diagrams and their text codec.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result, ValidationReport};
use crate::matched::{tokens, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strand {
    Over,
    Under,
}

impl Strand {
    pub fn other(self) -> Self {
        match self {
            Strand::Over => Strand::Under,
            Strand::Under => Strand::Over,
        }
    }
}

/// One passage of a component through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pass {
    pub crossing: usize,
    pub strand: Strand,
}

/// Position of a pass: `(component, index)`.
pub type PassPos = (usize, usize);

/// A virtual link diagram as cyclic sequences of signed over/under passes.
///
/// Crossings are indexed `0..n`; `labels[c]` is the number printed for
/// crossing `c`. Components may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    labels: Vec<u32>,
    signs: Vec<Sign>,
    components: Vec<Vec<Pass>>,
}

impl GaussCode {
    /// Builds a code with labels `1..=n` and validates it.
    pub fn new(signs: Vec<Sign>, components: Vec<Vec<Pass>>) -> Result<Self> {
        let labels = (1..=signs.len() as u32).collect();
        Self::with_labels(labels, signs, components)
    }

    pub fn with_labels(labels: Vec<u32>, signs: Vec<Sign>, components: Vec<Vec<Pass>>) -> Result<Self> {
        let code = GaussCode { labels, signs, components };
        code.validate().into_result()?;
        Ok(code)
    }

    /// The crossing-free diagram with `k` components.
    pub fn unlink(k: usize) -> Self {
        GaussCode { labels: Vec::new(), signs: Vec::new(), components: vec![Vec::new(); k] }
    }

    fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.signs.len();
        if self.labels.len() != n {
            report.push("label-count", "label and sign lists differ in length", Vec::new());
            return report;
        }
        let mut seen = vec![[0usize; 2]; n];
        for comp in &self.components {
            for p in comp {
                if p.crossing >= n {
                    report.push("unknown-crossing", "pass refers to an unknown crossing", Vec::new());
                    continue;
                }
                seen[p.crossing][p.strand as usize] += 1;
            }
        }
        for (c, s) in seen.iter().enumerate() {
            if *s != [1, 1] {
                report.push(
                    "crossing-passes",
                    format!(
                        "crossing {} must occur once over and once under (found {} over, {} under)",
                        self.labels[c], s[0], s[1]
                    ),
                    vec![self.labels[c].to_string()],
                );
            }
        }
        let mut l = self.labels.clone();
        l.sort_unstable();
        if l.windows(2).any(|w| w[0] == w[1]) {
            report.push("duplicate-crossing", "duplicate crossing label", Vec::new());
        }
        report
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<Pass>] {
        &self.components
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, c: usize) -> Sign {
        self.signs[c]
    }

    pub fn label(&self, c: usize) -> u32 {
        self.labels[c]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn pass_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// `[over, under]` positions of every crossing.
    pub fn positions(&self) -> Vec<[PassPos; 2]> {
        let mut pos = vec![[(usize::MAX, usize::MAX); 2]; self.crossing_count()];
        for (k, comp) in self.components.iter().enumerate() {
            for (i, p) in comp.iter().enumerate() {
                pos[p.crossing][p.strand as usize] = (k, i);
            }
        }
        pos
    }

    /// Index of each pass in the concatenation of all components, and the
    /// offset of each component in it.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.components.len() + 1);
        let mut acc = 0;
        off.push(0);
        for c in &self.components {
            acc += c.len();
            off.push(acc);
        }
        off
    }

    /// `n+ - n-` for the orientation given by the pass order.
    pub fn writhe(&self) -> i32 {
        self.signs.iter().map(|s| s.value()).sum()
    }

    pub fn positive_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == Sign::Pos).count()
    }

    pub fn negative_count(&self) -> usize {
        self.crossing_count() - self.positive_count()
    }

    /// Reverses the orientation of one component. Crossings between it and
    /// another component change sign.
    pub fn reverse_component(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.components[k].reverse();
        let pos = self.positions();
        for (c, [o, u]) in pos.iter().enumerate() {
            if (o.0 == k) != (u.0 == k) {
                out.signs[c] = out.signs[c].flipped();
            }
        }
        out
    }

    /// Applies [`reverse_component`](Self::reverse_component) to each marked component.
    pub fn with_orientation(&self, reversed: &[bool]) -> Self {
        let mut out = self.clone();
        for (k, &r) in reversed.iter().enumerate() {
            if r {
                out = out.reverse_component(k);
            }
        }
        out
    }

    /// Renumbers crossings `1..` in order of first appearance.
    pub fn relabeled(&self) -> Self {
        let n = self.crossing_count();
        let mut map = vec![usize::MAX; n];
        let mut next = 0;
        for p in self.components.iter().flatten() {
            if map[p.crossing] == usize::MAX {
                map[p.crossing] = next;
                next += 1;
            }
        }
        let mut signs = vec![Sign::Pos; n];
        for c in 0..n {
            signs[map[c]] = self.signs[c];
        }
        let components = self
            .components
            .iter()
            .map(|comp| comp.iter().map(|p| Pass { crossing: map[p.crossing], strand: p.strand }).collect())
            .collect();
        GaussCode { labels: (1..=n as u32).collect(), signs, components }
    }

    /// Diagram sum placed side by side, with crossings of `other` renumbered after ours.
    pub fn disjoint_union(&self, other: &GaussCode) -> Self {
        let n = self.crossing_count();
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        let mut components = self.components.clone();
        components.extend(
            other
                .components
                .iter()
                .map(|comp| comp.iter().map(|p| Pass { crossing: p.crossing + n, strand: p.strand }).collect()),
        );
        GaussCode { labels: (1..=signs.len() as u32).collect(), signs, components }
    }

    /// Every component meets the others in an even number of crossings.
    pub fn is_even(&self) -> bool {
        self.components.iter().all(|c| c.len() % 2 == 0)
    }

    /// Number of crossings between component `k` and the rest.
    pub fn mixed_crossings(&self, k: usize) -> usize {
        self.positions().iter().filter(|[o, u]| (o.0 == k) != (u.0 == k)).count()
    }

    pub(crate) fn from_labeled_unchecked(labels: Vec<u32>, signs: Vec<Sign>, components: Vec<Vec<Pass>>) -> Self {
        GaussCode { labels, signs, components }
    }

    pub(crate) fn from_parts_unchecked(signs: Vec<Sign>, components: Vec<Vec<Pass>>) -> Self {
        let labels = (1..=signs.len() as u32).collect();
        GaussCode { labels, signs, components }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_gauss_code(text)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for comp in &self.components {
            write!(f, "component:")?;
            for p in comp {
                let s = match p.strand {
                    Strand::Over => 'O',
                    Strand::Under => 'U',
                };
                write!(f, " {}{}{}", s, self.labels[p.crossing], self.signs[p.crossing].symbol())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn parse_gauss_code(text: &str) -> Result<GaussCode> {
    let syntax = |line, column, message: String| Error::Syntax { line, column, message };
    let mut raw: Vec<Vec<(u32, Strand)>> = Vec::new();
    let mut signs: BTreeMap<u32, (Sign, usize, usize)> = BTreeMap::new();
    let mut report = ValidationReport::default();
    for (ln, line) in text.lines().enumerate() {
        let ln = ln + 1;
        let toks = tokens(line);
        let Some(&(col, kw)) = toks.first() else { continue };
        if kw != "component:" {
            return Err(syntax(ln, col, format!("expected `component:`, got `{kw}`")));
        }
        let mut comp = Vec::new();
        for &(c, t) in &toks[1..] {
            let bad = || syntax(ln, c, format!("expected a pass like O1+ or U2-, got `{t}`"));
            let strand = match t.as_bytes()[0] {
                b'O' => Strand::Over,
                b'U' => Strand::Under,
                _ => return Err(bad()),
            };
            let sign = match t.as_bytes()[t.len() - 1] {
                b'+' => Sign::Pos,
                b'-' => Sign::Neg,
                _ => return Err(bad()),
            };
            if t.len() < 3 {
                return Err(bad());
            }
            let label: u32 = t[1..t.len() - 1].parse().map_err(|_| bad())?;
            match signs.get(&label) {
                Some(&(s, l0, _)) if s != sign => report.push(
                    "sign-mismatch",
                    format!("crossing {label} has sign {} on line {l0} and {} on line {ln}", s.symbol(), sign.symbol()),
                    vec![label.to_string()],
                ),
                Some(_) => {}
                None => {
                    signs.insert(label, (sign, ln, c));
                }
            }
            comp.push((label, strand));
        }
        raw.push(comp);
    }
    report.into_result()?;
    let index: HashMap<u32, usize> = signs.keys().enumerate().map(|(i, &l)| (l, i)).collect();
    let labels: Vec<u32> = signs.keys().copied().collect();
    let sign_vec: Vec<Sign> = signs.values().map(|v| v.0).collect();
    let components = raw
        .into_iter()
        .map(|comp| comp.into_iter().map(|(l, s)| Pass { crossing: index[&l], strand: s }).collect())
        .collect();
    GaussCode::with_labels(labels, sign_vec, components)
}
