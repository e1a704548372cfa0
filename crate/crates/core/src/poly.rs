//! Exact one-variable Laurent polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Name of the indeterminate. Only used for printing and for refusing to mix
/// polynomials in different variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    A,
}

impl Var {
    fn symbol(self) -> char {
        match self {
            Var::Q => 'q',
            Var::A => 'A',
        }
    }
}

/// Sparse Laurent polynomial. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        Self { var, terms: BTreeMap::new() }
    }

    pub fn constant(var: Var, c: i64) -> Self {
        Self::monomial(var, c, 0)
    }

    pub fn monomial(var: Var, coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, coeff);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { var: self.var, terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn scale(&self, s: i64) -> Self {
        if s == 0 {
            return Self::zero(self.var);
        }
        Self { var: self.var, terms: self.terms.iter().map(|(&e, &c)| (e, c * s)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.var, 1);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `var = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Value at an integer point; panics on a negative exponent at zero.
    pub fn eval(&self, x: i64) -> i64 {
        self.terms
            .iter()
            .map(|(&e, &c)| {
                if e >= 0 {
                    c * x.pow(e as u32)
                } else {
                    let d = x.pow((-e) as u32);
                    assert!(d != 0 && c % d == 0, "non-integral evaluation");
                    c / d
                }
            })
            .sum()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let x = self.var.symbol();
        for (k, (&e, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "{x}")?;
                    } else {
                        write!(f, "{x}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.var, rhs.var, "mixed variables");
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.var, rhs.var, "mixed variables");
        let mut out = LaurentPoly::zero(self.var);
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}
