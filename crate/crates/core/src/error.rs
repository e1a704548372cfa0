use std::fmt;

use thiserror::Error;

/// A single broken invariant found while validating a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub code: &'static str,
    pub message: String,
    pub ids: Vec<String>,
}

/// Every invariant violation found in one pass. Empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, code: &'static str, message: impl Into<String>, ids: Vec<String>) {
        self.violations.push(Violation { code, message: message.into(), ids });
    }

    pub(crate) fn into_result(self) -> Result<()> {
        if self.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", v.message)?;
            if !v.ids.is_empty() {
                write!(f, " [{}]", v.ids.join(", "))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("{0}")]
    Invalid(ValidationReport),

    #[error("ribbon surface is not orientable (odd twist parity on a cycle through {0})")]
    NonOrientable(String),

    #[error("{what} has size {size}, above the limit {limit}")]
    SizeLimit { what: &'static str, size: usize, limit: usize },

    #[error("expected a genus 0 diagram, found genus {0}")]
    NonzeroGenus(usize),

    #[error("resolution cube has a single-cycle bifurcation at crossing {0}")]
    Bifurcation(usize),

    #[error("move does not apply here: {0}")]
    PatternMismatch(String),

    #[error("flip region is joined to the rest by {0} edges (at most 2 allowed)")]
    CutTooLarge(usize),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("no cycle orientation makes every crossing positive")]
    NoPositiveOrientation,

    #[error("negative matched edge {0}; convert it with G5 first")]
    NegativeEdge(String),

    #[error("embedding construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_limit(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeLimit { what, size, limit })
    } else {
        Ok(())
    }
}
