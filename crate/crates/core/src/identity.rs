//! Bilinear identities between products of two Schur functions.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `coeff · s_a · s_b`.
///
/// Factors keep the order they were built in, so an identity prints the way
/// its formula reads; [`Term::canonical_factors`] gives the order used for
/// comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: i64,
    pub factors: [Partition; 2],
}

fn factor_order(a: &Partition, b: &Partition) -> Ordering {
    b.weight().cmp(&a.weight()).then_with(|| a.cmp(b))
}

impl Term {
    pub fn new(coeff: i64, a: Partition, b: Partition) -> Self {
        Term { coeff, factors: [a, b] }
    }

    pub fn unit(a: Partition, b: Partition) -> Self {
        Term::new(1, a, b)
    }

    /// |a| + |b|.
    pub fn degree(&self) -> u32 {
        self.factors[0].weight() + self.factors[1].weight()
    }

    /// Factors ordered by weight descending, then lexicographically.
    pub fn canonical_factors(&self) -> [Partition; 2] {
        let [a, b] = &self.factors;
        if factor_order(a, b) == Ordering::Greater {
            [b.clone(), a.clone()]
        } else {
            [a.clone(), b.clone()]
        }
    }

    fn map_labels(&self, f: impl Fn(&Partition) -> Partition) -> Term {
        Term { coeff: self.coeff, factors: [f(&self.factors[0]), f(&self.factors[1])] }
    }
}

/// `Σ lhs = Σ rhs`. Equality compares canonical forms.
#[derive(Debug, Clone, Eq)]
pub struct Identity {
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

/// How [`Identity::render`] spells a Schur label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    /// `s_(2,1,1)`
    Text,
    /// `s_{(2,1,1)}`
    Latex,
}

impl Identity {
    /// Builds an identity, rejecting zero coefficients and mixed degrees.
    pub fn new(lhs: Vec<Term>, rhs: Vec<Term>) -> Result<Self> {
        let id = Identity { lhs, rhs };
        id.check()?;
        Ok(id)
    }

    fn check(&self) -> Result<()> {
        let mut expected = None;
        for term in self.terms() {
            if term.coeff == 0 {
                return Err(Error::ZeroCoefficient);
            }
            let found = term.degree();
            match expected {
                None => expected = Some(found),
                Some(expected) if expected != found => {
                    return Err(Error::NotHomogeneous { expected, found })
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.lhs.iter().chain(&self.rhs)
    }

    pub fn labels(&self) -> impl Iterator<Item = &Partition> {
        self.terms().flat_map(|t| t.factors.iter())
    }

    /// Common degree |a| + |b| of every term, `None` for an empty identity.
    pub fn degree(&self) -> Option<u32> {
        self.terms().next().map(Term::degree)
    }

    /// Largest height among all labels.
    pub fn max_height(&self) -> usize {
        self.labels().map(Partition::height).max().unwrap_or(0)
    }

    /// Sorted, like terms merged, zero terms dropped, factors in canonical
    /// order. `s_∅` factors are kept.
    pub fn canonical(&self) -> Identity {
        fn side(terms: &[Term]) -> Vec<Term> {
            let mut sorted: Vec<Term> = terms
                .iter()
                .map(|t| Term { coeff: t.coeff, factors: t.canonical_factors() })
                .collect();
            sorted.sort_by(|a, b| a.factors.cmp(&b.factors));
            let mut merged: Vec<Term> = Vec::with_capacity(sorted.len());
            for term in sorted {
                match merged.last_mut() {
                    Some(last) if last.factors == term.factors => last.coeff += term.coeff,
                    _ => merged.push(term),
                }
            }
            merged.retain(|t| t.coeff != 0);
            merged
        }
        Identity { lhs: side(&self.lhs), rhs: side(&self.rhs) }
    }

    pub fn render(&self, notation: Notation) -> String {
        let mut out = String::new();
        write_side(&mut out, &self.lhs, notation).expect("writing to a String");
        out.push_str(" = ");
        write_side(&mut out, &self.rhs, notation).expect("writing to a String");
        out
    }
}

impl PartialEq for Identity {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.canonical(), other.canonical());
        a.lhs == b.lhs && a.rhs == b.rhs
    }
}

fn write_side(out: &mut String, terms: &[Term], notation: Notation) -> fmt::Result {
    if terms.is_empty() {
        return out.write_str("0");
    }
    for (i, term) in terms.iter().enumerate() {
        let magnitude = term.coeff.unsigned_abs();
        match (i, term.coeff < 0) {
            (0, false) => {}
            (0, true) => out.write_str("-")?,
            (_, false) => out.write_str(" + ")?,
            (_, true) => out.write_str(" - ")?,
        }
        let labels: Vec<&Partition> = term.factors.iter().filter(|p| !p.is_empty()).collect();
        if magnitude != 1 {
            write!(out, "{magnitude}")?;
            if !labels.is_empty() {
                out.write_str(" ")?;
            }
        } else if labels.is_empty() {
            out.write_str("1")?;
        }
        for label in labels {
            match notation {
                Notation::Text => write!(out, "s_{label}")?,
                Notation::Latex => write!(out, "s_{{{label}}}")?,
            }
        }
    }
    Ok(())
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Text))
    }
}

/// Transpose every Young diagram in the identity.
pub fn conjugate_identity(id: &Identity) -> Identity {
    Identity {
        lhs: id.lhs.iter().map(|t| t.map_labels(Partition::conjugate)).collect(),
        rhs: id.rhs.iter().map(|t| t.map_labels(Partition::conjugate)).collect(),
    }
}
