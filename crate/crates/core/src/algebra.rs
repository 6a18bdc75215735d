//! Words and linear combinations in the free algebra on `Y_n`, `Y*_n`, together
//! with the grading and the structure maps that descend to the quotient
//! algebra: the anti-involution θ, the automorphisms τ_μ and the derivation d.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linear::{BasisProduct, LinComb};
use crate::scalar::{self, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Y,
    Ystar,
}

impl Kind {
    pub fn other(self) -> Kind {
        match self {
            Kind::Y => Kind::Ystar,
            Kind::Ystar => Kind::Y,
        }
    }
}

/// `Y_n` or `Y*_n`. Ordered by kind first, then index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub kind: Kind,
    pub index: i64,
}

impl Generator {
    pub const fn y(index: i64) -> Self {
        Self {
            kind: Kind::Y,
            index,
        }
    }

    pub const fn ystar(index: i64) -> Self {
        Self {
            kind: Kind::Ystar,
            index,
        }
    }

    pub fn degree(self) -> i64 {
        -self.index
    }

    /// `Y_n ↦ Y*_{-n}`, `Y*_n ↦ Y_{-n}`.
    pub fn theta(self) -> Self {
        Self {
            kind: self.kind.other(),
            index: -self.index,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Y => write!(f, "Y[{}]", self.index),
            Kind::Ystar => write!(f, "Ys[{}]", self.index),
        }
    }
}

/// A product of generators, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|g| g.degree()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Reverses the word and applies θ to each letter.
    pub fn theta(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.theta()).collect())
    }

    pub fn count(&self, kind: Kind) -> usize {
        self.0.iter().filter(|g| g.kind == kind).count()
    }

    /// `Y_{-λ_1} ⋯ Y_{-λ_r}` (or the `Y*` analogue) for a list of parts.
    pub fn from_parts(kind: Kind, parts: &[u32]) -> Word {
        Word(
            parts
                .iter()
                .map(|&p| Generator {
                    kind,
                    index: -i64::from(p),
                })
                .collect(),
        )
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl BasisProduct for Word {
    fn unit() -> Self {
        Word::empty()
    }
    fn product(&self, other: &Self) -> Self {
        self.concat(other)
    }
}

/// An element of the free algebra; equality in the quotient algebra is
/// decided by [`crate::rewrite::equal`].
pub type AlgebraElement = LinComb<Word>;

pub fn degree(w: &Word) -> i64 {
    w.degree()
}

pub fn word_element(letters: &[Generator]) -> AlgebraElement {
    AlgebraElement::basis(Word(letters.to_vec()))
}

pub fn generator(g: Generator) -> AlgebraElement {
    word_element(&[g])
}

pub fn theta(e: &AlgebraElement) -> AlgebraElement {
    e.map_keys(Word::theta)
}

/// The automorphism `Y_n ↦ μ Y_n`, `Y*_n ↦ μ⁻¹ Y*_n`.
pub fn tau(e: &AlgebraElement, mu: &Scalar) -> Result<AlgebraElement> {
    if num_traits::Zero::is_zero(mu) {
        return Err(Error::ZeroMu);
    }
    Ok(e.map_coeffs(|w, c| {
        let exp = w.count(Kind::Y) as i64 - w.count(Kind::Ystar) as i64;
        c * scalar::pow(mu, exp)
    }))
}

/// The degree derivation: multiplies each word by its degree.
pub fn d_derivation(e: &AlgebraElement) -> AlgebraElement {
    e.map_coeffs(|w, c| c * scalar::int(w.degree()))
}

/// Splits an element into its homogeneous components keyed by degree.
pub fn homogeneous_components(e: &AlgebraElement) -> BTreeMap<i64, AlgebraElement> {
    let mut out: BTreeMap<i64, AlgebraElement> = BTreeMap::new();
    for (w, c) in e {
        out.entry(w.degree())
            .or_default()
            .add_term(w.clone(), c.clone());
    }
    out
}

pub fn format_element(e: &AlgebraElement) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in e.iter().enumerate() {
        let neg = scalar::is_negative(c);
        let abs = if neg { -c.clone() } else { c.clone() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let unit = abs == scalar::one();
        if w.is_empty() {
            out.push_str(&abs.to_string());
        } else if unit {
            out.push_str(&w.to_string());
        } else {
            out.push_str(&format!("{abs}*{w}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn w(gs: &[Generator]) -> Word {
        Word(gs.to_vec())
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&Word::empty()), 0);
        assert_eq!(degree(&w(&[Generator::y(3)])), -3);
        assert_eq!(degree(&w(&[Generator::y(2), Generator::ystar(-5)])), 3);
    }

    #[test]
    fn theta_examples() {
        let e = generator(Generator::y(2));
        assert_eq!(theta(&e), generator(Generator::ystar(-2)));
        let e = word_element(&[Generator::y(2), Generator::ystar(-3)]);
        assert_eq!(
            theta(&e),
            word_element(&[Generator::y(3), Generator::ystar(-2)])
        );
        assert_eq!(theta(&AlgebraElement::one()), AlgebraElement::one());
    }

    #[test]
    fn tau_examples() {
        let three = int(3);
        assert_eq!(
            tau(&generator(Generator::y(0)), &three).unwrap(),
            generator(Generator::y(0)).scale(&three)
        );
        assert_eq!(
            tau(&generator(Generator::ystar(0)), &three).unwrap(),
            generator(Generator::ystar(0)).scale(&frac(1, 3))
        );
        let e = word_element(&[Generator::y(1), Generator::ystar(2)]);
        assert_eq!(tau(&e, &int(5)).unwrap(), e);
        assert_eq!(tau(&e, &int(0)), Err(Error::ZeroMu));
    }

    #[test]
    fn derivation_examples() {
        let y2 = generator(Generator::y(2));
        assert_eq!(d_derivation(&y2), y2.scale(&int(-2)));
        let y1y1 = word_element(&[Generator::y(1), Generator::y(1)]);
        assert_eq!(d_derivation(&y1y1), y1y1.scale(&int(-2)));
        assert!(d_derivation(&AlgebraElement::one()).is_zero());
    }

    #[test]
    fn formatting() {
        let e = word_element(&[Generator::y(-1), Generator::ystar(0)]).scale(&frac(1, 2))
            - generator(Generator::y(2));
        assert_eq!(format_element(&e), "1/2*Y[-1]*Ys[0] - Y[2]");
    }
}
