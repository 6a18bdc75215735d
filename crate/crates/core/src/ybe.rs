//! The diagonal braiding `S(x)` on `H ⊗ H`, `H = span{ã, b̃}`, with its
//! Yang–Baxter and unitarity checks carried out in truncated power series.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A power series in `x` and `z` with every term of total degree above
/// `order` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: u32,
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl TruncSeries {
    pub fn zero(order: u32) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(order: u32, c: Scalar) -> Self {
        let mut s = Self::zero(order);
        s.add_term(0, 0, c);
        s
    }

    /// `sign · exp(a·x + b·z)`.
    pub fn signed_exp(order: u32, sign: i64, a: i64, b: i64) -> Self {
        let mut s = Self::zero(order);
        for i in 0..=order {
            for j in 0..=order - i {
                let c = scalar::pow(&scalar::int(a), i64::from(i))
                    * scalar::pow(&scalar::int(b), i64::from(j))
                    / (scalar::factorial(u64::from(i)) * scalar::factorial(u64::from(j)));
                s.add_term(i, j, c * scalar::int(sign));
            }
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(x power, z power, coefficient)` in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, &Scalar)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    fn add_term(&mut self, i: u32, j: u32, c: Scalar) {
        if i + j > self.order || c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order.min(other.order));
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &other.terms {
                out.add_term(i + k, j + l, c * d);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.order = self.order.min(other.order);
        out.terms.retain(|&(i, j), _| i + j <= out.order);
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O({})", self.order + 1);
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", scalar::to_string(c))?;
            match i {
                0 => {}
                1 => write!(f, "*x")?,
                _ => write!(f, "*x^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "*z")?,
                _ => write!(f, "*z^{j}")?,
            }
        }
        write!(f, " + O({})", self.order + 1)
    }
}

/// `ã` or `b̃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::A, Letter::B];
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::A => write!(f, "a"),
            Letter::B => write!(f, "b"),
        }
    }
}

/// `sign · e^{rate · x}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedExp {
    pub sign: i64,
    pub rate: i64,
}

/// A braiding diagonal on `{ã⊗ã, ã⊗b̃, b̃⊗ã, b̃⊗b̃}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SMatrix {
    pub aa: SignedExp,
    pub ab: SignedExp,
    pub ba: SignedExp,
    pub bb: SignedExp,
}

impl SMatrix {
    /// The braiding of the tilde generators: `-e^x` on all entries except
    /// `b̃⊗ã`, which carries `-e^{-x}`.
    pub fn tilde() -> Self {
        let plus = SignedExp { sign: -1, rate: 1 };
        Self {
            aa: plus,
            ab: plus,
            ba: SignedExp { sign: -1, rate: -1 },
            bb: plus,
        }
    }

    pub fn entry(&self, p: Letter, q: Letter) -> SignedExp {
        match (p, q) {
            (Letter::A, Letter::A) => self.aa,
            (Letter::A, Letter::B) => self.ab,
            (Letter::B, Letter::A) => self.ba,
            (Letter::B, Letter::B) => self.bb,
        }
    }

    /// The eigenvalue on `p⊗q` evaluated at `s·x + t·z`.
    fn series(&self, p: Letter, q: Letter, s: i64, t: i64, order: u32) -> TruncSeries {
        let e = self.entry(p, q);
        TruncSeries::signed_exp(order, e.sign, e.rate * s, e.rate * t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeReport {
    pub order: u32,
    /// `S¹²(x)S¹³(x+z)S²³(z) - S²³(z)S¹³(x+z)S¹²(x)` per basis vector.
    pub ybe_residuals: Vec<([Letter; 3], TruncSeries)>,
    /// `S(x) σ S(-x) σ - 1` per basis vector.
    pub unitarity_deviations: Vec<([Letter; 2], TruncSeries)>,
}

impl YbeReport {
    pub fn ybe_holds(&self) -> bool {
        self.ybe_residuals.iter().all(|(_, r)| r.is_zero())
    }
}

pub fn ybe_unitarity_check(s: &SMatrix, order: u32) -> Result<YbeReport> {
    if order == 0 {
        return Err(Error::InvalidParameter(
            "truncation order must be at least 1".into(),
        ));
    }
    let mut ybe_residuals = Vec::new();
    for p in Letter::ALL {
        for q in Letter::ALL {
            for r in Letter::ALL {
                let s12 = s.series(p, q, 1, 0, order);
                let s13 = s.series(p, r, 1, 1, order);
                let s23 = s.series(q, r, 0, 1, order);
                let lhs = s12.mul(&s13).mul(&s23);
                let rhs = s23.mul(&s13).mul(&s12);
                ybe_residuals.push(([p, q, r], lhs.sub(&rhs)));
            }
        }
    }
    let one = TruncSeries::constant(order, scalar::one());
    let mut unitarity_deviations = Vec::new();
    for p in Letter::ALL {
        for q in Letter::ALL {
            // σ sends p⊗q to q⊗p, S(-x) acts there, σ brings it back.
            let composed = s
                .series(p, q, 1, 0, order)
                .mul(&s.series(q, p, -1, 0, order));
            unitarity_deviations.push(([p, q], composed.sub(&one)));
        }
    }
    Ok(YbeReport {
        order,
        ybe_residuals,
        unitarity_deviations,
    })
}
