//! The Clifford algebra on `a_n`, `b_n` with `{a_m, b_n} = δ_{m+n+1,0}`, its
//! smash product with the shift σ, the homomorphism π out of the Clifford-like
//! algebra, and the second PBW basis read off through π.

use std::fmt;

use crate::algebra::{AlgebraElement, Generator, Kind, Word};
use crate::error::{Error, Result};
use crate::linear::LinComb;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CliffKind {
    A,
    B,
}

/// `a_n` or `b_n`. The derived order (all `a` before all `b`, then by index)
/// is the normal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliffGenerator {
    pub kind: CliffKind,
    pub index: i64,
}

impl CliffGenerator {
    pub const fn a(index: i64) -> Self {
        Self {
            kind: CliffKind::A,
            index,
        }
    }

    pub const fn b(index: i64) -> Self {
        Self {
            kind: CliffKind::B,
            index,
        }
    }

    /// `σ^k`: raises `a` indices by `k`, lowers `b` indices by `k`.
    pub fn shift(self, k: i64) -> Self {
        match self.kind {
            CliffKind::A => Self::a(self.index + k),
            CliffKind::B => Self::b(self.index - k),
        }
    }
}

impl fmt::Display for CliffGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CliffKind::A => write!(f, "a[{}]", self.index),
            CliffKind::B => write!(f, "b[{}]", self.index),
        }
    }
}

/// Normally ordered word `a_{m_1}⋯a_{m_r} b_{n_1}⋯b_{n_s}` with both index
/// lists strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliffWord {
    a: Vec<i64>,
    b: Vec<i64>,
}

impl CliffWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a normally ordered word; `None` if either list is not strictly
    /// increasing.
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Option<Self> {
        let strict = |v: &[i64]| v.windows(2).all(|p| p[0] < p[1]);
        (strict(&a) && strict(&b)).then_some(Self { a, b })
    }

    pub fn a_indices(&self) -> &[i64] {
        &self.a
    }

    pub fn b_indices(&self) -> &[i64] {
        &self.b
    }

    /// `#a − #b`.
    pub fn charge(&self) -> i64 {
        self.a.len() as i64 - self.b.len() as i64
    }

    pub fn letters(&self) -> Vec<CliffGenerator> {
        self.a
            .iter()
            .map(|&i| CliffGenerator::a(i))
            .chain(self.b.iter().map(|&i| CliffGenerator::b(i)))
            .collect()
    }
}

impl fmt::Display for CliffWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.letters();
        if letters.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

pub type CliffElement = LinComb<CliffWord>;

/// A basis element `u ⊗ σ^k` of the smash product.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmashKey {
    pub word: CliffWord,
    pub sigma: i64,
}

pub type SmashElement = LinComb<SmashKey>;

/// Normal ordering of an arbitrary product of Clifford generators.
pub fn cliff_nf(raw: &[CliffGenerator]) -> CliffElement {
    let mut pending: LinComb<Vec<CliffGenerator>> = LinComb::basis(raw.to_vec());
    let mut done = CliffElement::zero();
    while let Some((w, c)) = pending.pop_first() {
        let Some(i) = w.windows(2).position(|p| p[0] >= p[1]) else {
            let split = w.partition_point(|g| g.kind == CliffKind::A);
            let word = CliffWord {
                a: w[..split].iter().map(|g| g.index).collect(),
                b: w[split..].iter().map(|g| g.index).collect(),
            };
            done.add_term(word, c);
            continue;
        };
        let (x, y) = (w[i], w[i + 1]);
        if x == y {
            continue;
        }
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        pending.add_term(swapped, -c.clone());
        if x.kind == CliffKind::B && y.kind == CliffKind::A && x.index + y.index + 1 == 0 {
            let mut contracted = w[..i].to_vec();
            contracted.extend_from_slice(&w[i + 2..]);
            pending.add_term(contracted, c);
        }
    }
    done
}

pub fn sigma_shift(w: &CliffWord, k: i64) -> CliffWord {
    CliffWord {
        a: w.a.iter().map(|i| i + k).collect(),
        b: w.b.iter().map(|i| i - k).collect(),
    }
}

/// `(u⊗σ^m)(v⊗σ^n) = u σ^m(v) ⊗ σ^{m+n}`, normally ordered.
pub fn smash_mul(s: &SmashElement, t: &SmashElement) -> SmashElement {
    let mut out = SmashElement::zero();
    for (sk, sc) in s {
        for (tk, tc) in t {
            let mut raw = sk.word.letters();
            raw.extend(sigma_shift(&tk.word, sk.sigma).letters());
            let sigma = sk.sigma + tk.sigma;
            let coeff = sc * tc;
            for (w, c) in &cliff_nf(&raw) {
                out.add_term(
                    SmashKey {
                        word: w.clone(),
                        sigma,
                    },
                    c * &coeff,
                );
            }
        }
    }
    out
}

/// `1 ⊗ σ^0`.
pub fn smash_one() -> SmashElement {
    SmashElement::basis(SmashKey::default())
}

pub fn smash_generator(g: CliffGenerator, sigma: i64) -> SmashElement {
    SmashElement::basis(SmashKey {
        word: CliffWord::new(
            if g.kind == CliffKind::A {
                vec![g.index]
            } else {
                vec![]
            },
            if g.kind == CliffKind::B {
                vec![g.index]
            } else {
                vec![]
            },
        )
        .expect("single letter"),
        sigma,
    })
}

/// Image of a single generator: `Y_n ↦ a_n⊗σ`, `Y*_n ↦ b_n⊗σ⁻¹`.
pub fn pi_generator(g: Generator) -> SmashElement {
    match g.kind {
        Kind::Y => smash_generator(CliffGenerator::a(g.index), 1),
        Kind::Ystar => smash_generator(CliffGenerator::b(g.index), -1),
    }
}

pub fn pi(e: &AlgebraElement) -> SmashElement {
    e.map_linear(|w| {
        w.letters()
            .iter()
            .fold(smash_one(), |acc, &g| smash_mul(&acc, &pi_generator(g)))
    })
}

/// Normal form in the second PBW basis (both blocks weakly increasing),
/// obtained by pulling π back along
/// `π(Y_{m_1}⋯Y_{m_r}Y*_{n_1}⋯Y*_{n_s}) = a_{m_1}a_{m_2+1}⋯a_{m_r+r-1} b_{n_1-r}⋯b_{n_s+s-1-r} ⊗ σ^{r-s}`.
pub fn nf2(e: &AlgebraElement) -> Result<AlgebraElement> {
    let image = pi(e);
    let mut out = AlgebraElement::zero();
    for (key, c) in &image {
        let charge = key.word.charge();
        if key.sigma != charge {
            return Err(Error::ChargeMismatch {
                sigma: key.sigma,
                charge,
            });
        }
        out.add_term(basis2_preimage(&key.word), c.clone());
    }
    Ok(out)
}

/// The basis-2 word whose π-image is `w ⊗ σ^{charge(w)}`.
pub fn basis2_preimage(w: &CliffWord) -> Word {
    let r = w.a.len() as i64;
    let ys =
        w.a.iter()
            .enumerate()
            .map(|(i, &p)| Generator::y(p - i as i64));
    let stars =
        w.b.iter()
            .enumerate()
            .map(|(j, &q)| Generator::ystar(q - j as i64 + r));
    Word(ys.chain(stars).collect())
}

/// Y-block and Y*-block weakly increasing, every Y before every Y*.
pub fn is_basis2(w: &Word) -> bool {
    let l = w.letters();
    l.windows(2).all(|p| match (p[0].kind, p[1].kind) {
        (Kind::Ystar, Kind::Y) => false,
        (Kind::Y, Kind::Ystar) => true,
        _ => p[0].index <= p[1].index,
    })
}

/// Anticommutator `xy + yx` of two generators, normally ordered.
pub fn anticommutator(x: CliffGenerator, y: CliffGenerator) -> CliffElement {
    cliff_nf(&[x, y]) + cliff_nf(&[y, x])
}
