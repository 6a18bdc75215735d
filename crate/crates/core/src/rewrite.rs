//! Oriented rewriting onto the first PBW basis, the confluence harness, the
//! equality oracle built on unique normal forms, and the reduction of degree-0
//! elements onto the group algebra of ℤ.
//!
//! Rules, applied to an adjacent pair of letters:
//!
//! | pair            | condition  | replacement                                |
//! |-----------------|------------|--------------------------------------------|
//! | `Y_m Y_n`       | `m ≤ n`    | `-Y_{n+1} Y_{m-1}`                          |
//! | `Y_{n+1} Y_n`   |            | `0`                                        |
//! | `Y*_m Y*_n`     | `m ≤ n`    | `-Y*_{n+1} Y*_{m-1}`                        |
//! | `Y*_{n+1} Y*_n` |            | `0`                                        |
//! | `Y*_n Y_m`      | always     | `-Y_{m-1} Y*_{n+1} + δ_{m+n,0}`             |
//!
//! Each step either lowers the number of `(Y*, Y)` inversions or keeps it and
//! lowers the total reverse number, so rewriting terminates.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::algebra::{AlgebraElement, Generator, Kind, Word};
use crate::clifford;
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::scalar::{self, Scalar};

/// Elements `Σ c_k Ȳ^k` of the group algebra ℚ[ℤ]; negative powers are powers
/// of the class of `Y*_0`.
pub type GroupAlgebraElement = LinComb<i64>;

/// Whether the adjacent pair `(left, right)` is the left side of a rule.
pub fn is_reducible_pair(left: Generator, right: Generator) -> bool {
    match (left.kind, right.kind) {
        (Kind::Ystar, Kind::Y) => true,
        (Kind::Y, Kind::Y) | (Kind::Ystar, Kind::Ystar) => left.index <= right.index + 1,
        (Kind::Y, Kind::Ystar) => false,
    }
}

/// One rule applied to an adjacent pair. The result is a combination of
/// replacement letter sequences (length 2, or 0 for the δ term).
fn rewrite_pair(left: Generator, right: Generator) -> Vec<(Vec<Generator>, Scalar)> {
    let (m, n) = (left.index, right.index);
    match (left.kind, right.kind) {
        (Kind::Ystar, Kind::Y) => {
            // Y*_m Y_n = -Y_{n-1} Y*_{m+1} + δ_{m+n,0}
            let mut out = vec![(
                vec![Generator::y(n - 1), Generator::ystar(m + 1)],
                -scalar::one(),
            )];
            if m + n == 0 {
                out.push((Vec::new(), scalar::one()));
            }
            out
        }
        (kind, k2) if kind == k2 && m == n + 1 => Vec::new(),
        (kind, k2) if kind == k2 && m <= n => vec![(
            vec![
                Generator { kind, index: n + 1 },
                Generator { kind, index: m - 1 },
            ],
            -scalar::one(),
        )],
        _ => panic!("pair {left}{right} is not reducible"),
    }
}

/// Rewrites the pair at positions `(i, i+1)` of `w` once.
pub fn rewrite_at(w: &Word, i: usize) -> AlgebraElement {
    let letters = w.letters();
    let (prefix, rest) = letters.split_at(i);
    let suffix = &rest[2..];
    rewrite_pair(rest[0], rest[1])
        .into_iter()
        .map(|(mid, c)| {
            let mut out = prefix.to_vec();
            out.extend(mid);
            out.extend_from_slice(suffix);
            (Word(out), c)
        })
        .collect()
}

fn leftmost_redex(w: &Word) -> Option<usize> {
    w.letters()
        .windows(2)
        .position(|p| is_reducible_pair(p[0], p[1]))
}

/// True iff `w` is `Y_{m_1}⋯Y_{m_r} Y*_{n_1}⋯Y*_{n_s}` with
/// `m_1 > m_2 + 1 > ⋯` and `n_1 > n_2 + 1 > ⋯`.
pub fn is_normal1(w: &Word) -> bool {
    leftmost_redex(w).is_none()
}

/// The number of `(Y*, Y)` inversions and the total reverse number of the two
/// blocks; rewriting strictly decreases this pair lexicographically.
pub fn termination_measure(w: &Word) -> (usize, usize) {
    let letters = w.letters();
    let mut inversions = 0;
    let mut reverse = 0;
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            let (a, b) = (letters[i], letters[j]);
            match (a.kind, b.kind) {
                (Kind::Ystar, Kind::Y) => inversions += 1,
                (ka, kb) if ka == kb && a.index < b.index + (j - i) as i64 => reverse += 1,
                _ => {}
            }
        }
    }
    (inversions, reverse)
}

/// Normal form in the first PBW basis. Always rewrites the leftmost redex of
/// the least pending word.
pub fn nf1(e: &AlgebraElement) -> AlgebraElement {
    let mut pending = e.clone();
    let mut done = AlgebraElement::zero();
    while let Some((w, c)) = pending.pop_first() {
        match leftmost_redex(&w) {
            None => done.add_term(w, c),
            Some(i) => pending.add_scaled(&rewrite_at(&w, i), &c),
        }
    }
    done
}

/// Equality in the quotient algebra.
pub fn equal(a: &AlgebraElement, b: &AlgebraElement) -> bool {
    nf1(&(a - b)).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OverlapFamily {
    /// `Y_m Y_n Y_k`
    YYY,
    /// `Y*_p Y_m Y_n`
    YsYY,
    /// `Y*_m Y*_n Y_p`
    YsYsY,
    /// `Y*_m Y*_n Y*_k`
    YsYsYs,
}

impl OverlapFamily {
    pub const ALL: [OverlapFamily; 4] = [Self::YYY, Self::YsYY, Self::YsYsY, Self::YsYsYs];

    pub fn kinds(self) -> [Kind; 3] {
        match self {
            Self::YYY => [Kind::Y; 3],
            Self::YsYY => [Kind::Ystar, Kind::Y, Kind::Y],
            Self::YsYsY => [Kind::Ystar, Kind::Ystar, Kind::Y],
            Self::YsYsYs => [Kind::Ystar; 3],
        }
    }

    pub fn word(self, i: i64, j: i64, k: i64) -> Word {
        let [a, b, c] = self.kinds();
        Word(vec![
            Generator { kind: a, index: i },
            Generator { kind: b, index: j },
            Generator { kind: c, index: k },
        ])
    }

    /// Both adjacent pairs of the overlap word are redexes. For the pure
    /// families this is `i ≤ j+1 ≤ k+2`; a `(Y*, Y)` pair is always a redex,
    /// so the mixed families only constrain their like-kind pair.
    pub fn admits(self, i: i64, j: i64, k: i64) -> bool {
        let w = self.word(i, j, k);
        let l = w.letters();
        is_reducible_pair(l[0], l[1]) && is_reducible_pair(l[1], l[2])
    }
}

impl fmt::Display for OverlapFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::YYY => "YYY",
            Self::YsYY => "YsYY",
            Self::YsYsY => "YsYsY",
            Self::YsYsYs => "YsYsYs",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for OverlapFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown overlap family `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteReport {
    pub family: OverlapFamily,
    pub indices: (i64, i64, i64),
    pub word: Word,
    /// Normal form after rewriting the left pair first.
    pub left_first: AlgebraElement,
    /// Normal form after rewriting the right pair first.
    pub right_first: AlgebraElement,
    pub agree: bool,
}

/// Resolves the overlap word of `family` at `(i, j, k)` in both orders.
pub fn check_overlap(family: OverlapFamily, i: i64, j: i64, k: i64) -> Result<RewriteReport> {
    if !family.admits(i, j, k) {
        return Err(Error::OverlapPrecondition(format!(
            "{} is not an overlap of two redexes",
            family.word(i, j, k)
        )));
    }
    let word = family.word(i, j, k);
    let left_first = nf1(&rewrite_at(&word, 0));
    let right_first = nf1(&rewrite_at(&word, 1));
    let agree = left_first == right_first;
    Ok(RewriteReport {
        family,
        indices: (i, j, k),
        word,
        left_first,
        right_first,
        agree,
    })
}

/// Every admissible overlap with indices in `[-window, window]`, all families.
pub fn confluence_suite(window: i64) -> Vec<RewriteReport> {
    let mut triples = Vec::new();
    for family in OverlapFamily::ALL {
        for i in -window..=window {
            for j in -window..=window {
                for k in -window..=window {
                    if family.admits(i, j, k) {
                        triples.push((family, i, j, k));
                    }
                }
            }
        }
    }
    triples
        .into_par_iter()
        .map(|(f, i, j, k)| check_overlap(f, i, j, k).expect("admissible by construction"))
        .collect()
}

/// Moves `Y_m` to the right through `Y*_{n_1} ⋯ Y*_{n_s}`:
///
/// `Y_m Y*_{n_1}⋯Y*_{n_s} = (-1)^s Y*_{n_1-1}⋯Y*_{n_s-1} Y_{m+s}
///   + Σ_{j=1}^{s} (-1)^{j-1} δ_{m+j-1+n_j,0} Y*_{n_1-1}⋯Y*_{n_{j-1}-1} Y*_{n_{j+1}}⋯Y*_{n_s}`.
pub fn push_y_right(m: i64, stars: &[i64]) -> AlgebraElement {
    let s = stars.len();
    let mut out = AlgebraElement::zero();
    let mut main: Vec<Generator> = stars.iter().map(|&n| Generator::ystar(n - 1)).collect();
    main.push(Generator::y(m + s as i64));
    out.add_term(Word(main), scalar::sign(s));
    for j in 1..=s {
        if m + (j as i64 - 1) + stars[j - 1] == 0 {
            let letters: Vec<Generator> = stars[..j - 1]
                .iter()
                .map(|&n| Generator::ystar(n - 1))
                .chain(stars[j..].iter().map(|&n| Generator::ystar(n)))
                .collect();
            out.add_term(Word(letters), scalar::sign(j - 1));
        }
    }
    out
}

/// The class of a degree-0 element in `A_0 / I_0 ≅ ℚ[ℤ]`.
pub fn reduce_a0(e: &AlgebraElement) -> Result<GroupAlgebraElement> {
    if let Some(w) = e.keys().find(|w| w.degree() != 0) {
        return Err(Error::NonzeroDegree(w.degree()));
    }
    let mut memo = HashMap::new();
    Ok(reduce_element(e, &mut memo))
}

fn reduce_element(
    e: &AlgebraElement,
    memo: &mut HashMap<Word, GroupAlgebraElement>,
) -> GroupAlgebraElement {
    // A word ending in a letter of positive index lies in A_p A_{-p} ⊂ I_0.
    let live = e.filter(|w| w.letters().last().is_none_or(|g| g.index <= 0));
    if live.is_zero() {
        return GroupAlgebraElement::zero();
    }
    let basis2 = clifford::nf2(&live).expect("pi image is charge-consistent");
    let mut out = GroupAlgebraElement::zero();
    for (w, c) in &basis2 {
        let class = match memo.get(w) {
            Some(v) => v.clone(),
            None => {
                let v = reduce_basis2_word(w, memo);
                memo.insert(w.clone(), v.clone());
                v
            }
        };
        out.add_scaled(&class, c);
    }
    out
}

fn reduce_basis2_word(
    w: &Word,
    memo: &mut HashMap<Word, GroupAlgebraElement>,
) -> GroupAlgebraElement {
    let letters = w.letters();
    let r = w.count(Kind::Y);
    let ms: Vec<i64> = letters[..r].iter().map(|g| g.index).collect();
    let ns: Vec<i64> = letters[r..].iter().map(|g| g.index).collect();
    let s = ns.len();
    match (r, s) {
        (0, 0) => GroupAlgebraElement::basis(0),
        (_, 0) => {
            if ms[r - 1] == 0 {
                GroupAlgebraElement::basis(r as i64)
            } else {
                GroupAlgebraElement::zero()
            }
        }
        (0, _) => {
            if ns[s - 1] == 0 {
                GroupAlgebraElement::basis(-(s as i64))
            } else {
                GroupAlgebraElement::zero()
            }
        }
        _ => {
            let last = ns[s - 1];
            if last >= 1 {
                GroupAlgebraElement::zero()
            } else if last == 0 {
                let prefix = Word(letters[..letters.len() - 1].to_vec());
                let head = reduce_element(&AlgebraElement::basis(prefix), memo);
                &head * &GroupAlgebraElement::basis(-1)
            } else {
                // All n_i < 0, so m_r ≥ 1: push Y_{m_r} through the Y* block.
                let head = Word(letters[..r - 1].to_vec());
                let pushed = push_y_right(ms[r - 1], &ns);
                let expanded = &AlgebraElement::basis(head) * &pushed;
                reduce_element(&expanded, memo)
            }
        }
    }
}
