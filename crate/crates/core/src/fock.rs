//! The bosonic Fock space `M(1) = ℚ[x_1, x_2, …]` and the vertex-operator
//! realization of `Y(z)`, `Y*(z)`, optionally twisted by τ_μ.
//!
//! With `a_{-n} = x_n` and `a_n = n ∂/∂x_n`, the annihilation exponential
//! `exp(∓Σ a_n/n (z^{-n} + z^n))` is the translation `x_j ↦ x_j ∓ (z^{-j} + z^j)`,
//! so on a polynomial it produces a Laurent polynomial in `z`. The creation
//! exponential `exp(±Σ x_k z^k / k)` is expanded through its coefficients
//! `E_t`, and a mode is the coefficient of `z^{-n}` of the product.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{Generator, Kind, Word};
use crate::error::{Error, Result};
use crate::linear::{BasisProduct, LinComb};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::scalar::{self, Scalar};

/// `x_1^{e_1} x_2^{e_2} ⋯` stored as the exponent vector with trailing zeros
/// trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(k: usize) -> Self {
        assert!(k >= 1, "variables are x_1, x_2, …");
        let mut e = vec![0; k];
        e[k - 1] = 1;
        Monomial(e)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// `Π x_{λ_i}`.
    pub fn from_partition(p: &Partition) -> Self {
        let mut e = vec![0; p.parts().first().copied().unwrap_or(0) as usize];
        for &part in p.parts() {
            e[part as usize - 1] += 1;
        }
        Monomial(e)
    }

    /// Exponent of `x_k`.
    pub fn exponent(&self, k: usize) -> u32 {
        self.0.get(k.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `(k, e_k)` for each variable present.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }

    /// `Σ k · e_k`.
    pub fn weighted_degree(&self) -> u32 {
        self.factors().map(|(k, e)| k as u32 * e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

impl BasisProduct for Monomial {
    fn unit() -> Self {
        Monomial::one()
    }

    fn product(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut e = long.0.clone();
        for (a, b) in e.iter_mut().zip(&short.0) {
            *a += b;
        }
        Monomial(e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, e) in self.factors() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{k}")?;
            } else {
                write!(f, "x{k}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A vector of `M(1)`.
pub type FockPolynomial = LinComb<Monomial>;

pub fn var(k: usize) -> FockPolynomial {
    FockPolynomial::basis(Monomial::var(k))
}

pub fn vacuum() -> FockPolynomial {
    FockPolynomial::one()
}

pub fn weighted_degree(p: &FockPolynomial) -> u32 {
    p.keys().map(Monomial::weighted_degree).max().unwrap_or(0)
}

/// True when `p` is a scalar multiple of the vacuum (including zero).
pub fn is_constant(p: &FockPolynomial) -> bool {
    p.keys().all(Monomial::is_one)
}

/// Index bound `M` and weighted-degree bound `D` for suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModeWindow {
    pub index_bound: i64,
    pub degree_bound: u32,
}

/// `E_0, …, E_t` with `Σ E_t z^t = exp(sign · Σ_{k≥1} x_k z^k / k)`, from the
/// recurrence `t E_t = sign · Σ_{k=1}^{t} x_k E_{t-k}`.
pub fn exp_coefficients(t: usize, sign: i8) -> Vec<FockPolynomial> {
    let table = creation_table(sign, t);
    table[..=t].to_vec()
}

type Table = Arc<Vec<FockPolynomial>>;

static CREATION: OnceLock<[RwLock<Table>; 3]> = OnceLock::new();

/// Shared, grow-only table of creation coefficients for `sign = ±1`.
fn creation_table(sign: i8, t: usize) -> Table {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    let s = scalar::int(i64::from(sign));
    grow(usize::from(sign < 0), t, |table| {
        let n = table.len();
        let mut acc = FockPolynomial::zero();
        for k in 1..=n {
            acc.add_product(&var(k), &table[n - k]);
        }
        acc.scale(&(&s / scalar::int(n as i64)))
    })
}

/// Coefficients `0..=t` of the creation factor of `Y(z)` (`exp(Σ x_k z^k/k)`)
/// or of `Y*(z)` (`(1 - z^2) exp(-Σ x_k z^k/k)`).
fn coefficient_table(kind: Kind, t: usize) -> Table {
    match kind {
        Kind::Y => creation_table(1, t),
        Kind::Ystar => {
            let minus = creation_table(-1, t);
            grow(2, t, |table| {
                let n = table.len();
                if n >= 2 {
                    &minus[n] - &minus[n - 2]
                } else {
                    minus[n].clone()
                }
            })
        }
    }
}

fn grow(slot: usize, t: usize, next: impl Fn(&[FockPolynomial]) -> FockPolynomial) -> Table {
    let slots = CREATION.get_or_init(|| {
        let seed = || RwLock::new(Arc::new(vec![vacuum()]));
        [seed(), seed(), seed()]
    });
    let slot = &slots[slot];
    {
        let table = slot.read().expect("creation cache");
        if table.len() > t {
            return Arc::clone(&table);
        }
    }
    let mut guard = slot.write().expect("creation cache");
    if guard.len() <= t {
        let mut table: Vec<FockPolynomial> = guard.as_ref().clone();
        while table.len() <= t {
            let v = next(&table);
            table.push(v);
        }
        *guard = Arc::new(table);
    }
    Arc::clone(&guard)
}

type Laurent = BTreeMap<i64, FockPolynomial>;

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out: Laurent = BTreeMap::new();
    for (i, p) in a {
        for (j, q) in b {
            out.entry(i + j).or_default().add_product(p, q);
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// `(x_j + s(z^{-j} + z^j))^e` as a Laurent polynomial in `z`.
fn shifted_power(j: usize, e: u32, s: i64) -> Laurent {
    let mut out: Laurent = BTreeMap::new();
    let ji = j as i64;
    for i in 0..=e {
        let xpart = FockPolynomial::basis(Monomial::from_exponents({
            let mut v = vec![0; j];
            v[j - 1] = e - i;
            v
        }));
        let c = scalar::binomial(u64::from(e), u64::from(i))
            * scalar::pow(&scalar::int(s), i64::from(i));
        for l in 0..=i {
            let zpow = ji * (2 * i64::from(l) - i64::from(i));
            let cl = &c * scalar::binomial(u64::from(i), u64::from(l));
            let slot = out.entry(zpow).or_default();
            slot.add_scaled(&xpart, &cl);
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// `P(x_j + s(z^{-j} + z^j))`.
fn translate(p: &FockPolynomial, s: i64) -> Laurent {
    let mut out: Laurent = BTreeMap::new();
    for (mono, c) in p {
        let mut acc: Laurent = BTreeMap::from([(0, FockPolynomial::one())]);
        for (j, e) in mono.factors() {
            acc = laurent_mul(&acc, &shifted_power(j, e, s));
        }
        for (k, q) in acc {
            out.entry(k).or_default().add_scaled(&q, c);
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

fn check_mu(mu: &Scalar) -> Result<()> {
    if mu.is_zero() {
        Err(Error::ZeroMu)
    } else {
        Ok(())
    }
}

/// The `z`-window used by [`apply_mode`] for a polynomial of weighted degree
/// `d`.
pub fn default_window(d: u32, n: i64) -> usize {
    (i64::from(d) + n.abs() + 2) as usize
}

/// Sign of the translation performed by the annihilation factor.
fn shift_sign(kind: Kind) -> i64 {
    match kind {
        Kind::Y => -1,
        Kind::Ystar => 1,
    }
}

fn twist_factor(kind: Kind, mu: &Scalar) -> Scalar {
    match kind {
        Kind::Y => mu.clone(),
        Kind::Ystar => mu.recip(),
    }
}

/// Coefficient of `z^{-n}` in the creation series times `q`, for `t ≤ window`.
fn extract_mode(kind: Kind, n: i64, q: &Laurent, window: usize) -> FockPolynomial {
    let (Some(&qmin), Some(&qmax)) = (q.keys().next(), q.keys().next_back()) else {
        return FockPolynomial::zero();
    };
    // Only t with -n - t inside the support of q contribute.
    let t_min = (-n - qmax).max(0);
    let t_max = (-n - qmin).min(window as i64);
    let mut out = FockPolynomial::zero();
    if t_max < t_min {
        return out;
    }
    let table = coefficient_table(kind, t_max as usize);
    for t in t_min as usize..=t_max as usize {
        if let Some(qt) = q.get(&(-n - t as i64)) {
            out.add_product(&table[t], qt);
        }
    }
    out
}

/// [`apply_mode`] with the creation series truncated at `z^window`.
pub fn apply_mode_windowed(
    kind: Kind,
    n: i64,
    p: &FockPolynomial,
    mu: &Scalar,
    window: usize,
) -> Result<FockPolynomial> {
    check_mu(mu)?;
    let q = translate(p, shift_sign(kind));
    Ok(extract_mode(kind, n, &q, window).scale(&twist_factor(kind, mu)))
}

/// Every mode `n ∈ [lo, hi]` of `Y(z)P` or `Y*(z)P`, sharing one translation
/// of `P`.
pub fn apply_modes(
    kind: Kind,
    lo: i64,
    hi: i64,
    p: &FockPolynomial,
    mu: &Scalar,
) -> Result<BTreeMap<i64, FockPolynomial>> {
    check_mu(mu)?;
    let q = translate(p, shift_sign(kind));
    let d = weighted_degree(p);
    let factor = twist_factor(kind, mu);
    Ok((lo..=hi)
        .map(|n| {
            (
                n,
                extract_mode(kind, n, &q, default_window(d, n)).scale(&factor),
            )
        })
        .collect())
}

/// The coefficient of `z^{-n}` in `Y(z)P` or `Y*(z)P`, scaled by μ or μ⁻¹.
pub fn apply_mode(kind: Kind, n: i64, p: &FockPolynomial, mu: &Scalar) -> Result<FockPolynomial> {
    apply_mode_windowed(kind, n, p, mu, default_window(weighted_degree(p), n))
}

pub fn apply_generator(g: Generator, p: &FockPolynomial, mu: &Scalar) -> Result<FockPolynomial> {
    apply_mode(g.kind, g.index, p, mu)
}

/// Applies a word, rightmost letter first.
pub fn apply_word(w: &Word, p: &FockPolynomial, mu: &Scalar) -> Result<FockPolynomial> {
    check_mu(mu)?;
    let mut v = p.clone();
    for &g in w.letters().iter().rev() {
        if v.is_zero() {
            break;
        }
        v = apply_generator(g, &v, mu)?;
    }
    Ok(v)
}

/// Applies a linear combination of words.
pub fn apply_element(
    e: &crate::algebra::AlgebraElement,
    p: &FockPolynomial,
    mu: &Scalar,
) -> Result<FockPolynomial> {
    let mut out = FockPolynomial::zero();
    for (w, c) in e {
        out.add_scaled(&apply_word(w, p, mu)?, c);
    }
    Ok(out)
}

/// `Y_{-λ}·1` for every partition of weight at most `n`, computed by applying
/// one mode to the value of the tail partition.
pub fn y_lambda_vectors(n: u32, mu: &Scalar) -> Result<BTreeMap<Partition, FockPolynomial>> {
    check_mu(mu)?;
    let mut out: BTreeMap<Partition, FockPolynomial> = BTreeMap::new();
    out.insert(Partition::empty(), vacuum());
    for weight in 1..=n {
        for lam in partitions_of(weight) {
            let tail = out[&lam.tail()].clone();
            let v = apply_mode(Kind::Y, -i64::from(lam.parts()[0]), &tail, mu)?;
            out.insert(lam, v);
        }
    }
    Ok(out)
}

/// `Y_{-λ}·1 = (-1)^{|λ|} Y*_{-λ'}·1` in the untwisted module.
pub fn duality_check(lam: &Partition, mu: &Scalar) -> Result<bool> {
    if *mu != scalar::one() {
        return Err(Error::InvalidParameter(
            "the duality identity holds in the untwisted module (mu = 1)".into(),
        ));
    }
    let lhs = apply_word(&Word::from_parts(Kind::Y, lam.parts()), &vacuum(), mu)?;
    let rhs = apply_word(
        &Word::from_parts(Kind::Ystar, lam.conjugate().parts()),
        &vacuum(),
        mu,
    )?;
    Ok(lhs == rhs.scale(&scalar::sign(lam.weight() as usize)))
}

/// One of the three defining relations of the Clifford-like algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `Y_m Y_n + Y_{n+1} Y_{m-1} = 0`
    YY,
    /// `Y*_m Y*_n + Y*_{n+1} Y*_{m-1} = 0`
    YsYs,
    /// `Y_m Y*_n + Y*_{n-1} Y_{m+1} = δ_{m+n,0}`
    YYs,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::YY, Relation::YsYs, Relation::YYs];

    pub fn label(self) -> &'static str {
        match self {
            Relation::YY => "YY",
            Relation::YsYs => "YsYs",
            Relation::YYs => "YYs",
        }
    }

    /// Left side minus right side as an element of the free algebra.
    pub fn element(self, m: i64, n: i64) -> crate::algebra::AlgebraElement {
        use crate::algebra::word_element;
        use Generator as G;
        match self {
            Relation::YY => {
                word_element(&[G::y(m), G::y(n)]) + word_element(&[G::y(n + 1), G::y(m - 1)])
            }
            Relation::YsYs => {
                word_element(&[G::ystar(m), G::ystar(n)])
                    + word_element(&[G::ystar(n + 1), G::ystar(m - 1)])
            }
            Relation::YYs => {
                let mut e = word_element(&[G::y(m), G::ystar(n)])
                    + word_element(&[G::ystar(n - 1), G::y(m + 1)]);
                if m + n == 0 {
                    e.add_term(Word::empty(), -scalar::one());
                }
                e
            }
        }
    }
}

impl std::str::FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.label() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown relation `{s}`")))
    }
}

pub fn relation_residual(
    which: Relation,
    m: i64,
    n: i64,
    p: &FockPolynomial,
    mu: &Scalar,
) -> Result<FockPolynomial> {
    apply_element(&which.element(m, n), p, mu)
}

/// All monomials of weighted degree at most `d`.
pub fn monomials_up_to(d: u32) -> Vec<Monomial> {
    partitions_up_to(d)
        .into_iter()
        .flatten()
        .map(|p| Monomial::from_partition(&p))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualFailure {
    pub relation: Relation,
    pub m: i64,
    pub n: i64,
    pub monomial: Monomial,
    pub mu: Scalar,
    pub residual: FockPolynomial,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<ResidualFailure>,
}

/// `g h P` for every pair `g h` in `pairs`, sharing inner vectors and
/// translations.
fn pair_table(
    p: &FockPolynomial,
    pairs: &BTreeMap<Generator, BTreeMap<Kind, (i64, i64)>>,
    mu: &Scalar,
) -> Result<BTreeMap<(Generator, Generator), FockPolynomial>> {
    let mut out = BTreeMap::new();
    for inner_kind in [Kind::Y, Kind::Ystar] {
        let indices = pairs
            .keys()
            .filter(|h| h.kind == inner_kind)
            .map(|h| h.index);
        let (Some(lo), Some(hi)) = (indices.clone().min(), indices.max()) else {
            continue;
        };
        for (n, v) in apply_modes(inner_kind, lo, hi, p, mu)? {
            let inner = Generator {
                kind: inner_kind,
                index: n,
            };
            let Some(outer) = pairs.get(&inner) else {
                continue;
            };
            for (&outer_kind, &(lo, hi)) in outer {
                for (m, w) in apply_modes(outer_kind, lo, hi, &v, mu)? {
                    out.insert(
                        (
                            Generator {
                                kind: outer_kind,
                                index: m,
                            },
                            inner,
                        ),
                        w,
                    );
                }
            }
        }
    }
    Ok(out)
}

/// Evaluates every relation residual for `m, n ∈ [-M, M]` on every monomial of
/// weighted degree `≤ D`, for each μ.
pub fn relation_suite(window: ModeWindow, mus: &[Scalar]) -> Result<RelationReport> {
    for mu in mus {
        check_mu(mu)?;
    }
    let mons = monomials_up_to(window.degree_bound);
    let big_m = window.index_bound;
    let cases: Vec<(Monomial, Scalar)> = mons
        .iter()
        .flat_map(|mono| mus.iter().map(move |mu| (mono.clone(), mu.clone())))
        .collect();
    let mut elements = Vec::new();
    let mut pairs: BTreeMap<Generator, BTreeMap<Kind, (i64, i64)>> = BTreeMap::new();
    for relation in Relation::ALL {
        for m in -big_m..=big_m {
            for n in -big_m..=big_m {
                let e = relation.element(m, n);
                for w in e.keys() {
                    if let &[g, h] = w.letters() {
                        let range = pairs
                            .entry(h)
                            .or_default()
                            .entry(g.kind)
                            .or_insert((g.index, g.index));
                        range.0 = range.0.min(g.index);
                        range.1 = range.1.max(g.index);
                    }
                }
                elements.push((relation, m, n, e));
            }
        }
    }
    let checked = cases.len() * elements.len();
    let mut failures: Vec<ResidualFailure> = cases
        .into_par_iter()
        .map(|(mono, mu)| -> Result<Vec<ResidualFailure>> {
            let p = FockPolynomial::basis(mono.clone());
            let table = pair_table(&p, &pairs, &mu)?;
            let mut found = Vec::new();
            for (relation, m, n, e) in &elements {
                let mut r = FockPolynomial::zero();
                for (w, c) in e {
                    match w.letters() {
                        [] => r.add_scaled(&p, c),
                        &[g, h] => r.add_scaled(&table[&(g, h)], c),
                        _ => r.add_scaled(&apply_word(w, &p, &mu)?, c),
                    }
                }
                if !r.is_zero() {
                    found.push(ResidualFailure {
                        relation: *relation,
                        m: *m,
                        n: *n,
                        monomial: mono.clone(),
                        mu: mu.clone(),
                        residual: r,
                    });
                }
            }
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    failures.sort_by(|a, b| {
        (a.relation, a.m, a.n, &a.monomial).cmp(&(b.relation, b.m, b.n, &b.monomial))
    });
    Ok(RelationReport { checked, failures })
}

/// Weakly increasing sequences of length `len` from `[lo, hi]` summing to `total`.
fn weakly_increasing(len: usize, lo: i64, hi: i64, total: i64) -> Vec<Vec<i64>> {
    fn go(
        len: usize,
        lo: i64,
        hi: i64,
        total: i64,
        prefix: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if len == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let l = len as i64;
        for v in lo..=hi {
            // Remaining letters are all ≥ v and ≤ hi.
            if v * l > total || hi * l < total {
                continue;
            }
            prefix.push(v);
            go(len - 1, v, hi, total - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, lo, hi, total, &mut Vec::new(), &mut out);
    out
}

/// Basis-2 words `Y_{m_1}⋯Y_{m_r}Y*_{n_1}⋯Y*_{n_s}` of degree `-k` with indices
/// in `[-M, M]` and `1 ≤ r + s ≤ max_len`.
pub fn basis2_words_of_degree(k: i64, index_bound: i64, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for r in 0..=len {
            let s = len - r;
            let lo = -index_bound;
            let hi = index_bound;
            // Split the total k between the two blocks.
            for ysum in (lo * r as i64)..=(hi * r as i64) {
                let ssum = k - ysum;
                if ssum < lo * s as i64 || ssum > hi * s as i64 {
                    continue;
                }
                let ys = weakly_increasing(r, lo, hi, ysum);
                if ys.is_empty() {
                    continue;
                }
                let ss = weakly_increasing(s, lo, hi, ssum);
                for y in &ys {
                    for st in &ss {
                        let letters = y
                            .iter()
                            .map(|&i| Generator::y(i))
                            .chain(st.iter().map(|&i| Generator::ystar(i)))
                            .collect();
                        out.push(Word(letters));
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OmegaReport {
    pub checked: usize,
    pub violations: Vec<(Word, FockPolynomial)>,
}

/// Checks that every basis-2 word of negative degree `-k`, `1 ≤ k ≤ kmax`,
/// kills the vacuum.
pub fn lemma_omega_suite(kmax: i64, index_bound: i64, max_len: usize) -> OmegaReport {
    let words: Vec<Word> = (1..=kmax)
        .flat_map(|k| basis2_words_of_degree(k, index_bound, max_len))
        .collect();
    let checked = words.len();
    let violations = words
        .into_par_iter()
        .filter_map(|w| {
            let v = apply_word(&w, &vacuum(), &scalar::one()).expect("mu = 1");
            (!v.is_zero()).then_some((w, v))
        })
        .collect();
    OmegaReport {
        checked,
        violations,
    }
}
