//! The fermionic Fock space `V_C = C / J_+` and the action of the modes
//! `Ỹ_n`, `Ỹ*_n` obtained by dressing the fermion fields with the
//! pseudo-automorphism `Δ(x)`: `Ỹ(x) = a(x)Δ(x)`, `Ỹ*(x) = b(x)Δ(x)^{-1}`.
//!
//! `Δ(x)` multiplies a charge-homogeneous vector by a single exponential
//! `e^{c x / 2}`, so it is represented by the pair `(c, payload)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::Kind;
use crate::clifford::{CliffGenerator, CliffKind};
use crate::error::{Error, Result};
use crate::linalg;
use crate::linear::LinComb;
use crate::scalar::{self, Scalar};

/// `a_{α_1}⋯a_{α_r} b_{β_1}⋯b_{β_s} Ω` with both lists strictly increasing and
/// negative.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FermionState {
    a: Vec<i64>,
    b: Vec<i64>,
}

impl FermionState {
    pub fn vacuum() -> Self {
        Self::default()
    }

    /// `None` unless both lists are strictly increasing and negative.
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Option<Self> {
        let ok = |v: &[i64]| v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&i| i < 0);
        (ok(&a) && ok(&b)).then_some(Self { a, b })
    }

    pub fn a_indices(&self) -> &[i64] {
        &self.a
    }

    pub fn b_indices(&self) -> &[i64] {
        &self.b
    }

    /// `#a - #b`.
    pub fn charge(&self) -> i64 {
        self.a.len() as i64 - self.b.len() as i64
    }

    /// `Σ (-index)` over both lists.
    pub fn energy(&self) -> i64 {
        -self.a.iter().chain(&self.b).sum::<i64>()
    }

    fn list(&self, kind: CliffKind) -> &[i64] {
        match kind {
            CliffKind::A => &self.a,
            CliffKind::B => &self.b,
        }
    }
}

impl fmt::Display for FermionState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.a {
            write!(f, "a[{i}]")?;
        }
        for i in &self.b {
            write!(f, "b[{i}]")?;
        }
        write!(f, "|0>")
    }
}

pub type FermionVector = LinComb<FermionState>;

pub fn vacuum() -> FermionVector {
    FermionVector::basis(FermionState::vacuum())
}

pub fn state(a: &[i64], b: &[i64]) -> FermionVector {
    FermionVector::basis(
        FermionState::new(a.to_vec(), b.to_vec()).expect("strictly increasing negative indices"),
    )
}

fn other(kind: CliffKind) -> CliffKind {
    match kind {
        CliffKind::A => CliffKind::B,
        CliffKind::B => CliffKind::A,
    }
}

/// `g · s` for a single state, as a signed state.
fn apply_to_state(g: CliffGenerator, s: &FermionState) -> Option<(FermionState, bool)> {
    let r = s.a.len();
    if g.index < 0 {
        let list = s.list(g.kind);
        let pos = match list.binary_search(&g.index) {
            Ok(_) => return None,
            Err(p) => p,
        };
        let mut out = s.clone();
        let offset = match g.kind {
            CliffKind::A => {
                out.a.insert(pos, g.index);
                0
            }
            CliffKind::B => {
                out.b.insert(pos, g.index);
                r
            }
        };
        return Some((out, (offset + pos) % 2 == 1));
    }
    let partner = -g.index - 1;
    let j = s.list(other(g.kind)).binary_search(&partner).ok()?;
    let mut out = s.clone();
    let offset = match g.kind {
        CliffKind::A => {
            out.b.remove(j);
            r
        }
        CliffKind::B => {
            out.a.remove(j);
            0
        }
    };
    Some((out, (offset + j) % 2 == 1))
}

/// The action of `a_n` or `b_n` on `V_C`.
pub fn fermion_apply(g: CliffGenerator, v: &FermionVector) -> FermionVector {
    let mut out = FermionVector::zero();
    for (s, c) in v {
        if let Some((t, negative)) = apply_to_state(g, s) {
            out.add_term(t, if negative { -c.clone() } else { c.clone() });
        }
    }
    out
}

/// Largest `j ≥ 0` for which `g_{m+j}` can act nontrivially on some state of
/// `u`, or `None` when none can.
fn shift_bound(kind: CliffKind, m: i64, u: &FermionVector) -> Option<i64> {
    let contraction = u
        .keys()
        .flat_map(|s| s.list(other(kind)).iter().map(|&p| -p - 1))
        .max()
        .unwrap_or(-1);
    let top = contraction.max(-1) - m;
    (top >= 0).then_some(top)
}

/// `Δ(x)v` (or `Δ(x)^{-1}v`) as `e^{step·x/2}` times a payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargedVector {
    pub step: i64,
    pub payload: FermionVector,
}

/// Splits `v` into charge-homogeneous components.
pub fn charge_components(v: &FermionVector) -> BTreeMap<i64, FermionVector> {
    let mut out: BTreeMap<i64, FermionVector> = BTreeMap::new();
    for (s, c) in v {
        out.entry(s.charge())
            .or_default()
            .add_term(s.clone(), c.clone());
    }
    out
}

/// Coefficient of `g_{m+j}` in the transport of `g_m` through `Δ(x)^{±1}`.
fn transport_coefficient(kind: CliffKind, inverse: bool, j: i64) -> Scalar {
    let magnitude = (scalar::pow(&scalar::int(2), j) * scalar::factorial(j as u64)).recip();
    let alternating = matches!(
        (kind, inverse),
        (CliffKind::B, false) | (CliffKind::A, true)
    );
    if alternating {
        magnitude * scalar::sign(j as usize)
    } else {
        magnitude
    }
}

fn delta_state(s: &FermionState, inverse: bool) -> FermionVector {
    let letters =
        s.a.iter()
            .map(|&i| CliffGenerator::a(i))
            .chain(s.b.iter().map(|&i| CliffGenerator::b(i)));
    let mut u = vacuum();
    for g in letters.rev() {
        let mut next = FermionVector::zero();
        if let Some(top) = shift_bound(g.kind, g.index, &u) {
            for j in 0..=top {
                let c = transport_coefficient(g.kind, inverse, j);
                next.add_scaled(
                    &fermion_apply(
                        CliffGenerator {
                            kind: g.kind,
                            index: g.index + j,
                        },
                        &u,
                    ),
                    &c,
                );
            }
        }
        u = next;
    }
    u
}

/// `Δ(x)v` or `Δ(x)^{-1}v` for a charge-homogeneous `v`.
pub fn delta(v: &FermionVector, inverse: bool) -> Result<ChargedVector> {
    let charges = charge_components(v);
    if charges.len() > 1 {
        let mut keys = charges.keys();
        let (lo, hi) = (*keys.next().unwrap(), *keys.next_back().unwrap());
        return Err(Error::MixedCharge(lo, hi));
    }
    let charge = charges.keys().next().copied().unwrap_or(0);
    let mut payload = FermionVector::zero();
    for (s, c) in v {
        payload.add_scaled(&delta_state(s, inverse), c);
    }
    Ok(ChargedVector {
        step: if inverse { charge } else { -charge },
        payload,
    })
}

fn fermion_kind(kind: Kind) -> CliffKind {
    match kind {
        Kind::Y => CliffKind::A,
        Kind::Ystar => CliffKind::B,
    }
}

/// `Ỹ_n v` or `Ỹ*_n v`.
pub fn tilde_mode(kind: Kind, n: i64, v: &FermionVector) -> FermionVector {
    let fkind = fermion_kind(kind);
    let inverse = kind == Kind::Ystar;
    let mut out = FermionVector::zero();
    for component in charge_components(v).values() {
        let ChargedVector { step, payload } =
            delta(component, inverse).expect("charge-homogeneous component");
        let Some(top) = shift_bound(fkind, n, &payload) else {
            continue;
        };
        let half = scalar::frac(step, 2);
        for q in 0..=top {
            let c = scalar::pow(&half, q) / scalar::factorial(q as u64);
            if c.is_zero() {
                continue;
            }
            out.add_scaled(
                &fermion_apply(
                    CliffGenerator {
                        kind: fkind,
                        index: n + q,
                    },
                    &payload,
                ),
                &c,
            );
        }
    }
    out
}

/// `B` with `Ỹ_p v = 0` (or `Ỹ*_p v = 0`) for every `p > B`.
pub fn mode_vanishing_bound(v: &FermionVector, kind: Kind) -> i64 {
    let fkind = fermion_kind(kind);
    let inverse = kind == Kind::Ystar;
    charge_components(v)
        .values()
        .flat_map(|component| {
            let payload = delta(component, inverse)
                .expect("charge-homogeneous component")
                .payload;
            payload
                .keys()
                .flat_map(|s| s.list(other(fkind)).iter().map(|&p| -p - 1))
                .collect::<Vec<_>>()
        })
        .max()
        .unwrap_or(-1)
        .max(-1)
}

/// The three exponential exchange relations among the tilde modes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TildeRelation {
    /// `Ỹ_m Ỹ_n + Σ_{k,i} (1/k!) C(k,i) (-1)^i Ỹ_{n+k-i} Ỹ_{m+i} = 0`
    YY,
    /// `Ỹ*_m Ỹ*_n + Σ_{k,i} (1/k!) C(k,i) (-1)^i Ỹ*_{n+k-i} Ỹ*_{m+i} = 0`
    YsYs,
    /// `Ỹ_m Ỹ*_n + Σ_{k,i} (1/k!) C(k,i) (-1)^i Ỹ*_{n+i} Ỹ_{m+k-i} = δ_{m+n+1,0}`
    YYs,
}

impl TildeRelation {
    pub const ALL: [TildeRelation; 3] =
        [TildeRelation::YY, TildeRelation::YsYs, TildeRelation::YYs];

    pub fn label(self) -> &'static str {
        match self {
            TildeRelation::YY => "YY",
            TildeRelation::YsYs => "YsYs",
            TildeRelation::YYs => "YYs",
        }
    }
}

impl std::str::FromStr for TildeRelation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TildeRelation::ALL
            .into_iter()
            .find(|r| r.label() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown relation `{s}`")))
    }
}

fn exchange_coefficient(k: i64, i: i64) -> Scalar {
    scalar::binomial(k as u64, i as u64) * scalar::sign(i as usize) / scalar::factorial(k as u64)
}

/// Left side minus right side of a relation applied to `v`. The double sum
/// stops where the inner and outer modes vanish by [`mode_vanishing_bound`].
pub fn tilde_relation_residual(
    which: TildeRelation,
    m: i64,
    n: i64,
    v: &FermionVector,
) -> FermionVector {
    let (outer, inner) = match which {
        TildeRelation::YY => (Kind::Y, Kind::Y),
        TildeRelation::YsYs => (Kind::Ystar, Kind::Ystar),
        TildeRelation::YYs => (Kind::Y, Kind::Ystar),
    };
    let mut out = tilde_mode(outer, m, &tilde_mode(inner, n, v));
    match which {
        TildeRelation::YY | TildeRelation::YsYs => {
            for i in 0..=(mode_vanishing_bound(v, inner) - m).max(-1) {
                let w = tilde_mode(inner, m + i, v);
                if w.is_zero() {
                    continue;
                }
                for k in i..=mode_vanishing_bound(&w, outer) + i - n {
                    out.add_scaled(
                        &tilde_mode(outer, n + k - i, &w),
                        &exchange_coefficient(k, i),
                    );
                }
            }
        }
        TildeRelation::YYs => {
            // Here l = k - i indexes the inner Ỹ mode.
            for l in 0..=(mode_vanishing_bound(v, Kind::Y) - m).max(-1) {
                let w = tilde_mode(Kind::Y, m + l, v);
                if w.is_zero() {
                    continue;
                }
                for i in 0..=mode_vanishing_bound(&w, Kind::Ystar) - n {
                    out.add_scaled(
                        &tilde_mode(Kind::Ystar, n + i, &w),
                        &exchange_coefficient(l + i, i),
                    );
                }
            }
            if m + n + 1 == 0 {
                out -= v;
            }
        }
    }
    out
}

/// All states with `energy ≤ e`, by increasing energy.
pub fn states_up_to(e: i64) -> Vec<FermionState> {
    // Strictly increasing negative lists with -sum ≤ budget.
    fn lists(budget: i64) -> Vec<(Vec<i64>, i64)> {
        fn go(
            largest: i64,
            budget: i64,
            prefix: &mut Vec<i64>,
            out: &mut Vec<(Vec<i64>, i64)>,
            used: i64,
        ) {
            out.push((prefix.iter().rev().copied().collect(), used));
            for k in (largest + 1)..=budget {
                prefix.push(-k);
                go(k, budget - k, prefix, out, used + k);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(0, budget, &mut Vec::new(), &mut out, 0);
        out
    }
    let mut out: Vec<FermionState> = Vec::new();
    for (a, ea) in lists(e) {
        for (b, _) in lists(e - ea) {
            out.push(FermionState { a: a.clone(), b });
        }
    }
    out.sort_by_key(|s| (s.energy(), s.clone()));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeFailure {
    pub relation: TildeRelation,
    pub m: i64,
    pub n: i64,
    pub state: FermionState,
    pub residual: FermionVector,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TildeReport {
    pub checked: usize,
    pub failures: Vec<TildeFailure>,
}

/// Every relation residual for `m, n ∈ [-window, window]` on every state of
/// energy at most `energy`.
pub fn tilde_relation_suite(energy: i64, window: i64) -> TildeReport {
    let states = states_up_to(energy);
    let mut cases = Vec::new();
    for relation in TildeRelation::ALL {
        for m in -window..=window {
            for n in -window..=window {
                for s in &states {
                    cases.push((relation, m, n, s.clone()));
                }
            }
        }
    }
    let checked = cases.len();
    let failures = cases
        .into_par_iter()
        .filter_map(|(relation, m, n, state)| {
            let residual =
                tilde_relation_residual(relation, m, n, &FermionVector::basis(state.clone()));
            (!residual.is_zero()).then_some(TildeFailure {
                relation,
                m,
                n,
                state,
                residual,
            })
        })
        .collect();
    TildeReport { checked, failures }
}

/// `ũ_n w̃` for `u, w ∈ {a, b}`, with `ã = Ỹ_{-1}Ω` and `b̃ = Ỹ*_{-1}Ω`.
pub fn structure_constant(u: CliffKind, n: i64, w: CliffKind) -> FermionVector {
    let kind = |k| match k {
        CliffKind::A => Kind::Y,
        CliffKind::B => Kind::Ystar,
    };
    let w_vec = tilde_mode(kind(w), -1, &vacuum());
    tilde_mode(kind(u), n, &w_vec)
}

/// Words of tilde modes (outermost first) with at most `max_len` letters and
/// indices in `[lo, -1]`, whose index sum is at least `-energy`.
fn creation_words(max_len: usize, lo: i64, energy: i64) -> Vec<Vec<(Kind, i64)>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<(Kind, i64)>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            let used: i64 = -w.iter().map(|&(_, i)| i).sum::<i64>();
            for kind in [Kind::Y, Kind::Ystar] {
                for i in lo..=-1 {
                    if used - i <= energy {
                        let mut longer = w.clone();
                        longer.push((kind, i));
                        next.push(longer);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanReport {
    /// `(charge, number of states, rank of the generated vectors)`.
    pub components: Vec<(i64, usize, usize)>,
    pub spans: bool,
}

/// Applies at most `max_len` tilde modes with indices in `[lo, -1]` to `Ω`
/// and compares, per charge, the rank of the results with the number of
/// states of energy `≤ energy`. Each mode `Ỹ_i` raises energy by at most
/// `-i`, so only words of total weight `≤ energy` are used.
pub fn vacuum_span_check(energy: i64, lo: i64, max_len: usize) -> SpanReport {
    let vectors: Vec<FermionVector> = creation_words(max_len, lo, energy)
        .into_par_iter()
        .map(|w| {
            w.iter()
                .rev()
                .fold(vacuum(), |v, &(kind, i)| tilde_mode(kind, i, &v))
        })
        .collect();
    let mut by_charge: BTreeMap<i64, Vec<FermionVector>> = BTreeMap::new();
    for v in vectors {
        for (c, part) in charge_components(&v) {
            by_charge.entry(c).or_default().push(part);
        }
    }
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for s in states_up_to(energy) {
        *counts.entry(s.charge()).or_default() += 1;
    }
    let components: Vec<(i64, usize, usize)> = counts
        .iter()
        .map(|(&c, &count)| {
            let rank = by_charge.get(&c).map_or(0, |vs| linalg::rank_of(vs));
            (c, count, rank)
        })
        .collect();
    let spans = components.iter().all(|&(_, count, rank)| count == rank);
    SpanReport { components, spans }
}
