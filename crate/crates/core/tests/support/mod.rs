//! Independent oracles and the property checks shared by the acceptance
//! target and the ordinary property tests.
#![allow(dead_code)]

use clifflike::algebra::{d_derivation, tau, theta};
use clifflike::bform::form;
use clifflike::rewrite::nf1;
use clifflike::scalar::{self, frac, int};
use clifflike::tilde::{
    charge_components, delta, mode_vanishing_bound, states_up_to, tilde_mode, FermionVector,
};
use clifflike::{AlgebraElement, Generator, Kind, Relation, Scalar, Word};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// `p(0..=n)` from Euler's pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<usize> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n as i64 {
        let mut total = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[(m - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                total += sign * p[(m - g2) as usize];
            }
        }
        p[m as usize] = total;
    }
    p.into_iter().map(|x| x as usize).collect()
}

/// `λ'_j = #{i : λ_i ≥ j}`.
pub fn conjugate(parts: &[u32]) -> Vec<u32> {
    let top = parts.iter().copied().max().unwrap_or(0);
    (1..=top)
        .map(|j| parts.iter().filter(|&&p| p >= j).count() as u32)
        .collect()
}

/// Coefficients of `Π_{k≥1} (1 + q^k)^2` up to `q^n`: fermion states by
/// energy.
pub fn fermion_state_counts(n: usize) -> Vec<usize> {
    let mut c = vec![0usize; n + 1];
    c[0] = 1;
    for k in 1..=n {
        for _ in 0..2 {
            for e in (k..=n).rev() {
                c[e] += c[e - k];
            }
        }
    }
    c
}

/// Every word with at most `max_len` letters and indices in `[-bound, bound]`.
pub fn all_words(max_len: usize, bound: i64) -> Vec<Word> {
    let letters: Vec<Generator> = [Kind::Y, Kind::Ystar]
        .into_iter()
        .flat_map(|kind| (-bound..=bound).map(move |index| Generator { kind, index }))
        .collect();
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Vec::<Generator>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &g in &letters {
                let mut longer = w.clone();
                longer.push(g);
                next.push(longer);
            }
        }
        out.extend(next.iter().cloned().map(Word));
        frontier = next;
    }
    out
}

/// All `Y` letters precede all `Y*` letters.
fn sorted_by_kind(w: &Word) -> bool {
    w.letters()
        .windows(2)
        .all(|p| !(p[0].kind == Kind::Ystar && p[1].kind == Kind::Y))
}

/// `Y_{m_1}⋯Y_{m_r}Y*_{n_1}⋯Y*_{n_s}` with both blocks weakly increasing.
pub fn is_weakly_increasing_basis(w: &Word) -> bool {
    sorted_by_kind(w)
        && w.letters()
            .windows(2)
            .all(|p| p[0].kind != p[1].kind || p[0].index <= p[1].index)
}

/// Both blocks strictly decreasing by at least two at each step.
pub fn is_shifted_decreasing_basis(w: &Word) -> bool {
    sorted_by_kind(w)
        && w.letters()
            .windows(2)
            .all(|p| p[0].kind != p[1].kind || p[0].index > p[1].index + 1)
}

/// Both adjacent pairs of `u v w` are redexes of the rewriting rules.
pub fn overlap_admissible(kinds: [Kind; 3], i: i64, j: i64, k: i64) -> bool {
    let redex = |a: Kind, x: i64, b: Kind, y: i64| match (a, b) {
        (Kind::Ystar, Kind::Y) => true,
        (Kind::Y, Kind::Ystar) => false,
        _ => x <= y + 1,
    };
    redex(kinds[0], i, kinds[1], j) && redex(kinds[1], j, kinds[2], k)
}

pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        max_global_rejects: 100_000,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

pub fn generator(bound: i64) -> impl Strategy<Value = Generator> {
    (
        prop_oneof![Just(Kind::Y), Just(Kind::Ystar)],
        -bound..=bound,
    )
        .prop_map(|(kind, index)| Generator { kind, index })
}

pub fn word(max_len: usize, bound: i64) -> impl Strategy<Value = Word> {
    proptest::collection::vec(generator(bound), 0..=max_len).prop_map(Word)
}

/// `prefix` followed by the one letter of `kind` that brings the degree to
/// `degree`, or `None` when that letter leaves the window.
fn with_degree(prefix: &Word, kind: Kind, degree: i64, bound: i64) -> Option<Word> {
    let index = degree - prefix.degree();
    (index.abs() <= bound).then(|| prefix.concat(&Word(vec![Generator { kind, index }])))
}

fn element(w: &Word) -> AlgebraElement {
    AlgebraElement::basis(w.clone())
}

fn mus() -> [Scalar; 2] {
    [int(1), int(2)]
}

/// The result of one property: the number of cases checked, or a
/// counterexample.
pub type PropertyResult = Result<usize, String>;

/// `θ` is an involution, reverses concatenation and negates degree; `τ_μ`
/// and `d` act on words as expected.
pub fn theta_involution() -> PropertyResult {
    let strategy = (
        word(6, 6),
        word(6, 6),
        prop_oneof![Just(frac(2, 1)), Just(frac(-1, 3))],
    );
    runner(512)
        .run(&strategy, |(u, w, mu)| {
            let e = element(&u);
            prop_assert_eq!(theta(&theta(&e)), e.clone());
            prop_assert_eq!(u.concat(&w).theta(), w.theta().concat(&u.theta()));
            prop_assert_eq!(u.theta().degree(), -u.degree());
            let t = tau(&e, &mu).unwrap();
            prop_assert!(t.keys().all(|k| k.degree() == u.degree()));
            prop_assert_eq!(d_derivation(&e), e.scale(&int(u.degree())));
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(512)
}

/// `θ` and `τ_μ` map every defining relation into the relation ideal.
pub fn relation_closure() -> PropertyResult {
    let mut checked = 0;
    for which in Relation::ALL {
        for m in -5..=5 {
            for n in -5..=5 {
                let r = which.element(m, n);
                checked += 1;
                if !nf1(&theta(&r)).is_zero() {
                    return Err(format!(
                        "theta of {} at ({m}, {n}) is not in the ideal",
                        which.label()
                    ));
                }
                for mu in [frac(2, 1), frac(-1, 3)] {
                    checked += 1;
                    if !nf1(&tau(&r, &mu).unwrap()).is_zero() {
                        return Err(format!(
                            "tau_{mu} of {} at ({m}, {n}) is not in the ideal",
                            which.label()
                        ));
                    }
                }
            }
        }
    }
    Ok(checked)
}

/// `nf1 ∘ d = d ∘ nf1` on every word of length `≤ 3`, indices in `[-4, 4]`.
pub fn d_compatibility() -> PropertyResult {
    let words = all_words(3, 4);
    for w in &words {
        let e = element(w);
        if nf1(&d_derivation(&e)) != d_derivation(&nf1(&e)) {
            return Err(format!("d does not commute with nf1 on {w}"));
        }
    }
    Ok(words.len())
}

/// `#Y - #Y*`, the power of μ picked up by a word under `τ_μ`.
fn twist_exponent(w: &Word) -> i64 {
    w.count(Kind::Y) as i64 - w.count(Kind::Ystar) as i64
}

/// Pairs `(X, Z)` of equal degree on which `⟨X, Z⟩_μ ≠ ⟨Z, X⟩_μ`, at most
/// one witness per μ, together with the number of pairs compared. Every
/// pair must satisfy `⟨X, Z⟩_μ = μ^{2(e(Z) - e(X))} ⟨Z, X⟩_μ`, which is what
/// the twist does to the untwisted symmetric form; a pair breaking that law
/// is an error. Exhaustive for words of length `≤ 2`, sampled for `≤ 3`.
pub fn form_exchange(mus: &[Scalar]) -> Result<(usize, Vec<String>), String> {
    let asymmetric = std::cell::RefCell::new(Vec::<(Scalar, String)>::new());
    let compare = |x: &Word, z: &Word, mu: &Scalar| -> Result<(), String> {
        let (l, r) = (form(x, z, mu).unwrap(), form(z, x, mu).unwrap());
        let law = scalar::pow(mu, 2 * (twist_exponent(z) - twist_exponent(x)));
        if l != &law * &r {
            return Err(format!(
                "<{x}, {z}> = {l}, <{z}, {x}> = {r} at mu = {mu} breaks the exchange law"
            ));
        }
        let mut seen = asymmetric.borrow_mut();
        if l != r && !seen.iter().any(|(m, _)| m == mu) {
            seen.push((
                mu.clone(),
                format!("<{x}, {z}> = {l} but <{z}, {x}> = {r} at mu = {mu}"),
            ));
        }
        Ok(())
    };
    let mut checked = 0;
    let words = all_words(2, 4);
    for mu in mus {
        for (i, x) in words.iter().enumerate() {
            for z in &words[i + 1..] {
                if x.degree() == z.degree() {
                    checked += 1;
                    compare(x, z, mu)?;
                }
            }
        }
    }
    let cases = 400;
    let strategy = (
        word(3, 4),
        word(2, 4),
        prop_oneof![Just(Kind::Y), Just(Kind::Ystar)],
        proptest::sample::select(mus.to_vec()),
    );
    runner(cases)
        .run(&strategy, |(x, prefix, kind, mu)| {
            let Some(z) = with_degree(&prefix, kind, x.degree(), 4) else {
                return Err(TestCaseError::reject("degree outside the window"));
            };
            compare(&x, &z, &mu).map_err(TestCaseError::fail)
        })
        .map_err(|e| e.to_string())?;
    let witnesses = asymmetric
        .into_inner()
        .into_iter()
        .map(|(_, w)| w)
        .collect();
    Ok((checked + cases as usize, witnesses))
}

/// `⟨X, Z⟩_μ = ⟨Z, X⟩_μ` for μ ∈ {1, 2}.
pub fn form_symmetry() -> PropertyResult {
    let (checked, witnesses) = form_exchange(&mus())?;
    if witnesses.is_empty() {
        Ok(checked)
    } else {
        Err(format!(
            "not symmetric: {}; all {checked} pairs obey the exchange law, so symmetry holds only for mu = ±1",
            witnesses.join("; ")
        ))
    }
}

/// `⟨gX, Z⟩ = ⟨X, θ(g)Z⟩` for single generators `g`.
pub fn form_invariance() -> PropertyResult {
    let strategy = (
        generator(4),
        word(3, 4),
        word(2, 4),
        prop_oneof![Just(Kind::Y), Just(Kind::Ystar)],
        0..2usize,
    );
    runner(400)
        .run(&strategy, |(g, x, prefix, kind, which)| {
            let gx = Word(vec![g]).concat(&x);
            let Some(z) = with_degree(&prefix, kind, gx.degree(), 4) else {
                return Err(TestCaseError::reject("degree outside the window"));
            };
            let mu = &mus()[which];
            let thz = Word(vec![g.theta()]).concat(&z);
            prop_assert_eq!(form(&gx, &z, mu).unwrap(), form(&x, &thz, mu).unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(400)
}

/// `Δ^{-1}Δ v = v` with cancelling exponentials, charge preserved, on every
/// state of energy `≤ 5`; tilde modes shift charge by `±1`.
pub fn delta_round_trip() -> PropertyResult {
    let mut checked = 0;
    for s in states_up_to(5) {
        let v = FermionVector::basis(s.clone());
        let forward = delta(&v, false).map_err(|e| e.to_string())?;
        let back = delta(&forward.payload, true).map_err(|e| e.to_string())?;
        checked += 1;
        if back.payload != v || forward.step + back.step != 0 {
            return Err(format!("round trip fails on {s}"));
        }
        if charge_components(&forward.payload)
            .keys()
            .any(|&c| c != s.charge())
        {
            return Err(format!("delta changes the charge of {s}"));
        }
        for n in -4..=4 {
            for (kind, shift) in [(Kind::Y, 1), (Kind::Ystar, -1)] {
                checked += 1;
                let w = tilde_mode(kind, n, &v);
                if w.keys().any(|t| t.charge() != s.charge() + shift) {
                    return Err(format!(
                        "{kind:?} mode {n} on {s} does not shift charge by {shift}"
                    ));
                }
            }
        }
    }
    Ok(checked)
}

/// Modes above [`mode_vanishing_bound`] kill the vector, for four steps past
/// the bound.
pub fn restrictedness() -> PropertyResult {
    let mut checked = 0;
    for s in states_up_to(5) {
        let v = FermionVector::basis(s.clone());
        for kind in [Kind::Y, Kind::Ystar] {
            let bound = mode_vanishing_bound(&v, kind);
            for p in bound + 1..=bound + 4 {
                checked += 1;
                if !tilde_mode(kind, p, &v).is_zero() {
                    return Err(format!(
                        "{kind:?} mode {p} does not kill {s} (bound {bound})"
                    ));
                }
            }
        }
    }
    Ok(checked)
}

pub type Property = (&'static str, fn() -> PropertyResult);

pub const PROPERTIES: [Property; 7] = [
    ("theta involution", theta_involution),
    ("relation closure", relation_closure),
    ("d compatibility", d_compatibility),
    ("form symmetry", form_symmetry),
    ("form invariance", form_invariance),
    ("delta round trip", delta_round_trip),
    ("restrictedness", restrictedness),
];
