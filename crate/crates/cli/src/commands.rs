use clifflike::algebra::{format_element, word_element};
use clifflike::clifford::{nf2, pi, CliffKind};
use clifflike::fock::{self, ModeWindow};
use clifflike::partition::{partitions_of, partitions_up_to};
use clifflike::rewrite::{confluence_suite, equal, nf1, reduce_a0, GroupAlgebraElement};
use clifflike::tilde::{self, TildeRelation};
use clifflike::ybe::{ybe_unitarity_check, SMatrix};
use clifflike::{bform, parse_element, scalar, Generator, Result, Scalar, Word};
use serde_json::{json, Value};

use crate::json as encode;

/// Result payload of one command, its verdict, and the first failing case.
pub struct Outcome {
    pub result: Value,
    pub pass: bool,
    pub counterexample: Option<Value>,
}

impl Outcome {
    fn computed(result: Value) -> Self {
        Self {
            result,
            pass: true,
            counterexample: None,
        }
    }

    fn verified(result: Value, counterexample: Option<Value>) -> Self {
        Self {
            result,
            pass: counterexample.is_none(),
            counterexample,
        }
    }
}

pub fn parse_mu(text: &str) -> Result<Scalar> {
    let mu = scalar::parse(text)?;
    if mu == scalar::zero() {
        return Err(clifflike::Error::ZeroMu);
    }
    Ok(mu)
}

pub fn nf1_cmd(expr: &str) -> Result<Outcome> {
    let e = parse_element(expr)?;
    Ok(Outcome::computed(json!({
        "input": expr,
        "normal_form": encode::element(&nf1(&e)),
        "text": format_element(&nf1(&e)),
    })))
}

pub fn nf2_cmd(expr: &str) -> Result<Outcome> {
    let e = parse_element(expr)?;
    Ok(Outcome::computed(json!({
        "input": expr,
        "normal_form": encode::element(&nf2(&e)?),
        "text": format_element(&nf2(&e)?),
    })))
}

pub fn pi_cmd(expr: &str) -> Result<Outcome> {
    let e = parse_element(expr)?;
    Ok(Outcome::computed(json!({
        "input": expr,
        "image": encode::smash(&pi(&e)),
    })))
}

pub fn a0_cmd(expr: &str) -> Result<Outcome> {
    let e = parse_element(expr)?;
    Ok(Outcome::computed(json!({
        "input": expr,
        "class": encode::group_algebra(&reduce_a0(&e)?),
    })))
}

pub fn confluence(window: i64) -> Result<Outcome> {
    let reports = confluence_suite(window);
    let bad = reports.iter().find(|r| !r.agree).map(|r| {
        json!({
            "family": r.family.to_string(),
            "indices": [r.indices.0, r.indices.1, r.indices.2],
            "word": encode::word(&r.word),
            "left_first": encode::element(&r.left_first),
            "right_first": encode::element(&r.right_first),
        })
    });
    let mut per_family = serde_json::Map::new();
    for r in &reports {
        let slot = per_family.entry(r.family.to_string()).or_insert(json!(0));
        *slot = json!(slot.as_u64().unwrap_or(0) + 1);
    }
    Ok(Outcome::verified(
        json!({"checked": reports.len(), "per_family": per_family}),
        bad,
    ))
}

fn words_up_to(max_len: usize, bound: i64) -> Vec<Word> {
    let letters: Vec<Generator> = (-bound..=bound)
        .flat_map(|i| [Generator::y(i), Generator::ystar(i)])
        .collect();
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let next: Vec<Word> = frontier
            .iter()
            .flat_map(|w| letters.iter().map(move |&g| w.concat(&Word(vec![g]))))
            .collect();
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Both PBW bases and π agree on every word of bounded length and index.
pub fn pbw(max_len: usize, bound: i64) -> Result<Outcome> {
    let words = words_up_to(max_len, bound);
    let mut bad = None;
    for w in &words {
        let e = word_element(w.letters());
        let second = nf2(&e)?;
        let ok_equal = equal(&e, &second);
        let ok_pi = pi(&nf1(&e)) == pi(&e);
        if !(ok_equal && ok_pi) {
            bad = Some(json!({"word": encode::word(w), "nf2_equal": ok_equal, "pi_agrees": ok_pi}));
            break;
        }
    }
    Ok(Outcome::verified(json!({"checked": words.len()}), bad))
}

pub fn fock_apply(expr: &str, mu: &Scalar) -> Result<Outcome> {
    let e = parse_element(expr)?;
    let v = fock::apply_element(&e, &fock::vacuum(), mu)?;
    Ok(Outcome::computed(json!({
        "input": expr,
        "vector": encode::polynomial(&v),
    })))
}

pub fn fock_duality(max_weight: u32) -> Result<Outcome> {
    let mut checked = 0;
    let mut bad = None;
    for lam in partitions_up_to(max_weight).into_iter().flatten() {
        checked += 1;
        if !fock::duality_check(&lam, &scalar::one())? {
            bad = Some(
                json!({"partition": lam.to_string(), "conjugate": lam.conjugate().to_string()}),
            );
            break;
        }
    }
    Ok(Outcome::verified(json!({"checked": checked}), bad))
}

pub fn fock_relations(window: i64, degree: u32, mus: &[Scalar]) -> Result<Outcome> {
    let report = fock::relation_suite(
        ModeWindow {
            index_bound: window,
            degree_bound: degree,
        },
        mus,
    )?;
    let bad = report.failures.first().map(|f| {
        json!({
            "relation": f.relation.label(),
            "m": f.m,
            "n": f.n,
            "monomial": f.monomial.to_string(),
            "mu": encode::rational(&f.mu),
            "residual": encode::polynomial(&f.residual),
        })
    });
    Ok(Outcome::verified(
        json!({"checked": report.checked, "failures": report.failures.len()}),
        bad,
    ))
}

pub fn lemma_omega(kmax: i64, bound: i64, max_len: usize) -> Result<Outcome> {
    let report = fock::lemma_omega_suite(kmax, bound, max_len);
    let bad = report
        .violations
        .first()
        .map(|(w, v)| json!({"word": encode::word(w), "vector": encode::polynomial(v)}));
    Ok(Outcome::verified(json!({"checked": report.checked}), bad))
}

pub fn gram(degree: u32, mu: &Scalar) -> Result<Outcome> {
    let g = bform::gram(degree, mu)?;
    let det = g.determinant();
    let nondegenerate = det != scalar::zero();
    let mut result = encode::gram(&g);
    result["determinant"] = encode::rational(&det);
    result["identity"] = json!(g.is_identity());
    let bad =
        (!nondegenerate).then(|| json!({"degree": degree, "determinant": encode::rational(&det)}));
    Ok(Outcome::verified(result, bad))
}

pub fn gdim(max: u32, mu: &Scalar) -> Result<Outcome> {
    let dims = bform::gdim(max, mu)?;
    let counts: Vec<usize> = (0..=max).map(|n| partitions_of(n).len()).collect();
    let bad = dims
        .iter()
        .zip(&counts)
        .position(|(d, c)| d != c)
        .map(|n| json!({"degree": n, "dimension": dims[n], "partitions": counts[n]}));
    Ok(Outcome::verified(
        json!({"dimensions": dims, "partition_counts": counts}),
        bad,
    ))
}

fn a0_class(w: &Word) -> Result<GroupAlgebraElement> {
    reduce_a0(&word_element(w.letters()))
}

/// Checks the degree-zero quotient on powers of `Y_0`, `Y*_0`, on
/// `Y_m Y*_{-m}`, and multiplicativity on products of short degree-0 words.
pub fn a0_suite() -> Result<Outcome> {
    let y0 = Generator::y(0);
    let s0 = Generator::ystar(0);
    let mut checked = 0;
    for k in 0..=4usize {
        for l in 0..=4usize {
            checked += 1;
            let w = Word([vec![y0; k], vec![s0; l]].concat());
            let expected = GroupAlgebraElement::basis(k as i64 - l as i64);
            if a0_class(&w)? != expected {
                return Ok(Outcome::verified(
                    json!({"checked": checked}),
                    Some(json!({"word": encode::word(&w)})),
                ));
            }
        }
    }
    for m in -4..=4 {
        checked += 1;
        let w = Word(vec![Generator::y(m), Generator::ystar(-m)]);
        let expected = if m >= 0 {
            GroupAlgebraElement::basis(0)
        } else {
            GroupAlgebraElement::zero()
        };
        if a0_class(&w)? != expected {
            return Ok(Outcome::verified(
                json!({"checked": checked}),
                Some(json!({"word": encode::word(&w)})),
            ));
        }
    }
    let factors: Vec<Word> = words_up_to(2, 2)
        .into_iter()
        .filter(|w| w.degree() == 0)
        .collect();
    for u in &factors {
        for v in &factors {
            checked += 1;
            let uv = u.concat(v);
            if a0_class(&uv)? != &a0_class(u)? * &a0_class(v)? {
                return Ok(Outcome::verified(
                    json!({"checked": checked}),
                    Some(json!({"left": encode::word(u), "right": encode::word(v)})),
                ));
            }
        }
    }
    Ok(Outcome::verified(json!({"checked": checked}), None))
}

pub fn tilde_verify(energy: i64, window: i64) -> Result<Outcome> {
    let report = tilde::tilde_relation_suite(energy, window);
    let bad = report.failures.first().map(|f| {
        json!({
            "relation": f.relation.label(),
            "m": f.m,
            "n": f.n,
            "state": f.state.to_string(),
            "residual": encode::fermion(&f.residual),
        })
    });
    let span = tilde::vacuum_span_check(energy.min(3), -4, 3);
    let components: Vec<Value> = span
        .components
        .iter()
        .map(|&(charge, states, rank)| json!({"charge": charge, "states": states, "rank": rank}))
        .collect();
    let bad = bad.or_else(|| (!span.spans).then(|| json!({"span": components.clone()})));
    let relations: Vec<&str> = TildeRelation::ALL.iter().map(|r| r.label()).collect();
    Ok(Outcome::verified(
        json!({
            "checked": report.checked,
            "relations": relations,
            "span": components,
        }),
        bad,
    ))
}

pub fn parse_letter(s: &str) -> Result<CliffKind> {
    match s {
        "a" => Ok(CliffKind::A),
        "b" => Ok(CliffKind::B),
        _ => Err(clifflike::Error::InvalidParameter(format!(
            "expected `a` or `b`, got `{s}`"
        ))),
    }
}

pub fn structure_constant(u: CliffKind, n: i64, w: CliffKind) -> Result<Outcome> {
    let v = tilde::structure_constant(u, n, w);
    Ok(Outcome::computed(json!({"vector": encode::fermion(&v)})))
}

/// The products of the generating states that the vertex algebra must match.
pub fn structure_constant_suite() -> Result<Outcome> {
    let mut checked = 0;
    for n in 0..=5 {
        for (u, w) in [
            (CliffKind::A, CliffKind::A),
            (CliffKind::B, CliffKind::B),
            (CliffKind::A, CliffKind::B),
        ] {
            checked += 1;
            let expected = if (u, w, n) == (CliffKind::A, CliffKind::B, 0) {
                tilde::vacuum()
            } else {
                tilde::FermionVector::zero()
            };
            let v = tilde::structure_constant(u, n, w);
            if v != expected {
                let name = |k| if k == CliffKind::A { "a" } else { "b" };
                return Ok(Outcome::verified(
                    json!({"checked": checked}),
                    Some(
                        json!({"u": name(u), "n": n, "w": name(w), "vector": encode::fermion(&v)}),
                    ),
                ));
            }
        }
    }
    Ok(Outcome::verified(json!({"checked": checked}), None))
}

pub fn ybe(order: u32) -> Result<Outcome> {
    let report = ybe_unitarity_check(&SMatrix::tilde(), order)?;
    let label =
        |ls: &[clifflike::ybe::Letter]| ls.iter().map(ToString::to_string).collect::<String>();
    let residuals: Vec<Value> = report
        .ybe_residuals
        .iter()
        .map(|(ls, r)| json!({"basis": label(ls), "residual": encode::series(r)}))
        .collect();
    let unitarity: Vec<Value> = report
        .unitarity_deviations
        .iter()
        .map(|(ls, d)| json!({"basis": label(ls), "deviation": encode::series(d)}))
        .collect();
    let bad = report
        .ybe_residuals
        .iter()
        .find(|(_, r)| !r.is_zero())
        .map(|(ls, r)| json!({"basis": label(ls), "residual": encode::series(r)}));
    Ok(Outcome::verified(
        json!({"order": order, "ybe_residuals": residuals, "unitarity_deviations": unitarity}),
        bad,
    ))
}

type Check = Box<dyn Fn() -> Result<Outcome>>;

/// Every verification at its reference size.
pub fn suite_all() -> Result<Outcome> {
    let mus = [scalar::int(1), scalar::int(2), scalar::frac(-1, 3)];
    let checks: Vec<(&str, Check)> = vec![
        ("confluence", Box::new(|| confluence(6))),
        ("pbw", Box::new(|| pbw(3, 4))),
        (
            "fock_relations",
            Box::new(move || fock_relations(6, 6, &mus)),
        ),
        ("duality", Box::new(|| fock_duality(6))),
        (
            "gram",
            Box::new(|| {
                for n in 0..=6 {
                    let o = gram(n, &scalar::one())?;
                    if !(o.pass && o.result["identity"] == json!(true)) {
                        return Ok(Outcome::verified(json!({"degree": n}), Some(o.result)));
                    }
                }
                Ok(Outcome::verified(json!({"max_degree": 6}), None))
            }),
        ),
        (
            "gdim",
            Box::new(|| {
                for mu in [scalar::int(1), scalar::int(2)] {
                    let o = gdim(10, &mu)?;
                    if !o.pass {
                        return Ok(o);
                    }
                }
                Ok(Outcome::verified(json!({"max": 10}), None))
            }),
        ),
        ("degree_zero_quotient", Box::new(a0_suite)),
        ("vacuum_annihilation", Box::new(|| lemma_omega(4, 4, 4))),
        ("tilde_relations", Box::new(|| tilde_verify(5, 4))),
        ("structure_constants", Box::new(structure_constant_suite)),
        ("ybe", Box::new(|| ybe(8))),
    ];
    let mut results = serde_json::Map::new();
    let mut first_bad = None;
    for (name, check) in checks {
        let o = check()?;
        results.insert(
            name.to_string(),
            json!({"pass": o.pass, "result": o.result}),
        );
        if first_bad.is_none() {
            first_bad = o
                .counterexample
                .map(|c| json!({"check": name, "counterexample": c}));
        }
    }
    Ok(Outcome::verified(Value::Object(results), first_bad))
}
