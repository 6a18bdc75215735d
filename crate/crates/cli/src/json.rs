//! JSON encodings of the library types. Rationals are always `"p/q"` strings.

use clifflike::bform::GramMatrix;
use clifflike::fock::FockPolynomial;
use clifflike::rewrite::GroupAlgebraElement;
use clifflike::tilde::FermionVector;
use clifflike::ybe::TruncSeries;
use clifflike::{scalar, AlgebraElement, Scalar, SmashElement, Word};
use serde_json::{json, Map, Value};

pub fn rational(c: &Scalar) -> Value {
    Value::String(scalar::to_string(c))
}

pub fn word(w: &Word) -> Value {
    w.letters()
        .iter()
        .map(|g| Value::String(g.to_string()))
        .collect()
}

pub fn element(e: &AlgebraElement) -> Value {
    e.iter()
        .map(|(w, c)| json!({"coeff": rational(c), "word": word(w)}))
        .collect()
}

pub fn smash(e: &SmashElement) -> Value {
    e.iter()
        .map(|(k, c)| {
            let letters: Vec<String> = k.word.letters().iter().map(ToString::to_string).collect();
            json!({"coeff": rational(c), "word": letters, "sigma": k.sigma})
        })
        .collect()
}

pub fn polynomial(p: &FockPolynomial) -> Value {
    p.iter()
        .map(|(m, c)| {
            let exps: Map<String, Value> = m
                .factors()
                .map(|(k, e)| (k.to_string(), json!(e)))
                .collect();
            json!({"monomial": exps, "coeff": rational(c)})
        })
        .collect()
}

pub fn fermion(v: &FermionVector) -> Value {
    v.iter()
        .map(|(s, c)| json!({"a": s.a_indices(), "b": s.b_indices(), "coeff": rational(c)}))
        .collect()
}

pub fn group_algebra(e: &GroupAlgebraElement) -> Value {
    e.iter()
        .map(|(k, c)| json!({"power": k, "coeff": rational(c)}))
        .collect()
}

pub fn gram(g: &GramMatrix) -> Value {
    json!({
        "degree": g.degree,
        "labels": g.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "matrix": g.entries.iter().map(|row| row.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn series(s: &TruncSeries) -> Value {
    let terms: Vec<Value> = s
        .iter()
        .map(|(i, j, c)| json!({"x": i, "z": j, "coeff": rational(c)}))
        .collect();
    json!({"order": s.order(), "terms": terms, "text": s.to_string()})
}
