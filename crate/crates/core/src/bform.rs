//! The invariant bilinear form on the vacuum module, computed in the Fock
//! realization: `⟨X·1, Z·1⟩` is the vacuum coefficient of `θ(X) Z · 1`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{Kind, Word};
use crate::error::{Error, Result};
use crate::fock::{self, FockPolynomial};
use crate::linalg;
use crate::partition::{partitions_of, Partition};
use crate::scalar::{self, Scalar};

/// Gram matrix of the form on the degree-`n` component, in the basis
/// `Y_{-λ}·1` indexed by [`partitions_of`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub degree: u32,
    pub labels: Vec<Partition>,
    pub entries: Vec<Vec<Scalar>>,
}

impl GramMatrix {
    pub fn is_identity(&self) -> bool {
        linalg::is_identity(&self.entries)
    }

    pub fn determinant(&self) -> Scalar {
        linalg::determinant(&self.entries)
    }
}

fn vacuum_coefficient(v: &FockPolynomial) -> Result<Scalar> {
    if !fock::is_constant(v) {
        return Err(Error::NonConstantForm);
    }
    Ok(v.coeff(&fock::Monomial::one()))
}

/// `⟨X·1, Z·1⟩` in the μ-twisted module.
pub fn form(x: &Word, z: &Word, mu: &Scalar) -> Result<Scalar> {
    if mu == &scalar::zero() {
        return Err(Error::ZeroMu);
    }
    if x.degree() != z.degree() {
        return Ok(scalar::zero());
    }
    let v = fock::apply_word(&x.theta().concat(z), &fock::vacuum(), mu)?;
    vacuum_coefficient(&v)
}

pub fn gram(n: u32, mu: &Scalar) -> Result<GramMatrix> {
    let labels = partitions_of(n);
    let vectors = fock::y_lambda_vectors(n, mu)?;
    let cells: Vec<(usize, usize)> = (0..labels.len())
        .flat_map(|i| (0..labels.len()).map(move |j| (i, j)))
        .collect();
    let values = cells
        .par_iter()
        .map(|&(i, j)| {
            let left = Word::from_parts(Kind::Y, labels[i].parts()).theta();
            let v = fock::apply_word(&left, &vectors[&labels[j]], mu)?;
            vacuum_coefficient(&v)
        })
        .collect::<Result<Vec<_>>>()?;
    let entries = values
        .chunks(labels.len().max(1))
        .map(<[Scalar]>::to_vec)
        .collect();
    Ok(GramMatrix {
        degree: n,
        entries: if labels.is_empty() {
            Vec::new()
        } else {
            entries
        },
        labels,
    })
}

/// Dimensions of the degree `0..=n` components spanned by `Y_{-λ}·1`.
///
/// Each dimension is the jump in rank of the family with `|λ| ≤ k`, so the
/// result also certifies independence across degrees.
pub fn gdim(n: u32, mu: &Scalar) -> Result<Vec<usize>> {
    let vectors = fock::y_lambda_vectors(n, mu)?;
    let mut by_weight: BTreeMap<u32, Vec<FockPolynomial>> = BTreeMap::new();
    for (lam, v) in vectors {
        by_weight.entry(lam.weight()).or_default().push(v);
    }
    let mut family = Vec::new();
    let ranks: Vec<usize> = (0..=n)
        .map(|k| {
            family.extend(by_weight.remove(&k).unwrap_or_default());
            linalg::rank_of(&family)
        })
        .collect();
    Ok(ranks
        .iter()
        .enumerate()
        .map(|(k, &r)| if k == 0 { r } else { r - ranks[k - 1] })
        .collect())
}
