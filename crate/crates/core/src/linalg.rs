//! Fraction-free (Bareiss) elimination over the integers for certified ranks
//! and determinants of exact rational matrices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linear::LinComb;
use crate::scalar::Scalar;

/// Clears denominators row by row. Returns the integer rows and the product
/// of the per-row multipliers.
fn integer_rows(rows: &[Vec<Scalar>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut total = BigInt::one();
    let out = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            total *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    (out, total)
}

/// Runs Bareiss elimination in place and returns (rank, last pivot, number of
/// row swaps).
fn bareiss(m: &mut [Vec<BigInt>]) -> (usize, BigInt, usize) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swaps = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            swaps += 1;
        }
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..ncols {
                let num = &pivot * &row[j] - &factor * &pivot_row[j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    (rank, prev, swaps)
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let (mut m, _) = integer_rows(rows);
    bareiss(&mut m).0
}

/// Determinant of a square matrix.
pub fn determinant(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    assert!(
        rows.iter().all(|r| r.len() == n),
        "determinant needs a square matrix"
    );
    if n == 0 {
        return Scalar::one();
    }
    let (mut m, scale) = integer_rows(rows);
    let (rank, last, swaps) = bareiss(&mut m);
    if rank < n {
        return Scalar::zero();
    }
    let det = if swaps % 2 == 1 { -last } else { last };
    BigRational::new(det, scale)
}

/// Lays out sparse vectors as dense rows over the union of their supports.
pub fn dense_rows<K: Ord + Clone>(vectors: &[LinComb<K>]) -> Vec<Vec<Scalar>> {
    let mut columns: BTreeMap<K, usize> = BTreeMap::new();
    for v in vectors {
        for k in v.keys() {
            let next = columns.len();
            columns.entry(k.clone()).or_insert(next);
        }
    }
    vectors
        .iter()
        .map(|v| {
            let mut row = vec![Scalar::zero(); columns.len()];
            for (k, c) in v {
                row[columns[k]] = c.clone();
            }
            row
        })
        .collect()
}

pub fn rank_of<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    rank(&dense_rows(vectors))
}

pub fn is_identity(m: &[Vec<Scalar>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len()
            && row
                .iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    })
}
