//! Exact computations in the Clifford-like algebra generated by `Y_n`, `Y*_n`
//! (`n ∈ ℤ`) subject to
//!
//! ```text
//! Y_m Y_n + Y_{n+1} Y_{m-1} = 0
//! Y*_m Y*_n + Y*_{n+1} Y*_{m-1} = 0
//! Y_m Y*_n + Y*_{n-1} Y_{m+1} = δ_{m+n,0}
//! ```
//!
//! and in its exponential twin, realized on a fermionic Fock space.
//! All scalars are exact rationals.

pub mod algebra;
pub mod bform;
pub mod clifford;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod linear;
pub mod parse;
pub mod partition;
pub mod rewrite;
pub mod scalar;
pub mod tilde;
pub mod ybe;

pub use algebra::{AlgebraElement, Generator, Kind, Word};
pub use bform::GramMatrix;
pub use clifford::{CliffElement, CliffGenerator, CliffKind, CliffWord, SmashElement, SmashKey};
pub use error::{Error, ParseError, Result};
pub use fock::{FockPolynomial, ModeWindow, Monomial, Relation};
pub use linear::LinComb;
pub use parse::{parse_element, parse_word};
pub use partition::{partitions_of, Partition};
pub use rewrite::{GroupAlgebraElement, OverlapFamily, RewriteReport};
pub use scalar::Scalar;
pub use tilde::{FermionState, FermionVector, TildeRelation};
pub use ybe::{SMatrix, TruncSeries, YbeReport};
