//! Exact computations in the stable representation theory of GL(n,ℚ) and
//! Sp(2g,ℚ).
//!
//! The crate covers Littlewood–Richardson combinatorics, symmetric functions
//! with plethysm, mixed tensor representations of GL(n) (Koike's rule and a
//! λ-ring for exterior and symmetric powers), Newell–Littlewood products,
//! traceless graded-symmetric algebras built from `Hom(H, ∧^{i+1} H)`, and a
//! sparse rational tensor engine used to evaluate contraction maps on
//! explicit elements.

pub mod albanese;
pub mod combinatorics;
pub mod glrep;
pub mod poly;
pub mod sprep;
pub mod symfunc;
pub mod tensor;
pub mod error;

pub use combinatorics::{Bipartition, GroupAlgebraElement, PairOfPartitions, Partition};
pub use error::{Error, Result};
pub use glrep::RepGL;
pub use poly::Poly;
pub use sprep::RepSp;
pub use symfunc::{Flavor, SymFunc, SymSeries};

/// Exact rational scalar used throughout.
pub type Q = num::BigRational;

#[cfg(test)]
pub(crate) fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

#[cfg(test)]
pub(crate) fn qfrac(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
