//! Exact computation with k-Schur functions: partitions and (k+1)-cores, the
//! affine nilCoxeter algebra 𝒜_k, noncommutative symmetric functions, the
//! k-Pieri rule, the Murnaghan–Nakayama rule in ribbon and word form, and
//! the character tables χ and χ̃.
//!
//! All arithmetic is exact: integer coefficients are arbitrary precision and
//! the dual character computation runs over exact rationals with integrality
//! asserted. Every value is immutable and every operation a pure function,
//! so everything here can be shared freely across threads.

pub mod characters;
pub mod cores;
pub mod enumerate;
pub mod kschur;
pub mod ncsf;
pub mod nilcoxeter;
pub mod partition;
pub mod tables;

pub use cores::{BoundedPartition, Core};
pub use kschur::{KRibbon, KSchurExpansion};
pub use ncsf::AlgebraElement;
pub use nilcoxeter::{AffineElement, Word};
pub use partition::{Partition, SkewShape};

/// Coefficient type used throughout: exact, arbitrary precision.
pub type Coeff = num_bigint::BigInt;
