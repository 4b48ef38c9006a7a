//! Exact combinatorics for the affine Lie algebra sl(n)^.
//!
//! The crate computes the maximal dominant weights of the integrable modules
//! `V((k-1)Λ₀ + Λ_s)` from explicit families of integer tuples, and computes
//! the multiplicities of the weights `kΛ₀ − γ_ℓ` of `V(kΛ₀)` in three
//! independent ways:
//!
//! * counting admissible sequences of lattice paths ([`paths`]),
//! * brute-force enumeration of the extended Young diagram crystal ([`crystal`]),
//! * counting permutations without long decreasing subsequences ([`patterns`]).
//!
//! All counts are exact. Inner loops run on rayon when the `parallel` feature is
//! enabled (the default); every parallel entry point also accepts
//! [`Execution::Sequential`].

pub mod affine;
pub mod arith;
pub mod crystal;
mod error;
mod exec;
pub mod max_weights;
pub mod paths;
pub mod patterns;
mod shape;
pub mod tuples;

pub use error::{Error, Result};
pub use exec::{configure_threads, Execution};

/// Arbitrary-precision count returned at the API boundary.
pub type Count = num_bigint::BigUint;
