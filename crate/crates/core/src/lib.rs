//! Hybrid quantum-classical stabilizer codes `[[n, k:m, d]]`.
//!
//! The crate covers the whole workflow around codes that carry `k` qubits and
//! `m` classical bits at once:
//!
//! - [`pauli`] and [`additive`]: symplectic linear algebra on Pauli vectors.
//! - [`code`] and [`catalog`]: the [`HybridCode`] model, its text format and
//!   the built-in codes.
//! - [`analysis`]: weight and shadow enumerators, MacWilliams transforms,
//!   hybrid distance (full enumeration and low-weight sweep), impurity and a
//!   dense state-vector check of the error-correction conditions.
//! - [`constructions`]: conversions, juxtaposition, coset-union and nested
//!   (construction X) builders.
//! - [`lp`]: exact integer-feasibility linear programs bounding `m`.
//! - [`search`]: seed-based search for new hybrid codes.
//!
//! Data-parallel loops run on rayon when the `parallel` feature is enabled
//! (the default) and sequentially otherwise; see [`par::Execution`].

pub mod additive;
pub mod analysis;
pub mod catalog;
pub mod code;
pub mod constructions;
pub mod error;
pub mod lp;

mod gf2;
pub mod par;
pub mod pauli;
pub mod search;

pub use additive::AdditiveCode;
pub use code::{CodeParameters, DerivedCodes, HybridCode};
pub use error::{Error, Result};
pub use par::Execution;
pub use pauli::{Pauli, PauliVector};
