//! Finite-dimensional formally real Jordan algebras, their quantum logics of
//! idempotents, linear states, and the local-tomography analysis of bipartite
//! tensor models.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`]: ℝ, ℂ, ℍ and 𝕆 as Cayley–Dickson algebras.
//! * [`jordan`]: algebra descriptors, concrete elements, Jordan and triple
//!   products, the trace form, spectral decomposition, and the center.
//! * [`logic`]: propositions (idempotents) with order, orthogonality,
//!   compatibility, minimality and strong connectedness.
//! * [`states`]: density-element states and the pure states `ℙ_p`.
//! * [`composite`]: Kronecker tensor models, the C1–C5 axiom verifier, and the
//!   local-tomography feasibility analyzer.
//! * [`spec_text`]: the `H(3,C) (+) spin(4) (+) R` text format.

pub mod composite;
pub mod error;
pub mod jordan;
mod linalg;
pub mod logic;
pub mod scalar;
pub mod spec_text;
pub mod states;

pub use error::{Error, Result};
pub use jordan::{AlgebraDescriptor, Element, JordanAlgebra, SimpleFactor, SpectralDecomposition};
pub use logic::Proposition;
pub use scalar::{Scalar, ScalarKind};
pub use spec_text::parse_spec;

/// Seed used by every randomized routine unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 0xE7A1;
