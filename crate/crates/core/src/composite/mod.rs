//! Bipartite tensor models and the local-tomography analysis.
//!
//! [`tensor_construct`] builds the Kronecker model for algebras whose factors
//! are all complex (the real line, `H_k(C)`, spin factors via `H_2(C)`);
//! [`real_counterexample_model`] builds the symmetric Kronecker model over
//! `R`, which satisfies C1–C4 but not C5. [`lt_feasible`] decides feasibility
//! for any descriptor from dimension arithmetic alone.

mod axioms;
mod checks;
mod lt;
mod model;

pub use axioms::{verify_axioms, AxiomReport, AxiomVerdict, SpanRank, SPAN_RANK_CUT};
pub use checks::{check_product_states, check_square_dimensions, ProductStateReport, SquareDimensionReport};
pub use lt::{lt_feasible, FactorAnalysis, LtReport, WitnessTable};
pub use model::{real_counterexample_model, tensor_construct, ModelSummary, TensorKind, TensorModel};
