//! The Chevalley–Eilenberg complex `⋀𝔲*⊗V`, its torus invariants,
//! cohomology and minimal model.

pub mod cohomology;
pub mod complex;
pub mod lie;
pub mod minimal;

pub use cohomology::{cohomology, CohomologyReport};
pub use complex::{
    ce_differential, ce_differential_with, complex_of, complex_of_with, invariant_subcomplex,
    invariant_subcomplex_with, torus_action, BracketSign, CEComplex,
};
pub use lie::{lie_from_matrices, LieAlgebra};
pub use minimal::{minimal_model_report, MinimalModelReport, QuadraticTerm};
