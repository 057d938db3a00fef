//! Finite-dimensional associative algebras and their modules.
//!
//! Modules are left modules; right `A`-modules are left `A^op`-modules.

mod algebra;
mod decompose;
pub mod fixtures;
mod idempotents;
mod module;

pub use algebra::{center, is_nilpotent_ideal, radical_char0, Algebra, ValidationReport};
pub use decompose::{
    decompose_local_free, decompose_module, indecomposable_summands, isomorphic_indecomposables,
    LocalFreeDecomposition,
};
pub use idempotents::{cartan_matrix, primitive_idempotents, primitive_idempotents_with_radical, IdempotentSet};
pub use module::{endo_from_coords, endomorphism_algebra, hom_basis, matrix_span_algebra, AlgModule};

/// Validation entry point mirroring [`Algebra::validate`].
pub fn validate_algebra<F: crate::Field>(a: &Algebra<F>) -> ValidationReport {
    a.validate()
}
