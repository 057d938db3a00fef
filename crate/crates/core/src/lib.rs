//! Exact workbench for symmetric-algebra invariants and the symplectic
//! fermion categories `SF(h, β)`.
//!
//! Everything is generic over an exact [`Field`]; the aliases below name the
//! instantiations used in practice. No floating point is used anywhere.
//!
//! * [`exact`]: scalars and dense linear algebra.
//! * [`superlin`]: super vector spaces, supertrace, Koszul signs.
//! * [`assoc`]: finite-dimensional algebras, modules, idempotents, Cartan matrices.
//! * [`frobform`]: central forms, copairing, Higman and Reynolds ideals, trace extension.
//! * [`grring`]: commutative rings by structure constants, Condition P.
//! * [`sfcat`]: the concrete symplectic fermion model.
//! * [`audit`]: identity checks over modular data sets.

pub mod assoc;
pub mod audit;
mod error;
pub mod exact;
pub mod frobform;
pub mod grring;
pub mod io;
pub mod report;
pub mod sfcat;
pub mod superlin;

pub use error::{Error, Result};
pub use exact::{Field, FieldSpec, GaussianRational, Matrix, Rational, Scalar};

pub type QMatrix = Matrix<Rational>;
pub type GMatrix = Matrix<GaussianRational>;
pub type QAlgebra = assoc::Algebra<Rational>;
pub type GAlgebra = assoc::Algebra<GaussianRational>;
pub type ScalarAlgebra = assoc::Algebra<Scalar>;
pub type QModularDataSet = audit::ModularDataSet<Rational>;
pub type GModularDataSet = audit::ModularDataSet<GaussianRational>;
