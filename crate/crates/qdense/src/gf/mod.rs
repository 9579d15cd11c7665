//! Finite fields, matrices over them, canonical subspaces, and exhaustive
//! subspace enumeration.

mod enumerate;
pub mod f2;
mod field;
mod matrix;
mod matrix_space;
mod subspace;

pub use enumerate::{enumerate_subspaces, pivot_sets, shard_size, SubspaceStream};
pub use field::{field_make, FieldError, FieldSpec, MAX_FIELD_ORDER};
pub use matrix::{Echelon, MatrixGF};
pub use matrix_space::matrix_space_of_column_space;
pub use subspace::Subspace;
