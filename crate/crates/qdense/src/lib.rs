//! Exact counting and density bounds for common complements of subspace
//! families over finite fields, with brute-force censuses as ground truth.
//!
//! The crate is organized in layers: `gf` provides field arithmetic, matrices
//! and canonical subspaces; `qfunc` evaluates the closed counting formulas
//! (q-binomials, intersection counts, functional-tuple counts, ball sizes) and
//! the q-series quantities needed for large-field and large-matrix estimates;
//! `bounds` turns those formulas into exact rational upper/lower bounds;
//! `oracle` recounts everything exhaustively; `verify` bundles the acceptance
//! checks used by the CLI and the test suite.

pub mod bounds;
pub mod error;
pub mod exact;
pub mod gf;
pub mod interval;
pub mod oracle;
pub mod qfunc;
pub mod verify;

pub use error::{DomainError, DomainResult};
pub use exact::{ExactInt, ExactRational};
pub use interval::RealInterval;
