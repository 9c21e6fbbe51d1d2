//! Exact dense linear algebra over `F_p` and `Q`.

pub mod field;
pub mod matrix;
pub mod subspace;

pub use field::{parse_rational, FieldSpec, Scalar};
pub use matrix::{Matrix, Rref};
pub use subspace::{collect_subspaces, enumerate_subspaces, gaussian_binomial, pivot_sets, PivotCell};
