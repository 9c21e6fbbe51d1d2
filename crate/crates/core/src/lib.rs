//! Exact computations with quiver representations over finite fields and the
//! rationals: Hom/Ext¹, quiver Grassmannians, representation type, and the
//! Kronecker embedding functor `η: mod kK(n) -> mod kQ` built from a pair of
//! orthogonal bricks.

pub mod config;
pub mod construct;
pub mod error;
pub mod grassmann;
pub mod homext;
pub mod json;
pub mod linalg;
pub mod par;
pub mod quiver;
pub mod rep;
pub mod reptype;

pub use config::Limits;
pub use error::{Error, Result};
pub use linalg::{FieldSpec, Matrix, Scalar};
pub use quiver::{DimVector, Quiver};
pub use rep::{is_isomorphic, Morphism, Representation, SubmodulePoint};
