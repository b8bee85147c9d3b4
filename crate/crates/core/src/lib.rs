//! Exact computations with complex product structures on real Lie algebras.

pub mod catalog;
pub mod connection;
pub mod error;
pub mod forms;
pub mod hypercomplex;
pub mod lie;
pub mod linalg;
pub mod lsa;
pub mod random;
pub mod schema;
pub mod structures;

pub use error::{Error, Report, Result, Violation};
pub use lie::{BracketTable, LieAlgebra, RealifiedComplexification};
pub use linalg::{CirclePoint, Matrix, Rational, Subspace, Tensor, Vector};
