//! Exact polynomial arithmetic and combinatorics for lattice diagram
//! determinants, their derivative spans, and graded Frobenius series.

pub mod basis;
pub mod cache;
pub mod error;
pub mod lattice;
pub mod par;
pub mod poly;
pub mod properties;
pub mod shapes;
pub mod spans;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial, Rational, RowSpace, Var};
pub use shapes::{Cell, LatticeDiagram, Partition, Tableau};
pub use spans::GradedSpace;
pub use symfunc::{SymFunc, TPolynomial};
