//! Exact sparse polynomial arithmetic and rational linear algebra.

mod det;
mod monomial;
mod polynomial;
mod rational;
mod rowspace;

pub use det::{det_monomial_matrix, for_each_permutation, permutation_is_even};
pub use monomial::{Monomial, Var, MAX_VARS};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use rowspace::RowSpace;
