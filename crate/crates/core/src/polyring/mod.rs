//! Sparse polynomials over the rationals in `x1..xn`, ordered by deglex.

pub mod det;
pub mod monomial;
pub mod polynomial;

pub use det::{determinant, determinant_bareiss, determinant_cofactor};
pub use monomial::{deglex_compare, monomials_of_degree, monomials_up_to, Monomial, TermOrder};
pub use polynomial::{coeff, parse_monomial, parse_polynomial, Coeff, Polynomial, Term};
