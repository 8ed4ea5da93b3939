//! Exact multivariate polynomial arithmetic over the rationals, monomial
//! orders, and a text parser.

mod monomial;
mod parse;
mod polynomial;
mod random;

pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use parse::parse;
pub use polynomial::{Polynomial, Ring};
pub use random::random_linear_form;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational coefficient: arbitrary-precision, always in lowest terms
/// with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
