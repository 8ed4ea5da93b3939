//! Exact factorization stack: multivariate gcd, univariate and bivariate
//! factorization over the rationals.

mod bivariate;
mod gcd;
mod univariate;
mod zp;

pub use bivariate::{factor_multivariate, squarefree_part};
pub use gcd::{content_in_var, gcd_many, multi_gcd};
pub use univariate::{factor_univariate, UniPoly};
