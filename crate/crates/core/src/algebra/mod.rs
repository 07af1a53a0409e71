//! Exact arithmetic building blocks: rational scalars, Stirling tables,
//! generalized binomials, truncated Laurent expansions and bivariate
//! polynomials.

pub mod binomial;
pub mod bivar;
pub mod laurent;
pub mod scalar;
pub mod stirling;

pub use binomial::{binom, binom_general, factorial, falling_factorial, falling_factorial_int};
pub use bivar::BivarPoly;
pub use laurent::{series_of_rational, LaurentTail};
pub use scalar::{as_integer, from_bigint, int, pow_i64, ratio, scalar_string, sign_pow, Scalar};
pub use stirling::{stirling_first, stirling_second, StirlingTable};
