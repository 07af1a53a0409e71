//! Factorials, falling factorials and the generalized binomial coefficient.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::scalar::Scalar;

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Falling factorial `(a)_p = a(a-1)…(a-p+1)` of an integer; `1` for `p = 0`.
pub fn falling_factorial_int(a: &BigInt, p: usize) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..p {
        acc *= a - BigInt::from(t);
    }
    acc
}

/// Falling factorial of a rational.
pub fn falling_factorial(a: &Scalar, p: usize) -> Scalar {
    let mut acc = Scalar::one();
    for t in 0..p {
        acc *= a - Scalar::from_integer(BigInt::from(t));
    }
    acc
}

/// Binomial coefficient under the polynomial convention.
///
/// Standard value for `0 ≤ bottom ≤ top`; `0` for `bottom < 0` or
/// `top ≥ 0, bottom > top`. For negative `top` the polynomial
/// `binom(t,k) = t(t-1)…(t-k+1)/k!` is evaluated, so `binom(-1,0) = 1`.
pub fn binom_general(top: i64, bottom: i64) -> BigInt {
    if bottom < 0 {
        return BigInt::zero();
    }
    if top >= 0 && bottom > top {
        return BigInt::zero();
    }
    let k = bottom as usize;
    let num = falling_factorial_int(&BigInt::from(top), k);
    let (q, r) = num_integer::Integer::div_rem(&num, &factorial(k));
    debug_assert!(r.is_zero());
    q
}

/// Plain `binom(n,k)` for nonnegative arguments.
pub fn binom(n: u64, k: u64) -> BigInt {
    binom_general(n as i64, k as i64)
}
