//! Exact rational scalars.
//!
//! Every character value in this crate is an exact rational. `Scalar` is a
//! big-integer rational kept in lowest terms with a positive denominator;
//! zero is `0/1`. No floating point appears anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational in canonical reduced form.
pub type Scalar = BigRational;

/// Embed an integer.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Embed a big integer.
pub fn from_bigint(n: BigInt) -> Scalar {
    Scalar::from_integer(n)
}

/// Build `num/den` in lowest terms. Panics on `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^k` as a scalar.
pub fn sign_pow(k: u64) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Integer power with negative exponents allowed (base must be nonzero then).
pub fn pow_i64(base: &Scalar, exp: i64) -> Scalar {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        assert!(!base.is_zero(), "negative power of zero");
        num_traits::pow::pow(base.clone(), (-exp) as usize)
            .recip()
    }
}

/// Render as a decimal integer or `a/b`; the form used in all output.
pub fn scalar_string(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// The integer value if the scalar is an integer.
pub fn as_integer(x: &Scalar) -> Option<BigInt> {
    if x.denom().is_one() {
        Some(x.numer().clone())
    } else {
        None
    }
}

/// Absolute value.
pub fn abs(x: &Scalar) -> Scalar {
    if x.is_negative() {
        -x.clone()
    } else {
        x.clone()
    }
}
