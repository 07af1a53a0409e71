//! Truncated Laurent expansions in descending powers of `z`.
//!
//! A `LaurentTail` holds exact coefficients for `z^top, z^{top-1}, …` down to
//! a truncation power. Arithmetic propagates the deepest power that is still
//! exact, so a product never reports coefficients it cannot know.

use num_traits::{One, Zero};

use super::scalar::Scalar;

/// Finitely many leading coefficients of a Taylor-at-infinity expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentTail {
    top: i64,
    /// `coeffs[i]` is the coefficient of `z^{top - i}`.
    coeffs: Vec<Scalar>,
}

impl LaurentTail {
    pub fn new(top: i64, coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "empty coefficient window");
        LaurentTail { top, coeffs }
    }

    /// The constant series `1`, known down to `z^{truncation}`.
    pub fn one(truncation: i64) -> Self {
        assert!(truncation <= 0);
        let mut coeffs = vec![Scalar::zero(); (1 - truncation) as usize];
        coeffs[0] = Scalar::one();
        LaurentTail { top: 0, coeffs }
    }

    /// Highest power carried.
    pub fn top_power(&self) -> i64 {
        self.top
    }

    /// Lowest power still exact; nothing is known below it.
    pub fn truncation(&self) -> i64 {
        self.top - (self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `z^power`; `None` below the truncation.
    pub fn coeff(&self, power: i64) -> Option<Scalar> {
        if power > self.top {
            Some(Scalar::zero())
        } else if power >= self.truncation() {
            Some(self.coeffs[(self.top - power) as usize].clone())
        } else {
            None
        }
    }

    /// Drop coefficients below `truncation`.
    pub fn truncated(&self, truncation: i64) -> Self {
        assert!(truncation >= self.truncation(), "cannot deepen a truncation");
        let keep = (self.top - truncation + 1).max(1) as usize;
        LaurentTail::new(self.top, self.coeffs[..keep.min(self.coeffs.len())].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let top = self.top.max(other.top);
        let trunc = self.truncation().max(other.truncation());
        let mut coeffs = Vec::with_capacity((top - trunc + 1) as usize);
        for power in (trunc..=top).rev() {
            coeffs.push(self.coeff(power).unwrap() + other.coeff(power).unwrap());
        }
        LaurentTail::new(top, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentTail::new(self.top, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        LaurentTail::new(self.top, self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Product; exact down to `max(a.trunc + b.top, b.trunc + a.top)`.
    pub fn mul(&self, other: &Self) -> Self {
        let top = self.top + other.top;
        let trunc = (self.truncation() + other.top).max(other.truncation() + self.top);
        let width = (top - trunc + 1) as usize;
        let mut coeffs = vec![Scalar::zero(); width];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= width {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        LaurentTail::new(top, coeffs)
    }

    /// Multiplicative inverse to the same relative depth.
    ///
    /// The leading stored coefficient must be nonzero.
    pub fn inverse(&self) -> Self {
        let lead = &self.coeffs[0];
        assert!(!lead.is_zero(), "inverse needs a nonzero leading coefficient");
        let depth = self.coeffs.len();
        let mut inv: Vec<Scalar> = Vec::with_capacity(depth);
        inv.push(lead.recip());
        for m in 1..depth {
            let mut acc = Scalar::zero();
            for j in 1..=m {
                acc += &self.coeffs[j] * &inv[m - j];
            }
            inv.push(-acc / lead);
        }
        LaurentTail::new(-self.top, inv)
    }
}

fn poly_from_roots(roots: &[Scalar]) -> Vec<Scalar> {
    // Ascending coefficients of ∏ (z - root).
    let mut poly = vec![Scalar::one()];
    for r in roots {
        let mut next = vec![Scalar::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= r * c;
        }
        poly = next;
    }
    poly
}

/// Taylor-at-infinity expansion of
/// `z^prefactor_power · ∏(z - num_root) / ∏(z - den_root)`,
/// with exact coefficients down to `z^{-order}`.
///
/// Computed by long division in descending powers: the quotient coefficients
/// solve `D · q = N` top-down, which is exact at every step because the
/// denominator is monic.
pub fn series_of_rational(
    numerator_roots: &[Scalar],
    denominator_roots: &[Scalar],
    prefactor_power: i64,
    order: usize,
) -> LaurentTail {
    let num = poly_from_roots(numerator_roots);
    let den = poly_from_roots(denominator_roots);
    let dn = num.len() as i64 - 1;
    let dd = den.len() as i64 - 1;
    let qtop = prefactor_power + dn - dd;
    let bottom = -(order as i64);
    assert!(qtop >= bottom, "requested window lies above the leading power");

    // Coefficient of z^k in the (shifted) numerator.
    let num_coeff = |k: i64| -> Scalar {
        let idx = k - prefactor_power;
        if (0..num.len() as i64).contains(&idx) {
            num[idx as usize].clone()
        } else {
            Scalar::zero()
        }
    };

    let width = (qtop - bottom + 1) as usize;
    let mut q = vec![Scalar::zero(); width];
    for offset in 0..width {
        let m = qtop - offset as i64;
        let mut acc = num_coeff(m + dd);
        for j in 0..dd {
            // q_{m + dd - j} has offset (qtop - m - dd + j) < offset.
            let prev = qtop - (m + dd - j);
            if prev >= 0 {
                acc -= &den[j as usize] * &q[prev as usize];
            }
        }
        q[offset] = acc;
    }
    LaurentTail::new(qtop, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn identity_series() {
        let s = series_of_rational(&[], &[], 0, 3);
        assert_eq!(s.coeff(0), Some(int(1)));
        for p in 1..=3 {
            assert_eq!(s.coeff(-p), Some(int(0)));
        }
    }

    #[test]
    fn z_minus_one_over_z() {
        let s = series_of_rational(&[int(1)], &[int(0)], 0, 2);
        assert_eq!(s.coeff(0), Some(int(1)));
        assert_eq!(s.coeff(-1), Some(int(-1)));
        assert_eq!(s.coeff(-2), Some(int(0)));
    }

    #[test]
    fn geometric_expansion() {
        // 1/(z-2) = z^{-1} + 2 z^{-2} + 4 z^{-3} + …
        let s = series_of_rational(&[], &[int(2)], 0, 4);
        assert_eq!(s.coeff(-1), Some(int(1)));
        assert_eq!(s.coeff(-2), Some(int(2)));
        assert_eq!(s.coeff(-3), Some(int(4)));
        assert_eq!(s.coeff(-4), Some(int(8)));
    }

    #[test]
    fn truncation_propagates_through_mul() {
        let a = series_of_rational(&[], &[int(1)], 0, 5);
        let b = series_of_rational(&[int(3)], &[], 1, 5);
        let prod = a.mul(&b);
        assert_eq!(prod.top_power(), 1);
        // a is exact to -5 and b has top power 2, so the product is exact to -3.
        assert_eq!(prod.truncation(), -3);
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let s = series_of_rational(&[int(1), int(-2)], &[int(3)], 0, 6);
        let prod = s.mul(&s.inverse());
        assert_eq!(prod.coeff(0), Some(int(1)));
        for p in 1..=4 {
            assert_eq!(prod.coeff(-p), Some(int(0)), "power -{p}");
        }
    }

    fn arb_tail() -> impl Strategy<Value = LaurentTail> {
        (
            -2i64..3,
            proptest::collection::vec((-6i64..7, 1i64..4), 3..7),
        )
            .prop_map(|(top, raw)| {
                let coeffs = raw.into_iter().map(|(n, d)| ratio(n, d)).collect();
                LaurentTail::new(top, coeffs)
            })
    }

    proptest! {
        #[test]
        fn mul_commutes(a in arb_tail(), b in arb_tail()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn mul_associates_on_common_window(a in arb_tail(), b in arb_tail(), c in arb_tail()) {
            let left = a.mul(&b).mul(&c);
            let right = a.mul(&b.mul(&c));
            let trunc = left.truncation().max(right.truncation());
            for power in (trunc..=left.top_power()).rev() {
                prop_assert_eq!(left.coeff(power), right.coeff(power));
            }
        }
    }
}
