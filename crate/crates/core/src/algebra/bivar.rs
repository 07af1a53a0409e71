//! Bivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::scalar::{scalar_string, Scalar};

/// Polynomial in two variables, sparse, no stored zero coefficients.
///
/// Keys are `(e1, e2)` exponent pairs; the `BTreeMap` ordering (lexicographic
/// in `e1`, then `e2`) doubles as the monomial order for division and for
/// deterministic output.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = BivarPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn one() -> Self {
        BivarPoly::constant(Scalar::one())
    }

    pub fn monomial(e1: u32, e2: u32, c: Scalar) -> Self {
        let mut p = BivarPoly::zero();
        p.add_term(e1, e2, c);
        p
    }

    /// First variable.
    pub fn var1() -> Self {
        BivarPoly::monomial(1, 0, Scalar::one())
    }

    /// Second variable.
    pub fn var2() -> Self {
        BivarPoly::monomial(0, 1, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e1: u32, e2: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((e1, e2)).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(e1, e2));
        }
    }

    pub fn coeff(&self, e1: u32, e2: u32) -> Scalar {
        self.terms.get(&(e1, e2)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(e1, e2), c) in &other.terms {
            out.add_term(e1, e2, c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (&(e1, e2), c) in &other.terms {
            self.add_term(e1, e2, c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        let mut out = BivarPoly::zero();
        for (&(e1, e2), c) in &self.terms {
            out.add_term(e1, e2, -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return BivarPoly::zero();
        }
        let mut out = BivarPoly::zero();
        for (&(e1, e2), c) in &self.terms {
            out.add_term(e1, e2, c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BivarPoly::zero();
        for (&(a1, a2), ca) in &self.terms {
            for (&(b1, b2), cb) in &other.terms {
                out.add_term(a1 + b1, a2 + b2, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = BivarPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Total degree (maximum `e1 + e2`); `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn eval(&self, x1: &Scalar, x2: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (&(e1, e2), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..e1 {
                term *= x1;
            }
            for _ in 0..e2 {
                term *= x2;
            }
            acc += term;
        }
        acc
    }

    /// Substitute `0` for the second variable.
    pub fn set_var2_zero(&self) -> Self {
        let mut out = BivarPoly::zero();
        for (&(e1, e2), c) in &self.terms {
            if e2 == 0 {
                out.add_term(e1, 0, c.clone());
            }
        }
        out
    }

    /// Swap the two variables.
    pub fn swap_vars(&self) -> Self {
        let mut out = BivarPoly::zero();
        for (&(e1, e2), c) in &self.terms {
            out.add_term(e2, e1, c.clone());
        }
        out
    }

    fn leading(&self) -> Option<((u32, u32), &Scalar)> {
        self.terms.iter().next_back().map(|(&k, c)| (k, c))
    }

    /// Exact division; `None` if the remainder is nonzero.
    ///
    /// Single-divisor reduction in the lexicographic monomial order: the
    /// leading monomial of the running remainder strictly decreases, so the
    /// loop terminates.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dlead, dcoeff) = divisor.leading().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = BivarPoly::zero();
        while let Some((rlead, rcoeff)) = rem.leading() {
            if rlead.0 < dlead.0 || rlead.1 < dlead.1 {
                return None;
            }
            let t = BivarPoly::monomial(rlead.0 - dlead.0, rlead.1 - dlead.1, rcoeff / dcoeff);
            rem = rem.sub(&t.mul(divisor));
            quot.add_assign(&t);
        }
        Some(quot)
    }

    /// Render with the given variable names, terms in map order.
    pub fn to_string_with(&self, v1: &str, v2: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&(e1, e2), c)) in self.terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (e1 == 0 && e2 == 0) {
                factors.push(scalar_string(&mag));
            }
            for (name, e) in [(v1, e1), (v2, e2)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    #[test]
    fn arithmetic_and_canonical_form() {
        let p = BivarPoly::var1().add(&BivarPoly::var2());
        let q = p.mul(&p);
        assert_eq!(q.coeff(2, 0), int(1));
        assert_eq!(q.coeff(1, 1), int(2));
        assert_eq!(q.coeff(0, 2), int(1));
        // Cancellation removes the stored term entirely.
        let r = q.sub(&q);
        assert!(r.is_zero());
    }

    #[test]
    fn exact_division() {
        let sum = BivarPoly::var1().add(&BivarPoly::var2());
        // q1^3 + q2^3 = (q1 + q2)(q1^2 - q1 q2 + q2^2)
        let mut cubes = BivarPoly::zero();
        cubes.add_term(3, 0, int(1));
        cubes.add_term(0, 3, int(1));
        let q = cubes.div_exact(&sum).unwrap();
        assert_eq!(q.coeff(2, 0), int(1));
        assert_eq!(q.coeff(1, 1), int(-1));
        assert_eq!(q.coeff(0, 2), int(1));
        // q1 alone is not divisible by q1 + q2.
        assert!(BivarPoly::var1().div_exact(&sum).is_none());
    }

    #[test]
    fn eval_and_specialize() {
        let p = BivarPoly::monomial(2, 1, ratio(1, 2)).add(&BivarPoly::var1());
        assert_eq!(p.eval(&int(2), &int(3)), int(8));
        assert_eq!(p.set_var2_zero(), BivarPoly::var1());
        assert_eq!(p.swap_vars().coeff(1, 2), ratio(1, 2));
    }

    #[test]
    fn display() {
        let p = BivarPoly::monomial(2, 0, int(1))
            .add(&BivarPoly::monomial(1, 1, int(-3)))
            .add(&BivarPoly::constant(ratio(1, 2)));
        assert_eq!(p.to_string_with("q1", "q2"), "1/2 - 3*q1*q2 + q1^2");
        assert_eq!(BivarPoly::zero().to_string_with("y", "z"), "0");
    }
}
