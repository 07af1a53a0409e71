//! Hecke-algebra characters as exact bivariate polynomials in `(q₁, q₂)`.
//!
//! The normalized character of `H_n(q₁,q₂)` at the standard element `T_μ`
//! expands over tuples of partitions `ρ^{(i)} ⊢ μ_i`:
//!
//! `χ̂_H(T_μ) = (q₁+q₂)^{-l(μ)} Σ ∏_i z_{ρ^{(i)}}^{-1}
//!             ∏_j (q₁^{ρ^{(i)}_j} - (-q₂)^{ρ^{(i)}_j}) · χ̂^λ_{∪ρ^{(i)}}`,
//!
//! with the symmetric-group values supplied by the content formulas. The
//! numerator is assembled exactly and then divided by `(q₁+q₂)^{l(μ)}`;
//! the division is always remainder-free (each part contributes a factor
//! `q₁^a - (-q₂)^a = (q₁+q₂)(…)`), and a remainder aborts loudly because it
//! can only mean an implementation bug.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{BivarPoly, Scalar};
use crate::charformula::normalized_char_in;
use crate::coeffs::ContentCtx;
use crate::error::Error;
use crate::partitions::{enumerate_partitions, Partition};

/// A fully evaluated Hecke character value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeCharValue {
    pub lambda: Partition,
    pub mu: Partition,
    /// `χ̂^λ_H(T_μ)`.
    pub normalized: BivarPoly,
    /// `χ^λ_H(T_μ) = normalized · dim λ`.
    pub raw: BivarPoly,
}

impl HeckeCharValue {
    pub fn compute(lambda: &Partition, mu: &Partition) -> Result<Self, Error> {
        let normalized = hecke_normalized(lambda, mu)?;
        let raw = normalized.scale(&Scalar::from_integer(lambda.dimension()));
        Ok(HeckeCharValue {
            lambda: lambda.clone(),
            mu: mu.clone(),
            normalized,
            raw,
        })
    }
}

/// `χ̂^λ_H(T_μ)` as a polynomial in `(q₁, q₂)`.
pub fn hecke_normalized(lambda: &Partition, mu: &Partition) -> Result<BivarPoly, Error> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch { lambda: lambda.weight(), mu: mu.weight() });
    }
    let mut ctx = ContentCtx::new(lambda.clone());
    let options: Vec<Vec<Partition>> = mu
        .parts()
        .iter()
        .map(|&part| enumerate_partitions(part, None))
        .collect();

    let mut chi_cache: HashMap<Partition, Scalar> = HashMap::new();
    let mut numerator = BivarPoly::zero();
    let mut choice = vec![0usize; options.len()];
    loop {
        // One tuple (ρ^(1), …, ρ^(l)).
        let mut union_parts: Vec<u32> = Vec::with_capacity(mu.weight() as usize);
        let mut z_inv = Scalar::one();
        let mut poly = BivarPoly::one();
        for (i, opts) in options.iter().enumerate() {
            let rho = &opts[choice[i]];
            union_parts.extend_from_slice(rho.parts());
            z_inv *= Scalar::new(BigInt::one(), rho.z_weight());
            for &a in rho.parts() {
                poly = poly.mul(&power_sum_factor(a));
            }
        }
        union_parts.sort_unstable_by(|x, y| y.cmp(x));
        let union = Partition::new(union_parts).expect("sorted descending");
        let chi = match chi_cache.get(&union) {
            Some(v) => v.clone(),
            None => {
                let v = normalized_char_in(&mut ctx, &union)?;
                chi_cache.insert(union, v.clone());
                v
            }
        };
        numerator.add_assign(&poly.scale(&(z_inv * chi)));

        // Odometer step over the tuple space.
        let mut pos = 0;
        loop {
            if pos == options.len() {
                let divisor = BivarPoly::var1().add(&BivarPoly::var2());
                let mut result = numerator;
                for _ in 0..mu.len() {
                    result = result.div_exact(&divisor).ok_or(Error::InexactDivision)?;
                }
                return Ok(result);
            }
            choice[pos] += 1;
            if choice[pos] < options[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// `q₁^a - (-q₂)^a`.
fn power_sum_factor(a: u32) -> BivarPoly {
    let sign = if a.is_multiple_of(2) { -1i64 } else { 1 };
    BivarPoly::monomial(a, 0, Scalar::one())
        .add(&BivarPoly::monomial(0, a, Scalar::from_integer(BigInt::from(sign))))
}

/// `χ^λ_H(T_μ) = χ̂^λ_H(T_μ) · dim λ`.
pub fn hecke_char(lambda: &Partition, mu: &Partition) -> Result<BivarPoly, Error> {
    Ok(hecke_normalized(lambda, mu)?.scale(&Scalar::from_integer(lambda.dimension())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::charformula::integer_char;
    use crate::oracle::kostka;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn unary(n: u32) -> Partition {
        part(&vec![1u32; n as usize])
    }

    #[test]
    fn quadratic_relation_roots() {
        assert_eq!(hecke_normalized(&part(&[2]), &part(&[2])).unwrap(), BivarPoly::var1());
        assert_eq!(hecke_normalized(&part(&[1, 1]), &part(&[2])).unwrap(), BivarPoly::var2());
        assert_eq!(hecke_char(&part(&[2]), &part(&[2])).unwrap(), BivarPoly::var1());
    }

    #[test]
    fn identity_class_is_one() {
        for n in 1..=5u32 {
            for la in enumerate_partitions(n, None) {
                assert_eq!(
                    hecke_normalized(&la, &unary(n)).unwrap(),
                    BivarPoly::one(),
                    "λ={la}"
                );
            }
        }
    }

    #[test]
    fn raw_value_at_identity_is_dimension() {
        let v = hecke_char(&part(&[2, 1]), &unary(3)).unwrap();
        assert_eq!(v, BivarPoly::constant(int(2)));
    }

    #[test]
    fn weight_mismatch_rejected() {
        assert!(hecke_normalized(&part(&[2]), &part(&[3])).is_err());
    }

    #[test]
    fn kostka_specialization() {
        // Setting q₂ = 0 in the raw value leaves q₁^{n-l(μ)} K_{λμ}.
        for n in 1..=5u32 {
            for la in enumerate_partitions(n, None) {
                for mu in enumerate_partitions(n, None) {
                    let raw = HeckeCharValue::compute(&la, &mu).unwrap().raw;
                    let expect = BivarPoly::monomial(
                        n - mu.len() as u32,
                        0,
                        Scalar::from_integer(kostka(&la, &mu).unwrap()),
                    );
                    assert_eq!(raw.set_var2_zero(), expect, "λ={la} μ={mu}");
                }
            }
        }
    }

    #[test]
    fn symmetric_group_specialization() {
        // (q₁,q₂) = (1,-1) of the divided polynomial recovers χ^λ_μ.
        for n in 1..=5u32 {
            for la in enumerate_partitions(n, None) {
                for mu in enumerate_partitions(n, None) {
                    let raw = hecke_char(&la, &mu).unwrap();
                    assert_eq!(
                        raw.eval(&int(1), &int(-1)),
                        Scalar::from_integer(integer_char(&la, &mu).unwrap()),
                        "λ={la} μ={mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn degree_bound() {
        for n in 1..=6u32 {
            for la in enumerate_partitions(n, None) {
                for mu in enumerate_partitions(n, None) {
                    let raw = hecke_char(&la, &mu).unwrap();
                    if let Some(d) = raw.total_degree() {
                        assert!(d <= n - mu.len() as u32, "λ={la} μ={mu}: degree {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn variable_swap_conjugates_the_label() {
        // Exploratory symmetry: swapping (q₁,q₂) matches conjugating λ.
        // Not asserted anywhere else; kept as a regression probe.
        for n in 1..=4u32 {
            for la in enumerate_partitions(n, None) {
                for mu in enumerate_partitions(n, None) {
                    let swapped = hecke_normalized(&la, &mu).unwrap().swap_vars();
                    let conj = hecke_normalized(&la.conjugate(), &mu).unwrap();
                    assert_eq!(swapped, conj, "λ={la} μ={mu}");
                }
            }
        }
    }
}
