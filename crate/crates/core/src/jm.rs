//! Class polynomials and Jucys–Murphy identities, verified at the
//! character level.
//!
//! For `μ = (ρ, 1^{n-|ρ|})` with all parts of `ρ` at least 2, the unique
//! polynomial `f_μ ∈ R[card, p₁, p₂, …]` with `f_μ(A_λ) = (n)_{|ρ|} χ̂^λ_μ`
//! expresses the class sum `C_μ` as `z̃_μ^{-1} f_μ(J_1,…,J_n)` in the
//! Jucys–Murphy elements. This module exports those polynomials and checks
//! the induced decomposition of the elementary symmetric functions
//! `e_k = Σ_{|μ|-l(μ)=k} z̃_μ^{-1} f_μ`, both symbolically and by evaluation.
//! Nothing here builds the group algebra; the character level carries the
//! same information for these identities.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::Scalar;
use crate::charformula::{central_char, multi_cycle_symbolic};
use crate::error::Error;
use crate::partitions::{enumerate_partitions, Partition};
use crate::symfun::{e_in_p_basis, ShiftedSymPoly};

/// A non-unary profile `ρ` together with `f_μ` and `z̃_μ = z_ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPolynomial {
    pub rho: Partition,
    pub f: ShiftedSymPoly,
    pub z_tilde: BigInt,
}

/// Compute the class polynomial for `ρ`; parts equal to 1 are rejected
/// because they are padding by definition.
pub fn class_polynomial(rho: &Partition) -> Result<ClassPolynomial, Error> {
    if rho.parts().contains(&1) {
        return Err(Error::UnaryProfilePart);
    }
    Ok(ClassPolynomial {
        rho: rho.clone(),
        f: multi_cycle_symbolic(rho),
        z_tilde: rho.z_weight(),
    })
}

/// All profiles with parts ≥ 2 and `|ρ| - l(ρ) = k`, in order of weight,
/// then lexicographically decreasing.
pub fn profiles_with_complexity(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for m in (k + 1)..=(2 * k) {
        let len = (m - k) as usize;
        for rho in enumerate_partitions(m, Some(len)) {
            if rho.len() == len && rho.parts().iter().all(|&p| p >= 2) {
                out.push(rho);
            }
        }
    }
    out
}

/// `Σ_{|μ|-l(μ)=k} z̃_μ^{-1} f_μ - e_k`, which must be the zero polynomial.
pub fn ek_decomposition(k: u32) -> ShiftedSymPoly {
    assert!(k >= 1);
    let mut acc = ShiftedSymPoly::zero();
    for rho in profiles_with_complexity(k) {
        let cp = class_polynomial(&rho).expect("profiles have no unary parts");
        acc.add_assign(&cp.f.scale(&Scalar::new(BigInt::from(1), cp.z_tilde)));
    }
    acc.sub(&e_in_p_basis(k))
}

/// Check `e_k(A_λ) = Σ_{|μ|-l(μ)=k} ω^λ_μ` for every `λ` of weight `n`,
/// with `e_k` evaluated directly on the content multiset and `ω` the
/// central character.
pub fn ek_eval_check(n: u32, k: u32) -> bool {
    let classes: Vec<Partition> = enumerate_partitions(n, None)
        .into_iter()
        .filter(|mu| mu.weight() - mu.len() as u32 == k)
        .collect();
    for la in enumerate_partitions(n, None) {
        let direct = elementary_of_contents(&la, k);
        let mut sum = Scalar::zero();
        for mu in &classes {
            sum += central_char(&la, mu).expect("weights match");
        }
        if sum != Scalar::from_integer(direct) {
            return false;
        }
    }
    true
}

/// `e_k` of the content multiset, from the product generating function.
fn elementary_of_contents(lambda: &Partition, k: u32) -> BigInt {
    let mut e = vec![BigInt::zero(); k as usize + 1];
    e[0] = BigInt::from(1);
    for c in lambda.contents() {
        for j in (1..=k as usize).rev() {
            let add = &e[j - 1] * BigInt::from(c);
            e[j] += add;
        }
    }
    e[k as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::charformula::normalized_char;
    use crate::partitions::enumerate_partitions;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_class_polynomials() {
        use ShiftedSymPoly as P;
        let two = class_polynomial(&part(&[2])).unwrap();
        assert_eq!(two.f, P::p(1).scale(&int(2)));
        assert_eq!(two.z_tilde, BigInt::from(2));

        let three = class_polynomial(&part(&[3])).unwrap();
        assert_eq!(three.f, P::p(2).scale(&int(3)).sub(&P::card_binom(0, 2).scale(&int(3))));
        assert_eq!(three.z_tilde, BigInt::from(3));

        // f_{(2,2)} = 4p₁² - 12p₂ + 4n(n-1), z̃ = 8.
        let paired = class_polynomial(&part(&[2, 2])).unwrap();
        let expect = P::p(1).pow(2).scale(&int(4))
            .sub(&P::p(2).scale(&int(12)))
            .add(&P::card().mul(&P::card().sub(&P::one())).scale(&int(4)));
        assert_eq!(paired.f, expect);
        assert_eq!(paired.z_tilde, BigInt::from(8));

        assert!(class_polynomial(&part(&[2, 1])).is_err());
    }

    #[test]
    fn class_polynomial_evaluates_to_scaled_character() {
        for rho in [part(&[2]), part(&[3]), part(&[2, 2])] {
            let cp = class_polynomial(&rho).unwrap();
            for n in rho.weight()..=8 {
                for la in enumerate_partitions(n, None) {
                    let mut mu_parts = rho.parts().to_vec();
                    mu_parts.extend(std::iter::repeat_n(1, (n - rho.weight()) as usize));
                    let mu = Partition::new(mu_parts).unwrap();
                    let scale = crate::algebra::falling_factorial_int(
                        &BigInt::from(n),
                        rho.weight() as usize,
                    );
                    assert_eq!(
                        cp.f.eval_at_partition(&la),
                        normalized_char(&la, &mu).unwrap() * Scalar::from_integer(scale),
                        "ρ={rho} λ={la}"
                    );
                }
            }
        }
    }

    #[test]
    fn profile_enumeration() {
        assert_eq!(profiles_with_complexity(1), vec![part(&[2])]);
        assert_eq!(profiles_with_complexity(2), vec![part(&[3]), part(&[2, 2])]);
        assert_eq!(
            profiles_with_complexity(3),
            vec![part(&[4]), part(&[3, 2]), part(&[2, 2, 2])]
        );
    }

    #[test]
    fn elementary_decompositions_vanish() {
        for k in 1..=3u32 {
            let diff = ek_decomposition(k);
            assert!(diff.is_zero(), "k={k}: residue {diff}");
        }
    }

    #[test]
    fn e2_decomposition_terms() {
        use ShiftedSymPoly as P;
        // f_{(3)}/3 = p₂ - binom(n,2) and f_{(2,2)}/8 = p₁²/2 - 3p₂/2 + binom(n,2);
        // their sum is e₂ = p₁²/2 - p₂/2.
        let t1 = class_polynomial(&part(&[3])).unwrap();
        let s1 = t1.f.scale(&Scalar::new(BigInt::from(1), t1.z_tilde));
        assert_eq!(s1, P::p(2).sub(&P::card_binom(0, 2)));
        let t2 = class_polynomial(&part(&[2, 2])).unwrap();
        let s2 = t2.f.scale(&Scalar::new(BigInt::from(1), t2.z_tilde));
        assert_eq!(
            s2,
            P::p(1).pow(2).scale(&crate::algebra::ratio(1, 2))
                .sub(&P::p(2).scale(&crate::algebra::ratio(3, 2)))
                .add(&P::card_binom(0, 2))
        );
        assert_eq!(s1.add(&s2), e_in_p_basis(2));
    }

    #[test]
    fn evaluation_checks() {
        assert!(ek_eval_check(4, 1));
        assert!(ek_eval_check(6, 2));
        assert!(ek_eval_check(7, 3));
        for n in 1..=6u32 {
            for k in 1..=3u32 {
                assert!(ek_eval_check(n, k), "n={n} k={k}");
            }
        }
    }
}
