//! The shifted-symmetric polynomial ring `R[card, p₁, p₂, …]`.
//!
//! `card` stands for the cardinality `|λ|` of the content alphabet and `p_k`
//! for its `k`-th power sum. Every shifted symmetric function of `λ` is a
//! unique polynomial in these generators, so this ring is the scalar domain
//! for all symbolic character output. `card` is a distinguished generator in
//! its own right, not `p₀`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{factorial, scalar_string, sign_pow, Scalar};
use crate::partitions::{enumerate_partitions, Partition};

/// `card^a · ∏ p_{k_i}^{e_i}` with sparse sorted p-exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    card_exp: u32,
    /// `(generator index, exponent)`, sorted by index, exponents ≥ 1.
    p_exps: Vec<(u32, u32)>,
}

impl Monomial {
    fn mul(&self, other: &Monomial) -> Monomial {
        let mut p_exps = self.p_exps.clone();
        for &(k, e) in &other.p_exps {
            match p_exps.binary_search_by_key(&k, |&(i, _)| i) {
                Ok(pos) => p_exps[pos].1 += e,
                Err(pos) => p_exps.insert(pos, (k, e)),
            }
        }
        Monomial { card_exp: self.card_exp + other.card_exp, p_exps }
    }

    pub fn card_exp(&self) -> u32 {
        self.card_exp
    }

    pub fn p_exps(&self) -> &[(u32, u32)] {
        &self.p_exps
    }
}

/// Polynomial in `{card, p₁, p₂, …}` with exact rational coefficients.
///
/// Canonical form: no zero coefficients are stored, and the `BTreeMap`
/// ordering gives a deterministic term order for display and comparison.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ShiftedSymPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl ShiftedSymPoly {
    pub fn zero() -> Self {
        ShiftedSymPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = ShiftedSymPoly::zero();
        p.add_term(Monomial::default(), c);
        p
    }

    pub fn one() -> Self {
        ShiftedSymPoly::constant(Scalar::one())
    }

    /// The generator `card`.
    pub fn card() -> Self {
        let mut p = ShiftedSymPoly::zero();
        p.add_term(Monomial { card_exp: 1, p_exps: vec![] }, Scalar::one());
        p
    }

    /// The generator `p_k`, `k ≥ 1`.
    pub fn p(k: u32) -> Self {
        assert!(k >= 1, "p-generators are indexed from 1");
        let mut poly = ShiftedSymPoly::zero();
        poly.add_term(Monomial { card_exp: 0, p_exps: vec![(k, 1)] }, Scalar::one());
        poly
    }

    /// `binom(card + shift, k)` expanded as a polynomial in `card`.
    pub fn card_binom(shift: i64, k: u32) -> Self {
        let mut poly = ShiftedSymPoly::one();
        for t in 0..k as i64 {
            let factor = ShiftedSymPoly::card()
                .add(&ShiftedSymPoly::constant(Scalar::from_integer(BigInt::from(shift - t))));
            poly = poly.mul(&factor);
        }
        poly.scale(&Scalar::new(BigInt::one(), factorial(k as usize)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        ShiftedSymPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return ShiftedSymPoly::zero();
        }
        ShiftedSymPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = ShiftedSymPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = ShiftedSymPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Substitute `card → |λ|` and `p_k → p_k(A_λ)`.
    pub fn eval_at_partition(&self, lambda: &Partition) -> Scalar {
        let max_gen = self
            .terms
            .keys()
            .flat_map(|m| m.p_exps.iter().map(|&(k, _)| k))
            .max()
            .unwrap_or(0);
        let mut psums = vec![Scalar::zero(); max_gen as usize + 1];
        for k in 1..=max_gen {
            psums[k as usize] = Scalar::from_integer(lambda.content_power_sum(k));
        }
        let card = Scalar::from_integer(BigInt::from(lambda.weight()));

        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..m.card_exp {
                term *= &card;
            }
            for &(k, e) in &m.p_exps {
                for _ in 0..e {
                    term *= &psums[k as usize];
                }
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Display for ShiftedSymPoly {
    /// Human rendering: `card` prints as `n`, e.g. `3*p2 - 3/2*n^2 + 3/2*n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            let trivial = m.card_exp == 0 && m.p_exps.is_empty();
            if !mag.is_one() || trivial {
                factors.push(scalar_string(&mag));
            }
            match m.card_exp {
                0 => {}
                1 => factors.push("n".to_string()),
                e => factors.push(format!("n^{e}")),
            }
            for &(k, e) in &m.p_exps {
                if e == 1 {
                    factors.push(format!("p{k}"));
                } else {
                    factors.push(format!("p{k}^{e}"));
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// The power-sum monomial `p_μ = ∏ p_{μ_i}`.
pub fn p_mu_poly(mu: &Partition) -> ShiftedSymPoly {
    let mut poly = ShiftedSymPoly::one();
    for &part in mu.parts() {
        poly = poly.mul(&ShiftedSymPoly::p(part));
    }
    poly
}

/// The elementary symmetric function `e_k` in the p-generators:
/// `Σ_{|μ|=k} (-1)^{k-l(μ)} p_μ / z_μ`.
pub fn e_in_p_basis(k: u32) -> ShiftedSymPoly {
    assert!(k >= 1);
    let mut out = ShiftedSymPoly::zero();
    for mu in enumerate_partitions(k, None) {
        let coeff = sign_pow((k - mu.len() as u32) as u64)
            * Scalar::new(BigInt::one(), mu.z_weight());
        out.add_assign(&p_mu_poly(&mu).scale(&coeff));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn ring_laws() {
        let p1 = ShiftedSymPoly::p(1);
        let sq = p1.mul(&p1);
        assert_eq!(sq, ShiftedSymPoly::p(1).pow(2));
        assert!(ShiftedSymPoly::card().sub(&ShiftedSymPoly::card()).is_zero());
        let f = ShiftedSymPoly::p(1).scale(&int(2)).add(&ShiftedSymPoly::card());
        assert_eq!(f.mul(&ShiftedSymPoly::one()), f);
    }

    #[test]
    fn evaluation() {
        let la = part(&[2, 1]);
        assert_eq!(ShiftedSymPoly::p(1).scale(&int(2)).eval_at_partition(&la), int(0));
        assert_eq!(ShiftedSymPoly::card().eval_at_partition(&part(&[3, 2])), int(5));
        // 3p₂ - 3·binom(n,2) at λ=(2,1): 3·2 - 3·3 = -3.
        let f = ShiftedSymPoly::p(2)
            .scale(&int(3))
            .sub(&ShiftedSymPoly::card_binom(0, 2).scale(&int(3)));
        assert_eq!(f.eval_at_partition(&la), int(-3));
    }

    #[test]
    fn card_binomials() {
        // binom(card, 2) = card(card-1)/2.
        let b2 = ShiftedSymPoly::card_binom(0, 2);
        let direct = ShiftedSymPoly::card()
            .mul(&ShiftedSymPoly::card().sub(&ShiftedSymPoly::one()))
            .scale(&ratio(1, 2));
        assert_eq!(b2, direct);
        for n in 0..=6u32 {
            let la = Partition::row(n);
            assert_eq!(
                ShiftedSymPoly::card_binom(1, 3).eval_at_partition(&la),
                Scalar::from_integer(crate::algebra::binom_general(n as i64 + 1, 3))
            );
        }
    }

    #[test]
    fn newton_expansions() {
        assert_eq!(e_in_p_basis(1), ShiftedSymPoly::p(1));
        let e2 = ShiftedSymPoly::p(1).pow(2).scale(&ratio(1, 2))
            .sub(&ShiftedSymPoly::p(2).scale(&ratio(1, 2)));
        assert_eq!(e_in_p_basis(2), e2);
        let e3 = ShiftedSymPoly::p(1).pow(3).scale(&ratio(1, 6))
            .sub(&ShiftedSymPoly::p(1).mul(&ShiftedSymPoly::p(2)).scale(&ratio(1, 2)))
            .add(&ShiftedSymPoly::p(3).scale(&ratio(1, 3)));
        assert_eq!(e_in_p_basis(3), e3);
    }

    #[test]
    fn p_mu_monomials() {
        assert_eq!(p_mu_poly(&part(&[2, 1])), ShiftedSymPoly::p(2).mul(&ShiftedSymPoly::p(1)));
        assert_eq!(p_mu_poly(&Partition::empty()), ShiftedSymPoly::one());
        assert_eq!(p_mu_poly(&part(&[3, 3])), ShiftedSymPoly::p(3).pow(2));
    }

    /// e_k evaluated through the p-basis equals e_k of the content multiset.
    #[test]
    fn elementary_matches_contents() {
        for n in 0..=8u32 {
            for la in enumerate_partitions(n, None) {
                let contents = la.contents();
                // Coefficients of ∏ (1 + z·a) up to z^4.
                let mut e = [Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero()];
                for &a in &contents {
                    for j in (1..=4usize).rev() {
                        let add = &e[j - 1] * Scalar::from_integer(BigInt::from(a));
                        e[j] += add;
                    }
                }
                for k in 1..=4u32 {
                    assert_eq!(
                        e_in_p_basis(k).eval_at_partition(&la),
                        e[k as usize],
                        "n={n} λ={la} k={k}"
                    );
                }
            }
        }
    }

    /// eval_at_partition is a ring homomorphism on random products.
    #[test]
    fn evaluation_is_multiplicative() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        let lambdas: Vec<Partition> = (0..=8u32).flat_map(|n| enumerate_partitions(n, None)).collect();
        for _ in 0..100 {
            let f = random_poly(&mut rng);
            let g = random_poly(&mut rng);
            let la = &lambdas[rng.gen_range(0..lambdas.len())];
            assert_eq!(
                f.mul(&g).eval_at_partition(la),
                f.eval_at_partition(la) * g.eval_at_partition(la)
            );
        }
    }

    fn random_poly(rng: &mut impl rand::Rng) -> ShiftedSymPoly {
        let mut poly = ShiftedSymPoly::zero();
        for _ in 0..rng.gen_range(1..4) {
            let mut m = ShiftedSymPoly::constant(ratio(rng.gen_range(-6..7), rng.gen_range(1..4)));
            for _ in 0..rng.gen_range(0..4) {
                let gen: u32 = rng.gen_range(0..5);
                m = if gen == 0 {
                    m.mul(&ShiftedSymPoly::card())
                } else {
                    m.mul(&ShiftedSymPoly::p(gen))
                };
            }
            poly.add_assign(&m);
        }
        poly
    }

    #[test]
    fn rendering() {
        let f = ShiftedSymPoly::p(2)
            .scale(&int(3))
            .sub(&ShiftedSymPoly::card_binom(0, 2).scale(&int(3)));
        assert_eq!(f.to_string(), "3*p2 + 3/2*n - 3/2*n^2");
        assert_eq!(ShiftedSymPoly::zero().to_string(), "0");
        assert_eq!(ShiftedSymPoly::constant(ratio(-1, 2)).to_string(), "-1/2");
    }
}
