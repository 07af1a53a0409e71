//! Independent ground truth for character values.
//!
//! `χ^λ_μ` is computed here by the Murnaghan recursion in its virtual-
//! character form: remove one part `p` of `μ` at a time, form `λ - pε_k`
//! for every row `k`, straighten each resulting integer sequence into
//! `0` or `±` a partition, and recurse. No border-strip bookkeeping is
//! needed; straightening does all of it. This path shares no code with the
//! closed character formulas, which is the point — it is the oracle they
//! are checked against.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Scalar;
use crate::error::Error;
use crate::partitions::{enumerate_partitions, straighten, Partition, SignedPartition};

/// Memoized Murnaghan recursion state.
///
/// The recursion tree shares subproblems massively from `n ≈ 8` on, so the
/// memo table is essential. A fresh oracle starts cold; the module-level
/// [`mn_char`] uses a process-wide table instead.
#[derive(Default)]
pub struct MnOracle {
    memo: HashMap<(Partition, Partition), BigInt>,
    largest_first: bool,
}

impl MnOracle {
    pub fn new() -> Self {
        MnOracle { memo: HashMap::new(), largest_first: true }
    }

    /// Variant removing the smallest part of `μ` first; the result must be
    /// identical, which the tests exercise.
    pub fn smallest_first() -> Self {
        MnOracle { memo: HashMap::new(), largest_first: false }
    }

    /// `χ^λ_μ`, exactly.
    pub fn char_value(&mut self, lambda: &Partition, mu: &Partition) -> Result<BigInt, Error> {
        if lambda.weight() != mu.weight() {
            return Err(Error::WeightMismatch { lambda: lambda.weight(), mu: mu.weight() });
        }
        Ok(self.recurse(lambda, mu))
    }

    fn recurse(&mut self, lambda: &Partition, mu: &Partition) -> BigInt {
        if lambda.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (p, rest) = if self.largest_first {
            let p = mu.parts()[0];
            (p, Partition::new(mu.parts()[1..].to_vec()).expect("suffix stays sorted"))
        } else {
            let last = mu.len() - 1;
            let p = mu.parts()[last];
            (p, Partition::new(mu.parts()[..last].to_vec()).expect("prefix stays sorted"))
        };

        let mut total = BigInt::zero();
        for k in 0..lambda.len() {
            let mut seq: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
            seq[k] -= p as i64;
            match straighten(&seq) {
                SignedPartition::Zero => {}
                SignedPartition::Term { sign, partition } => {
                    let sub = self.recurse(&partition, &rest);
                    total += BigInt::from(sign) * sub;
                }
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

static GLOBAL: LazyLock<Mutex<MnOracle>> = LazyLock::new(|| Mutex::new(MnOracle::new()));

/// `χ^λ_μ` through the process-wide memoized oracle.
pub fn mn_char(lambda: &Partition, mu: &Partition) -> Result<BigInt, Error> {
    GLOBAL.lock().unwrap().char_value(lambda, mu)
}

/// `χ^λ_μ / dim λ`.
pub fn mn_normalized(lambda: &Partition, mu: &Partition) -> Result<Scalar, Error> {
    Ok(Scalar::new(mn_char(lambda, mu)?, lambda.dimension()))
}

/// Row orthogonality at weight `n`: `Σ_λ χ^λ_μ χ^λ_ν = z_μ [μ=ν]`.
pub fn orthogonality_check(n: u32) -> bool {
    let classes = enumerate_partitions(n, None);
    let reps = enumerate_partitions(n, None);
    for mu in &classes {
        for nu in &classes {
            let mut acc = BigInt::zero();
            for la in &reps {
                acc += mn_char(la, mu).unwrap() * mn_char(la, nu).unwrap();
            }
            let expect = if mu == nu { mu.z_weight() } else { BigInt::zero() };
            if acc != expect {
                return false;
            }
        }
    }
    true
}

/// Kostka number `K_{λμ}`: semistandard tableaux of shape `λ`, content `μ`.
///
/// Entries equal to the largest letter form a horizontal strip; strip it and
/// recurse on the rest of the content.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<BigInt, Error> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch { lambda: lambda.weight(), mu: mu.weight() });
    }
    static MEMO: LazyLock<Mutex<HashMap<(Partition, Partition), BigInt>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    Ok(kostka_rec(lambda, mu.parts(), &MEMO))
}

fn kostka_rec(
    lambda: &Partition,
    content: &[u32],
    memo: &Mutex<HashMap<(Partition, Partition), BigInt>>,
) -> BigInt {
    if content.is_empty() {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    let key = (
        lambda.clone(),
        Partition::new(content.to_vec()).expect("content stays a partition"),
    );
    if let Some(v) = memo.lock().unwrap().get(&key) {
        return v.clone();
    }
    let (&last, head) = content.split_last().unwrap();
    let mut total = BigInt::zero();
    let mut inner = Vec::with_capacity(lambda.len());
    strip_rows(lambda, 0, last, &mut inner, &mut total, head, memo);
    memo.lock().unwrap().insert(key, total.clone());
    total
}

// Choose ν_i row by row with λ_{i+1} ≤ ν_i ≤ λ_i (horizontal strip) and
// a running budget of cells to remove.
fn strip_rows(
    lambda: &Partition,
    row: usize,
    budget: u32,
    inner: &mut Vec<u32>,
    total: &mut BigInt,
    head: &[u32],
    memo: &Mutex<HashMap<(Partition, Partition), BigInt>>,
) {
    if row == lambda.len() {
        if budget == 0 {
            let mut parts = inner.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            let nu = Partition::new(parts).expect("strip complement is a partition");
            *total += kostka_rec(&nu, head, memo);
        }
        return;
    }
    let hi = lambda.parts()[row];
    let lo = lambda.parts().get(row + 1).copied().unwrap_or(0);
    let max_removal = (hi - lo).min(budget);
    for removed in 0..=max_removal {
        inner.push(hi - removed);
        strip_rows(lambda, row + 1, budget - removed, inner, total, head, memo);
        inner.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factorial;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn basic_character_values() {
        for n in 1..=7u32 {
            for mu in enumerate_partitions(n, None) {
                assert_eq!(mn_char(&part(&[n]), &mu).unwrap(), BigInt::one());
            }
        }
        assert_eq!(mn_char(&part(&[2, 1]), &part(&[3])).unwrap(), BigInt::from(-1));
        assert_eq!(mn_char(&part(&[2, 2]), &part(&[2, 2])).unwrap(), BigInt::from(2));
        assert_eq!(mn_char(&part(&[2, 2]), &part(&[3, 1])).unwrap(), BigInt::from(-1));
        assert!(mn_char(&part(&[2, 1]), &part(&[2, 2])).is_err());
    }

    #[test]
    fn sign_representation() {
        for n in 1..=7u32 {
            let sign_rep = part(&vec![1u32; n as usize]);
            for mu in enumerate_partitions(n, None) {
                let expect = if (mu.weight() - mu.len() as u32).is_multiple_of(2) { 1 } else { -1 };
                assert_eq!(mn_char(&sign_rep, &mu).unwrap(), BigInt::from(expect), "μ={mu}");
            }
        }
    }

    #[test]
    fn identity_class_gives_dimension() {
        for n in 1..=8u32 {
            let id = part(&vec![1u32; n as usize]);
            for la in enumerate_partitions(n, None) {
                assert_eq!(mn_char(&la, &id).unwrap(), la.dimension(), "λ={la}");
            }
        }
    }

    #[test]
    fn normalized_values() {
        assert_eq!(mn_normalized(&part(&[2, 1]), &part(&[3])).unwrap(), crate::algebra::ratio(-1, 2));
        assert_eq!(mn_normalized(&part(&[1, 1]), &part(&[1, 1])).unwrap(), crate::algebra::int(1));
        assert_eq!(
            mn_normalized(&part(&[3, 1]), &part(&[2, 1, 1])).unwrap(),
            Scalar::new(mn_char(&part(&[3, 1]), &part(&[2, 1, 1])).unwrap(), BigInt::from(3))
        );
    }

    #[test]
    fn removal_order_is_irrelevant() {
        let mut small_first = MnOracle::smallest_first();
        for n in 1..=6u32 {
            for la in enumerate_partitions(n, None) {
                for mu in enumerate_partitions(n, None) {
                    assert_eq!(
                        mn_char(&la, &mu).unwrap(),
                        small_first.char_value(&la, &mu).unwrap(),
                        "λ={la} μ={mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        for n in 1..=7u32 {
            assert!(orthogonality_check(n), "n = {n}");
        }
    }

    #[test]
    fn first_column_sums() {
        // Σ_μ (class size) = n!, a sanity check on z_weight and enumeration.
        for n in 1..=6u32 {
            let nf = factorial(n as usize);
            let total: BigInt = enumerate_partitions(n, None)
                .iter()
                .map(|mu| &nf / mu.z_weight())
                .sum();
            assert_eq!(total, nf);
        }
    }

    #[test]
    fn kostka_values() {
        for n in 1..=6u32 {
            for la in enumerate_partitions(n, None) {
                assert_eq!(kostka(&la, &la).unwrap(), BigInt::one(), "λ={la}");
            }
        }
        assert_eq!(kostka(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(kostka(&part(&[1, 1]), &part(&[2])).unwrap(), BigInt::zero());
        assert_eq!(kostka(&part(&[3, 1]), &part(&[2, 1, 1])).unwrap(), BigInt::from(2));
        assert!(kostka(&part(&[2]), &part(&[1])).is_err());
    }

    #[test]
    fn kostka_dominance() {
        // K_{λμ} > 0 iff λ dominates μ (for partitions of equal weight).
        let dominates = |la: &Partition, mu: &Partition| -> bool {
            let mut la_acc = 0i64;
            let mut mu_acc = 0i64;
            for i in 0..la.len().max(mu.len()) {
                la_acc += la.parts().get(i).copied().unwrap_or(0) as i64;
                mu_acc += mu.parts().get(i).copied().unwrap_or(0) as i64;
                if la_acc < mu_acc {
                    return false;
                }
            }
            true
        };
        for n in 1..=6u32 {
            for la in enumerate_partitions(n, None) {
                for mu in enumerate_partitions(n, None) {
                    let k = kostka(&la, &mu).unwrap();
                    assert_eq!(k > BigInt::zero(), dominates(&la, &mu), "λ={la} μ={mu}");
                }
            }
        }
    }

    #[test]
    fn identity_content_kostka_counts_standard_tableaux() {
        // K_{λ,1^n} equals dim λ (standard Young tableaux).
        for n in 1..=7u32 {
            let id = part(&vec![1u32; n as usize]);
            for la in enumerate_partitions(n, None) {
                assert_eq!(kostka(&la, &id).unwrap(), la.dimension(), "λ={la}");
            }
        }
    }
}
