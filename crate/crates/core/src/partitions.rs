//! Integer partitions: the index set for representations, conjugacy classes
//! and content alphabets.
//!
//! Partitions are immutable value types in canonical form: parts are weakly
//! decreasing and positive. Construction rejects anything else rather than
//! sorting silently, which catches swapped λ/μ arguments early. The text
//! syntax used everywhere (CLI and JSON alike) is comma-separated parts,
//! `"4,2,1"`, with the empty string for the empty partition.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::factorial;
use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Canonical constructor; rejects unsorted or nonpositive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        let ok = parts.iter().all(|&p| p >= 1) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition(format!("{parts:?}")))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the order of the centralizer of the class.
    pub fn z_weight(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut idx = 0;
        while idx < self.parts.len() {
            let part = self.parts[idx];
            let mut mult = 0usize;
            while idx < self.parts.len() && self.parts[idx] == part {
                mult += 1;
                idx += 1;
            }
            z *= num_traits::pow::pow(BigInt::from(part), mult) * factorial(mult);
        }
        z
    }

    /// Dimension of the irreducible representation labelled by `self`:
    /// `n! ∏_{i<j}(λ_i-λ_j+j-i) / ∏_i (λ_i+l-i)!`.
    pub fn dimension(&self) -> BigInt {
        let l = self.parts.len();
        let n = self.weight() as usize;
        let mut num = factorial(n);
        for i in 0..l {
            for j in (i + 1)..l {
                num *= BigInt::from(
                    self.parts[i] as i64 - self.parts[j] as i64 + j as i64 - i as i64,
                );
            }
        }
        let mut den = BigInt::one();
        for (i, &p) in self.parts.iter().enumerate() {
            den *= factorial(p as usize + l - i - 1);
        }
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        debug_assert!(r.is_zero());
        q
    }

    /// The multiset of contents `{j - i : (i,j) ∈ λ}`, in row-major order.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=(p as i64) {
                out.push(j - (i as i64 + 1));
            }
        }
        out
    }

    /// Power sum of the contents, `p_k(A_λ) = Σ (j-i)^k`.
    pub fn content_power_sum(&self, k: u32) -> BigInt {
        self.contents()
            .into_iter()
            .map(|c| num_traits::pow::pow(BigInt::from(c), k as usize))
            .sum()
    }

    /// Column lengths of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols as u32 {
            parts.push(self.parts.iter().filter(|&&p| p >= j).count() as u32);
        }
        Partition { parts }
    }

    /// Arm/leg lengths along the main diagonal.
    pub fn frobenius_coords(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let mut arms = Vec::new();
        let mut legs = Vec::new();
        for i in 0..self.parts.len() {
            if self.parts[i] as usize > i {
                arms.push(self.parts[i] - i as u32 - 1);
                legs.push(conj.parts[i] - i as u32 - 1);
            } else {
                break;
            }
        }
        FrobeniusCoords { arms, legs }
    }

    /// Parts strictly greater than 1 (the non-unary profile of a cycle type).
    pub fn without_unary_parts(&self) -> Partition {
        Partition {
            parts: self.parts.iter().copied().filter(|&p| p >= 2).collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        f.write_str(&s)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::ParsePartition(s.to_string()))?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|_| Error::ParsePartition(s.to_string()))
    }
}

/// Diagonal coordinates `(α_i, β_i)` of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub arms: Vec<u32>,
    pub legs: Vec<u32>,
}

impl FrobeniusCoords {
    /// Rebuild the partition the coordinates came from.
    pub fn reconstruct(&self) -> Partition {
        let r = self.arms.len();
        let rows = self
            .legs
            .iter()
            .enumerate()
            .map(|(i, &b)| i as u32 + b + 1)
            .max()
            .unwrap_or(0) as usize;
        let mut parts = vec![0u32; rows];
        for (i, &a) in self.arms.iter().enumerate().take(r) {
            parts[i] = a + i as u32 + 1;
        }
        for (i, &b) in self.legs.iter().enumerate() {
            for part in parts.iter_mut().skip(i + 1).take(b as usize) {
                *part = (*part).max(i as u32 + 1);
            }
        }
        Partition { parts }
    }
}

/// Result of straightening an integer sequence into a Schur label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignedPartition {
    /// The straightened Schur function vanishes.
    Zero,
    Term { sign: i8, partition: Partition },
}

/// Straighten an arbitrary integer sequence via `s_{…,a,b,…} = -s_{…,b-1,a+1,…}`.
///
/// Returns [`SignedPartition::Zero`] when the shifted values `seq_i - i`
/// repeat, or when the sorted sequence would contain a negative part.
/// Trailing zero parts are dropped.
pub fn straighten(seq: &[i64]) -> SignedPartition {
    let mut shifted: Vec<i64> = seq
        .iter()
        .enumerate()
        .map(|(idx, &v)| v - (idx as i64 + 1))
        .collect();

    let mut inversions = 0usize;
    for i in 0..shifted.len() {
        for j in (i + 1)..shifted.len() {
            match shifted[i].cmp(&shifted[j]) {
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Equal => return SignedPartition::Zero,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    shifted.sort_unstable_by(|a, b| b.cmp(a));

    let mut parts = Vec::with_capacity(shifted.len());
    for (idx, &t) in shifted.iter().enumerate() {
        let part = t + idx as i64 + 1;
        if part < 0 {
            return SignedPartition::Zero;
        }
        parts.push(part as u32);
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    SignedPartition::Term {
        sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        partition: Partition { parts },
    }
}

/// All partitions of weight `n`, in lexicographically decreasing order,
/// optionally restricted to at most `max_length` parts.
pub fn enumerate_partitions(n: u32, max_length: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, max_length.unwrap_or(n as usize), &mut current, &mut out);
    out
}

fn descend(
    remaining: u32,
    max_part: u32,
    slots: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}
