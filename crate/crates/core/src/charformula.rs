//! The character engine.
//!
//! For `μ = (ρ, 1^{n-|ρ|})` the scaled normalized character
//! `(n)_{|ρ|} χ̂^λ_μ` is a polynomial in the content power sums of `λ`,
//! assembled from the coefficients `c_r(x)` of [`crate::coeffs`] and signed
//! Stirling numbers. This module implements that assembly for a single
//! non-unary cycle, for two (as an independent code path), and for an
//! arbitrary profile, in both numeric and symbolic modes, together with
//! the removal weights `d_λ(k,p)` and the Frobenius-function series the
//! formulas are cross-checked against.

use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{
    binom_general, factorial, falling_factorial_int, series_of_rational, stirling_first,
    LaurentTail, Scalar,
};
use crate::coeffs::{c_symbolic, ContentCtx};
use crate::error::Error;
use crate::partitions::Partition;
use crate::symfun::ShiftedSymPoly;

/// A cycle type split into its non-unary profile and the ambient weight:
/// `μ = (ρ, 1^{n - |ρ|})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleProfile {
    rho: Partition,
    ambient_n: u32,
}

impl CycleProfile {
    /// Build from a profile and ambient weight; parts equal to 1 are
    /// stripped into the padding first.
    pub fn new(rho: &Partition, ambient_n: u32) -> Result<Self, Error> {
        let rho = rho.without_unary_parts();
        if rho.weight() > ambient_n {
            return Err(Error::ProfileExceedsAmbient { rho: rho.weight(), ambient: ambient_n });
        }
        Ok(CycleProfile { rho, ambient_n })
    }

    /// Split a full cycle type into profile and padding.
    pub fn from_cycle_type(mu: &Partition) -> Self {
        CycleProfile { rho: mu.without_unary_parts(), ambient_n: mu.weight() }
    }

    pub fn rho(&self) -> &Partition {
        &self.rho
    }

    pub fn ambient(&self) -> u32 {
        self.ambient_n
    }

    /// The full cycle type `(ρ, 1^{n-|ρ|})`.
    pub fn cycle_type(&self) -> Partition {
        let mut parts = self.rho.parts().to_vec();
        parts.extend(std::iter::repeat_n(1, (self.ambient_n - self.rho.weight()) as usize));
        Partition::new(parts).expect("padding keeps the parts sorted")
    }
}

/// Removal weight `d_λ(k,p)` (`k` is 1-based, `1 ≤ k ≤ l(λ)`):
///
/// `(λ_k+l-k)_p · ∏_{i≠k} (λ_k-λ_i+i-k-p)/(λ_k-λ_i+i-k)`.
///
/// The falling-factorial form covers `λ_k+l-k-p < 0` through a zero factor,
/// so virtual removals vanish without special casing. The denominator is
/// never zero because the `λ_i - i` are strictly decreasing.
pub fn removal_weight(lambda: &Partition, k: usize, p: u32) -> Scalar {
    let l = lambda.len();
    assert!((1..=l).contains(&k), "removal_weight requires 1 <= k <= l(lambda)");
    let parts = lambda.parts();
    let lk = parts[k - 1] as i64;
    let mut value = Scalar::from_integer(falling_factorial_int(
        &BigInt::from(lk + l as i64 - k as i64),
        p as usize,
    ));
    if value.is_zero() {
        return value;
    }
    for i in 1..=l {
        if i == k {
            continue;
        }
        let diff = lk - parts[i - 1] as i64 + i as i64 - k as i64;
        value *= Scalar::new(BigInt::from(diff - p as i64), BigInt::from(diff));
    }
    value
}

/// `Σ_k d_λ(k,p) (λ_k - k)^r`, the weighted moment of the removal weights,
/// summed directly.
pub fn removal_moment_direct(lambda: &Partition, p: u32, r: u32) -> Scalar {
    let mut acc = Scalar::zero();
    for k in 1..=lambda.len() {
        let base = BigInt::from(lambda.parts()[k - 1] as i64 - k as i64);
        acc += removal_weight(lambda, k, p)
            * Scalar::from_integer(num_traits::pow::pow(base, r as usize));
    }
    acc
}

/// The same moment evaluated through the content-series coefficients:
/// `(-1)^r Σ_{i,j} (-1)^j binom(r,j) s(p+1,i-j) c_i(p)`.
pub fn removal_moment_from_coeffs(ctx: &mut ContentCtx, p: u32, r: u32) -> Scalar {
    let mut acc = Scalar::zero();
    for j in 0..=r {
        let rb = binom_general(r as i64, j as i64);
        if rb.is_zero() {
            continue;
        }
        let jsign = if j % 2 == 0 { 1 } else { -1 };
        for i in (j + 1)..=(j + p + 1) {
            let st = stirling_first(p as usize + 1, (i - j) as usize);
            if st.is_zero() {
                continue;
            }
            acc += Scalar::from_integer(&rb * st * BigInt::from(jsign)) * ctx.c(i, p);
        }
    }
    if r.is_multiple_of(2) {
        acc
    } else {
        -acc
    }
}

/// Taylor-at-infinity expansion of `(z)_p F(z-p;λ)/F(z;λ)`, where `F` is the
/// Frobenius function `∏ (z-λ_i+i)/(z+i)`, expanded directly as a rational
/// function with exact coefficients down to `z^{-depth}`.
pub fn frobenius_series(lambda: &Partition, p: u32, depth: usize) -> LaurentTail {
    let mut num_roots: Vec<Scalar> = (0..p as i64).map(|j| Scalar::from_integer(BigInt::from(j))).collect();
    let mut den_roots: Vec<Scalar> = Vec::new();
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let i = idx as i64 + 1;
        num_roots.push(Scalar::from_integer(BigInt::from(part as i64 - i + p as i64)));
        num_roots.push(Scalar::from_integer(BigInt::from(-i)));
        den_roots.push(Scalar::from_integer(BigInt::from(p as i64 - i)));
        den_roots.push(Scalar::from_integer(BigInt::from(part as i64 - i)));
    }
    series_of_rational(&num_roots, &den_roots, 0, depth)
}

/// The same expansion assembled from `c_r(p)` values:
/// `-p Σ_{r,s,t} (-1)^s binom(r+s-1,s) s(p,t) c_r(p) z^{t-r-s}`.
pub fn frobenius_series_from_coeffs(ctx: &mut ContentCtx, p: u32, depth: usize) -> LaurentTail {
    assert!(p >= 1);
    let top = p as i64;
    let stirling_row: Vec<BigInt> = (0..=p as usize).map(|t| stirling_first(p as usize, t)).collect();
    let mut coeffs = Vec::with_capacity((top + depth as i64 + 1) as usize);
    for m in (-(depth as i64)..=top).rev() {
        let mut acc = Scalar::zero();
        for (t, st) in stirling_row.iter().enumerate() {
            if st.is_zero() {
                continue;
            }
            let rs = t as i64 - m;
            if rs < 0 {
                continue;
            }
            for r in 0..=rs {
                let s = rs - r;
                let b = binom_general(rs - 1, s);
                if b.is_zero() {
                    continue;
                }
                let sign = if s % 2 == 0 { 1 } else { -1 };
                acc += Scalar::from_integer(st * b * BigInt::from(sign)) * ctx.c(r as u32, p);
            }
        }
        coeffs.push(acc * Scalar::from_integer(BigInt::from(-(p as i64))));
    }
    LaurentTail::new(top, coeffs)
}

// ---------------------------------------------------------------------------
// Numeric / symbolic evaluation domains
// ---------------------------------------------------------------------------

/// The scalar domain a character formula is evaluated in: exact rationals
/// for a fixed `λ`, or polynomials in `{card, p₁, p₂, …}`.
trait CDomain {
    type Value: Clone;
    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn is_zero(&self, v: &Self::Value) -> bool;
    fn add_assign(&self, a: &mut Self::Value, b: &Self::Value);
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn scale(&self, a: &Self::Value, k: &Scalar) -> Self::Value;
    fn embed(&self, k: Scalar) -> Self::Value;
    fn c(&mut self, r: u32, x: u32) -> Self::Value;
}

struct NumericDomain<'a> {
    ctx: &'a mut ContentCtx,
}

impl CDomain for NumericDomain<'_> {
    type Value = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn is_zero(&self, v: &Scalar) -> bool {
        v.is_zero()
    }
    fn add_assign(&self, a: &mut Scalar, b: &Scalar) {
        *a += b;
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn scale(&self, a: &Scalar, k: &Scalar) -> Scalar {
        a * k
    }
    fn embed(&self, k: Scalar) -> Scalar {
        k
    }
    fn c(&mut self, r: u32, x: u32) -> Scalar {
        self.ctx.c(r, x)
    }
}

struct SymbolicDomain;

impl CDomain for SymbolicDomain {
    type Value = ShiftedSymPoly;

    fn zero(&self) -> ShiftedSymPoly {
        ShiftedSymPoly::zero()
    }
    fn one(&self) -> ShiftedSymPoly {
        ShiftedSymPoly::one()
    }
    fn is_zero(&self, v: &ShiftedSymPoly) -> bool {
        v.is_zero()
    }
    fn add_assign(&self, a: &mut ShiftedSymPoly, b: &ShiftedSymPoly) {
        a.add_assign(b);
    }
    fn mul(&self, a: &ShiftedSymPoly, b: &ShiftedSymPoly) -> ShiftedSymPoly {
        a.mul(b)
    }
    fn scale(&self, a: &ShiftedSymPoly, k: &Scalar) -> ShiftedSymPoly {
        a.scale(k)
    }
    fn embed(&self, k: Scalar) -> ShiftedSymPoly {
        ShiftedSymPoly::constant(k)
    }
    fn c(&mut self, r: u32, x: u32) -> ShiftedSymPoly {
        c_symbolic(r, x)
    }
}

// ---------------------------------------------------------------------------
// One cycle
// ---------------------------------------------------------------------------

fn single_cycle<D: CDomain>(dom: &mut D, p: u32) -> D::Value {
    // Σ_{i≥2} s(p+1,i) c_i(p); the i = 1 term vanishes with c_1 = 0.
    let mut acc = dom.zero();
    for i in 2..=(p + 1) {
        let st = stirling_first(p as usize + 1, i as usize);
        if st.is_zero() {
            continue;
        }
        let c = dom.c(i, p);
        let term = dom.scale(&c, &Scalar::from_integer(st));
        dom.add_assign(&mut acc, &term);
    }
    acc
}

/// `(n)_p χ̂^λ_{(p,1^{n-p})}` for a concrete `λ`.
pub fn single_cycle_numeric(ctx: &mut ContentCtx, p: u32) -> Result<Scalar, Error> {
    if p > ctx.weight() {
        return Err(Error::ProfileExceedsAmbient { rho: p, ambient: ctx.weight() });
    }
    Ok(single_cycle(&mut NumericDomain { ctx }, p))
}

/// The polynomial `f_{(p)}` with `f_{(p)}(A_λ) = (n)_p χ̂^λ_{(p,1^{n-p})}`.
pub fn single_cycle_symbolic(p: u32) -> ShiftedSymPoly {
    single_cycle(&mut SymbolicDomain, p)
}

// ---------------------------------------------------------------------------
// Two cycles (independent of the general profile path, deliberately)
// ---------------------------------------------------------------------------

fn two_cycle<D: CDomain>(dom: &mut D, p: u32, q: u32) -> D::Value {
    assert!(p >= 1 && q >= 1);
    let mut acc = dom.zero();

    // Product part: Σ_{i,j≥2} c_i(p) c_j(q) s(p+1,i) s(q+1,j).
    for i in 2..=(p + 1) {
        let sp = stirling_first(p as usize + 1, i as usize);
        if sp.is_zero() {
            continue;
        }
        let ci = dom.c(i, p);
        for j in 2..=(q + 1) {
            let sq = stirling_first(q as usize + 1, j as usize);
            if sq.is_zero() {
                continue;
            }
            let cj = dom.c(j, q);
            let term = dom.scale(&dom.mul(&ci, &cj), &Scalar::from_integer(&sp * sq));
            dom.add_assign(&mut acc, &term);
        }
    }

    // Correction part, bounded by b ≤ a ≤ q-1 and the Stirling windows.
    let pq = Scalar::from_integer(BigInt::from(p as i64 * q as i64));
    for a in 0..q {
        for b in 0..=a {
            let mix = BigInt::from(p) * num_traits::pow::pow(-BigInt::from(p), b as usize)
                + num_traits::pow::pow(BigInt::from(q), b as usize + 1);
            if mix.is_zero() {
                continue;
            }
            let weight = &pq
                * Scalar::from_integer(binom_general(a as i64 + 1, b as i64 + 1) * mix)
                / Scalar::from_integer(BigInt::from((p + q) as i64));
            let mut inner = dom.zero();
            for i in (a - b + 1)..=(p + 1 + a - b) {
                let sp = stirling_first(p as usize + 1, (i + b - a) as usize);
                if sp.is_zero() {
                    continue;
                }
                let ci = dom.c(i, p);
                for j in 0..=(q - 1 - a) {
                    let sq = stirling_first(q as usize + 1, (j + a + 2) as usize);
                    if sq.is_zero() {
                        continue;
                    }
                    let cj = dom.c(j, q);
                    let term = dom.scale(&dom.mul(&ci, &cj), &Scalar::from_integer(&sp * sq));
                    dom.add_assign(&mut inner, &term);
                }
            }
            let term = dom.scale(&inner, &weight);
            dom.add_assign(&mut acc, &term);
        }
    }
    acc
}

/// `(n)_{p+q} χ̂^λ_{(p,q,1^{n-p-q})}` for a concrete `λ`.
pub fn two_cycle_numeric(ctx: &mut ContentCtx, p: u32, q: u32) -> Scalar {
    two_cycle(&mut NumericDomain { ctx }, p, q)
}

/// The polynomial form of the two-cycle character.
pub fn two_cycle_symbolic(p: u32, q: u32) -> ShiftedSymPoly {
    two_cycle(&mut SymbolicDomain, p, q)
}

// ---------------------------------------------------------------------------
// Arbitrary profiles
// ---------------------------------------------------------------------------

// Enumeration state for the ε/a/b sum of the general formula. For each pair
// (u,v) of profile indices, ε ∈ {0,2}; when ε = 2 an upper-triangular pair
// a ≥ b ≥ 0 is chosen. The running suffix budgets prune assignments whose
// Stirling windows cannot all be met: summing
// `arg_k = i_k + Σ_{l<k}(a_{lk}+ε_{lk}) - Σ_{l>k}(a_{kl}-b_{kl}) ≤ ρ_k+1`
// over k ≥ s with i_k ≥ 0 shows every surviving assignment satisfies
// `Σ_{v≥s} ε + Σ_{u≥s} b + Σ_{u<s≤v} a ≤ Σ_{k≥s}(ρ_k+1)` for all s.
struct ProfileEnum<'a> {
    rho: &'a [u32],
    pairs: Vec<(usize, usize)>,
    caps: Vec<i64>,
    used: Vec<i64>,
    offsets: Vec<i64>,
    weights: BTreeMap<Vec<i64>, Scalar>,
}

impl<'a> ProfileEnum<'a> {
    fn new(rho: &'a [u32]) -> Self {
        let r = rho.len();
        let pairs = (1..r).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let mut caps = vec![0i64; r];
        let mut acc = 0i64;
        for s in (0..r).rev() {
            acc += rho[s] as i64 + 1;
            caps[s] = acc;
        }
        ProfileEnum {
            rho,
            pairs,
            caps,
            used: vec![0; r],
            offsets: vec![0; r],
            weights: BTreeMap::new(),
        }
    }

    fn slack(&self, range: std::ops::RangeInclusive<usize>) -> i64 {
        range.map(|s| self.caps[s] - self.used[s]).min().unwrap_or(i64::MAX)
    }

    fn bump(&mut self, range: std::ops::RangeInclusive<usize>, by: i64) {
        for s in range {
            self.used[s] += by;
        }
    }

    fn run(&mut self, idx: usize, factor: Scalar) {
        if idx == self.pairs.len() {
            let entry = self.weights.entry(self.offsets.clone()).or_insert_with(Scalar::zero);
            *entry += factor;
            return;
        }
        let (u, v) = self.pairs[idx];

        // ε_{uv} = 0: the pair contributes a factor 1 and no offsets.
        self.run(idx + 1, factor.clone());

        // ε_{uv} = 2.
        if self.slack(0..=v) < 2 {
            return;
        }
        self.bump(0..=v, 2);
        let ru = self.rho[u] as i64;
        let rv = self.rho[v] as i64;
        let theta = BigInt::from(ru * rv);
        let b_slack = self.slack(0..=u);
        let mut b = 0i64;
        while b <= b_slack {
            let mix = BigInt::from(ru) * num_traits::pow::pow(BigInt::from(-ru), b as usize)
                + num_traits::pow::pow(BigInt::from(rv), b as usize + 1);
            if !mix.is_zero() {
                self.bump(0..=u, b);
                let a_slack = self.slack((u + 1)..=v);
                let mut a = b;
                while a <= a_slack {
                    let pair_factor = Scalar::new(
                        &theta * binom_general(a + 1, b + 1) * &mix,
                        BigInt::from(ru + rv),
                    );
                    self.bump((u + 1)..=v, a);
                    self.offsets[v] += a + 2;
                    self.offsets[u] -= a - b;
                    self.run(idx + 1, &factor * pair_factor);
                    self.offsets[u] += a - b;
                    self.offsets[v] -= a + 2;
                    self.bump((u + 1)..=v, -a);
                    a += 1;
                }
                self.bump(0..=u, -b);
            }
            b += 1;
        }
        self.bump(0..=v, -2);
    }
}

fn multi_cycle<D: CDomain>(dom: &mut D, rho: &[u32]) -> D::Value {
    if rho.is_empty() {
        return dom.one();
    }
    debug_assert!(rho.iter().all(|&p| p >= 1));
    let mut en = ProfileEnum::new(rho);
    en.run(0, Scalar::one());
    let weights = en.weights;

    // Each offset vector needs one product of per-index inner sums
    // Σ_{arg} s(ρ_k+1, arg) c_{arg - D_k}(ρ_k); memoize the inner sums,
    // which depend only on the part value and the offset.
    let mut inner_cache: HashMap<(u32, i64), D::Value> = HashMap::new();
    let mut total = dom.zero();
    'terms: for (offsets, weight) in weights {
        if weight.is_zero() {
            continue;
        }
        let mut term = dom.embed(weight);
        for (k, &offset) in offsets.iter().enumerate() {
            let key = (rho[k], offset);
            let inner = if let Some(v) = inner_cache.get(&key) {
                v.clone()
            } else {
                let v = inner_sum(dom, rho[k], offset);
                inner_cache.insert(key, v.clone());
                v
            };
            if dom.is_zero(&inner) {
                continue 'terms;
            }
            term = dom.mul(&term, &inner);
        }
        dom.add_assign(&mut total, &term);
    }
    total
}

fn inner_sum<D: CDomain>(dom: &mut D, rho_k: u32, offset: i64) -> D::Value {
    let cap = rho_k as i64 + 1;
    let mut acc = dom.zero();
    let mut arg = 1i64.max(offset);
    while arg <= cap {
        let st = stirling_first(rho_k as usize + 1, arg as usize);
        if !st.is_zero() {
            let c = dom.c((arg - offset) as u32, rho_k);
            let term = dom.scale(&c, &Scalar::from_integer(st));
            dom.add_assign(&mut acc, &term);
        }
        arg += 1;
    }
    acc
}

/// `(n)_{|ρ|} χ̂^λ_{(ρ,1^{n-|ρ|})}` with the parts of `ρ` taken in the given
/// order. The value is independent of the order; the canonical entry points
/// sort first, and the order-independence is property-tested through this.
pub fn multi_cycle_numeric_unsorted(ctx: &mut ContentCtx, rho_parts: &[u32]) -> Scalar {
    let stripped: Vec<u32> = rho_parts.iter().copied().filter(|&p| p >= 2).collect();
    multi_cycle(&mut NumericDomain { ctx }, &stripped)
}

/// `(n)_{|ρ|} χ̂^λ_μ` for `μ = (ρ, 1^{n-|ρ|})`.
pub fn multi_cycle_numeric(ctx: &mut ContentCtx, profile: &CycleProfile) -> Result<Scalar, Error> {
    if profile.rho().weight() > ctx.weight() {
        return Err(Error::ProfileExceedsAmbient {
            rho: profile.rho().weight(),
            ambient: ctx.weight(),
        });
    }
    Ok(multi_cycle(&mut NumericDomain { ctx }, profile.rho().parts()))
}

/// The class polynomial `f_μ` in `{card, p₁, p₂, …}` for the sorted profile
/// `ρ` (parts of 1 are stripped first). Results are cached per profile.
pub fn multi_cycle_symbolic(rho: &Partition) -> ShiftedSymPoly {
    let stripped = rho.without_unary_parts();
    static CACHE: LazyLock<Mutex<HashMap<Partition, ShiftedSymPoly>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    if let Some(f) = CACHE.lock().unwrap().get(&stripped) {
        return f.clone();
    }
    let value = multi_cycle(&mut SymbolicDomain, stripped.parts());
    CACHE.lock().unwrap().insert(stripped, value.clone());
    value
}

// ---------------------------------------------------------------------------
// Character values
// ---------------------------------------------------------------------------

/// `χ̂^λ_μ = χ^λ_μ / dim λ`, evaluated through the general profile formula
/// within an existing per-λ context.
pub fn normalized_char_in(ctx: &mut ContentCtx, mu: &Partition) -> Result<Scalar, Error> {
    if ctx.weight() != mu.weight() {
        return Err(Error::WeightMismatch { lambda: ctx.weight(), mu: mu.weight() });
    }
    let profile = CycleProfile::from_cycle_type(mu);
    let value = multi_cycle_numeric(ctx, &profile)?;
    let denom = falling_factorial_int(
        &BigInt::from(ctx.weight()),
        profile.rho().weight() as usize,
    );
    Ok(value / Scalar::from_integer(denom))
}

/// `χ̂^λ_μ` for partitions of equal weight.
pub fn normalized_char(lambda: &Partition, mu: &Partition) -> Result<Scalar, Error> {
    let mut ctx = ContentCtx::new(lambda.clone());
    normalized_char_in(&mut ctx, mu)
}

/// `χ^λ_μ = χ̂^λ_μ · dim λ`; the result is asserted to be an integer.
pub fn integer_char(lambda: &Partition, mu: &Partition) -> Result<BigInt, Error> {
    let mut ctx = ContentCtx::new(lambda.clone());
    integer_char_in(&mut ctx, mu)
}

/// [`integer_char`] reusing a per-λ context.
pub fn integer_char_in(ctx: &mut ContentCtx, mu: &Partition) -> Result<BigInt, Error> {
    let value = normalized_char_in(ctx, mu)? * Scalar::from_integer(ctx.lambda().dimension());
    assert!(
        value.denom().is_one(),
        "character value {value} for lambda={}, mu={mu} is not an integer",
        ctx.lambda()
    );
    Ok(value.numer().clone())
}

/// Central character `ω^λ_μ = n!/z_μ · χ̂^λ_μ`.
pub fn central_char(lambda: &Partition, mu: &Partition) -> Result<Scalar, Error> {
    let hat = normalized_char(lambda, mu)?;
    let n = lambda.weight() as usize;
    Ok(hat * Scalar::new(factorial(n), mu.z_weight()))
}
