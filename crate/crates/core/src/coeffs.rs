//! The combinatorial coefficient layer: generalized binomials `⟨n,p,k⟩`,
//! their bivariate generating polynomials `G_n(y,z)`, the partition
//! extension `⟨λ,p,k⟩`, the symmetric functions `F_{npk}`, and the
//! content-series coefficients `c_r(x)`.
//!
//! Everything here is memoized behind process-wide tables: the same
//! `⟨n,p,k⟩` and `F` values are hit over and over by every character
//! evaluation. All caches are write-once per key and idempotent, so
//! concurrent readers are safe.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{binom, binom_general, pow_i64, BivarPoly, Scalar};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symfun::{p_mu_poly, ShiftedSymPoly};

/// Process-wide memo table; every insert is write-once and idempotent.
type MemoTable<K, V> = LazyLock<Mutex<HashMap<K, V>>>;

/// Generalized binomial coefficient `⟨n,p,k⟩`.
///
/// Defined for `0 ≤ p ≤ n`, `k ≥ 1` as
/// `(n/k) Σ_r binom(p,r) binom(n-p,r) binom(n-r-1,k-r-1)`;
/// the division by `k` is always exact and the result is a nonnegative
/// integer. Zero for `k > n`. Values are cached with the `p ↔ n-p`
/// symmetry folded into the key.
pub fn gen_binom(n: u32, p: u32, k: u32) -> BigInt {
    assert!(p <= n, "gen_binom requires p <= n (got p={p}, n={n})");
    assert!(k >= 1, "gen_binom requires k >= 1");
    if k > n {
        return BigInt::zero();
    }
    let key = (n, p.min(n - p), k);
    static CACHE: MemoTable<(u32, u32, u32), BigInt> = LazyLock::new(|| Mutex::new(HashMap::new()));
    if let Some(v) = CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let (_, p, k) = key;
    let mut sum = BigInt::zero();
    for r in 0..=p.min(k - 1) {
        sum += binom(p as u64, r as u64)
            * binom((n - p) as u64, r as u64)
            * binom((n - r - 1) as u64, (k - r - 1) as u64);
    }
    let (value, rem) = num_integer::Integer::div_rem(&(sum * BigInt::from(n)), &BigInt::from(k));
    assert!(rem.is_zero(), "gen_binom({n},{p},{k}) is not an integer");
    CACHE.lock().unwrap().insert(key, value.clone());
    value
}

/// The generating polynomial `G_n(y,z) = Σ_{p,k} ⟨n,p,k⟩ y^p z^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GnPolynomial {
    n: u32,
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl GnPolynomial {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Coefficient of `y^p z^k`.
    pub fn coeff(&self, p: u32, k: u32) -> BigInt {
        self.coeffs.get(&(p, k)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.coeffs.iter()
    }
}

/// Compute `G_n` from its closed form.
///
/// With `U = (1+y)(1+z)` and `W = U² - 4y(1+z)`, the two conjugate `n`-th
/// powers collapse to `2^{1-n} Σ_{j even} binom(n,j) U^{n-j} W^{j/2}`, from
/// which `1 + y^n` is subtracted. The result always has nonnegative integer
/// coefficients.
pub fn gn_poly(n: u32) -> Arc<GnPolynomial> {
    static CACHE: MemoTable<u32, Arc<GnPolynomial>> = LazyLock::new(|| Mutex::new(HashMap::new()));
    if let Some(g) = CACHE.lock().unwrap().get(&n) {
        return g.clone();
    }

    let y = BivarPoly::var1();
    let one_plus_z = BivarPoly::var2().add(&BivarPoly::one());
    let u = y.add(&BivarPoly::one()).mul(&one_plus_z);
    let w = u.mul(&u).sub(&y.mul(&one_plus_z).scale(&Scalar::from_integer(BigInt::from(4))));

    let mut sum = BivarPoly::zero();
    let mut u_pow = BivarPoly::one();
    let mut u_powers = vec![u_pow.clone()];
    for _ in 0..n {
        u_pow = u_pow.mul(&u);
        u_powers.push(u_pow.clone());
    }
    let mut w_half = BivarPoly::one();
    let mut j = 0;
    while j <= n {
        let term = u_powers[(n - j) as usize]
            .mul(&w_half)
            .scale(&Scalar::from_integer(binom(n as u64, j as u64)));
        sum.add_assign(&term);
        w_half = w_half.mul(&w);
        j += 2;
    }
    let mut g = if n == 0 {
        sum.scale(&Scalar::from_integer(BigInt::from(2)))
    } else {
        let scale = Scalar::new(BigInt::one(), num_traits::pow::pow(BigInt::from(2), n as usize - 1));
        sum.scale(&scale)
    };
    g.add_assign(&BivarPoly::one().neg());
    g.add_assign(&BivarPoly::monomial(n, 0, Scalar::one()).neg());

    let mut coeffs = BTreeMap::new();
    for (&(p, k), c) in g.terms() {
        assert!(c.denom().is_one(), "G_{n} coefficient ({p},{k}) not integral");
        assert!(!c.numer().is_negative(), "G_{n} coefficient ({p},{k}) negative");
        coeffs.insert((p, k), c.numer().clone());
    }
    let out = Arc::new(GnPolynomial { n, coeffs });
    CACHE.lock().unwrap().insert(n, out.clone());
    out
}

/// Partition extension `⟨λ,p,k⟩`: the coefficient of `y^p z^k` in
/// `∏_i G_{λ_i}(y,z)`, i.e. the convolution of per-part generalized
/// binomials over all decompositions of `p` and `k`.
///
/// Zero unless `l(λ) ≤ k ≤ |λ|`. Computed by iterated polynomial
/// multiplication truncated to the `(p,k)` box rather than by tuple
/// enumeration.
pub fn gen_binom_partition(mu: &Partition, p: u32, k: u32) -> BigInt {
    assert!(p <= mu.weight(), "gen_binom_partition requires p <= |mu|");
    assert!(k >= 1);
    if (k as usize) < mu.len() || k > mu.weight() {
        return BigInt::zero();
    }
    let key = (mu.clone(), p, k);
    static CACHE: MemoTable<(Partition, u32, u32), BigInt> = LazyLock::new(|| Mutex::new(HashMap::new()));
    if let Some(v) = CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }

    let width = (p + 1) as usize;
    let height = (k + 1) as usize;
    let mut acc = vec![vec![BigInt::zero(); height]; width];
    acc[0][0] = BigInt::one();
    for &part in mu.parts() {
        let g = gn_poly(part);
        let mut next = vec![vec![BigInt::zero(); height]; width];
        for (yp, row) in acc.iter().enumerate() {
            for (zp, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (&(gy, gz), gc) in g.terms() {
                    let (ty, tz) = (yp + gy as usize, zp + gz as usize);
                    if ty < width && tz < height {
                        next[ty][tz] += c * gc;
                    }
                }
            }
        }
        acc = next;
    }
    let value = std::mem::take(&mut acc[p as usize][k as usize]);
    CACHE.lock().unwrap().insert(key, value.clone());
    value
}

/// The symmetric function `F_{npk} = Σ_{|μ|=n} ⟨μ,p,k⟩ / z_μ · p_μ` in the
/// p-generators, with the conventions `F_{np0} = 0` except `F_{000} = 1`,
/// and `F_{npk} = 0` for `k > n`.
pub fn f_npk_poly(n: u32, p: u32, k: u32) -> ShiftedSymPoly {
    assert!(p <= n, "f_npk requires p <= n");
    static CACHE: MemoTable<(u32, u32, u32), ShiftedSymPoly> = LazyLock::new(|| Mutex::new(HashMap::new()));
    if let Some(f) = CACHE.lock().unwrap().get(&(n, p, k)) {
        return f.clone();
    }
    let mut out = ShiftedSymPoly::zero();
    if k == 0 {
        if n == 0 {
            out = ShiftedSymPoly::one();
        }
    } else if k <= n {
        for mu in enumerate_partitions(n, Some(k as usize)) {
            let coeff = Scalar::new(gen_binom_partition(&mu, p, k), mu.z_weight());
            if !coeff.is_zero() {
                out.add_assign(&p_mu_poly(&mu).scale(&coeff));
            }
        }
    }
    CACHE.lock().unwrap().insert((n, p, k), out.clone());
    out
}

/// Per-partition evaluation state: content power sums plus `F` and `c`
/// value caches for one fixed `λ`.
///
/// Character evaluations for different classes `μ` share this context, so a
/// table row reuses every `c_r(p)` it has already computed.
pub struct ContentCtx {
    lambda: Partition,
    contents: Vec<i64>,
    psums: Vec<BigInt>,
    f_cache: HashMap<(u32, u32, u32), Scalar>,
    c_cache: HashMap<(u32, u32), Scalar>,
}

impl ContentCtx {
    pub fn new(lambda: Partition) -> Self {
        let contents = lambda.contents();
        ContentCtx {
            lambda,
            contents,
            psums: vec![BigInt::zero()],
            f_cache: HashMap::new(),
            c_cache: HashMap::new(),
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn weight(&self) -> u32 {
        self.lambda.weight()
    }

    /// `p_k(A_λ)`, grown on demand.
    pub fn power_sum(&mut self, k: u32) -> BigInt {
        while self.psums.len() <= k as usize {
            let e = self.psums.len() as u32;
            let v: BigInt = self
                .contents
                .iter()
                .map(|&c| num_traits::pow::pow(BigInt::from(c), e as usize))
                .sum();
            self.psums.push(v);
        }
        self.psums[k as usize].clone()
    }

    /// `F_{npk}(A_λ)` along the fast numeric path:
    /// `Σ_{|μ|=n, l(μ)≤k} ⟨μ,p,k⟩/z_μ · ∏ p_{μ_i}(A_λ)`.
    pub fn f_npk(&mut self, n: u32, p: u32, k: u32) -> Scalar {
        assert!(p <= n, "f_npk requires p <= n");
        if let Some(v) = self.f_cache.get(&(n, p, k)) {
            return v.clone();
        }
        let value = if k == 0 {
            if n == 0 {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        } else if k > n {
            Scalar::zero()
        } else {
            let mut acc = Scalar::zero();
            for mu in enumerate_partitions(n, Some(k as usize)) {
                let nb = gen_binom_partition(&mu, p, k);
                if nb.is_zero() {
                    continue;
                }
                let mut prod = Scalar::new(nb, mu.z_weight());
                for &part in mu.parts() {
                    prod *= Scalar::from_integer(self.power_sum(part));
                }
                acc += prod;
            }
            acc
        };
        self.f_cache.insert((n, p, k), value.clone());
        value
    }

    /// Content-series coefficient `c_r(x)` for this `λ`, at the concrete
    /// positive integer `x`.
    pub fn c(&mut self, r: u32, x: u32) -> Scalar {
        assert!(x >= 1, "c_r(x) has a pole at x = 0");
        if let Some(v) = self.c_cache.get(&(r, x)) {
            return v.clone();
        }
        let card = self.weight() as i64;
        let mut total = Scalar::zero();
        for m in 0..=(r / 2) {
            // (-x)^{m-1}: the m = 0 term keeps the exact rational -1/x.
            let x_pow = pow_i64(&Scalar::from_integer(-BigInt::from(x)), m as i64 - 1);
            for i in 0..=(r - 2 * m) {
                let n_f = r - 2 * m - i;
                let mut xhat_pow = Scalar::one();
                for _ in 0..i {
                    xhat_pow *= Scalar::from_integer(BigInt::from(x + 1));
                }
                for j in 0..=n_f {
                    let b = binom_general((m + i + j) as i64 - 1, i as i64);
                    if b.is_zero() {
                        continue;
                    }
                    let mut inner = Scalar::zero();
                    for k in 0..=m.min(n_f) {
                        let cb = binom_general(card + m as i64 - 1, (m - k) as i64);
                        if cb.is_zero() {
                            continue;
                        }
                        let f = self.f_npk(n_f, j, k);
                        if !f.is_zero() {
                            inner += Scalar::from_integer(cb) * f;
                        }
                    }
                    if !inner.is_zero() {
                        total += &x_pow * &xhat_pow * Scalar::from_integer(b) * inner;
                    }
                }
            }
        }
        self.c_cache.insert((r, x), total.clone());
        total
    }
}

/// Symbolic `c_r(x)`: the same triple sum with `binom(card+m-1, m-k)`
/// expanded as a polynomial in `card` and `F` values in the p-generators.
/// `x` is always a concrete positive integer (a cycle length).
pub fn c_symbolic(r: u32, x: u32) -> ShiftedSymPoly {
    assert!(x >= 1, "c_r(x) has a pole at x = 0");
    static CACHE: MemoTable<(u32, u32), ShiftedSymPoly> = LazyLock::new(|| Mutex::new(HashMap::new()));
    if let Some(v) = CACHE.lock().unwrap().get(&(r, x)) {
        return v.clone();
    }
    let mut total = ShiftedSymPoly::zero();
    for m in 0..=(r / 2) {
        let x_pow = pow_i64(&Scalar::from_integer(-BigInt::from(x)), m as i64 - 1);
        for i in 0..=(r - 2 * m) {
            let n_f = r - 2 * m - i;
            let mut xhat_pow = Scalar::one();
            for _ in 0..i {
                xhat_pow *= Scalar::from_integer(BigInt::from(x + 1));
            }
            for j in 0..=n_f {
                let b = binom_general((m + i + j) as i64 - 1, i as i64);
                if b.is_zero() {
                    continue;
                }
                let mut inner = ShiftedSymPoly::zero();
                for k in 0..=m.min(n_f) {
                    let f = f_npk_poly(n_f, j, k);
                    if f.is_zero() {
                        continue;
                    }
                    inner.add_assign(&f.mul(&ShiftedSymPoly::card_binom(m as i64 - 1, m - k)));
                }
                if !inner.is_zero() {
                    let scale = &x_pow * &xhat_pow * Scalar::from_integer(b);
                    total.add_assign(&inner.scale(&scale));
                }
            }
        }
    }
    CACHE.lock().unwrap().insert((r, x), total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn gen_binom_values() {
        assert_eq!(gen_binom(4, 2, 2), BigInt::from(14));
        for n in 1..=12u32 {
            for k in 1..=n {
                assert_eq!(gen_binom(n, 0, k), binom(n as u64, k as u64));
                assert_eq!(gen_binom(n, 1, k), BigInt::from(k) * binom(n as u64, k as u64));
            }
            for p in 0..=n {
                assert_eq!(gen_binom(n, p, 1), BigInt::from(n));
                assert_eq!(gen_binom(n, p, n), binom(n as u64, p as u64));
                if n < 12 {
                    assert_eq!(gen_binom(n, p, n + 1), BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn gen_binom_positive_integers() {
        for n in 1..=12u32 {
            for p in 0..=n {
                for k in 1..=n {
                    let v = gen_binom(n, p, k);
                    assert!(!v.is_negative(), "⟨{n},{p},{k}⟩ = {v}");
                    assert_eq!(v, gen_binom(n, n - p, k));
                }
            }
        }
    }

    #[test]
    fn gn_small_cases() {
        let g0 = gn_poly(0);
        assert!(g0.terms().next().is_none());
        let g1 = gn_poly(1);
        assert_eq!(g1.coeff(0, 1), BigInt::one());
        assert_eq!(g1.coeff(1, 1), BigInt::one());
        assert_eq!(g1.terms().count(), 2);
        assert_eq!(gn_poly(4).coeff(2, 2), BigInt::from(14));
    }

    #[test]
    fn gn_matches_gen_binom() {
        for n in 1..=8u32 {
            let g = gn_poly(n);
            for p in 0..=n {
                for k in 1..=n {
                    assert_eq!(g.coeff(p, k), gen_binom(n, p, k), "n={n} p={p} k={k}");
                }
            }
            // No terms outside the expected support.
            for (&(p, k), c) in g.terms() {
                assert!(p <= n && (1..=n).contains(&k), "stray term y^{p} z^{k} = {c}");
            }
        }
    }

    #[test]
    fn partition_extension_values() {
        for n in 1..=8u32 {
            for p in 0..=n {
                for k in 1..=n {
                    assert_eq!(gen_binom_partition(&part(&[n]), p, k), gen_binom(n, p, k));
                }
            }
        }
        assert_eq!(gen_binom_partition(&part(&[2, 1]), 0, 2), BigInt::from(2));
        for la in enumerate_partitions(7, None) {
            let w = la.weight();
            for p in 0..=w {
                assert_eq!(gen_binom_partition(&la, p, w), binom(w as u64, p as u64));
                assert_eq!(
                    gen_binom_partition(&la, p, w),
                    gen_binom_partition(&la, w - p, w)
                );
            }
        }
    }

    #[test]
    fn partition_extension_matches_generating_product() {
        for n in 1..=6u32 {
            for la in enumerate_partitions(n, None) {
                // Expand ∏ G_{λ_i} fully and compare every coefficient.
                let mut prod = BivarPoly::one();
                for &prt in la.parts() {
                    let mut g = BivarPoly::zero();
                    for (&(p, k), c) in gn_poly(prt).terms() {
                        g.add_assign(&BivarPoly::monomial(p, k, Scalar::from_integer(c.clone())));
                    }
                    prod = prod.mul(&g);
                }
                for p in 0..=n {
                    for k in 1..=n {
                        let direct = prod.coeff(p, k);
                        assert_eq!(
                            direct,
                            Scalar::from_integer(gen_binom_partition(&la, p, k)),
                            "λ={la} p={p} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn f_polynomials() {
        // F_{np1} = p_n.
        for n in 1..=8u32 {
            for p in 0..=n {
                assert_eq!(f_npk_poly(n, p, 1), ShiftedSymPoly::p(n));
            }
        }
        // F_{npn} = binom(n,p) Σ_{|μ|=n} p_μ/z_μ  (= binom(n,p) h_n).
        for n in 1..=8u32 {
            let mut hn = ShiftedSymPoly::zero();
            for mu in enumerate_partitions(n, None) {
                hn.add_assign(&p_mu_poly(&mu).scale(&Scalar::new(BigInt::one(), mu.z_weight())));
            }
            for p in 0..=n {
                let expect = hn.scale(&Scalar::from_integer(binom(n as u64, p as u64)));
                assert_eq!(f_npk_poly(n, p, n), expect, "n={n} p={p}");
            }
        }
        // F_{n1k} = k F_{n0k} and the p ↔ n-p symmetry.
        for n in 1..=8u32 {
            for k in 0..=n {
                assert_eq!(
                    f_npk_poly(n, 1, k),
                    f_npk_poly(n, 0, k).scale(&Scalar::from_integer(BigInt::from(k)))
                );
                for p in 0..=n {
                    assert_eq!(f_npk_poly(n, p, k), f_npk_poly(n, n - p, k));
                }
            }
        }
        assert_eq!(f_npk_poly(0, 0, 0), ShiftedSymPoly::one());
        assert!(f_npk_poly(3, 2, 0).is_zero());
        assert!(f_npk_poly(2, 1, 3).is_zero());
    }

    #[test]
    fn f_evaluation() {
        let mut ctx = ContentCtx::new(part(&[2, 1]));
        assert_eq!(ctx.f_npk(0, 0, 0), int(1));
        assert_eq!(ctx.f_npk(2, 0, 1), int(2)); // p₂(A_{(2,1)}) = 2
        for n in 0..=6u32 {
            for la in enumerate_partitions(n, None) {
                let mut ctx = ContentCtx::new(la.clone());
                for nf in 0..=5u32 {
                    for p in 0..=nf {
                        for k in 0..=nf {
                            assert_eq!(
                                ctx.f_npk(nf, p, k),
                                f_npk_poly(nf, p, k).eval_at_partition(&la),
                                "λ={la} F_({nf},{p},{k})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn c_base_cases() {
        for x in 1..=5u32 {
            assert_eq!(c_symbolic(0, x), ShiftedSymPoly::constant(ratio(-1, x as i64)));
            assert!(c_symbolic(1, x).is_zero());
            let mut ctx = ContentCtx::new(part(&[3, 1]));
            assert_eq!(ctx.c(0, x), ratio(-1, x as i64));
            assert_eq!(ctx.c(1, x), int(0));
        }
    }

    #[test]
    fn c_low_order_fixtures() {
        use ShiftedSymPoly as P;
        for x in 1..=5u32 {
            let xh = int(x as i64 + 1);
            let xs = int(x as i64);
            // c₂ = n
            assert_eq!(c_symbolic(2, x), P::card());
            // c₃ = 2p₁ + x̂ n
            let c3 = P::p(1).scale(&int(2)).add(&P::card().scale(&xh));
            assert_eq!(c_symbolic(3, x), c3);
            // c₄ = 3p₂ + 3x̂p₁ - x binom(n+1,2) + x̂² n
            let c4 = P::p(2)
                .scale(&int(3))
                .add(&P::p(1).scale(&(int(3) * &xh)))
                .sub(&P::card_binom(1, 2).scale(&xs))
                .add(&P::card().scale(&(&xh * &xh)));
            assert_eq!(c_symbolic(4, x), c4);
            // c₅ = 4p₃ + 6x̂p₂ - x(n+1)(2p₁ + x̂n) + 4x̂²p₁ + x̂³n
            let c5 = P::p(3)
                .scale(&int(4))
                .add(&P::p(2).scale(&(int(6) * &xh)))
                .sub(
                    &P::card()
                        .add(&P::one())
                        .mul(&P::p(1).scale(&int(2)).add(&P::card().scale(&xh)))
                        .scale(&xs),
                )
                .add(&P::p(1).scale(&(int(4) * &xh * &xh)))
                .add(&P::card().scale(&(&xh * &xh * &xh)));
            assert_eq!(c_symbolic(5, x), c5, "x = {x}");
        }
    }

    #[test]
    fn c_modes_agree() {
        for n in 0..=8u32 {
            for la in enumerate_partitions(n, None) {
                let mut ctx = ContentCtx::new(la.clone());
                for x in 1..=5u32 {
                    for r in 0..=8u32 {
                        assert_eq!(
                            ctx.c(r, x),
                            c_symbolic(r, x).eval_at_partition(&la),
                            "λ={la} r={r} x={x}"
                        );
                    }
                }
            }
        }
    }
}
