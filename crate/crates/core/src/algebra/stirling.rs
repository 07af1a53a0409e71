//! Stirling number tables.
//!
//! Signed Stirling numbers of the first kind `s(p,i)` are the coefficients of
//! the falling factorial, `(z)_p = Σ_i s(p,i) z^i`; Stirling numbers of the
//! second kind `S(p,i)` invert this, `z^p = Σ_i S(p,i) (z)_i`. Rows are built
//! by the standard recurrences and cached globally: every character formula
//! in this crate consults `s(p+1,·)` for each cycle length `p`, so each row
//! is computed exactly once per process.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Triangular tables of both kinds up to a given row.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    max_p: usize,
    /// `first_kind[p][i]` = s(p,i), 0 ≤ i ≤ p.
    first_kind: Vec<Vec<BigInt>>,
    /// `second_kind[p][i]` = S(p,i), 0 ≤ i ≤ p.
    second_kind: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    /// Build tables for all rows `0..=max_p`.
    pub fn new(max_p: usize) -> Self {
        let mut first: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        let mut second: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for p in 1..=max_p {
            first.push(next_first_row(&first[p - 1], p - 1));
            second.push(next_second_row(&second[p - 1]));
        }
        StirlingTable { max_p, first_kind: first, second_kind: second }
    }

    pub fn max_p(&self) -> usize {
        self.max_p
    }

    /// s(p,i); zero outside the triangle.
    pub fn first(&self, p: usize, i: usize) -> BigInt {
        assert!(p <= self.max_p, "row {p} not tabulated");
        if i > p {
            BigInt::zero()
        } else {
            self.first_kind[p][i].clone()
        }
    }

    /// S(p,i); zero outside the triangle.
    pub fn second(&self, p: usize, i: usize) -> BigInt {
        assert!(p <= self.max_p, "row {p} not tabulated");
        if i > p {
            BigInt::zero()
        } else {
            self.second_kind[p][i].clone()
        }
    }
}

// (z)_{p+1} = (z)_p (z - p)  =>  s(p+1,i) = s(p,i-1) - p s(p,i)
fn next_first_row(prev: &[BigInt], p: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); prev.len() + 1];
    let pb = BigInt::from(p);
    for (i, v) in prev.iter().enumerate() {
        row[i + 1] += v;
        row[i] -= &pb * v;
    }
    row
}

// S(p+1,i) = S(p,i-1) + i S(p,i)
fn next_second_row(prev: &[BigInt]) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); prev.len() + 1];
    for (i, v) in prev.iter().enumerate() {
        row[i + 1] += v;
        row[i] += BigInt::from(i) * v;
    }
    row
}

static TABLE: Mutex<Option<StirlingTable>> = Mutex::new(None);

fn with_table<T>(p: usize, f: impl FnOnce(&StirlingTable) -> T) -> T {
    let mut guard = TABLE.lock().unwrap();
    let need_rebuild = match guard.as_ref() {
        Some(t) => t.max_p() < p,
        None => true,
    };
    if need_rebuild {
        // Grow generously to amortize rebuilds.
        *guard = Some(StirlingTable::new(p.max(16)));
    }
    f(guard.as_ref().unwrap())
}

/// Signed Stirling number of the first kind s(p,i).
///
/// The coefficient of `z^i` in `(z)_p`; zero when `i > p` or `i < 1`, except
/// `s(0,0) = 1`.
pub fn stirling_first(p: usize, i: usize) -> BigInt {
    with_table(p, |t| t.first(p, i))
}

/// Stirling number of the second kind S(p,i), satisfying `z^p = Σ_i S(p,i)(z)_i`.
pub fn stirling_second(p: usize, i: usize) -> BigInt {
    with_table(p, |t| t.second(p, i))
}
