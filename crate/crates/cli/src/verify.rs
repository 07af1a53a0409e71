//! Named verification suites behind `symchar verify`.
//!
//! Each suite runs a batch of exact identities and counts checks; any
//! mismatch is reported with enough context to reproduce it. The expensive
//! inner bounds are clamped so the suites stay interactive even with a
//! large `--n-max`.

use num_bigint::Sign;
use symchar::algebra::{binom, BivarPoly, Scalar};
use symchar::charformula::{
    frobenius_series, frobenius_series_from_coeffs, integer_char_in, removal_moment_direct,
    removal_moment_from_coeffs,
};
use symchar::coeffs::{gen_binom, gen_binom_partition, gn_poly, ContentCtx};
use symchar::hecke::HeckeCharValue;
use symchar::jm::{ek_decomposition, ek_eval_check};
use symchar::oracle::{kostka, mn_char};
use symchar::partitions::{enumerate_partitions, Partition};

pub const SUITES: [&str; 5] = ["oracle-equivalence", "series", "coeffs", "jm", "hecke"];

pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), passed: 0, failed: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 20 {
                self.failures.push(context());
            }
        }
    }
}

pub fn run_suite(name: &str, n_max: u32) -> SuiteReport {
    match name {
        "oracle-equivalence" => oracle_equivalence(n_max),
        "series" => series(n_max),
        "coeffs" => coeffs(n_max),
        "jm" => jm(n_max),
        "hecke" => hecke(n_max),
        other => panic!("unknown suite {other}"),
    }
}

fn oracle_equivalence(n_max: u32) -> SuiteReport {
    let mut report = SuiteReport::new("oracle-equivalence");
    for n in 1..=n_max {
        for la in enumerate_partitions(n, None) {
            let mut ctx = ContentCtx::new(la.clone());
            for mu in enumerate_partitions(n, None) {
                let formula = integer_char_in(&mut ctx, &mu).unwrap();
                let oracle = mn_char(&la, &mu).unwrap();
                report.check(formula == oracle, || {
                    format!("lambda={la} mu={mu}: formula {formula} oracle {oracle}")
                });
            }
        }
    }
    report
}

fn series(n_max: u32) -> SuiteReport {
    let mut report = SuiteReport::new("series");
    let weight_cap = n_max.min(8);
    for n in 0..=weight_cap {
        for la in enumerate_partitions(n, None) {
            let mut ctx = ContentCtx::new(la.clone());
            for p in 1..=5u32 {
                let depth = p as usize + 8;
                let direct = frobenius_series(&la, p, depth);
                let assembled = frobenius_series_from_coeffs(&mut ctx, p, depth);
                report.check(direct == assembled, || {
                    format!("series mismatch at lambda={la} p={p}")
                });
                for r in 0..=4u32 {
                    let lhs = removal_moment_direct(&la, p, r);
                    let rhs = removal_moment_from_coeffs(&mut ctx, p, r);
                    report.check(lhs == rhs, || {
                        format!("moment mismatch at lambda={la} p={p} r={r}")
                    });
                }
            }
        }
    }
    report
}

fn coeffs(n_max: u32) -> SuiteReport {
    let mut report = SuiteReport::new("coeffs");
    for n in 1..=n_max.max(4) {
        for p in 0..=n {
            for k in 1..=n {
                let v = gen_binom(n, p, k);
                report.check(v.sign() != Sign::Minus, || format!("negative <{n},{p},{k}>"));
                report.check(v == gen_binom(n, n - p, k), || {
                    format!("symmetry fails at <{n},{p},{k}>")
                });
            }
            report.check(gen_binom(n, p, 1) == n.into(), || format!("<{n},{p},1> != n"));
            report.check(gen_binom(n, p, n) == binom(n as u64, p as u64), || {
                format!("<{n},{p},{n}> is not binom({n},{p})")
            });
        }
        for k in 1..=n {
            report.check(gen_binom(n, 0, k) == binom(n as u64, k as u64), || {
                format!("<{n},0,{k}> is not binom({n},{k})")
            });
        }
    }
    for n in 1..=n_max.min(8) {
        let g = gn_poly(n);
        for p in 0..=n {
            for k in 1..=n {
                report.check(g.coeff(p, k) == gen_binom(n, p, k), || {
                    format!("G_{n} coefficient ({p},{k}) differs")
                });
            }
        }
        for la in enumerate_partitions(n, None) {
            for p in 0..=n {
                report.check(
                    gen_binom_partition(&la, p, n) == binom(n as u64, p as u64),
                    || format!("<λ,p,|λ|> corner fails at λ={la} p={p}"),
                );
            }
        }
    }
    report
}

fn jm(n_max: u32) -> SuiteReport {
    let mut report = SuiteReport::new("jm");
    let k_cap = if n_max >= 8 { 4 } else { 3 };
    for k in 1..=k_cap {
        let diff = ek_decomposition(k);
        report.check(diff.is_zero(), || format!("e_{k} decomposition residue: {diff}"));
    }
    for n in 1..=n_max {
        for k in 1..=k_cap.min(n) {
            report.check(ek_eval_check(n, k), || format!("e_{k} evaluation fails at n={n}"));
        }
    }
    report
}

fn hecke(n_max: u32) -> SuiteReport {
    let mut report = SuiteReport::new("hecke");
    use symchar::algebra::int;
    for n in 1..=n_max.min(7) {
        let unary = Partition::new(vec![1; n as usize]).unwrap();
        for la in enumerate_partitions(n, None) {
            let v = symchar::hecke::hecke_normalized(&la, &unary).unwrap();
            report.check(v == BivarPoly::one(), || format!("identity class at λ={la}"));
        }
    }
    for n in 1..=n_max.min(6) {
        for la in enumerate_partitions(n, None) {
            let mut ctx = ContentCtx::new(la.clone());
            for mu in enumerate_partitions(n, None) {
                let value = HeckeCharValue::compute(&la, &mu).unwrap();
                let expect = BivarPoly::monomial(
                    n - mu.len() as u32,
                    0,
                    Scalar::from_integer(kostka(&la, &mu).unwrap()),
                );
                report.check(value.raw.set_var2_zero() == expect, || {
                    format!("Kostka specialization at λ={la} μ={mu}")
                });
                let at_sym = value.raw.eval(&int(1), &int(-1));
                let chi = integer_char_in(&mut ctx, &mu).unwrap();
                report.check(at_sym == Scalar::from_integer(chi), || {
                    format!("(1,-1) specialization at λ={la} μ={mu}")
                });
            }
        }
    }
    report
}
