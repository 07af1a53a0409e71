//! Timing harness: the closed content formula against the plain memoized
//! recursion, each sweeping every class of S_n for one random λ.
//!
//! Timings are reported in integer microseconds (no floats anywhere in the
//! output); no reference numbers are asserted — the report is advisory.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use serde_json::json;
use symchar::charformula::integer_char_in;
use symchar::coeffs::ContentCtx;
use symchar::oracle::MnOracle;
use symchar::partitions::enumerate_partitions;

pub fn run(n: u32, repeat: usize, seed: u64) -> String {
    let lambdas = enumerate_partitions(n, None);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let lambda = lambdas[rng.gen_range(0..lambdas.len())].clone();
    let classes = enumerate_partitions(n, None);

    let mut formula_us: Vec<u64> = Vec::with_capacity(repeat);
    let mut recursion_us: Vec<u64> = Vec::with_capacity(repeat);
    let mut agree = true;
    for _ in 0..repeat {
        // Fresh per-λ context and fresh memo table per sample: each sample
        // pays its own cache warmup.
        let start = Instant::now();
        let mut ctx = ContentCtx::new(lambda.clone());
        let formula_values: Vec<_> = classes
            .iter()
            .map(|mu| integer_char_in(&mut ctx, mu).expect("weights match"))
            .collect();
        formula_us.push(start.elapsed().as_micros() as u64);

        let start = Instant::now();
        let mut oracle = MnOracle::new();
        let recursion_values: Vec<_> = classes
            .iter()
            .map(|mu| oracle.char_value(&lambda, mu).expect("weights match"))
            .collect();
        recursion_us.push(start.elapsed().as_micros() as u64);

        agree &= formula_values == recursion_values;
    }

    let doc = json!({
        "n": n,
        "repeat": repeat,
        "lambda": lambda.to_string(),
        "classes": classes.len(),
        "content_formula_us": {
            "samples": formula_us.clone(),
            "median": median(&mut formula_us),
        },
        "murnaghan_us": {
            "samples": recursion_us.clone(),
            "median": median(&mut recursion_us),
        },
        "values_agree": agree,
    });
    crate::render::json_doc(&doc)
}

fn median(samples: &mut [u64]) -> u64 {
    samples.sort_unstable();
    samples[samples.len() / 2]
}
