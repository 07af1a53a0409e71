//! Minimal tour: one character value, numerically and symbolically.

use symchar::charformula::{integer_char, multi_cycle_symbolic, normalized_char};
use symchar::partitions::Partition;

fn main() -> Result<(), symchar::Error> {
    let lambda: Partition = "2,1".parse()?;
    let mu: Partition = "3".parse()?;
    assert_eq!(integer_char(&lambda, &mu)?.to_string(), "-1");
    let hat = normalized_char(&lambda, &mu)?;
    assert_eq!(symchar::algebra::scalar_string(&hat), "-1/2");

    // (n)_2 · χ̂^λ_{(2,1^{n-2})} = 2p₁(A_λ), as a polynomial identity.
    let rho: Partition = "2".parse()?;
    assert_eq!(multi_cycle_symbolic(&rho).to_string(), "2*p1");

    println!("chi^(2,1)_(3) = {}", integer_char(&lambda, &mu)?);
    println!("normalized    = {}", symchar::algebra::scalar_string(&hat));
    println!("f_(2)         = {}", multi_cycle_symbolic(&rho));
    Ok(())
}
