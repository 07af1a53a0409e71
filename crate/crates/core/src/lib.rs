//! Exact evaluation of normalized symmetric group characters from the
//! contents of the labelling partition.
//!
//! The crate evaluates `χ̂^λ_μ = χ^λ_μ / dim λ` for partitions `λ, μ` of the
//! same weight through closed formulas in the content power sums of `λ`,
//! in two modes:
//!
//! * **numeric** — exact rationals for a concrete `λ`;
//! * **symbolic** — polynomials in `card, p₁, p₂, …` (the cardinality and
//!   the content power sums), valid for every `λ` at once.
//!
//! An independent Murnaghan–Nakayama recursion ([`oracle`]) provides ground
//! truth, and the machinery extends to Hecke-algebra characters ([`hecke`])
//! and to class identities for elementary symmetric functions of the
//! Jucys–Murphy elements ([`jm`]).
//!
//! All arithmetic is exact; no floating point is used anywhere.
//!
//! ```
//! use symchar::charformula::{integer_char, multi_cycle_symbolic};
//! use symchar::partitions::Partition;
//!
//! let lambda: Partition = "2,1".parse()?;
//! let mu: Partition = "3".parse()?;
//! assert_eq!(integer_char(&lambda, &mu)?.to_string(), "-1");
//!
//! // The same class, for every λ at once: (n)_2 χ̂^λ_{(2,1^{n-2})} = 2p₁(A_λ).
//! assert_eq!(multi_cycle_symbolic(&"2".parse()?).to_string(), "2*p1");
//! # Ok::<(), symchar::Error>(())
//! ```

pub mod algebra;
pub mod charformula;
pub mod coeffs;
pub mod error;
pub mod hecke;
pub mod jm;
pub mod oracle;
pub mod partitions;
pub mod symfun;

pub use algebra::Scalar;
pub use error::Error;
pub use partitions::Partition;
