//! Exact computation with symmetric functions and representations of the
//! symmetric group.
//!
//! The crate is organised bottom-up:
//!
//! * [`partition`]: partitions, permutations and their statistics.
//! * [`tableau`]: semistandard tableaux, Kostka numbers, `f^λ` and RSK.
//! * [`sym`]: the ring of symmetric functions in the `m`, `e`, `h`, `p`
//!   and `s` bases, with the Hall inner product, `ω`, skew Schur functions
//!   and evaluation in finitely many variables.
//! * [`coeffs`]: characters of `S_n` via the Frobenius characteristic and
//!   the Littlewood–Richardson, Kronecker and Young's-rule coefficients.
//! * [`hopf`]: the two coproducts, counits, antipode, Cauchy kernel and
//!   plethysm.
//! * [`reps`]: explicit rational matrix representations of `S_n`.
//!
//! All arithmetic is exact: integers are [`BigInt`] and coefficients are
//! [`BigRational`].

pub mod coeffs;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod reps;
pub mod sym;
pub mod tableau;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use partition::{Partition, Permutation};
pub use sym::{BasisTag, SymElement};
