//! Frobenius numbers of three-element sets in logarithmic time.
//!
//! The core ([`frobenius::solve`]) works on sorted, pairwise-coprime triples and
//! is generic over the integer type through [`Int`]. [`reduce::frobenius_general`]
//! accepts arbitrary pairs and triples of positive integers and reduces them to
//! the core's form. The [`oracles`] module holds slow reference implementations.
//!
//! ```
//! use frobenius_core::{frobenius::solve, Triple128};
//!
//! let t = Triple128::new(74, 79, 81).unwrap();
//! assert_eq!(solve(&t).unwrap().g, 1133);
//! ```

pub mod arm;
mod error;
pub mod frobenius;
pub mod modarith;
pub mod oracles;
pub mod reduce;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use frobenius::{CaseTag, FrobeniusSolution, Triple};
pub use modarith::{Int, Rational};

pub type Triple64 = Triple<i64>;
pub type Triple128 = Triple<i128>;
pub type BigTriple = Triple<BigInt>;

pub type Solution128 = FrobeniusSolution<i128>;
pub type BigSolution = FrobeniusSolution<BigInt>;

/// Solves in `i128`, redoing the work in `BigInt` if an intermediate overflows.
pub fn solve_adaptive(t: &BigTriple) -> Result<BigSolution> {
    match t.cast::<i128>() {
        Some(small) => match frobenius::solve(&small) {
            Ok(sol) => Ok(sol.widen()),
            Err(Error::Overflow) => frobenius::solve(t),
            Err(e) => Err(e),
        },
        None => frobenius::solve(t),
    }
}
