//! Brute-force point counts over prime fields.
//!
//! Every count enumerates one matrix `A` at a time in lexicographic entry
//! order and adds `p^d`, where `d` is the dimension of the space of
//! admissible `B` commuting with `A`. The enumeration is split into fixed
//! contiguous chunks whose subtotals are combined in chunk order, so results
//! do not depend on the number of worker threads.

mod count;
mod matrix;
mod poly;

use thiserror::Error;

pub use count::{count_commuting_pairs, count_commuting_pairs_by_type, count_cyclic_pairs, count_invertible};
pub use matrix::{commutant_dimension, is_prime, PrimeFieldMatrix};
pub use poly::{char_poly, irreducibles, JordanClassifier, Poly};

/// Default cap on the number of matrices a single count may enumerate.
pub const DEFAULT_BUDGET: u128 = 1 << 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("enumeration needs {required} matrices, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    pub budget: u128,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self { threads: None, budget: DEFAULT_BUDGET }
    }
}

impl EnumOptions {
    pub fn with_threads(threads: usize) -> Self {
        Self { threads: Some(threads), ..Self::default() }
    }
}
