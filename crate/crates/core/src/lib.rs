//! Exact computations with motivic classes of commuting varieties.
//!
//! The coefficient ring is [`MotivicClass`], a truncated Laurent series in
//! `L^-1`. Generating series live in [`MultiSeries`], exponentiation is the
//! power structure in [`power`], closed formulas are in [`formulas`], and
//! [`ff_oracle`] counts the same varieties by brute force over prime fields.

pub mod combinatorics;
pub mod ff_oracle;
pub mod formulas;
pub mod motivic;
pub mod power;
pub mod series;

pub use combinatorics::{partitions_of, partitions_up_to, Partition, PartitionError, PartitionStats};
pub use ff_oracle::{EnumOptions, OracleError};
pub use formulas::{CyclicDimensionVector, FormulaError};
pub use motivic::{end_class, gl_class, LaurentPolynomial, MotivicClass, RingError};
pub use power::pow;
pub use series::{euler_assemble, euler_factorize, EulerFactorization, MultiSeries, SeriesError, Specialization};
