//! Commuting pairs of `n x n` matrices: the closed formula for `[C(n)]`,
//! its refinement by Jordan type, and the generating series.

use num_bigint::BigInt;
use num_traits::One;

use super::{certify, gl_inverse, require_depth, window, FormulaError};
use crate::combinatorics::{partitions_of, Partition};
use crate::motivic::{gl_class, gl_polynomial, LaurentPolynomial, MotivicClass};
use crate::power::pow;
use crate::series::{unit_monomial, MultiSeries};

/// Depth needed to certify `[C(n)]`: `dim C(n) = n^2 + n`, plus the margin.
pub fn min_feit_fine_depth(n: u32) -> u32 {
    n * n + n + 8
}

/// `prod_k [End(b_k)] / [GL(b_k)] * L^(b_k)` for the multiplicities of
/// `alpha`, known down to `L^-depth` before the final products.
fn summand(alpha: &Partition, depth: u32) -> MotivicClass {
    let w = window(depth);
    let one = BigInt::one();
    alpha.multiplicities().values().fold(MotivicClass::one(w), |acc, &b| {
        let shift = i64::from(b) * i64::from(b) + i64::from(b);
        let factor = gl_inverse(b, w - shift).mul_term(&one, shift);
        &acc * &factor
    })
}

/// `[C(alpha)] = [GL(n)] prod_k [End(b_k)] / [GL(b_k)] * L^(b_k)`.
pub fn c_alpha_class(alpha: &Partition, depth: u32) -> Result<LaurentPolynomial, FormulaError> {
    let n = alpha.size();
    require_depth(depth, min_feit_fine_depth(n))?;
    let class = gl_polynomial(n).mul_class(&summand(alpha, depth));
    certify(&class, i64::from(n * n + n), format!("[C{alpha}]"))
}

/// `[C(n)]`, the sum of `[C(alpha)]` over all partitions of `n` taken
/// before the polynomial certification.
pub fn feit_fine_class(n: u32, depth: u32) -> Result<LaurentPolynomial, FormulaError> {
    require_depth(depth, min_feit_fine_depth(n))?;
    let sum = partitions_of(n)
        .iter()
        .map(|alpha| summand(alpha, depth))
        .reduce(|a, b| &a + &b)
        .expect("every n has a partition");
    let class = gl_polynomial(n).mul_class(&sum);
    certify(&class, i64::from(n * n + n), format!("[C({n})]"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    /// One variable `t_k` per block size `k`, `k = 1..=N`.
    JordanVariables,
    /// The specialization `t_k = t^k`.
    SingleVariable,
}

/// `prod_{k>=1} prod_{m>=1} (1 - L^(2-m) t_k)^(-1)` to total degree `N`, or
/// the same with `t_k = t^k`.
///
/// Factors with `2 - m < -depth` lie below the window; their combined
/// effect is carried as loss of precision rather than dropped.
pub fn commuting_series_product(truncation: u32, mode: ProductMode, depth: u32) -> MultiSeries {
    let w = window(depth);
    let vars = match mode {
        ProductMode::JordanVariables => truncation.max(1) as usize,
        ProductMode::SingleVariable => 1,
    };
    let mut s = MultiSeries::one(vars, truncation, w);
    let one = BigInt::one();
    for k in 1..=truncation {
        let mono = match mode {
            ProductMode::JordanVariables => unit_monomial(vars, k as usize - 1),
            ProductMode::SingleVariable => vec![k],
        };
        for m in 1..=i64::from(depth) + 2 {
            s.mul_binomial_factor(&mono, &one, 2 - m);
        }
        s.mul_factor(&mono, &MotivicClass::zero(w));
    }
    s
}

/// `sum_n p(n) t^n` from partition enumeration.
pub fn partition_series(truncation: u32, window_low: i64) -> MultiSeries {
    let counts: Vec<BigInt> = (0..=truncation).map(|n| BigInt::from(partitions_of(n).len())).collect();
    MultiSeries::univariate_integers(&counts, truncation, window_low)
}

/// `L^2 / (L - 1) = L + 1 + L^-1 + ...`, through the inverse of `[GL(1)]`.
pub fn feit_fine_exponent(depth: u32) -> MotivicClass {
    let w = window(depth);
    gl_class(1, w).invert_unit().expect("L - 1 is a unit").mul_term(&BigInt::one(), 2).coarsen(w)
}

/// `(sum_n p(n) t^n)^(L^2 / (L - 1))`.
pub fn feit_fine_pipeline(truncation: u32, depth: u32) -> MultiSeries {
    let base = partition_series(truncation, window(depth));
    pow(&base, &feit_fine_exponent(depth)).expect("constant term is 1")
}
