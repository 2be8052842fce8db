//! Closed formulas and generating series for commuting varieties.
//!
//! `depth` arguments are the number of negative powers of `L` kept in
//! intermediate classes: the working window is `L^-depth`. A class is
//! certified as a polynomial only if its final window still reaches
//! [`crate::motivic::CERTIFICATION_MARGIN`] below `L^0`, so depths must
//! exceed the degree of the `[GL]` factors that multiply the series back up.

mod commuting;
mod cyclic;
mod euler;

use thiserror::Error;

use crate::motivic::{gl_class, LaurentPolynomial, MotivicClass, RingError, CERTIFICATION_MARGIN};
use crate::series::SeriesError;

pub use commuting::{
    c_alpha_class, commuting_series_product, feit_fine_class, feit_fine_exponent, feit_fine_pipeline,
    min_feit_fine_depth, partition_series, ProductMode,
};
pub use cyclic::{
    cyclic_class, cyclic_inner_product, cyclic_nonstacky_series, cyclic_product_form, cyclic_series,
    cyclic_stacky_series, default_cyclic_depth, dimension_vector, interval_contains, intervals, partition_grid_count,
    two_variable_partition_identity, CyclicDimensionVector, PartitionGrid,
};
pub use euler::{euler_q_sides, euler_sides, QTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("depth {depth} is below the required {required}")]
    DepthTooSmall { depth: u32, required: u32 },
    #[error("{what} did not certify as a polynomial: {source}")]
    Collapse { what: String, source: RingError },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("invalid dimension vector: {0}")]
    InvalidDims(String),
}

pub(crate) fn window(depth: u32) -> i64 {
    -i64::from(depth)
}

pub(crate) fn require_depth(depth: u32, required: u32) -> Result<(), FormulaError> {
    if depth < required {
        return Err(FormulaError::DepthTooSmall { depth, required });
    }
    Ok(())
}

/// `1 / [GL(b)]` known down to `window_low`.
pub(crate) fn gl_inverse(b: u32, window_low: i64) -> MotivicClass {
    let top = i64::from(b) * i64::from(b);
    gl_class(b, window_low + 2 * top).invert_unit().expect("[GL(b)] has leading term L^(b^2)")
}

pub(crate) fn certify(
    x: &MotivicClass,
    bound: i64,
    what: impl Into<String>,
) -> Result<LaurentPolynomial, FormulaError> {
    x.to_laurent_polynomial(bound).map_err(|source| FormulaError::Collapse { what: what.into(), source })
}

/// Smallest depth for which a coefficient multiplied by a `[GL]` factor of
/// degree `gl_degree`, after losing `drift` to the series expansion, still
/// certifies.
pub(crate) fn depth_for(gl_degree: i64, drift: i64) -> u32 {
    (gl_degree + drift + CERTIFICATION_MARGIN) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_inverse_window_is_exact() {
        for b in 0..4 {
            let inv = gl_inverse(b, -20);
            assert_eq!(inv.window_low(), -20);
            let prod = crate::motivic::gl_polynomial(b).mul_class(&inv);
            assert_eq!(prod, MotivicClass::one(prod.window_low()));
        }
    }
}
