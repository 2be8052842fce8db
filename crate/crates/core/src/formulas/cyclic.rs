//! Commuting pairs of cyclic block type over `Z/r`.
//!
//! The generating series is the product of a non-stacky factor
//! `(sum_n p(n) t^n)^L` with `t = t_1...t_r`, and a stacky factor
//! `(prod_{(a,b)} prod_{m>=1} (1 - t_[a,b] t^(m-1))^(-1))^(L/(L-1))`, where
//! `t_[a,b]` is the product over the cyclic interval `a, a+1, ..., b`.
//! Both indices `k` and `m` of the expanded stacky product are bound by
//! their own products.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::{certify, depth_for, window, FormulaError};
use crate::combinatorics::{partitions_of, partitions_up_to, Partition};
use crate::motivic::{gl_polynomial, LaurentPolynomial, MotivicClass};
use crate::power::pow;
use crate::series::MultiSeries;

/// Dimensions `(n_1, ..., n_r)` of the summands `V_1, ..., V_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicDimensionVector {
    dims: Vec<u32>,
}

impl CyclicDimensionVector {
    pub fn new(dims: Vec<u32>) -> Result<Self, FormulaError> {
        if dims.is_empty() {
            return Err(FormulaError::InvalidDims("need at least one summand".into()));
        }
        Ok(Self { dims })
    }

    pub fn r(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn total(&self) -> u32 {
        self.dims.iter().sum()
    }

    /// `sum_i n_i n_(i+1) + sum_i n_i^2`, the dimension of the space of pairs.
    pub fn pair_space_dimension(&self) -> u32 {
        let r = self.r();
        (0..r).map(|i| self.dims[i] * self.dims[(i + 1) % r] + self.dims[i] * self.dims[i]).sum()
    }
}

impl fmt::Display for CyclicDimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for CyclicDimensionVector {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let dims = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| FormulaError::InvalidDims(s.to_string()))?;
        Self::new(dims)
    }
}

/// All `(a, b)` in `{1..r}^2`, row by row.
pub fn intervals(r: usize) -> Vec<(usize, usize)> {
    (1..=r).flat_map(|a| (1..=r).map(move |b| (a, b))).collect()
}

/// Whether `j` lies on the cyclic interval `a, a+1, ..., b` of `Z/r`.
pub fn interval_contains(r: usize, (a, b): (usize, usize), j: usize) -> bool {
    (j + r - a) % r <= (b + r - a) % r
}

fn interval_monomial(r: usize, ab: (usize, usize)) -> Vec<u32> {
    (1..=r).map(|j| u32::from(interval_contains(r, ab, j))).collect()
}

/// Partitions `lambda(a,b)` indexed by `(a,b)` in `(Z/r)^2`; absent entries
/// are empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionGrid {
    r: usize,
    entries: BTreeMap<(usize, usize), Partition>,
}

impl PartitionGrid {
    /// Indices are reduced mod `r` into `1..=r`.
    pub fn new(r: usize, entries: impl IntoIterator<Item = ((usize, usize), Partition)>) -> Result<Self, FormulaError> {
        if r == 0 {
            return Err(FormulaError::InvalidDims("r must be positive".into()));
        }
        let norm = |x: usize| (x + r - 1) % r + 1;
        let mut map = BTreeMap::new();
        for ((a, b), lambda) in entries {
            if !lambda.is_empty() {
                map.insert((norm(a), norm(b)), lambda);
            }
        }
        Ok(Self { r, entries: map })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn entry(&self, a: usize, b: usize) -> Option<&Partition> {
        self.entries.get(&(a, b))
    }
}

/// `n_j = sum_(a,b) |lambda(a,b)|` minus `l(lambda(a,b))` for every `(a,b)`
/// whose interval misses `j`.
pub fn dimension_vector(grid: &PartitionGrid) -> CyclicDimensionVector {
    let r = grid.r;
    let dims = (1..=r)
        .map(|j| {
            grid.entries
                .iter()
                .map(
                    |(&ab, lambda)| {
                        if interval_contains(r, ab, j) {
                            lambda.size()
                        } else {
                            lambda.size() - lambda.length()
                        }
                    },
                )
                .sum()
        })
        .collect();
    CyclicDimensionVector { dims }
}

/// Number of partition grids with dimension vector `v`, by exhaustive
/// search.
///
/// Every entry adds a nonnegative amount to every `n_j` and adds exactly
/// `|lambda(a,b)|` to `n_j` for `j` on its interval, so
/// `|lambda(a,b)| <= min_{j in [a,b]} n_j` bounds the search.
pub fn partition_grid_count(v: &CyclicDimensionVector) -> u128 {
    let r = v.r();
    let cells = intervals(r);
    let max = v.dims.iter().copied().max().unwrap_or(0);
    let candidates = partitions_up_to(max);
    let mut remaining: Vec<i64> = v.dims.iter().map(|&n| i64::from(n)).collect();
    grid_search(r, &cells, &candidates, &mut remaining)
}

fn grid_search(r: usize, cells: &[(usize, usize)], candidates: &[Partition], remaining: &mut [i64]) -> u128 {
    let Some((&ab, rest)) = cells.split_first() else {
        return u128::from(remaining.iter().all(|&x| x == 0));
    };
    let bound = (1..=r).filter(|&j| interval_contains(r, ab, j)).map(|j| remaining[j - 1]).min().unwrap_or(0);
    let mut total = 0;
    for lambda in candidates {
        if i64::from(lambda.size()) > bound {
            break;
        }
        let contrib: Vec<i64> = (1..=r)
            .map(|j| {
                let s = i64::from(lambda.size());
                if interval_contains(r, ab, j) {
                    s
                } else {
                    s - i64::from(lambda.length())
                }
            })
            .collect();
        if contrib.iter().zip(remaining.iter()).any(|(c, rem)| c > rem) {
            continue;
        }
        for (rem, c) in remaining.iter_mut().zip(&contrib) {
            *rem -= c;
        }
        total += grid_search(r, rest, candidates, remaining);
        for (rem, c) in remaining.iter_mut().zip(&contrib) {
            *rem += c;
        }
    }
    total
}

/// Monomials `t_[a,b] t^(m-1)` of total degree at most `truncation`.
fn inner_monomials(r: usize, truncation: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for ab in intervals(r) {
        let base = interval_monomial(r, ab);
        for m in 0.. {
            let mono: Vec<u32> = base.iter().map(|e| e + m).collect();
            if mono.iter().sum::<u32>() > truncation {
                break;
            }
            out.push(mono);
        }
    }
    out
}

/// `prod_{(a,b)} prod_{m>=1} (1 - t_[a,b] t^(m-1))^(-1)`, integer coefficients.
pub fn cyclic_inner_product(r: usize, truncation: u32, depth: u32) -> MultiSeries {
    let mut s = MultiSeries::one(r, truncation, window(depth));
    let one = BigInt::one();
    for mono in inner_monomials(r, truncation) {
        s.mul_binomial_factor(&mono, &one, 0);
    }
    s
}

/// The inner product and its `L/(L-1)` power.
pub fn cyclic_stacky_series(r: usize, truncation: u32, depth: u32) -> (MultiSeries, MultiSeries) {
    let w = window(depth);
    let inner = cyclic_inner_product(r, truncation, depth);
    let exponent = MotivicClass::from_terms(w, [(0, 1), (-1, -1)]).invert_unit().expect("unit");
    let stacky = pow(&inner, &exponent).expect("constant term is 1");
    (inner, stacky)
}

/// `(sum_n p(n) t^n)^L` with `t = t_1...t_r`.
pub fn cyclic_nonstacky_series(r: usize, truncation: u32, depth: u32) -> MultiSeries {
    let w = window(depth);
    let terms = (0..=truncation / r as u32)
        .map(|n| (vec![n; r], MotivicClass::monomial(BigInt::from(partitions_of(n).len()), 0, w)));
    let base = MultiSeries::from_terms(r, truncation, w, terms).expect("r > 0");
    pow(&base, &MotivicClass::lefschetz(w)).expect("constant term is 1")
}

/// `sum_n [C(n)]/[G(n)] t^n` assembled as non-stacky times stacky factor.
pub fn cyclic_series(r: usize, truncation: u32, depth: u32) -> MultiSeries {
    let (_, stacky) = cyclic_stacky_series(r, truncation, depth);
    cyclic_nonstacky_series(r, truncation, depth).mul(&stacky).expect("same shape")
}

/// The same series from the expanded product
/// `prod_m (1 - L t^m)^(-1) prod_m prod_{k>=0} prod_{(a,b)} (1 - L^-k t_[a,b] t^(m-1))^(-1)`.
pub fn cyclic_product_form(r: usize, truncation: u32, depth: u32) -> MultiSeries {
    let w = window(depth);
    let one = BigInt::one();
    let mut s = MultiSeries::one(r, truncation, w);
    for m in 1..=truncation / r as u32 {
        s.mul_binomial_factor(&vec![m; r], &one, 1);
    }
    for mono in inner_monomials(r, truncation) {
        for k in 0..=i64::from(depth) {
            s.mul_binomial_factor(&mono, &one, -k);
        }
        s.mul_factor(&mono, &MotivicClass::zero(w));
    }
    s
}

/// Depth at which [`cyclic_class`] certifies for `v`.
pub fn default_cyclic_depth(v: &CyclicDimensionVector) -> u32 {
    let gl: u32 = v.dims.iter().map(|n| n * n).sum();
    depth_for(i64::from(gl), i64::from(v.total()))
}

/// `[C(n)]` for the cyclic quiver: the `t^n` coefficient of
/// [`cyclic_series`] times `prod_i [GL(n_i)]`.
pub fn cyclic_class(v: &CyclicDimensionVector, depth: u32) -> Result<LaurentPolynomial, FormulaError> {
    let series = cyclic_series(v.r(), v.total(), depth);
    let coeff = series.coeff(&v.dims).expect("degree within truncation");
    let gl = v.dims.iter().fold(LaurentPolynomial::one(), |acc, &n| &acc * &gl_polynomial(n));
    let class = gl.mul_class(coeff);
    certify(&class, i64::from(v.pair_space_dimension()), format!("[C{v}]"))
}

/// `sum_lambda u^|lambda| v^l(lambda)` by enumeration and
/// `prod_{m>=1} (1 - v u^m)^(-1)` by expansion, as series in `(u, v)` to
/// total degree `u_order + v_order`, which contains the box
/// `u^i v^j, i <= u_order, j <= v_order`.
pub fn two_variable_partition_identity(u_order: u32, v_order: u32) -> (MultiSeries, MultiSeries) {
    let n = u_order + v_order;
    let terms = partitions_up_to(n)
        .into_iter()
        .filter(|lambda| lambda.size() + lambda.length() <= n)
        .map(|lambda| (vec![lambda.size(), lambda.length()], MotivicClass::one(0)));
    let lhs = MultiSeries::from_terms(2, n, 0, terms).expect("two variables");
    let mut rhs = MultiSeries::one(2, n, 0);
    for m in 1..n {
        rhs.mul_binomial_factor(&[m, 1], &BigInt::one(), 0);
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(s: &str) -> CyclicDimensionVector {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(v: i64) -> MotivicClass {
        MotivicClass::monomial(v, 0, -10)
    }

    #[test]
    fn interval_membership() {
        assert!(interval_contains(1, (1, 1), 1));
        assert!(interval_contains(3, (3, 1), 1));
        assert!(!interval_contains(3, (3, 1), 2));
        assert!(interval_contains(3, (2, 1), 3));
        // [a, a-1] is the whole circle
        assert!((1..=4).all(|j| interval_contains(4, (3, 2), j)));
    }

    #[test]
    fn dimension_vector_examples() {
        let g = PartitionGrid::new(1, [((1, 1), part("2,1"))]).unwrap();
        assert_eq!(dimension_vector(&g), dims("3"));
        let g = PartitionGrid::new(2, [((1, 1), part("1"))]).unwrap();
        assert_eq!(dimension_vector(&g), dims("1,0"));
        let g = PartitionGrid::new(2, [((1, 2), part("2"))]).unwrap();
        assert_eq!(dimension_vector(&g), dims("2,2"));
        // indices reduce mod r
        let g = PartitionGrid::new(2, [((3, 4), part("2"))]).unwrap();
        assert_eq!(g.entry(1, 2), Some(&part("2")));
    }

    #[test]
    fn grid_counts() {
        assert_eq!(partition_grid_count(&dims("2")), 2);
        assert_eq!(partition_grid_count(&dims("1,0")), 1);
        assert_eq!(partition_grid_count(&dims("1,1")), 3);
        assert_eq!(partition_grid_count(&dims("0,0")), 1);
    }

    #[test]
    fn inner_product_coefficients() {
        let s = cyclic_inner_product(1, 5, 10);
        let p = [1, 1, 2, 3, 5, 7];
        for (n, &pn) in p.iter().enumerate() {
            assert_eq!(*s.coeff(&[n as u32]).unwrap(), int(pn));
        }
        let s = cyclic_inner_product(2, 2, 10);
        assert_eq!(*s.coeff(&[1, 1]).unwrap(), int(3));
        assert_eq!(*s.coeff(&[1, 0]).unwrap(), int(1));
    }

    #[test]
    fn cyclic_classes_small() {
        let l = |terms: &[(i64, i64)]| LaurentPolynomial::from_terms(terms.iter().copied());
        let v = dims("1,0");
        assert_eq!(cyclic_class(&v, default_cyclic_depth(&v)).unwrap(), l(&[(1, 1)]));
        let v = dims("1,1");
        assert_eq!(cyclic_class(&v, default_cyclic_depth(&v)).unwrap(), l(&[(3, 1), (2, 1), (1, -1)]));
        let v = dims("2");
        assert_eq!(cyclic_class(&v, default_cyclic_depth(&v)).unwrap(), l(&[(6, 1), (5, 1), (3, -1)]));
    }

    #[test]
    fn product_form_matches_power_structure_assembly() {
        for r in 1..=2 {
            let a = cyclic_series(r, 4, 16);
            let b = cyclic_product_form(r, 4, 16);
            assert!(a.compare(&b).unwrap().equal, "r = {r}");
        }
    }

    #[test]
    fn two_variable_identity_small() {
        let (lhs, rhs) = two_variable_partition_identity(4, 4);
        assert!(lhs.compare(&rhs).unwrap().equal);
        assert_eq!(*lhs.coeff(&[2, 1]).unwrap(), MotivicClass::one(0));
        assert_eq!(*lhs.coeff(&[2, 2]).unwrap(), MotivicClass::one(0));
        assert_eq!(*lhs.coeff(&[3, 1]).unwrap(), MotivicClass::one(0));
    }
}
