//! Truncated multivariate power series over [`MotivicClass`].
//!
//! A [`MultiSeries`] in `t_1..t_r` keeps every monomial of total degree at
//! most `N`, in graded order: by total degree, then lexicographically
//! descending (`t1^2, t1*t2, t2^2`). Each coefficient carries its own window:
//! multiplying by `L^e t^m` with `e > 0` legitimately loses precision in the
//! higher coefficients, and a single shared window would throw away the
//! precision that the low coefficients still have. [`MultiSeries::window_low`]
//! reports the coarsest coefficient window.
//!
//! Factors `(1 - t^m)^(-c)` are applied in place by recurrence rather than
//! by general multiplication; this is what makes long Euler products cheap.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::motivic::{LaurentPolynomial, MotivicClass};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error(
        "series shapes differ: {left_vars} vars to degree {left_trunc} vs {right_vars} vars to degree {right_trunc}"
    )]
    ShapeMismatch { left_vars: usize, left_trunc: u32, right_vars: usize, right_trunc: u32 },
    #[error("constant term must be 1, found {0}")]
    ConstantTermNotOne(String),
    #[error("target truncation {requested} exceeds the {available} retained by the source")]
    TruncationOverflow { requested: u32, available: u32 },
    #[error("monomial {monomial:?} does not fit {vars} variables")]
    BadMonomial { monomial: Vec<u32>, vars: usize },
    #[error("variable index {index} out of range for {vars} variables")]
    VariableOutOfRange { index: usize, vars: usize },
    #[error("series needs at least one variable")]
    NoVariables,
}

/// All exponent vectors of total degree `<= truncation`, in graded order.
#[derive(Debug)]
pub struct MonomialBasis {
    vars: usize,
    truncation: u32,
    monomials: Vec<Vec<u32>>,
    degrees: Vec<u32>,
    index: HashMap<Vec<u32>, usize>,
}

impl MonomialBasis {
    fn build(vars: usize, truncation: u32) -> Self {
        let mut monomials = Vec::new();
        let mut degrees = Vec::new();
        for d in 0..=truncation {
            let mut current = Vec::with_capacity(vars);
            of_degree(vars, d, &mut current, &mut monomials);
            degrees.resize(monomials.len(), d);
        }
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Self { vars, truncation, monomials, degrees, index }
    }

    /// Shared basis for the given shape.
    pub fn get(vars: usize, truncation: u32) -> Arc<Self> {
        type Cache = Mutex<HashMap<(usize, u32), Arc<MonomialBasis>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        guard.entry((vars, truncation)).or_insert_with(|| Arc::new(Self::build(vars, truncation))).clone()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &[u32] {
        &self.monomials[i]
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn index_of(&self, monomial: &[u32]) -> Option<usize> {
        self.index.get(monomial).copied()
    }

    /// Index of `monomial - j * step`, if that is still a monomial.
    fn index_minus(&self, monomial: &[u32], step: &[u32], j: u32) -> Option<usize> {
        let mut diff = Vec::with_capacity(self.vars);
        for (a, b) in monomial.iter().zip(step) {
            diff.push(a.checked_sub(b * j)?);
        }
        self.index_of(&diff)
    }
}

impl PartialEq for MonomialBasis {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.truncation == other.truncation
    }
}

impl Eq for MonomialBasis {}

fn of_degree(vars: usize, d: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if current.len() + 1 == vars {
        current.push(d);
        out.push(current.clone());
        current.pop();
        return;
    }
    for first in (0..=d).rev() {
        current.push(first);
        of_degree(vars, d - first, current, out);
        current.pop();
    }
}

fn total_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// Exponent vector `t_index` (0-based).
pub fn unit_monomial(vars: usize, index: usize) -> Vec<u32> {
    let mut m = vec![0; vars];
    m[index] = 1;
    m
}

/// How [`MultiSeries::specialize_diagonal`] collapses variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `t_k -> t^k` (variable index `k - 1`).
    Graded,
    /// `t_j -> t` for every `j`.
    Uniform,
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiSeries {
    basis: Arc<MonomialBasis>,
    coeffs: Vec<MotivicClass>,
}

/// Result of comparing two series coefficient by coefficient, each
/// coefficient at the coarser of the two windows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesComparison {
    pub equal: bool,
    /// Coarsest window at which some coefficient was compared.
    pub window_low: i64,
    pub first_mismatch: Option<(Vec<u32>, MotivicClass, MotivicClass)>,
}

impl MultiSeries {
    pub fn zero(vars: usize, truncation: u32, window_low: i64) -> Self {
        assert!(vars > 0, "series needs at least one variable");
        let basis = MonomialBasis::get(vars, truncation);
        let coeffs = vec![MotivicClass::zero(window_low); basis.len()];
        Self { basis, coeffs }
    }

    pub fn one(vars: usize, truncation: u32, window_low: i64) -> Self {
        let mut s = Self::zero(vars, truncation, window_low);
        s.coeffs[0] = MotivicClass::one(window_low);
        s
    }

    /// Builds a series from explicit terms. Monomials above the truncation
    /// are dropped; missing monomials are zero known down to `window_low`,
    /// and no coefficient is reported finer than `window_low`.
    pub fn from_terms(
        vars: usize,
        truncation: u32,
        window_low: i64,
        terms: impl IntoIterator<Item = (Vec<u32>, MotivicClass)>,
    ) -> Result<Self, SeriesError> {
        if vars == 0 {
            return Err(SeriesError::NoVariables);
        }
        let mut s = Self::zero(vars, truncation, window_low);
        for (m, c) in terms {
            if m.len() != vars {
                return Err(SeriesError::BadMonomial { monomial: m, vars });
            }
            if let Some(i) = s.basis.index_of(&m) {
                s.coeffs[i] = &s.coeffs[i] + &c.coarsen(window_low);
            }
        }
        Ok(s)
    }

    /// Univariate series from integer coefficients `c_0, c_1, ...`.
    pub fn univariate_integers(coeffs: &[BigInt], truncation: u32, window_low: i64) -> Self {
        let terms =
            coeffs.iter().enumerate().map(|(k, c)| (vec![k as u32], MotivicClass::monomial(c.clone(), 0, window_low)));
        Self::from_terms(1, truncation, window_low, terms).expect("one variable")
    }

    pub fn vars(&self) -> usize {
        self.basis.vars
    }

    pub fn truncation(&self) -> u32 {
        self.basis.truncation
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    /// Coarsest window among the coefficients.
    pub fn window_low(&self) -> i64 {
        self.coeffs.iter().map(MotivicClass::window_low).max().expect("nonempty basis")
    }

    pub fn coeff(&self, monomial: &[u32]) -> Option<&MotivicClass> {
        self.basis.index_of(monomial).map(|i| &self.coeffs[i])
    }

    pub fn constant_term(&self) -> &MotivicClass {
        &self.coeffs[0]
    }

    /// All `(monomial, coefficient)` pairs in graded order, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &MotivicClass)> + '_ {
        self.basis.monomials.iter().map(Vec::as_slice).zip(self.coeffs.iter())
    }

    /// Coarsens every coefficient to `window_low`.
    pub fn coarsen(&self, window_low: i64) -> Self {
        Self { basis: self.basis.clone(), coeffs: self.coeffs.iter().map(|c| c.coarsen(window_low)).collect() }
    }

    /// Every coefficient coarsened to the common window [`Self::window_low`].
    pub fn uniform(&self) -> Self {
        self.coarsen(self.window_low())
    }

    /// Drops all monomials above degree `truncation`.
    pub fn truncate(&self, truncation: u32) -> Self {
        let basis = MonomialBasis::get(self.vars(), truncation.min(self.truncation()));
        let coeffs = (0..basis.len()).map(|i| self.coeffs[i].clone()).collect();
        Self { basis, coeffs }
    }

    fn same_shape(&self, other: &Self) -> Result<(), SeriesError> {
        if self.vars() != other.vars() || self.truncation() != other.truncation() {
            return Err(SeriesError::ShapeMismatch {
                left_vars: self.vars(),
                left_trunc: self.truncation(),
                right_vars: other.vars(),
                right_trunc: other.truncation(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_shape(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { basis: self.basis.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_shape(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { basis: self.basis.clone(), coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_shape(other)?;
        let b = &self.basis;
        let mut out: Vec<Option<MotivicClass>> = vec![None; b.len()];
        for i in 0..b.len() {
            for j in 0..b.len() {
                if b.degree(i) + b.degree(j) > b.truncation {
                    continue;
                }
                let sum: Vec<u32> = b.monomial(i).iter().zip(b.monomial(j)).map(|(x, y)| x + y).collect();
                let k = b.index_of(&sum).expect("degree within truncation");
                let term = &self.coeffs[i] * &other.coeffs[j];
                out[k] = Some(match out[k].take() {
                    Some(acc) => &acc + &term,
                    None => term,
                });
            }
        }
        let coeffs = out.into_iter().map(|c| c.expect("every monomial is reached")).collect();
        Ok(Self { basis: self.basis.clone(), coeffs })
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        self.require_unit_constant()?;
        let b = &self.basis;
        let mut out: Vec<MotivicClass> = Vec::with_capacity(b.len());
        out.push(self.coeffs[0].clone());
        for k in 1..b.len() {
            let mk = b.monomial(k);
            let mut acc = MotivicClass::zero(self.coeffs[k].window_low());
            for i in 1..=k {
                let Some(j) = b.index_of(&sub_vec(mk, b.monomial(i))) else { continue };
                acc = &acc - &(&self.coeffs[i] * &out[j]);
            }
            out.push(acc);
        }
        Ok(Self { basis: self.basis.clone(), coeffs: out })
    }

    pub(crate) fn require_unit_constant(&self) -> Result<(), SeriesError> {
        let c = &self.coeffs[0];
        if c.terms().count() == 1 && c.coeff(0).is_some_and(|v| v.is_one()) {
            Ok(())
        } else {
            Err(SeriesError::ConstantTermNotOne(c.display_with_window()))
        }
    }

    /// `t_j -> L^c t_j` (0-based `j`).
    pub fn scale_variables(&self, j: usize, c: i64) -> Result<Self, SeriesError> {
        if j >= self.vars() {
            return Err(SeriesError::VariableOutOfRange { index: j, vars: self.vars() });
        }
        let one = BigInt::one();
        let coeffs = self.terms().map(|(m, x)| x.mul_term(&one, c * i64::from(m[j]))).collect();
        Ok(Self { basis: self.basis.clone(), coeffs })
    }

    /// Collapses to a series in one variable `t`, truncated at `truncation`.
    ///
    /// In [`Specialization::Graded`] mode a series in `t_1..t_r` stands for
    /// one in infinitely many variables whose `t_k`, `k > r`, do not occur;
    /// this is exact below degree `r + 1`, since `t_k -> t^k` pushes every
    /// such monomial past degree `r`.
    pub fn specialize_diagonal(&self, mode: Specialization, truncation: u32) -> Result<Self, SeriesError> {
        if truncation > self.truncation() {
            return Err(SeriesError::TruncationOverflow { requested: truncation, available: self.truncation() });
        }
        let window = self.coeffs.iter().map(MotivicClass::window_low).min().expect("nonempty");
        let mut out = Self::zero(1, truncation, window);
        let mut touched = vec![false; out.coeffs.len()];
        for (m, c) in self.terms() {
            let d: u32 = match mode {
                Specialization::Graded => m.iter().enumerate().map(|(k, e)| (k as u32 + 1) * e).sum(),
                Specialization::Uniform => total_degree(m),
            };
            if d > truncation {
                continue;
            }
            let slot = &mut out.coeffs[d as usize];
            *slot = if touched[d as usize] { &*slot + c } else { c.clone() };
            touched[d as usize] = true;
        }
        Ok(out)
    }

    /// `t_j -> t_j^k` for every `j`.
    pub fn substitute_power(&self, k: u32) -> Self {
        assert!(k > 0, "substitution power must be positive");
        let window = self.coeffs.iter().map(MotivicClass::window_low).min().expect("nonempty");
        // monomials that are not k-th powers are exact zeros
        let mut out = Self::zero(self.vars(), self.truncation(), window);
        for (m, c) in self.terms() {
            let target: Vec<u32> = m.iter().map(|e| e * k).collect();
            if let Some(i) = out.basis.index_of(&target) {
                out.coeffs[i] = c.clone();
            }
        }
        out
    }

    /// Coefficientwise comparison at the coarser window of each pair.
    pub fn compare(&self, other: &Self) -> Result<SeriesComparison, SeriesError> {
        self.same_shape(other)?;
        let mut window = i64::MIN;
        for (i, (a, b)) in self.coeffs.iter().zip(&other.coeffs).enumerate() {
            let w = a.window_low().max(b.window_low());
            window = window.max(w);
            let (a, b) = (a.coarsen(w), b.coarsen(w));
            if a != b {
                return Ok(SeriesComparison {
                    equal: false,
                    window_low: w,
                    first_mismatch: Some((self.basis.monomial(i).to_vec(), a, b)),
                });
            }
        }
        Ok(SeriesComparison { equal: true, window_low: window, first_mismatch: None })
    }

    /// In place: `self *= (1 - L^e t^m)^(-a)` for an integer `a`, using the
    /// binomial series `sum_j C(a+j-1, j) L^(e j) t^(j m)`. Exact.
    pub fn mul_binomial_factor(&mut self, m: &[u32], a: &BigInt, e: i64) {
        let dm = total_degree(m);
        assert!(dm > 0, "factor monomial must be nonconstant");
        let jmax = self.truncation() / dm;
        let mut f = Vec::with_capacity(jmax as usize + 1);
        let mut c = BigInt::one();
        f.push(c.clone());
        for j in 1..=jmax {
            c = c * (a + BigInt::from(j - 1)) / BigInt::from(j);
            f.push(c.clone());
        }
        for k in (0..self.coeffs.len()).rev() {
            if self.basis.degree(k) < dm {
                break;
            }
            let mk = self.basis.monomial(k).to_vec();
            let mut acc = self.coeffs[k].clone();
            for (j, fj) in f.iter().enumerate().skip(1) {
                if fj.is_zero() {
                    continue;
                }
                let Some(src) = self.basis.index_minus(&mk, m, j as u32) else { break };
                acc = &acc + &self.coeffs[src].mul_term(fj, e * j as i64);
            }
            self.coeffs[k] = acc;
        }
    }

    /// In place: `self *= (1 - t^m)^(-c)`.
    ///
    /// Every known term `a L^k` of `c` contributes `(1 - L^k t^m)^(-a)`; the
    /// unknown part of `c` below its window contributes a factor whose
    /// `t^(jm)` coefficient is unknown from `L^(j(w-1))` down, which is
    /// propagated as loss of precision.
    pub fn mul_factor(&mut self, m: &[u32], c: &MotivicClass) {
        let dm = total_degree(m);
        assert!(dm > 0, "factor monomial must be nonconstant");
        let jmax = (self.truncation() / dm) as usize;
        if jmax == 0 {
            return;
        }
        let f = factor_coefficients(c, jmax);
        for k in (0..self.coeffs.len()).rev() {
            if self.basis.degree(k) < dm {
                break;
            }
            let mk = self.basis.monomial(k).to_vec();
            let mut acc = self.coeffs[k].clone();
            for (j, fj) in f.iter().enumerate().skip(1) {
                let Some(src) = self.basis.index_minus(&mk, m, j as u32) else { break };
                acc = &acc + &(fj * &self.coeffs[src]);
            }
            self.coeffs[k] = acc;
        }
    }

    /// Known terms, one monomial per line, lowest degree first. Zero
    /// coefficients are skipped.
    pub fn render(&self) -> String {
        self.render_lines(|c| c.to_string())
    }

    /// Like [`render`](Self::render) with every coefficient's `O(L^k)` tail.
    pub fn render_with_windows(&self) -> String {
        self.render_lines(MotivicClass::display_with_window)
    }

    fn render_lines(&self, show: impl Fn(&MotivicClass) -> String) -> String {
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            if i == 0 {
                out.push_str(&show(c));
            } else if c.is_zero() {
                continue;
            } else {
                out.push_str(&format!("+ ({})*{}", show(c), render_monomial(m)));
            }
            out.push('\n');
        }
        out
    }
}

/// `t^(jm)` coefficients of `(1 - s)^(-c)` for `j = 0..=jmax`.
fn factor_coefficients(c: &MotivicClass, jmax: usize) -> Vec<MotivicClass> {
    let mut known = vec![LaurentPolynomial::zero(); jmax + 1];
    known[0] = LaurentPolynomial::one();
    for (k, a) in c.terms() {
        // binomial series of (1 - L^k s)^(-a), applied in descending order
        let mut b = Vec::with_capacity(jmax + 1);
        let mut coef = BigInt::one();
        b.push(coef.clone());
        for j in 1..=jmax {
            coef = coef * (a + BigInt::from(j - 1)) / BigInt::from(j);
            b.push(coef.clone());
        }
        for j in (1..=jmax).rev() {
            let mut acc = known[j].clone();
            for i in 1..=j {
                if b[i].is_zero() || known[j - i].is_zero() {
                    continue;
                }
                let term = LaurentPolynomial::monomial(b[i].clone(), k * i as i64);
                acc = &acc + &(&term * &known[j - i]);
            }
            known[j] = acc;
        }
    }
    let w = c.window_low();
    (0..=jmax)
        .map(|j| {
            if j == 0 {
                return known[0].to_class(w);
            }
            // the unknown factor's s^i coefficient lies below L^(i(w-1)+1)
            let window = (1..=j)
                .filter_map(|i| known[j - i].degree().map(|d| i as i64 * (w - 1) + 1 + d))
                .max()
                .expect("i = j always contributes");
            known[j].to_class(window)
        })
        .collect()
}

fn sub_vec(a: &[u32], b: &[u32]) -> Vec<u32> {
    // wraps for non-divisible pairs; such vectors are never in the basis
    a.iter().zip(b).map(|(x, y)| x.wrapping_sub(*y)).collect()
}

pub fn render_monomial(m: &[u32]) -> String {
    let single = m.len() == 1;
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, e)| {
            let var = if single { "t".to_string() } else { format!("t{}", i + 1) };
            if *e == 1 {
                var
            } else {
                format!("{var}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiSeries(vars={}, N={}):\n{}", self.vars(), self.truncation(), self.render_with_windows())
    }
}

/// `F = prod_m (1 - t^m)^(-c_m)` up to total degree `N`, with `c_m` stored
/// for every nonconstant monomial in graded order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerFactorization {
    basis: Arc<MonomialBasis>,
    /// Window of the constant term the product starts from.
    window_low: i64,
    exponents: Vec<MotivicClass>,
}

impl EulerFactorization {
    /// Exponent map from explicit entries; unlisted monomials get exponent 0
    /// known down to `window_low`.
    pub fn from_exponents(
        vars: usize,
        truncation: u32,
        window_low: i64,
        entries: impl IntoIterator<Item = (Vec<u32>, MotivicClass)>,
    ) -> Result<Self, SeriesError> {
        if vars == 0 {
            return Err(SeriesError::NoVariables);
        }
        let basis = MonomialBasis::get(vars, truncation);
        let mut exponents = vec![MotivicClass::zero(window_low); basis.len() - 1];
        for (m, c) in entries {
            if m.len() != vars || total_degree(&m) == 0 {
                return Err(SeriesError::BadMonomial { monomial: m, vars });
            }
            if let Some(i) = basis.index_of(&m) {
                exponents[i - 1] = c;
            }
        }
        Ok(Self { basis, window_low, exponents })
    }

    pub fn vars(&self) -> usize {
        self.basis.vars
    }

    pub fn truncation(&self) -> u32 {
        self.basis.truncation
    }

    pub fn window_low(&self) -> i64 {
        self.window_low
    }

    pub fn exponent(&self, monomial: &[u32]) -> Option<&MotivicClass> {
        let i = self.basis.index_of(monomial)?;
        self.exponents.get(i.checked_sub(1)?)
    }

    /// `(monomial, c_m)` in graded order.
    pub fn exponents(&self) -> impl Iterator<Item = (&[u32], &MotivicClass)> + '_ {
        self.basis.monomials.iter().skip(1).map(Vec::as_slice).zip(self.exponents.iter())
    }

    /// Multiplies every exponent by `m`.
    pub fn scale(&self, m: &MotivicClass) -> Self {
        Self {
            basis: self.basis.clone(),
            window_low: self.window_low,
            exponents: self.exponents.iter().map(|c| c * m).collect(),
        }
    }
}

/// Greedy degree-by-degree extraction of the Euler exponents.
pub fn euler_factorize(f: &MultiSeries) -> Result<EulerFactorization, SeriesError> {
    f.require_unit_constant()?;
    let mut g = f.clone();
    let mut exponents = Vec::with_capacity(g.coeffs.len() - 1);
    for i in 1..g.coeffs.len() {
        let c = g.coeffs[i].clone();
        let m = g.basis.monomial(i).to_vec();
        // divide out (1 - t^m)^(-c): only higher monomials change
        g.mul_factor(&m, &-&c);
        exponents.push(c);
    }
    Ok(EulerFactorization { basis: f.basis.clone(), window_low: f.constant_term().window_low(), exponents })
}

/// `prod_m (1 - t^m)^(-c_m)` truncated at the factorization's degree.
pub fn euler_assemble(e: &EulerFactorization) -> MultiSeries {
    let mut g = MultiSeries::one(e.vars(), e.truncation(), e.window_low);
    for (m, c) in e.exponents() {
        g.mul_factor(m, c);
    }
    g
}

#[derive(Serialize, Deserialize)]
struct SeriesTermJson {
    monomial: Vec<u32>,
    coeff: MotivicClass,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    vars: usize,
    truncation: u32,
    window_low: i64,
    terms: Vec<SeriesTermJson>,
}

impl Serialize for MultiSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            vars: self.vars(),
            truncation: self.truncation(),
            window_low: self.window_low(),
            terms: self.terms().map(|(m, c)| SeriesTermJson { monomial: m.to_vec(), coeff: c.clone() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(deserializer)?;
        let mut s = MultiSeries::from_terms(raw.vars, raw.truncation, raw.window_low, std::iter::empty())
            .map_err(serde::de::Error::custom)?;
        for t in raw.terms {
            let i = s
                .basis
                .index_of(&t.monomial)
                .ok_or_else(|| serde::de::Error::custom(format!("monomial {:?} outside the basis", t.monomial)))?;
            s.coeffs[i] = t.coeff;
        }
        Ok(s)
    }
}
