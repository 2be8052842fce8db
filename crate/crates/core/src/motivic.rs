//! Truncated Laurent series in `L^-1` with integer coefficients.
//!
//! A [`MotivicClass`] stands for an element of the completion of
//! `K0(Var)[L^-1]` in the dimension filtration. Only the coefficients of
//! `L^k` with `k >= window_low` are known; everything strictly below the
//! window is unknown. Arithmetic tracks the window honestly:
//!
//! * sums are known down to the coarser of the two windows;
//! * a product `a * b` is known down to
//!   `max(window(a) + height(b), window(b) + height(a))`, where `height` is
//!   the highest exponent that may carry a nonzero coefficient.
//!
//! Multiplying by a positive power of `L` therefore moves the window up,
//! while products of power series in `L^-1` keep it in place. Every stored
//! coefficient is exact.
//!
//! Exact Laurent polynomials (for example certified motivic classes of
//! varieties) are represented separately by [`LaurentPolynomial`].

use std::cmp::{max, Ordering};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Minimum depth below `L^0` a class must be known to before a zero tail is
/// accepted as evidence that the class is a polynomial.
pub const CERTIFICATION_MARGIN: i64 = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("window mismatch: {left} vs {right}; align by truncating to the larger window first")]
    WindowMismatch { left: i64, right: i64 },
    #[error("not invertible in the truncated ring: {0}")]
    NotInvertible(String),
    #[error("does not collapse to a polynomial: coefficient {coeff} at L^{exp}")]
    DoesNotCollapse { exp: i64, coeff: BigInt },
    #[error("degree bound violated: degree {degree} exceeds bound {bound}")]
    DegreeBoundViolated { degree: i64, bound: i64 },
    #[error("window starts at L^{window_low}, certification needs it at or below L^-{margin}")]
    InsufficientMargin { window_low: i64, margin: i64 },
    #[error("evaluation point must be at least 2, got {0}")]
    InvalidEvaluationPoint(BigInt),
    #[error("malformed class: {0}")]
    Malformed(String),
}

/// A truncated Laurent series `sum_k c_k L^k` known for `k >= window_low`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MotivicClass {
    window_low: i64,
    /// `coeffs[i]` is the coefficient of `L^(window_low + i)`; no trailing zeros.
    coeffs: Vec<BigInt>,
}

impl MotivicClass {
    fn from_dense(window_low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { window_low, coeffs }
    }

    pub fn zero(window_low: i64) -> Self {
        Self { window_low, coeffs: Vec::new() }
    }

    pub fn one(window_low: i64) -> Self {
        Self::monomial(BigInt::one(), 0, window_low)
    }

    /// `coeff * L^exp`, dropped entirely if `exp` lies below the window.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64, window_low: i64) -> Self {
        Self::from_terms(window_low, [(exp, coeff.into())])
    }

    /// The Lefschetz class `L`.
    pub fn lefschetz(window_low: i64) -> Self {
        Self::monomial(1, 1, window_low)
    }

    /// Builds a class from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed and terms below the window are discarded.
    pub fn from_terms<C: Into<BigInt>>(window_low: i64, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            if e >= window_low {
                *map.entry(e).or_default() += c.into();
            }
        }
        let Some((&top, _)) = map.iter().rev().find(|(_, c)| !c.is_zero()) else {
            return Self::zero(window_low);
        };
        let mut coeffs = vec![BigInt::zero(); (top - window_low + 1) as usize];
        for (e, c) in map {
            if e <= top {
                coeffs[(e - window_low) as usize] = c;
            }
        }
        Self::from_dense(window_low, coeffs)
    }

    pub fn window_low(&self) -> i64 {
        self.window_low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn top_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.window_low + self.coeffs.len() as i64 - 1)
    }

    /// Highest exponent at which the true value may be nonzero: the top
    /// exponent, or `window_low - 1` when nothing inside the window survives.
    pub fn height(&self) -> i64 {
        self.top_exponent().unwrap_or(self.window_low - 1)
    }

    /// Coefficient of `L^exp`, or `None` below the window.
    pub fn coeff(&self, exp: i64) -> Option<BigInt> {
        if exp < self.window_low {
            return None;
        }
        Some(self.coeffs.get((exp - self.window_low) as usize).cloned().unwrap_or_default())
    }

    /// Nonzero terms in descending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        let w = self.window_low;
        self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (w + i as i64, c))
    }

    fn dense(&self, exp: i64) -> Option<&BigInt> {
        usize::try_from(exp - self.window_low).ok().and_then(|i| self.coeffs.get(i))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Forgets everything below `window_low`. A window below the current one
    /// leaves the class unchanged: precision cannot be recovered.
    pub fn coarsen(&self, window_low: i64) -> Self {
        if window_low <= self.window_low {
            return self.clone();
        }
        let skip = (window_low - self.window_low) as usize;
        let coeffs = self.coeffs.iter().skip(skip).cloned().collect();
        Self::from_dense(window_low, coeffs)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.same_window(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.same_window(other)?;
        Ok(self - other)
    }

    /// Product of two classes sharing a window. The result window follows
    /// the precision rule in the module docs and may sit above the inputs'.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.same_window(other)?;
        Ok(self * other)
    }

    fn same_window(&self, other: &Self) -> Result<(), RingError> {
        if self.window_low != other.window_low {
            return Err(RingError::WindowMismatch { left: self.window_low, right: other.window_low });
        }
        Ok(())
    }

    /// Multiplication by the exact monomial `coeff * L^exp`.
    pub fn mul_term(&self, coeff: &BigInt, exp: i64) -> Self {
        if coeff.is_zero() {
            // exact zero: report it with the shifted window
            return Self::zero(self.window_low + exp);
        }
        let coeffs = self.coeffs.iter().map(|c| c * coeff).collect();
        Self::from_dense(self.window_low + exp, coeffs)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        self.mul_term(factor, 0)
    }

    /// Inverse of a class of the form `±L^k (1 - x)` with `x` a power series
    /// in `L^-1` without constant term.
    ///
    /// If the input is known down to `w`, the inverse is known down to
    /// `w - 2k`.
    pub fn invert_unit(&self) -> Result<Self, RingError> {
        let Some(k) = self.top_exponent() else {
            return Err(RingError::NotInvertible("zero within the window".into()));
        };
        let lead = self.coeffs.last().expect("nonzero class");
        if !lead.abs().is_one() {
            return Err(RingError::NotInvertible(format!("leading coefficient {lead} of L^{k} is not a unit")));
        }
        let sign = lead.clone();
        // u(s) = sign * L^-k * self as a power series in s = L^-1
        let rel = (k - self.window_low) as usize;
        let u: Vec<BigInt> = (0..=rel).map(|i| &sign * &self.coeffs[rel - i]).collect();
        let mut v: Vec<BigInt> = Vec::with_capacity(rel + 1);
        v.push(BigInt::one());
        for i in 1..=rel {
            let mut acc = BigInt::zero();
            for j in 1..=i {
                if !u[j].is_zero() && !v[i - j].is_zero() {
                    acc -= &u[j] * &v[i - j];
                }
            }
            v.push(acc);
        }
        // inverse = sign * L^-k * v(L^-1); lowest exponent -k - rel
        let window = -k - rel as i64;
        let coeffs = v.into_iter().rev().map(|c| c * &sign).collect();
        Ok(Self::from_dense(window, coeffs))
    }

    /// Certifies that the class is a Laurent polynomial with no negative
    /// powers of `L` and degree at most `degree_bound`.
    ///
    /// Requires the window to reach at least [`CERTIFICATION_MARGIN`] below
    /// `L^0`, and every known coefficient of a negative power to vanish.
    pub fn to_laurent_polynomial(&self, degree_bound: i64) -> Result<LaurentPolynomial, RingError> {
        if self.window_low > -CERTIFICATION_MARGIN {
            return Err(RingError::InsufficientMargin { window_low: self.window_low, margin: CERTIFICATION_MARGIN });
        }
        if let Some((exp, coeff)) = self.terms().rev().find(|(e, _)| *e < 0) {
            return Err(RingError::DoesNotCollapse { exp, coeff: coeff.clone() });
        }
        if let Some(top) = self.top_exponent() {
            if top > degree_bound {
                return Err(RingError::DegreeBoundViolated { degree: top, bound: degree_bound });
            }
        }
        Ok(LaurentPolynomial::from_terms(self.terms().map(|(e, c)| (e, c.clone()))))
    }

    /// Renders the known terms, followed by the `O(L^(w-1))` error term.
    pub fn display_with_window(&self) -> String {
        let body = if self.is_zero() { String::new() } else { format!("{self} + ") };
        format!("{body}O(L^{})", self.window_low - 1)
    }
}

impl fmt::Debug for MotivicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotivicClass[{}]", self.display_with_window())
    }
}

impl fmt::Display for MotivicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms())
    }
}

pub(crate) fn write_terms<'a>(f: &mut impl fmt::Write, terms: impl Iterator<Item = (i64, &'a BigInt)>) -> fmt::Result {
    let mut first = true;
    for (exp, coeff) in terms {
        let negative = coeff.is_negative();
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let abs = coeff.abs();
        match (exp, abs.is_one()) {
            (0, _) => write!(f, "{abs}")?,
            (1, true) => write!(f, "L")?,
            (1, false) => write!(f, "{abs}*L")?,
            (_, true) => write!(f, "L^{exp}")?,
            (_, false) => write!(f, "{abs}*L^{exp}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<'a> Add<&'a MotivicClass> for &'a MotivicClass {
    type Output = MotivicClass;

    fn add(self, rhs: &MotivicClass) -> MotivicClass {
        let window = max(self.window_low, rhs.window_low);
        let top = max(self.height(), rhs.height());
        if top < window {
            return MotivicClass::zero(window);
        }
        let coeffs = (window..=top)
            .map(|e| match (self.dense(e), rhs.dense(e)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => BigInt::zero(),
            })
            .collect();
        MotivicClass::from_dense(window, coeffs)
    }
}

impl Neg for &MotivicClass {
    type Output = MotivicClass;

    fn neg(self) -> MotivicClass {
        MotivicClass { window_low: self.window_low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Sub<&'a MotivicClass> for &'a MotivicClass {
    type Output = MotivicClass;

    fn sub(self, rhs: &MotivicClass) -> MotivicClass {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a MotivicClass> for &'a MotivicClass {
    type Output = MotivicClass;

    fn mul(self, rhs: &MotivicClass) -> MotivicClass {
        let window = max(self.window_low + rhs.height(), rhs.window_low + self.height());
        if self.is_zero() || rhs.is_zero() {
            return MotivicClass::zero(window);
        }
        let base = self.window_low + rhs.window_low;
        let top = self.height() + rhs.height();
        if top < window {
            return MotivicClass::zero(window);
        }
        let mut out = vec![BigInt::zero(); (top - window + 1) as usize];
        let lb = rhs.coeffs.len() as i64;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // exponent base + i + j must reach the window
            let j0 = (window - base - i as i64).max(0);
            for j in j0..lb {
                let b = &rhs.coeffs[j as usize];
                if !b.is_zero() {
                    out[(base + i as i64 + j - window) as usize] += a * b;
                }
            }
        }
        MotivicClass::from_dense(window, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MotivicClass> for MotivicClass {
            type Output = MotivicClass;
            fn $m(self, rhs: MotivicClass) -> MotivicClass {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MotivicClass> for MotivicClass {
            type Output = MotivicClass;
            fn $m(self, rhs: &MotivicClass) -> MotivicClass {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MotivicClass {
    type Output = MotivicClass;
    fn neg(self) -> MotivicClass {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: i64,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    window_low: i64,
    terms: Vec<TermJson>,
}

impl Serialize for MotivicClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ClassJson {
            window_low: self.window_low,
            terms: self.terms().map(|(exp, c)| TermJson { exp, coeff: c.to_string() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MotivicClass {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ClassJson::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            if t.exp < raw.window_low {
                return Err(serde::de::Error::custom(format!(
                    "term L^{} lies below window_low {}",
                    t.exp, raw.window_low
                )));
            }
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            terms.push((t.exp, c));
        }
        Ok(Self::from_terms(raw.window_low, terms))
    }
}

/// An exact Laurent polynomial in `L` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_terms([(exp, coeff)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    /// The same polynomial viewed as a class known down to `window_low`.
    pub fn to_class(&self, window_low: i64) -> MotivicClass {
        MotivicClass::from_terms(window_low, self.terms.iter().map(|(e, c)| (*e, c.clone())))
    }

    /// `self * x` for a truncated class `x`; exact factors only shift windows.
    pub fn mul_class(&self, x: &MotivicClass) -> MotivicClass {
        let mut terms = self.terms.iter();
        let Some((e, c)) = terms.next() else {
            return MotivicClass::zero(x.window_low() + self.terms.keys().next().copied().unwrap_or(0));
        };
        let mut acc = x.mul_term(c, *e);
        for (e, c) in terms {
            acc = &acc + &x.mul_term(c, *e);
        }
        acc
    }

    /// Substitutes `L = q`. Negative powers make the value a fraction.
    pub fn evaluate_at(&self, q: impl Into<BigInt>) -> Result<BigRational, RingError> {
        let q: BigInt = q.into();
        if q < BigInt::from(2) {
            return Err(RingError::InvalidEvaluationPoint(q));
        }
        let q = BigRational::from_integer(q);
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let power = match e.cmp(&0) {
                Ordering::Less => num_traits::pow(q.recip(), e.unsigned_abs() as usize),
                _ => num_traits::pow(q.clone(), *e as usize),
            };
            total += BigRational::from_integer(c.clone()) * power;
        }
        Ok(total)
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial[{self}]")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms.iter().chain(rhs.terms.iter()).map(|(e, c)| (*e, c.clone())))
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.terms.iter().flat_map(|(e1, c1)| rhs.terms.iter().map(move |(e2, c2)| (e1 + e2, c1 * c2))),
        )
    }
}

/// `[GL(n)] = (L^n - 1)(L^n - L)...(L^n - L^(n-1))`.
pub fn gl_polynomial(n: u32) -> LaurentPolynomial {
    let n = i64::from(n);
    (0..n).fold(LaurentPolynomial::one(), |acc, i| {
        let factor = LaurentPolynomial::from_terms([(n, BigInt::one()), (i, -BigInt::one())]);
        &acc * &factor
    })
}

/// `[End(n)] = L^(n^2)`.
pub fn end_polynomial(n: u32) -> LaurentPolynomial {
    LaurentPolynomial::monomial(1, i64::from(n) * i64::from(n))
}

pub fn gl_class(n: u32, window_low: i64) -> MotivicClass {
    gl_polynomial(n).to_class(window_low)
}

pub fn end_class(n: u32, window_low: i64) -> MotivicClass {
    end_polynomial(n).to_class(window_low)
}

/// `[End(n)] / [GL(n)] = 1 / ((1 - L^-1)...(1 - L^-n))`, expanded from the
/// exact `[GL(n)]` taken down to `window_low`.
pub fn end_over_gl(n: u32, window_low: i64) -> MotivicClass {
    let inv = gl_class(n, window_low).invert_unit().expect("[GL(n)] has a unit leading term");
    inv.mul_term(&BigInt::one(), i64::from(n) * i64::from(n))
}
