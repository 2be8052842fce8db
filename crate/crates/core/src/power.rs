//! The power structure `(A(t), M) -> A(t)^M`.
//!
//! `A^M` is computed by writing `A = prod_m (1 - t^m)^(-c_m)`, replacing
//! every `c_m` by `c_m * M`, and multiplying the factors back out. Each
//! factor is expanded with `(1 - t^m)^(-L^k) = (1 - L^k t^m)^(-1)`.

use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;

use crate::motivic::MotivicClass;
use crate::series::{euler_assemble, euler_factorize, MultiSeries, SeriesComparison, SeriesError};

/// `(1 - t^m)^(-c)` to total degree `truncation`.
pub fn expand_factor(m: &[u32], c: &MotivicClass, truncation: u32) -> MultiSeries {
    let mut s = MultiSeries::one(m.len(), truncation, c.window_low());
    s.mul_factor(m, c);
    s
}

/// `A^M` for a series with constant term 1.
pub fn pow(a: &MultiSeries, m: &MotivicClass) -> Result<MultiSeries, SeriesError> {
    Ok(euler_assemble(&euler_factorize(a)?.scale(m)))
}

/// Inputs for one run of the seven exponentiation properties.
#[derive(Clone, Debug)]
pub struct AxiomInstance {
    pub a: MultiSeries,
    pub b: MultiSeries,
    pub m: MotivicClass,
    pub n: MotivicClass,
    /// Power used by the substitution property `t -> t^k`.
    pub k: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub property: u8,
    pub statement: &'static str,
    pub holds: bool,
    /// Coarsest window at which coefficients were compared.
    pub window_low: i64,
    pub detail: Option<String>,
}

fn record(property: u8, statement: &'static str, cmp: SeriesComparison) -> AxiomCheck {
    AxiomCheck {
        property,
        statement,
        holds: cmp.equal,
        window_low: cmp.window_low,
        detail: cmp
            .first_mismatch
            .map(|(mono, l, r)| format!("at {mono:?}: {} vs {}", l.display_with_window(), r.display_with_window())),
    }
}

/// Evaluates both sides of each exponentiation property and compares them.
pub fn check_axioms(inst: &AxiomInstance) -> Result<Vec<AxiomCheck>, SeriesError> {
    let AxiomInstance { a, b, m, n, k } = inst;
    let w = m.window_low();
    let vars = a.vars();
    let trunc = a.truncation();
    let one = MultiSeries::one(vars, trunc, w);
    let am = pow(a, m)?;
    let mut out = Vec::with_capacity(7);

    out.push(record(1, "A^0 = 1", pow(a, &MotivicClass::zero(w))?.compare(&one)?));
    out.push(record(2, "A^1 = A", pow(a, &MotivicClass::one(w))?.compare(a)?));
    out.push(record(3, "(AB)^M = A^M B^M", pow(&a.mul(b)?, m)?.compare(&am.mul(&pow(b, m)?)?)?));
    out.push(record(4, "A^(M+N) = A^M A^N", pow(a, &(m + n))?.compare(&am.mul(&pow(a, n)?)?)?));
    out.push(record(5, "A^(MN) = (A^M)^N", pow(a, &(m * n))?.compare(&pow(&am, n)?)?));

    let mut first = vec![0u32; vars];
    first[0] = 1;
    let one_plus_t = MultiSeries::from_terms(
        vars,
        trunc,
        w,
        [(vec![0; vars], MotivicClass::one(w)), (first.clone(), MotivicClass::one(w))],
    )?;
    let linear = MultiSeries::from_terms(vars, 1, w, [(vec![0; vars], MotivicClass::one(w)), (first, m.clone())])?;
    out.push(record(6, "(1+t)^M = 1 + Mt + O(t^2)", pow(&one_plus_t, m)?.truncate(1).compare(&linear)?));

    let lhs = pow(&a.substitute_power(*k), m)?;
    out.push(record(7, "A(t^k)^M = A(t)^M at t -> t^k", lhs.compare(&am.substitute_power(*k))?));
    Ok(out)
}

/// A random class with terms `c L^e`, `e` in `exps`, `|c| <= 2`.
pub fn random_class(rng: &mut impl Rng, exps: std::ops::RangeInclusive<i64>, window_low: i64) -> MotivicClass {
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    for e in exps {
        if rng.gen_bool(0.6) {
            terms.push((e, BigInt::from(rng.gen_range(-2i64..=2))));
        }
    }
    MotivicClass::from_terms(window_low, terms)
}

/// A random series with constant term 1 and small random coefficients.
pub fn random_unit_series(rng: &mut impl Rng, vars: usize, truncation: u32, window_low: i64) -> MultiSeries {
    let mut s = MultiSeries::one(vars, truncation, window_low);
    let monomials: Vec<Vec<u32>> = s.terms().skip(1).map(|(m, _)| m.to_vec()).collect();
    let terms = monomials.into_iter().map(|mono| (mono, random_class(rng, -3..=1, window_low)));
    s = s.add(&MultiSeries::from_terms(vars, truncation, window_low, terms).expect("shape")).expect("same shape");
    s
}

pub fn random_instance(rng: &mut impl Rng, vars: usize, truncation: u32, depth: i64) -> AxiomInstance {
    let w = -depth;
    AxiomInstance {
        a: random_unit_series(rng, vars, truncation, w),
        b: random_unit_series(rng, vars, truncation, w),
        m: random_class(rng, -2..=1, w),
        n: random_class(rng, -2..=1, w),
        k: rng.gen_range(2..=3),
    }
}

/// `1 + t + t^2 + ...` in one variable.
pub fn geometric_series(truncation: u32, window_low: i64) -> MultiSeries {
    let ones = vec![BigInt::from(1); truncation as usize + 1];
    MultiSeries::univariate_integers(&ones, truncation, window_low)
}

/// Compares `((1 - t)^(-1))^(L^k)` with `(1 - L^k t)^(-1)`.
pub fn lefschetz_rule(k: i64, truncation: u32, depth: i64) -> Result<SeriesComparison, SeriesError> {
    let lhs = pow(&geometric_series(truncation, -depth), &MotivicClass::monomial(1, k, -depth))?;
    let mut rhs = MultiSeries::one(1, truncation, -depth);
    rhs.mul_binomial_factor(&[1], &BigInt::from(1), k);
    lhs.compare(&rhs)
}
