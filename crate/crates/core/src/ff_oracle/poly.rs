//! Polynomials over F_p and Jordan types of matrices.
//!
//! A polynomial is a coefficient vector, lowest degree first, without
//! trailing zeros.

use std::collections::BTreeMap;

use super::matrix::{inv_mod, PrimeFieldMatrix};
use crate::combinatorics::Partition;

pub type Poly = Vec<u32>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> usize {
    a.len().saturating_sub(1)
}

pub fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = u64::from(p);
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + u64::from(*x) * u64::from(*y)) % p64;
        }
    }
    trim(out.into_iter().map(|v| v as u32).collect())
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn poly_divrem(a: &[u32], b: &[u32], p: u32) -> (Poly, Poly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let p64 = u64::from(p);
    let mut rem: Vec<u32> = a.to_vec();
    let db = degree(b);
    let lead_inv = u64::from(inv_mod(*b.last().expect("nonzero"), p));
    if rem.len() < b.len() {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![0u32; rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = u64::from(rem[i + db]) * lead_inv % p64;
        quot[i] = c as u32;
        if c == 0 {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let sub = c * u64::from(*bj) % p64;
            rem[i + j] = ((u64::from(rem[i + j]) + p64 - sub) % p64) as u32;
        }
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

/// Monic irreducible polynomials of degree `1..=max_degree` over F_p, by
/// trial division of every monic candidate by the irreducibles found so far.
pub fn irreducibles(p: u32, max_degree: usize) -> Vec<Poly> {
    let mut found: Vec<Poly> = Vec::new();
    for d in 1..=max_degree {
        let count = (p as usize).pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut x = idx;
            for _ in 0..d {
                cand.push((x % p as usize) as u32);
                x /= p as usize;
            }
            cand.push(1);
            let reducible =
                found.iter().take_while(|g| 2 * degree(g) <= d).any(|g| poly_divrem(&cand, g, p).1.is_empty());
            if !reducible {
                found.push(cand);
            }
        }
    }
    found
}

/// Characteristic polynomial `det(xI - A)`, via reduction to upper
/// Hessenberg form followed by the standard determinant recurrence.
pub fn char_poly(a: &PrimeFieldMatrix) -> Poly {
    let n = a.rows();
    let p = a.p();
    let p64 = u64::from(p);
    let mut h: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(a.get(i, j))).collect()).collect();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = u64::from(inv_mod(h[j + 1][j] as u32, p));
        for i in j + 2..n {
            let u = h[i][j] * inv % p64;
            if u == 0 {
                continue;
            }
            let pivot = h[j + 1].clone();
            for (x, y) in h[i].iter_mut().zip(&pivot) {
                *x = (*x + p64 - u * y % p64) % p64;
            }
            for row in h.iter_mut() {
                row[j + 1] = (row[j + 1] + u * row[i]) % p64;
            }
        }
    }
    // c[m] = char poly of the leading m x m block
    let mut c: Vec<Poly> = vec![vec![1]];
    for m in 1..=n {
        let hm = m - 1;
        // (x - h_mm) c[m-1]
        let mut next = poly_mul(&[(p64 - h[hm][hm]) as u32 % p, 1], &c[m - 1], p);
        let mut prod = 1u64;
        for i in 1..m {
            prod = prod * h[hm - i + 1][hm - i] % p64;
            let coef = prod * h[hm - i][hm] % p64;
            if coef == 0 {
                continue;
            }
            let term = poly_mul(&[coef as u32], &c[m - i - 1], p);
            next = poly_sub(&next, &term, p);
        }
        c.push(next);
    }
    c.pop().expect("nonempty")
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// `g(A)` by Horner's rule.
pub fn eval_at_matrix(g: &[u32], a: &PrimeFieldMatrix) -> PrimeFieldMatrix {
    let n = a.rows();
    let mut acc = PrimeFieldMatrix::zero(a.p(), n, n);
    for c in g.iter().rev() {
        acc = acc.mul(a).add_scalar(*c);
    }
    acc
}

/// Jordan types of `n x n` matrices over F_p, with the irreducible
/// polynomials of degree `<= n` computed once.
#[derive(Clone, Debug)]
pub struct JordanClassifier {
    p: u32,
    n: usize,
    irreducibles: Vec<Poly>,
}

impl JordanClassifier {
    pub fn new(p: u32, n: usize) -> Self {
        Self { p, n, irreducibles: irreducibles(p, n) }
    }

    /// Multiset of Jordan block sizes over the algebraic closure.
    ///
    /// For each irreducible factor `g` of the characteristic polynomial the
    /// ranks `r_j = rank g(A)^j` give `(r_{j-1} - 2 r_j + r_{j+1}) / deg g`
    /// elementary divisors `g^j`; each splits into `deg g` blocks of size `j`
    /// over the closure, since finite fields are perfect.
    pub fn jordan_type(&self, a: &PrimeFieldMatrix) -> Partition {
        assert!(a.is_square() && a.rows() == self.n && a.p() == self.p, "matrix does not match the classifier");
        let mut chi = char_poly(a);
        let mut sizes: BTreeMap<u32, u32> = BTreeMap::new();
        for g in &self.irreducibles {
            if degree(&chi) == 0 {
                break;
            }
            let mut mult = 0;
            loop {
                let (q, r) = poly_divrem(&chi, g, self.p);
                if !r.is_empty() {
                    break;
                }
                chi = q;
                mult += 1;
            }
            if mult == 0 {
                continue;
            }
            let d = degree(g);
            let ga = eval_at_matrix(g, a);
            let mut ranks = vec![self.n];
            let mut power = ga.clone();
            for _ in 0..=mult {
                ranks.push(power.rank());
                power = power.mul(&ga);
            }
            for e in 1..=mult {
                let count = (ranks[e - 1] + ranks[e + 1] - 2 * ranks[e]) / d;
                if count > 0 {
                    *sizes.entry(e as u32).or_default() += (count * d) as u32;
                }
            }
        }
        Partition::from_multiplicities(&sizes).expect("positive sizes")
    }
}
