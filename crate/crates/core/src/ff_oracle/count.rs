use std::collections::BTreeMap;

use rayon::prelude::*;

use super::matrix::{commutant_dimension_with, is_prime, rank_in_place, PrimeFieldMatrix};
use super::poly::JordanClassifier;
use super::{EnumOptions, OracleError};
use crate::combinatorics::Partition;

const CHUNK: u128 = 1 << 12;

/// Runs `visit` over every vector in `F_p^len`, chunk by chunk, returning
/// one accumulator per chunk in enumeration order.
fn enumerate<T, F>(p: u32, len: usize, opts: &EnumOptions, visit: F) -> Result<Vec<T>, OracleError>
where
    T: Default + Send,
    F: Fn(&mut T, &[u32]) + Sync,
{
    if !is_prime(p) {
        return Err(OracleError::NotPrime(p));
    }
    let total =
        u128::from(p).checked_pow(len as u32).filter(|&t| t <= opts.budget).ok_or(OracleError::BudgetExceeded {
            required: u128::from(p).checked_pow(len as u32).unwrap_or(u128::MAX),
            budget: opts.budget,
        })?;
    let chunks = total.div_ceil(CHUNK) as u64;
    let run_chunk = |c: u64| {
        let start = u128::from(c) * CHUNK;
        let end = (start + CHUNK).min(total);
        let mut digits = vec![0u32; len];
        let mut rest = start;
        for d in digits.iter_mut().rev() {
            *d = (rest % u128::from(p)) as u32;
            rest /= u128::from(p);
        }
        let mut acc = T::default();
        for _ in start..end {
            visit(&mut acc, &digits);
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < p {
                    break;
                }
                *d = 0;
            }
        }
        acc
    };
    let run = || (0..chunks).into_par_iter().map(run_chunk).collect::<Vec<T>>();
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| OracleError::ThreadPool(e.to_string()))
            .map(|pool| pool.install(run)),
        None => Ok(run()),
    }
}

/// Number of pairs `(A, B)` of `n x n` matrices over F_p with `AB = BA`.
pub fn count_commuting_pairs(n: usize, p: u32, opts: &EnumOptions) -> Result<u128, OracleError> {
    #[derive(Default)]
    struct Acc {
        total: u128,
        scratch: Vec<u32>,
    }
    let chunks = enumerate(p, n * n, opts, |acc: &mut Acc, a| {
        let d = commutant_dimension_with(p, n, a, &mut acc.scratch);
        acc.total += u128::from(p).pow(d as u32);
    })?;
    Ok(chunks.into_iter().map(|c| c.total).sum())
}

/// [`count_commuting_pairs`] split by the Jordan type of `A`.
pub fn count_commuting_pairs_by_type(
    n: usize,
    p: u32,
    opts: &EnumOptions,
) -> Result<BTreeMap<Partition, u128>, OracleError> {
    #[derive(Default)]
    struct Acc {
        by_type: BTreeMap<Partition, u128>,
        scratch: Vec<u32>,
    }
    let classifier = JordanClassifier::new(p, n);
    let chunks = enumerate(p, n * n, opts, |acc: &mut Acc, a| {
        let d = commutant_dimension_with(p, n, a, &mut acc.scratch);
        let ty = classifier.jordan_type(&PrimeFieldMatrix::from_raw(p, n, n, a.to_vec()));
        *acc.by_type.entry(ty).or_default() += u128::from(p).pow(d as u32);
    })?;
    let mut out = BTreeMap::new();
    for chunk in chunks {
        for (ty, v) in chunk.by_type {
            *out.entry(ty).or_default() += v;
        }
    }
    Ok(out)
}

/// Number of pairs `(A, B)` on `V_1 + ... + V_r` with `A` of cyclic block
/// type (`A_i : V_i -> V_{i+1}`), `B` of diagonal block type, and `AB = BA`.
pub fn count_cyclic_pairs(dims: &[usize], p: u32, opts: &EnumOptions) -> Result<u128, OracleError> {
    let r = dims.len();
    if r == 0 {
        return Err(OracleError::Shape("need at least one block".into()));
    }
    let next = |i: usize| (i + 1) % r;
    // offsets of A_i (n_{i+1} x n_i) in the enumerated vector and of B_i
    let mut a_off = Vec::with_capacity(r);
    let mut b_off = Vec::with_capacity(r);
    let (mut a_len, mut b_len) = (0, 0);
    for i in 0..r {
        a_off.push(a_len);
        a_len += dims[next(i)] * dims[i];
        b_off.push(b_len);
        b_len += dims[i] * dims[i];
    }
    #[derive(Default)]
    struct Acc {
        total: u128,
        scratch: Vec<u32>,
    }
    let chunks = enumerate(p, a_len, opts, |acc: &mut Acc, a| {
        // equations (B_{i+1} A_i - A_i B_i)[k, l] = 0, one row per (i, k, l)
        let m = &mut acc.scratch;
        m.clear();
        m.resize(a_len * b_len, 0);
        let mut row = 0;
        for i in 0..r {
            let (ni, nj) = (dims[i], dims[next(i)]);
            let ai = |s: usize, t: usize| a[a_off[i] + s * ni + t];
            for k in 0..nj {
                for l in 0..ni {
                    let base = row * b_len;
                    for s in 0..nj {
                        let col = b_off[next(i)] + k * nj + s;
                        m[base + col] = (m[base + col] + ai(s, l)) % p;
                    }
                    for s in 0..ni {
                        let col = b_off[i] + s * ni + l;
                        m[base + col] = (m[base + col] + p - ai(k, s)) % p;
                    }
                    row += 1;
                }
            }
        }
        let d = b_len - rank_in_place(m, a_len, b_len, p);
        acc.total += u128::from(p).pow(d as u32);
    })?;
    Ok(chunks.into_iter().map(|c| c.total).sum())
}

/// Order of `GL_n(F_p)` by counting invertible matrices.
pub fn count_invertible(n: usize, p: u32, opts: &EnumOptions) -> Result<u128, OracleError> {
    #[derive(Default)]
    struct Acc {
        total: u128,
        scratch: Vec<u32>,
    }
    let chunks = enumerate(p, n * n, opts, |acc: &mut Acc, a| {
        acc.scratch.clear();
        acc.scratch.extend_from_slice(a);
        if rank_in_place(&mut acc.scratch, n, n, p) == n {
            acc.total += 1;
        }
    })?;
    Ok(chunks.into_iter().map(|c| c.total).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> EnumOptions {
        EnumOptions::default()
    }

    #[test]
    fn small_commuting_counts() {
        for p in [2, 3, 5] {
            assert_eq!(count_commuting_pairs(1, p, &opts()).unwrap(), u128::from(p * p));
        }
        assert_eq!(count_commuting_pairs(0, 2, &opts()).unwrap(), 1);
        assert_eq!(count_commuting_pairs(2, 2, &opts()).unwrap(), 88);
        assert_eq!(count_commuting_pairs(2, 3, &opts()).unwrap(), 945);
    }

    #[test]
    fn by_type_n2_p2() {
        let by = count_commuting_pairs_by_type(2, 2, &opts()).unwrap();
        assert_eq!(by[&"1,1".parse::<Partition>().unwrap()], 64);
        assert_eq!(by[&"2".parse::<Partition>().unwrap()], 24);
        assert_eq!(count_commuting_pairs_by_type(1, 3, &opts()).unwrap()[&"1".parse::<Partition>().unwrap()], 9);
    }

    #[test]
    fn cyclic_small() {
        for p in [2, 3] {
            assert_eq!(count_cyclic_pairs(&[1, 0], p, &opts()).unwrap(), u128::from(p));
        }
        assert_eq!(count_cyclic_pairs(&[1, 1], 2, &opts()).unwrap(), 10);
        // r = 1 is the ordinary commuting variety
        assert_eq!(count_cyclic_pairs(&[2], 2, &opts()).unwrap(), 88);
    }

    #[test]
    fn gl_orders() {
        assert_eq!(count_invertible(2, 2, &opts()).unwrap(), 6);
        assert_eq!(count_invertible(2, 3, &opts()).unwrap(), 48);
    }

    #[test]
    fn budget_and_prime_checks() {
        let tight = EnumOptions { threads: None, budget: 100 };
        assert_eq!(
            count_commuting_pairs(2, 5, &tight),
            Err(OracleError::BudgetExceeded { required: 625, budget: 100 })
        );
        assert_eq!(count_commuting_pairs(2, 4, &opts()), Err(OracleError::NotPrime(4)));
    }

    #[test]
    fn thread_count_does_not_change_totals() {
        let serial = count_commuting_pairs(3, 2, &EnumOptions::with_threads(1)).unwrap();
        let parallel = count_commuting_pairs(3, 2, &EnumOptions::with_threads(4)).unwrap();
        assert_eq!(serial, parallel);
    }
}
