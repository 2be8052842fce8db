use std::fmt;

use super::OracleError;

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `a^-1 mod p` for `a != 0`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut e, mut base, mut acc) = (p - 2, u64::from(a), 1u64);
    let p = u64::from(p);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u32
}

/// Rank of a row-major `rows x cols` matrix over F_p; `data` is destroyed.
pub fn rank_in_place(data: &mut [u32], rows: usize, cols: usize, p: u32) -> usize {
    let p64 = u64::from(p);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| data[r * cols + col] != 0) else { continue };
        if pivot != rank {
            for c in col..cols {
                data.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let inv = u64::from(inv_mod(data[rank * cols + col], p));
        for c in col..cols {
            data[rank * cols + c] = (u64::from(data[rank * cols + c]) * inv % p64) as u32;
        }
        for r in rank + 1..rows {
            let f = data[r * cols + col];
            if f == 0 {
                continue;
            }
            let f = p64 - u64::from(f);
            for c in col..cols {
                let v = u64::from(data[r * cols + c]) + f * u64::from(data[rank * cols + c]);
                data[r * cols + c] = (v % p64) as u32;
            }
        }
        rank += 1;
    }
    rank
}

/// A matrix over the prime field F_p with entries in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeFieldMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl PrimeFieldMatrix {
    /// Row-major entries, reduced mod `p`.
    pub fn new(p: u32, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self, OracleError> {
        if !is_prime(p) {
            return Err(OracleError::NotPrime(p));
        }
        if entries.len() != rows * cols {
            return Err(OracleError::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        let entries = entries.into_iter().map(|e| e % p).collect();
        Ok(Self { p, rows, cols, entries })
    }

    pub fn from_rows(p: u32, rows: &[&[u32]]) -> Result<Self, OracleError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(OracleError::Shape("ragged rows".into()));
        }
        Self::new(p, rows.len(), cols, rows.concat())
    }

    pub(crate) fn from_raw(p: u32, rows: usize, cols: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        Self { p, rows, cols, entries }
    }

    pub fn zero(p: u32, rows: usize, cols: usize) -> Self {
        Self { p, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1 % p;
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.cols + c] = v % self.p;
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        let mut data = self.entries.clone();
        rank_in_place(&mut data, self.rows, self.cols, self.p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = u64::from(self.p);
        let mut out = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = u64::from(self.get(i, k));
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let slot = &mut out[i * other.cols + j];
                    *slot = ((u64::from(*slot) + a * u64::from(other.get(k, j))) % p) as u32;
                }
            }
        }
        Self::from_raw(self.p, self.rows, other.cols, out)
    }

    /// `self + c * I`.
    pub fn add_scalar(&self, c: u32) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m.entries[i * self.cols + i] =
                ((u64::from(m.entries[i * self.cols + i]) + u64::from(c)) % u64::from(self.p)) as u32;
        }
        m
    }

    pub fn is_scalar(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self.get(i, j) == self.get(0, 0) } else { self.get(i, j) == 0 })
            })
    }

    /// Inverse by Gauss-Jordan elimination, if the matrix is invertible.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let p = u64::from(self.p);
        let w = 2 * n;
        let mut aug = vec![0u32; n * w];
        for i in 0..n {
            for j in 0..n {
                aug[i * w + j] = self.get(i, j);
            }
            aug[i * w + n + i] = 1 % self.p;
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| aug[r * w + col] != 0)?;
            for c in 0..w {
                aug.swap(pivot * w + c, col * w + c);
            }
            let inv = u64::from(inv_mod(aug[col * w + col], self.p));
            for c in 0..w {
                aug[col * w + c] = (u64::from(aug[col * w + c]) * inv % p) as u32;
            }
            for r in 0..n {
                let f = aug[r * w + col];
                if r == col || f == 0 {
                    continue;
                }
                let f = p - u64::from(f);
                for c in 0..w {
                    aug[r * w + c] = ((u64::from(aug[r * w + c]) + f * u64::from(aug[col * w + c])) % p) as u32;
                }
            }
        }
        let entries = (0..n).flat_map(|i| aug[i * w + n..i * w + w].to_vec()).collect();
        Some(Self::from_raw(self.p, n, n, entries))
    }
}

impl fmt::Debug for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}[", self.p)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Dimension of `{B : AB = BA}`, i.e. `n^2` minus the rank of `X -> AX - XA`.
pub fn commutant_dimension(a: &PrimeFieldMatrix) -> Result<usize, OracleError> {
    if !a.is_square() {
        return Err(OracleError::Shape(format!("{}x{} matrix is not square", a.rows, a.cols)));
    }
    let mut scratch = Vec::new();
    Ok(commutant_dimension_with(a.p, a.rows, &a.entries, &mut scratch))
}

/// [`commutant_dimension`] on raw row-major entries with a reusable buffer.
pub(crate) fn commutant_dimension_with(p: u32, n: usize, a: &[u32], scratch: &mut Vec<u32>) -> usize {
    let nn = n * n;
    scratch.clear();
    scratch.resize(nn * nn, 0);
    // row (k,l), column (i,j): coefficient of X_ij in (AX - XA)_kl
    for k in 0..n {
        for l in 0..n {
            let row = (k * n + l) * nn;
            for i in 0..n {
                scratch[row + i * n + l] += a[k * n + i];
            }
            for j in 0..n {
                let v = &mut scratch[row + k * n + j];
                *v = (*v + p - a[j * n + l]) % p;
            }
        }
    }
    for v in scratch.iter_mut() {
        *v %= p;
    }
    nn - rank_in_place(scratch, nn, nn, p)
}
