//! Dense linear algebra over a prime field `F_p` with the prime chosen at runtime.
//!
//! Everything downstream (cyclic group representations, `P(1)` comodules,
//! the brute-force oracles) reduces to ranks of powers of nilpotent
//! operators, so the two workhorses here are [`FpMatrix::rref`] and
//! [`FpMatrix::nilpotent_block_sizes`].

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// An odd prime, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Self> {
        if p.is_multiple_of(2) {
            return Err(Error::EvenPrime(p));
        }
        if p < 3
            || (3..)
                .step_by(2)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `n = p - 1`, the height of the E-theory.
    #[inline]
    pub fn n(self) -> i64 {
        self.0 as i64 - 1
    }

    /// The degree `2n` by which `P^1` raises cohomological degree.
    #[inline]
    pub fn theta_degree(self) -> i64 {
        2 * self.n()
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(
            !a.is_multiple_of(self.0),
            "zero has no inverse mod {}",
            self.0
        );
        self.pow(a, self.0 - 2)
    }

    pub fn pow(self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A dense row-major matrix with entries in `{0, .., p-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    prime: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(prime: Prime, rows: usize, cols: usize) -> Self {
        FpMatrix {
            prime,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(prime: Prime, dim: usize) -> Self {
        let mut m = Self::zeros(prime, dim, dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    pub fn from_rows<R: AsRef<[i64]>>(prime: Prime, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(prime, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, prime.reduce(x));
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.prime
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(v < self.prime.0);
        self.data[i * self.cols + j] = v;
    }

    /// Adds `v` (any integer) to entry `(i, j)`.
    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        let cur = self.get(i, j) as i64;
        let p = self.prime;
        self.set(i, j, p.reduce(cur + v));
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.prime, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.prime, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.prime;
        let mut m = self.clone();
        m.data.iter_mut().for_each(|x| *x = p.mul(*x, c));
        m
    }

    pub fn checked_mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.rows || self.prime != other.prime {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.prime.0 as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let acc = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (o, &b) in acc.iter_mut().zip(other.row(k)) {
                    *o = (*o + a * b as u64) % p;
                }
            }
        }
        Ok(FpMatrix {
            prime: self.prime,
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub fn pow(&self, mut exp: u32) -> Result<FpMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Self::identity(self.prime, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Kronecker product, with `(i, k) ⊗ (j, l)` stored at `(i * b.rows + j, k * b.cols + l)`.
    pub fn kron(&self, other: &FpMatrix) -> FpMatrix {
        let p = self.prime;
        let mut m = Self::zeros(p, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.rows {
                    for l in 0..other.cols {
                        m.set(
                            i * other.rows + j,
                            k * other.cols + l,
                            p.mul(a, other.get(j, l)),
                        );
                    }
                }
            }
        }
        m
    }

    fn zip_with(&self, other: &FpMatrix, f: impl Fn(u32, u32) -> u32) -> FpMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        FpMatrix {
            prime: self.prime,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Reduced row-echelon form and the strictly increasing list of pivot columns.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.prime;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = p.inv(self.get(r, c));
            for j in c..cols {
                let v = self.get(r, j);
                self.set(r, j, p.mul(v, inv));
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let pu = p.0 as u64;
            let eliminate = |row: &mut [u32]| {
                let f = row[c] as u64;
                if f == 0 {
                    return;
                }
                let nf = pu - f;
                for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = ((*x as u64 + nf * y as u64) % pu) as u32;
                }
            };
            before.chunks_mut(cols).for_each(eliminate);
            after.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank over `F_p`; the empty matrix has rank 0.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminate along the shorter side.
        if self.rows > self.cols {
            self.transpose().rref_in_place().len()
        } else {
            self.clone().rref_in_place().len()
        }
    }

    /// A basis of the null space `{v : M v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let p = self.prime;
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = p.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Jordan type of a nilpotent operator, as block lengths in ascending order.
    ///
    /// The number of blocks of length at least `k` is `rank(N^{k-1}) - rank(N^k)`.
    pub fn nilpotent_block_sizes(&self) -> Result<Vec<usize>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let dim = self.rows;
        let mut ranks = vec![dim];
        let mut image = Self::identity(self.prime, dim);
        while *ranks.last().unwrap() > 0 {
            if ranks.len() > dim {
                return Err(Error::NotNilpotent);
            }
            // Keep only a basis of im(N^k) as columns so each step shrinks.
            let next = self.checked_mul(&image)?;
            let (basis, pivots) = next.transpose().rref();
            let rank = pivots.len();
            if rank == *ranks.last().unwrap() {
                return Err(Error::NotNilpotent);
            }
            let rows: Vec<usize> = (0..rank).collect();
            let cols: Vec<usize> = (0..dim).collect();
            image = basis.select(&rows, &cols).transpose();
            ranks.push(rank);
        }
        Ok(blocks_from_ranks(&ranks))
    }
}

/// Turns the rank sequence `rank(N^0), rank(N^1), ..` (ending in 0) into block lengths.
pub fn blocks_from_ranks(ranks: &[usize]) -> Vec<usize> {
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut blocks = Vec::new();
    for (k, &count) in at_least.iter().enumerate() {
        let longer = at_least.get(k + 1).copied().unwrap_or(0);
        blocks.extend(std::iter::repeat_n(k + 1, count - longer));
    }
    blocks
}

impl Add for &FpMatrix {
    type Output = FpMatrix;
    fn add(self, rhs: &FpMatrix) -> FpMatrix {
        let p = self.prime;
        self.zip_with(rhs, |a, b| p.add(a, b))
    }
}

impl Sub for &FpMatrix {
    type Output = FpMatrix;
    fn sub(self, rhs: &FpMatrix) -> FpMatrix {
        let p = self.prime;
        self.zip_with(rhs, |a, b| p.add(a, p.neg(b)))
    }
}

impl Mul for &FpMatrix {
    type Output = FpMatrix;
    fn mul(self, rhs: &FpMatrix) -> FpMatrix {
        self.checked_mul(rhs).expect("matrix shapes must agree")
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FpMatrix over F_{} ({}x{})",
            self.prime, self.rows, self.cols
        )?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}
