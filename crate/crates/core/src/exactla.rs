//! Exact rational matrices with fraction-free (Bareiss) elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Converts an integral rational to `i64`, if it is one and fits.
pub fn to_i64(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        i64::try_from(q.numer()).ok()
    } else {
        None
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        f.debug_struct("RationalMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("entries", &rows)
            .finish()
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    /// Builds a matrix from integer rows; all rows must have equal length.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r.iter().map(|&x| rational(x)));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Result<Vec<BigRational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(BigRational::zero(), |acc, k| {
                acc + &self[(i, k)] * &other[(k, j)]
            })
        }))
    }

    /// Integer rows obtained by scaling each row by the lcm of its
    /// denominators, plus the product of those scale factors.
    fn cleared_rows(&self, extra: Option<&[BigRational]>) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale_product = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let mut row: Vec<&BigRational> = self.row(i).iter().collect();
                if let Some(b) = extra {
                    row.push(&b[i]);
                }
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                scale_product *= &l;
                row.iter()
                    .map(|q| q.numer() * (&l / q.denom()))
                    .collect()
            })
            .collect();
        (rows, scale_product)
    }

    /// Exact determinant via Bareiss elimination on the cleared integer
    /// matrix.
    pub fn determinant(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let (mut a, scale) = self.cleared_rows(None);
        let n = self.rows;
        if n == 0 {
            return Ok(BigRational::one());
        }
        let mut sign = 1;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            bareiss_step(&mut a, k, n, &prev);
            prev = a[k][k].clone();
        }
        let det = BigInt::from(sign) * &a[n - 1][n - 1];
        Ok(BigRational::new(det, scale))
    }

    /// Exact solution of `self · x = b`, checked by substitution before
    /// returning.
    pub fn solve(&self, b: &[BigRational]) -> Result<Vec<BigRational>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let n = self.rows;
        let (mut a, _) = self.cleared_rows(Some(b));
        let mut prev = BigInt::one();
        for k in 0..n {
            let p = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::Singular)?;
            a.swap(p, k);
            bareiss_step(&mut a, k, n + 1, &prev);
            prev = a[k][k].clone();
        }
        let mut x = vec![BigRational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = BigRational::from_integer(a[i][n].clone());
            for j in i + 1..n {
                acc -= BigRational::from_integer(a[i][j].clone()) * &x[j];
            }
            x[i] = acc / BigRational::from_integer(a[i][i].clone());
        }
        let check = self.mul_vec(&x)?;
        assert_eq!(check, b, "Bareiss back-substitution failed verification");
        Ok(x)
    }

    /// `self⁻¹`, by solving against each unit vector.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.rows;
        let mut inv = Self::zeros(n, self.cols);
        for j in 0..n {
            let e: Vec<BigRational> = (0..n)
                .map(|i| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect();
            let col = self.solve(&e)?;
            for (i, v) in col.into_iter().enumerate() {
                inv[(i, j)] = v;
            }
        }
        Ok(inv)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)].is_zero()))
    }

    pub fn max_abs_entry(&self) -> BigRational {
        self.entries
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

/// One fraction-free elimination step below pivot `(k, k)`. The division by
/// the previous pivot is exact.
fn bareiss_step(a: &mut [Vec<BigInt>], k: usize, width: usize, prev: &BigInt) {
    let (top, bottom) = a.split_at_mut(k + 1);
    let pivot_row = &top[k];
    for row in bottom.iter_mut() {
        for j in k + 1..width {
            let v = &pivot_row[k] * &row[j] - &row[k] * &pivot_row[j];
            debug_assert!((&v % prev).is_zero());
            row[j] = v / prev;
        }
        row[k] = BigInt::zero();
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;

    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.entries[i * self.cols + j]
    }
}
