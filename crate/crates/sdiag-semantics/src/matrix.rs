use std::fmt;

use num_rational::Rational64;

use crate::error::{check_dims, SemanticsError};

pub trait Semiring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn render(&self) -> String;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Semiring for bool {
    fn zero() -> bool {
        false
    }
    fn one() -> bool {
        true
    }
    fn add(&self, other: &bool) -> bool {
        *self || *other
    }
    fn mul(&self, other: &bool) -> bool {
        *self && *other
    }
    fn inverse(&self) -> Option<bool> {
        self.then_some(true)
    }
    fn render(&self) -> String {
        u8::from(*self).to_string()
    }
}

impl Semiring for u64 {
    fn zero() -> u64 {
        0
    }
    fn one() -> u64 {
        1
    }
    fn add(&self, other: &u64) -> u64 {
        self + other
    }
    fn mul(&self, other: &u64) -> u64 {
        self * other
    }
    fn inverse(&self) -> Option<u64> {
        (*self == 1).then_some(1)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Semiring for Rational64 {
    fn zero() -> Rational64 {
        Rational64::from_integer(0)
    }
    fn one() -> Rational64 {
        Rational64::from_integer(1)
    }
    fn add(&self, other: &Rational64) -> Rational64 {
        self + other
    }
    fn mul(&self, other: &Rational64) -> Rational64 {
        self * other
    }
    fn inverse(&self) -> Option<Rational64> {
        (*self != Self::zero()).then(|| self.recip())
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

/// A `rows × cols` matrix acting on column vectors: a morphism `cols → rows`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Semiring> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Matrix<S> {
        Matrix {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<S>>, cols: usize) -> Result<Matrix<S>, SemanticsError> {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            check_dims(row.len(), cols)?;
            entries.extend(row);
        }
        Ok(Matrix { rows: r, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Matrix<S> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Matrix<S> {
        Matrix::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// Column `j` is the basis vector at `images[j]`.
    pub fn permutation(images: &[usize]) -> Matrix<S> {
        let n = images.len();
        Matrix::from_fn(n, n, |i, j| if images[j] == i { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.entries[i * self.cols + j].clone()
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn plus(&self, other: &Matrix<S>) -> Result<Matrix<S>, SemanticsError> {
        check_dims(self.rows, other.rows)?;
        check_dims(self.cols, other.cols)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        })
    }

    /// First `self`, then `other`: the product `other · self`.
    pub fn then(&self, other: &Matrix<S>) -> Result<Matrix<S>, SemanticsError> {
        check_dims(self.rows, other.cols)?;
        let mut out: Matrix<S> = Matrix::zeros(other.rows, self.cols);
        for i in 0..other.rows {
            for k in 0..other.cols {
                let a = &other.entries[i * other.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let b = &self.entries[k * self.cols + j];
                    let cell: &mut S = &mut out.entries[i * self.cols + j];
                    *cell = cell.add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &Matrix<S>) -> Matrix<S> {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    pub fn kronecker(&self, other: &Matrix<S>) -> Matrix<S> {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        Matrix::from_fn(r, c, |i, j| {
            let a = self.get(i / other.rows, j / other.cols);
            a.mul(&other.get(i % other.rows, j % other.cols))
        })
    }
}

impl<S: Semiring> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).render()).collect();
            write!(f, "\n[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
