use std::fmt;
use std::ops::Index;

use num_traits::{Signed, ToPrimitive};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Field element usable as a matrix entry.
pub trait Scalar: Clone + fmt::Debug + PartialOrd + Signed + Send + Sync {
    /// Float fields pick the largest remaining pivot; exact fields take the
    /// first nonzero one.
    const PARTIAL_PIVOTING: bool;

    fn to_f64(&self) -> f64;

    /// Stable textual form used in reports.
    fn render(&self) -> String;
}

impl Scalar for Rational {
    const PARTIAL_PIVOTING: bool = false;

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn render(&self) -> String {
        format_rational(self)
    }
}

impl Scalar for f64 {
    const PARTIAL_PIVOTING: bool = true;

    fn to_f64(&self) -> f64 {
        *self
    }

    fn render(&self) -> String {
        format!("{self:?}")
    }
}

/// Row-major dense matrix.
///
/// All public accessors take **1-based** `(i, j)` indices, matching the way
/// the structured matrices are written down entrywise.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T = Rational> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(DenseMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Builds the matrix entrywise; `f` receives 1-based `(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        DenseMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// An `n x 1` column.
    pub fn column(values: Vec<T>) -> Self {
        DenseMatrix {
            rows: values.len(),
            cols: 1,
            entries: values,
        }
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

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i}, {j}) outside a {}x{} matrix",
            self.rows,
            self.cols
        );
        (i - 1) * self.cols + (j - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[self.offset(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        let k = self.offset(i, j);
        self.entries[k] = value;
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        let start = self.offset(i, 1);
        &self.entries[start..start + self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scaled(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn to_f64(&self) -> DenseMatrix<f64> {
        self.map(Scalar::to_f64)
    }

    /// Drops row `k` and column `k` (1-based).
    pub fn without_row_col(&self, k: usize) -> Self {
        assert!(self.is_square() && (1..=self.rows).contains(&k));
        let n = self.rows - 1;
        Self::from_fn(n, n, |i, j| {
            let si = if i >= k { i + 1 } else { i };
            let sj = if j >= k { j + 1 } else { j };
            self.get(si, sj).clone()
        })
    }

    /// Entries with their 1-based positions, row-major.
    pub fn iter_indexed(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        let cols = self.cols;
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / cols + 1, k % cols + 1, v))
    }
}

impl<T: Scalar> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        self.get(i, j)
    }
}

impl<T: Scalar> fmt::Display for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            let row: Vec<String> = self.row(i).iter().map(Scalar::render).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn mat_mul<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out: DenseMatrix<T> = DenseMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = &a.entries[i * a.cols + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..b.cols {
                let bkj = &b.entries[k * b.cols + j];
                if bkj.is_zero() {
                    continue;
                }
                let slot = &mut out.entries[i * b.cols + j];
                *slot = slot.clone() + aik.clone() * bkj.clone();
            }
        }
    }
    Ok(out)
}

pub fn mat_mul3<T: Scalar>(
    a: &DenseMatrix<T>,
    b: &DenseMatrix<T>,
    c: &DenseMatrix<T>,
) -> Result<DenseMatrix<T>> {
    mat_mul(&mat_mul(a, b)?, c)
}

pub fn mat_vec<T: Scalar>(a: &DenseMatrix<T>, x: &[T]) -> Result<Vec<T>> {
    if a.cols != x.len() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix times vector of length {}",
            a.rows,
            a.cols,
            x.len()
        )));
    }
    Ok((1..=a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .zip(x)
                .fold(T::zero(), |acc, (aij, xj)| acc + aij.clone() * xj.clone())
        })
        .collect())
}
