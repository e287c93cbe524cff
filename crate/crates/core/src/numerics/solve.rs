use super::matrix::{DenseMatrix, Scalar};
use crate::error::{Error, Result};

/// Pivot row for column `col`, searching rows `col..`. Exact fields take the
/// first nonzero entry, float fields the largest magnitude.
fn pivot_row<T: Scalar>(rows: &[Vec<T>], col: usize) -> Option<usize> {
    let candidates = (col..rows.len()).filter(|&r| !rows[r][col].is_zero());
    if T::PARTIAL_PIVOTING {
        candidates.fold(None, |best: Option<usize>, r| match best {
            Some(b) if rows[b][col].abs() >= rows[r][col].abs() => Some(b),
            _ => Some(r),
        })
    } else {
        candidates.into_iter().next()
    }
}

fn to_rows<T: Scalar>(a: &DenseMatrix<T>) -> Vec<Vec<T>> {
    (1..=a.rows()).map(|i| a.row(i).to_vec()).collect()
}

fn require_square<T: Scalar>(a: &DenseMatrix<T>) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "expected a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )))
    }
}

/// Gauss-Jordan reduction of `[a | rhs]`. On success `rhs` holds `a^{-1} rhs`.
fn reduce<T: Scalar>(mut a: Vec<Vec<T>>, mut rhs: Vec<Vec<T>>) -> Result<Vec<Vec<T>>> {
    let n = a.len();
    for col in 0..n {
        let p = pivot_row(&a, col).ok_or(Error::Singular { column: col + 1 })?;
        a.swap(col, p);
        rhs.swap(col, p);

        let inv = T::one() / a[col][col].clone();
        for x in a[col].iter_mut().skip(col) {
            *x = x.clone() * inv.clone();
        }
        for x in rhs[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }

        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let (src, dst) = pair_mut(&mut a, col, r);
            eliminate(&mut dst[col..], &src[col..], &factor);
            let (src, dst) = pair_mut(&mut rhs, col, r);
            eliminate(dst, src, &factor);
        }
    }
    Ok(rhs)
}

/// Shared borrow of `v[src]` alongside a mutable borrow of `v[dst]`.
fn pair_mut<T>(v: &mut [T], src: usize, dst: usize) -> (&T, &mut T) {
    if src < dst {
        let (lo, hi) = v.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    }
}

/// `dst -= factor * src`, elementwise.
fn eliminate<T: Scalar>(dst: &mut [T], src: &[T], factor: &T) {
    for (x, y) in dst.iter_mut().zip(src) {
        *x = x.clone() - factor.clone() * y.clone();
    }
}

/// Solves `a x = b`. Exact in the rational field.
pub fn gauss_solve<T: Scalar>(a: &DenseMatrix<T>, b: &[T]) -> Result<Vec<T>> {
    require_square(a)?;
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for a {}x{} system",
            b.len(),
            a.rows(),
            a.cols()
        )));
    }
    let rhs = b.iter().map(|x| vec![x.clone()]).collect();
    Ok(reduce(to_rows(a), rhs)?
        .into_iter()
        .map(|mut r| r.pop().expect("one column"))
        .collect())
}

pub fn invert<T: Scalar>(a: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    require_square(a)?;
    let n = a.rows();
    let eye = to_rows(&DenseMatrix::<T>::identity(n));
    let inv = reduce(to_rows(a), eye)?;
    DenseMatrix::from_rows(inv)
}

pub fn determinant<T: Scalar>(a: &DenseMatrix<T>) -> Result<T> {
    require_square(a)?;
    let mut rows = to_rows(a);
    let n = rows.len();
    let mut det = T::one();
    for col in 0..n {
        let Some(p) = pivot_row(&rows, col) else {
            return Ok(T::zero());
        };
        if p != col {
            rows.swap(col, p);
            det = -det;
        }
        let pivot = rows[col][col].clone();
        det = det * pivot.clone();
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() / pivot.clone();
            let (src, dst) = pair_mut(&mut rows, col, r);
            eliminate(&mut dst[col..], &src[col..], &factor);
        }
    }
    Ok(det)
}
