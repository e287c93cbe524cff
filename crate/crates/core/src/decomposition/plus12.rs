use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hitting::{build_h_plus12, require_closed_unit, require_range};
use crate::numerics::{compare, int, mat_mul3, powi, DenseMatrix, DiscrepancyReport, Rational};

fn check_band(order: usize, p: &Rational) -> Result<usize> {
    require_range("N", order, 6, usize::MAX)?;
    require_closed_unit(p)?;
    if p.is_zero() {
        return Err(Error::Degenerate(
            "the factors divide by p, got p = 0".into(),
        ));
    }
    Ok(order - 1)
}

fn pow(a: &Rational, k: i64) -> Rational {
    powi(a, k)
}

/// Identity with coordinates 1 and 2 swapped.
pub fn build_pn(order: usize) -> Result<DenseMatrix> {
    require_range("N", order, 3, usize::MAX)?;
    let m = order - 1;
    Ok(DenseMatrix::from_fn(m, m, |i, j| {
        let k = match i {
            1 => 2,
            2 => 1,
            _ => i,
        };
        int(i64::from(j == k))
    }))
}

pub fn build_ln(order: usize, p: &Rational) -> Result<DenseMatrix> {
    let m = check_band(order, p)?;
    let a = p - int(1);
    Ok(DenseMatrix::from_fn(m, m, |i, j| match (i, j) {
        _ if i == j => int(1),
        (2, 1) => -(int(1) / p),
        (3, 1) => -(&a / p),
        (3, 2) => &a - p * p,
        (4, 2) => p * &a,
        (4, 3) => -p.clone(),
        _ if i >= 5 && j == i - 2 => a.clone(),
        _ if i >= 5 && j == i - 1 => -p.clone(),
        _ => Rational::zero(),
    }))
}

pub fn build_un(order: usize, p: &Rational) -> Result<DenseMatrix> {
    let m = check_band(order, p)?;
    let a = p - int(1);
    let b = p - int(2);
    Ok(DenseMatrix::from_fn(m, m, |i, j| match (i, j) {
        (1, 1) => -p.clone(),
        (1, 2) => int(1),
        (2, 2) => int(1) / p,
        _ if i == m && j == m => (pow(&a, order as i64) - int(1)) / &b,
        (2, _) if j == m => a.clone(),
        _ if i >= 3 && j == m => (pow(&a, i as i64 + 1) - p + int(1)) / &b,
        _ if i >= 3 && i == j => int(1),
        _ => Rational::zero(),
    }))
}

pub fn ln_inverse_closed(order: usize, p: &Rational) -> Result<DenseMatrix> {
    let m = check_band(order, p)?;
    let a = p - int(1);
    let b = p - int(2);
    let entry = |k: i64| (pow(&a, k) - int(1)) / &b;
    Ok(DenseMatrix::from_fn(m, m, |i, j| {
        let (ii, jj) = (i as i64, j as i64);
        match (i, j) {
            _ if i == j => int(1),
            (2, 1) => int(1) / p,
            _ if i >= 3 && j == 1 => entry(ii - 1),
            _ if i >= 3 && j == 2 => entry(ii),
            _ if i >= 3 && 3 <= j && j < i => entry(ii - jj + 1),
            _ => Rational::zero(),
        }
    }))
}

pub fn un_inverse_closed(order: usize, p: &Rational) -> Result<DenseMatrix> {
    let m = check_band(order, p)?;
    let a = p - int(1);
    let a_n = pow(&a, order as i64);
    if a_n.is_one() {
        return Err(Error::Degenerate(format!(
            "(p - 1)^N = 1 at p = {p}, N = {order}"
        )));
    }
    Ok(DenseMatrix::from_fn(m, m, |i, j| match (i, j) {
        (1, 1) => -(int(1) / p),
        (1, 2) => int(1),
        (2, 2) => p.clone(),
        _ if i == m && j == m => (p - int(2)) / (&a_n - int(1)),
        _ if j == m => (pow(&a, i as i64 + 1) - p + int(1)) / (int(1) - &a_n),
        _ if i >= 3 && i == j => int(1),
        _ => Rational::zero(),
    }))
}

/// Compares `P L U` with the system matrix for a supplied upper factor `u`.
pub fn check_plus12_lu(order: usize, p: &Rational, u: &DenseMatrix) -> Result<DiscrepancyReport> {
    let h = build_h_plus12(order, p)?;
    let product = mat_mul3(&build_pn(order)?, &build_ln(order, p)?, u)?;
    Ok(
        compare(&product, &h, &Rational::zero())?
            .with_context(format!("plus12 LU N={order} p={p}")),
    )
}

pub fn verify_plus12_lu(order: usize, p: &Rational) -> Result<DiscrepancyReport> {
    check_plus12_lu(order, p, &build_un(order, p)?)
}

/// The printed eleven-case entry table for the inverse of the system matrix,
/// including the `1 / ((p-2)((p-1)^N - 1))` factor.
pub fn hn_inverse_closed(order: usize, p: &Rational) -> Result<DenseMatrix> {
    let m = check_band(order, p)?;
    let nn = order as i64;
    let a = p - int(1);
    let b = p - int(2);
    let a_n = pow(&a, nn);
    let scale = &b * (&a_n - int(1));
    if scale.is_zero() {
        return Err(Error::Degenerate(format!(
            "(p - 1)^N = 1 at p = {p}, N = {order}"
        )));
    }
    Ok(DenseMatrix::from_fn(m, m, |i, j| {
        let (ii, jj) = (i as i64, j as i64);
        let v = if i == 1 && j == 1 {
            &b * &b
        } else if i == 2 && j == 2 {
            &b * (&a_n - p * pow(&a, nn - 1) + p * p - p - int(1))
        } else if (i, j) == (1, 2) {
            -(&b * (pow(&a, nn - 1) - p + int(1)))
        } else if (i, j) == (2, 1) {
            p * &b * &b
        } else if i == 1 && 3 <= j && j < order {
            -(&b * (pow(&a, nn - jj + 1) - p + int(1)))
        } else if i == 2 && 3 <= j && j < order {
            -(p * &b * (pow(&a, nn - jj + 1) - p + int(1)))
        } else if 3 <= i && i <= order - 2 && j == 1 {
            &b * (pow(&a, ii) - int(1))
        } else if 3 <= i && i <= order - 2 && j == 2 {
            &b * (p * pow(&a, ii - 1) - pow(&a, nn - 1) - int(1))
        } else if 3 <= i && i < j && j < order {
            -((pow(&a, ii) - int(1)) * (pow(&a, nn - jj + 1) - p + int(1)))
        } else if 3 <= j && j <= i && i <= order - 2 {
            &b * (pow(&a, ii) - int(1)) + (pow(&a, -jj + 1) - int(1)) * (&a_n - pow(&a, ii))
        } else if i == order - 1 {
            &b * (pow(&a, nn - jj) - int(1))
        } else {
            unreachable!("cases cover every (i, j)")
        };
        v / &scale
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{invert, mat_mul, rat};

    fn grid() -> Vec<Rational> {
        vec![rat(1, 2), rat(1, 3), rat(1, 4), rat(3, 7), rat(2, 5)]
    }

    fn is_identity(m: &DenseMatrix) -> bool {
        *m == DenseMatrix::identity(m.rows())
    }

    #[test]
    fn permutation_is_an_involution() {
        for order in 3..10 {
            let p = build_pn(order).unwrap();
            assert!(is_identity(&mat_mul(&p, &p).unwrap()));
        }
        assert_eq!(build_pn(6).unwrap()[(1, 2)], int(1));
    }

    #[test]
    fn displayed_entries() {
        assert_eq!(build_ln(6, &rat(1, 4)).unwrap()[(2, 1)], int(-4));
        assert_eq!(build_un(7, &rat(1, 2)).unwrap()[(6, 6)], rat(43, 64));
        assert_eq!(ln_inverse_closed(6, &rat(1, 4)).unwrap()[(2, 1)], int(4));
        assert!(build_ln(5, &rat(1, 2)).is_err());
        assert!(matches!(build_un(7, &int(0)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn lu_holds_on_grid() {
        for order in 6..15 {
            for p in grid().into_iter().chain([int(1)]) {
                assert!(
                    verify_plus12_lu(order, &p).unwrap().is_empty(),
                    "N={order} p={p}"
                );
            }
        }
    }

    #[test]
    fn perturbed_corner_is_detected() {
        let p = rat(2, 5);
        let mut u = build_un(10, &p).unwrap();
        u.set(9, 9, &u[(9, 9)] + int(1));
        let report = check_plus12_lu(10, &p, &u).unwrap();
        assert!(report.entries.iter().any(|d| d.j == 9));
    }

    #[test]
    fn printed_factor_inverses_hold() {
        for order in 6..13 {
            for p in grid() {
                let (l, u) = (build_ln(order, &p).unwrap(), build_un(order, &p).unwrap());
                assert!(is_identity(
                    &mat_mul(&l, &ln_inverse_closed(order, &p).unwrap()).unwrap()
                ));
                assert!(is_identity(
                    &mat_mul(&u, &un_inverse_closed(order, &p).unwrap()).unwrap()
                ));
            }
        }
    }

    #[test]
    fn printed_inverse_table_holds() {
        for order in 6..13 {
            for p in grid() {
                let h = build_h_plus12(order, &p).unwrap();
                let closed = hn_inverse_closed(order, &p).unwrap();
                assert_eq!(closed, invert(&h).unwrap(), "N={order} p={p}");
                let product = mat_mul3(
                    &un_inverse_closed(order, &p).unwrap(),
                    &ln_inverse_closed(order, &p).unwrap(),
                    &build_pn(order).unwrap(),
                )
                .unwrap();
                assert_eq!(closed, product);
            }
        }
        assert_eq!(
            hn_inverse_closed(7, &rat(1, 2)).unwrap()[(1, 1)],
            rat(64, 43)
        );
    }
}
