use num_traits::Zero;

use crate::error::Result;
use crate::hitting::{build_h_pm1, require_open_unit, require_range};
use crate::numerics::{compare, int, invert, mat_mul3, DenseMatrix, DiscrepancyReport, Rational};

fn size(n: usize) -> Result<usize> {
    require_range("n", n, 2, usize::MAX)?;
    Ok(2 * (2 * n - 1))
}

/// Upper-triangular all-ones matrix of order `2(2n - 1)`.
pub fn build_u2n(n: usize) -> Result<DenseMatrix> {
    let s = size(n)?;
    Ok(DenseMatrix::from_fn(s, s, |i, j| int(i64::from(j >= i))))
}

/// The seven-case middle factor, cases tried in printed order.
pub fn build_r2n(n: usize, p: &Rational) -> Result<DenseMatrix> {
    require_open_unit(p)?;
    let s = size(n)?;
    let m = 2 * n;
    Ok(DenseMatrix::from_fn(s, s, |i, j| {
        let odd = i % 2 == 1;
        if i == j && odd && i < m {
            int(2)
        } else if i == j && !odd && i < m {
            int(3) - int(2) * p
        } else if i == j && odd && m <= i {
            int(2) * p
        } else if i != j && i < m && j < m {
            int(2) - p
        } else if i != j && (m < i || m < j) {
            p.clone()
        } else {
            int(1)
        }
    }))
}

/// The printed nine-case table for the inverse of [`build_r2n`].
pub fn r2n_inverse_closed(n: usize, p: &Rational) -> Result<DenseMatrix> {
    require_open_unit(p)?;
    let s = size(n)?;
    let m = 2 * n;
    let (nn, q) = (int(n as i64), int(1) - p);
    Ok(DenseMatrix::from_fn(s, s, |i, j| {
        let (io, jo) = (i % 2 == 1, j % 2 == 1);
        let v = if io && i == j {
            (&nn - &q) / p
        } else if !io && i == j && i != m {
            (&nn - p) / &q
        } else if i == j && i == m {
            int(2) * (&nn - p) / &q
        } else if io && jo && ((i < m && m < j) || (j < m && m < i)) {
            -(&q / p)
        } else if !io && !jo && i != j && ((i <= m && m <= j) || (j <= m && m <= i)) {
            -(p / &q)
        } else if io != jo && ((i <= m && m <= j) || (j <= m && m <= i)) {
            int(-1)
        } else {
            Rational::zero()
        };
        v / &nn
    }))
}

/// Compares `U^{-1} R tU^{-1}` with the block system matrix for a supplied
/// middle factor `r`.
pub fn check_pm1_decomposition(
    n: usize,
    p: &Rational,
    r: &DenseMatrix,
) -> Result<DiscrepancyReport> {
    let (h, _) = build_h_pm1(n, p)?;
    let u_inv = invert(&build_u2n(n)?)?;
    let product = mat_mul3(&u_inv, r, &u_inv.transpose())?;
    Ok(compare(&product, &h, &Rational::zero())?
        .with_context(format!("pm1 decomposition n={n} p={p}")))
}

pub fn verify_pm1_decomposition(n: usize, p: &Rational) -> Result<DiscrepancyReport> {
    check_pm1_decomposition(n, p, &build_r2n(n, p)?)
}

/// The printed sixteen-case entry table for the inverse of the block system,
/// including the `1 / (4np(1-p))` factor.
pub fn h2n_inverse_closed(n: usize, p: &Rational) -> Result<DenseMatrix> {
    require_open_unit(p)?;
    let s = size(n)?;
    let m = 2 * n;
    let (nn, q) = (n as i64, int(1) - p);
    let scale = int(4 * nn) * p * &q;
    let two_p = int(2) * p;
    Ok(DenseMatrix::from_fn(s, s, |i, j| {
        let (io, jo) = (i % 2 == 1, j % 2 == 1);
        let (ii, jj) = (i as i64, j as i64);
        let r = |x: i64| int(x);
        let v = if j <= i && i < m {
            match (io, jo) {
                (true, true) => (r(2 * nn - ii - 1) + &two_p) * (r(jj + 1) - &two_p),
                (false, true) => r(2 * nn - ii) * (r(jj + 1) - &two_p),
                (true, false) => (r(2 * nn - ii - 1) + &two_p) * r(jj),
                (false, false) => r((2 * nn - ii) * jj),
            }
        } else if i < j && j < m {
            match (io, jo) {
                (true, true) => (r(2 * nn - jj - 1) + &two_p) * (r(ii + 1) - &two_p),
                (false, true) => r(2 * nn - jj) * (r(ii + 1) - &two_p),
                (true, false) => (r(2 * nn - jj - 1) + &two_p) * r(ii),
                (false, false) => r((2 * nn - jj) * ii),
            }
        } else if m <= j && j <= i {
            match (io, jo) {
                (true, true) => (r(2 * nn - 4 * nn + ii) + &two_p) * (r(4 * nn - jj) - &two_p),
                (false, true) => r(2 * nn - 4 * nn + ii + 1) * (r(4 * nn - jj) - &two_p),
                (true, false) => (r(2 * nn - 4 * nn + ii) + &two_p) * r(4 * nn - jj - 1),
                (false, false) => r((2 * nn - 4 * nn + ii + 1) * (4 * nn - jj - 1)),
            }
        } else if m <= i && i < j {
            match (io, jo) {
                (true, true) => (r(2 * nn - jj - 1) + &two_p) * (r(4 * nn - ii) - &two_p),
                (false, true) => r(2 * nn - 4 * nn + jj + 1) * (r(4 * nn - ii) - &two_p),
                (true, false) => (r(2 * nn - 4 * nn + jj) + &two_p) * r(4 * nn - ii - 1),
                (false, false) => r((2 * nn - 4 * nn + jj + 1) * (4 * nn - ii - 1)),
            }
        } else {
            Rational::zero()
        };
        v / &scale
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{mat_mul, rat};
    use num_traits::One;

    fn grid() -> Vec<Rational> {
        vec![rat(1, 2), rat(1, 3), rat(1, 4), rat(3, 7), rat(2, 5)]
    }

    fn identity_mismatches(a: &DenseMatrix, b: &DenseMatrix) -> usize {
        let prod = mat_mul(a, b).unwrap();
        compare(
            &prod,
            &DenseMatrix::identity(prod.rows()),
            &Rational::zero(),
        )
        .unwrap()
        .total_mismatches
    }

    #[test]
    fn u_and_its_inverse() {
        let u = build_u2n(2).unwrap();
        assert_eq!(
            (u.rows(), u[(1, 6)].clone(), u[(6, 1)].clone()),
            (6, int(1), int(0))
        );
        for n in 2..6 {
            let u = build_u2n(n).unwrap();
            let inv = invert(&u).unwrap();
            assert_eq!(mat_mul(&inv, &u).unwrap(), DenseMatrix::identity(u.rows()));
            for (i, j, x) in inv.iter_indexed() {
                let want = if i == j {
                    1
                } else if j == i + 1 {
                    -1
                } else {
                    0
                };
                assert_eq!(x, &int(want));
            }
        }
    }

    #[test]
    fn r_entries() {
        let r = build_r2n(2, &rat(1, 3)).unwrap();
        assert_eq!(r[(1, 1)], int(2));
        assert_eq!(r[(2, 2)], rat(7, 3));
        assert_eq!(r[(5, 5)], rat(2, 3));
        assert_eq!(
            r2n_inverse_closed(2, &rat(1, 2)).unwrap()[(1, 1)],
            rat(3, 2)
        );
    }

    #[test]
    fn decomposition_holds() {
        for n in 2..8 {
            for p in grid() {
                assert!(
                    verify_pm1_decomposition(n, &p).unwrap().is_empty(),
                    "n={n} p={p}"
                );
            }
        }
    }

    #[test]
    fn perturbed_factor_is_detected() {
        let p = rat(1, 3);
        let mut r = build_r2n(3, &p).unwrap();
        r.set(1, 1, &r[(1, 1)] + int(1));
        let report = check_pm1_decomposition(3, &p, &r).unwrap();
        assert_eq!(report.total_mismatches, 1);
        assert_eq!((report.entries[0].i, report.entries[0].j), (1, 1));
    }

    #[test]
    fn printed_r_inverse_disagrees() {
        let counts: Vec<usize> = (2..6)
            .map(|n| {
                let p = rat(1, 3);
                let closed = r2n_inverse_closed(n, &p).unwrap();
                let numeric = invert(&build_r2n(n, &p).unwrap()).unwrap();
                compare(&closed, &numeric, &Rational::zero())
                    .unwrap()
                    .total_mismatches
            })
            .collect();
        assert_eq!(counts, vec![20, 72, 156, 272]);
        let rr: Vec<usize> = (2..6)
            .map(|n| {
                let p = rat(1, 3);
                identity_mismatches(
                    &build_r2n(n, &p).unwrap(),
                    &r2n_inverse_closed(n, &p).unwrap(),
                )
            })
            .collect();
        assert_eq!(rr, vec![30, 90, 182, 306]);
    }

    #[test]
    fn printed_r_inverse_values_fit_the_same_block_pattern() {
        for n in 2..6 {
            for p in grid() {
                let numeric = invert(&build_r2n(n, &p).unwrap()).unwrap();
                let m = 2 * n;
                let same_block = |i: usize, j: usize| i == m || j == m || (i < m) == (j < m);
                let (nn, q) = (int(n as i64), int(1) - &p);
                for (i, j, x) in numeric.iter_indexed() {
                    let want = if i == j || !same_block(i, j) {
                        continue;
                    } else if i % 2 == 1 && j % 2 == 1 {
                        -(&q / &p)
                    } else if i % 2 == 0 && j % 2 == 0 {
                        -(&p / &q)
                    } else {
                        int(-1)
                    };
                    assert_eq!(x, &(want / &nn), "n={n} p={p} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn printed_h_inverse_mismatch_counts() {
        let count = |n: usize, p: Rational| {
            let (h, _) = build_h_pm1(n, &p).unwrap();
            let numeric = invert(&h).unwrap();
            compare(
                &h2n_inverse_closed(n, &p).unwrap(),
                &numeric,
                &Rational::zero(),
            )
            .unwrap()
            .total_mismatches
        };
        assert_eq!(count(2, rat(1, 2)), 6);
        assert_eq!(count(2, rat(1, 3)), 11);
        assert_eq!(count(3, rat(1, 2)), 20);
        assert_eq!(count(3, rat(1, 3)), 31);
        assert_eq!(count(4, rat(1, 2)), 42);
        assert_eq!(count(4, rat(1, 3)), 61);
    }

    #[test]
    fn first_block_lower_triangle_is_right() {
        for n in 2..6 {
            for p in grid() {
                let (h, _) = build_h_pm1(n, &p).unwrap();
                let numeric = invert(&h).unwrap();
                let closed = h2n_inverse_closed(n, &p).unwrap();
                for i in 1..2 * n {
                    for j in 1..=i {
                        assert_eq!(closed[(i, j)], numeric[(i, j)]);
                    }
                }
                assert!(closed
                    .iter_indexed()
                    .all(|(i, j, x)| (i < 2 * n) == (j < 2 * n) || x.is_zero()));
            }
        }
    }

    #[test]
    fn numeric_inverse_is_exact() {
        let (h, _) = build_h_pm1(4, &rat(3, 7)).unwrap();
        let inv = invert(&h).unwrap();
        assert!(mat_mul(&h, &inv)
            .unwrap()
            .iter_indexed()
            .all(|(i, j, x)| x.is_one() == (i == j)));
        let u = build_u2n(4).unwrap();
        let r_inv = invert(&build_r2n(4, &rat(3, 7)).unwrap()).unwrap();
        assert_eq!(mat_mul3(&u.transpose(), &r_inv, &u).unwrap(), inv);
    }
}
