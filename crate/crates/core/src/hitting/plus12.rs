//! The directed circulant `Cay(Z_N, {+1, +2})` with `q = 1 - p`.

use num_traits::{One, Zero};

use super::{require_closed_unit, require_range};
use crate::error::{Error, Result};
use crate::graph::{build_graph, laplacian, minor_drop_last, GraphFamily};
use crate::numerics::{gauss_solve, int, powi, DenseMatrix, Rational};

/// Transpose of `L''`; `H h = 1` has solution `h_i = h(0, i)`.
pub fn build_h_plus12(order: usize, p: &Rational) -> Result<DenseMatrix> {
    require_closed_unit(p)?;
    let family = GraphFamily::plus12(order, p.clone(), int(1) - p)?;
    Ok(minor_drop_last(&laplacian(&build_graph(&family)?))?.transpose())
}

/// `[h(0, 1), ..., h(0, N - 1)]` by elimination on [`build_h_plus12`].
pub fn solve_plus12_system(order: usize, p: &Rational) -> Result<Vec<Rational>> {
    let h = build_h_plus12(order, p)?;
    gauss_solve(&h, &vec![Rational::one(); order - 1])
}

/// Closed form for `h(0, ℓ)`, `1 <= ℓ <= N - 1`.
pub fn ht_plus12_closed(order: usize, p: &Rational, l: usize) -> Result<Rational> {
    require_closed_unit(p)?;
    require_range("N", order, 3, usize::MAX)?;
    require_range("ℓ", l, 1, order - 1)?;
    let a = p - int(1);
    let a_n = powi(&a, order as i64);
    let den = (p - int(2)) * (&a_n - int(1));
    if den.is_zero() {
        if l % 2 == 1 {
            return Err(Error::Unreachable {
                target: l,
                starts: vec![0],
            });
        }
        return Err(Error::Degenerate(format!(
            "closed form has a zero denominator at p = {p}, N = {order}"
        )));
    }
    let num =
        int(order as i64) * &a * (powi(&a, l as i64) - int(1)) - int(l as i64) * (a_n - int(1));
    Ok(num / den)
}

/// `h(start, target)` for absolute vertices, via the shift `v -> v + 1`.
pub fn ht_plus12(order: usize, p: &Rational, start: usize, target: usize) -> Result<Rational> {
    require_range("start", start, 0, order - 1)?;
    require_range("target", target, 0, order - 1)?;
    let l = (target + order - start) % order;
    if l == 0 {
        return Ok(Rational::zero());
    }
    ht_plus12_closed(order, p, l)
}
