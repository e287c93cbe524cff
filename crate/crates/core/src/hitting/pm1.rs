//! The weighted cycle `Cay(Z_2n, {±1})` with `q = 1 - p`.
//!
//! Hitting times from vertex 1 follow the `h(1, ℓ + 1)` parameterisation
//! throughout; [`ht_pm1`] takes absolute vertices instead.

use num_traits::One;

use super::{require_open_unit, require_range};
use crate::error::{Error, Result};
use crate::graph::{build_graph, laplacian, minor_drop_first, minor_drop_last, GraphFamily};
use crate::numerics::{gauss_solve, int, DenseMatrix, Rational};

/// Ordering of the unknowns of the block system: position `i` (1-based)
/// holds `h(start, ℓ)`, with `ℓ = 2n` standing for vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMap2n {
    n: usize,
    forward: Vec<(usize, usize)>,
}

impl IndexMap2n {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
        }
        let forward = (1..=2 * (2 * n - 1))
            .map(|i| match (i < 2 * n, i % 2 == 1) {
                (true, true) => (1, 2 * n - i + 1),
                (true, false) => (0, 2 * n - i),
                (false, true) => (1, 4 * n - i),
                (false, false) => (0, 4 * n - i - 1),
            })
            .collect();
        Ok(IndexMap2n { n, forward })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// `(start, ℓ)` at 1-based position `i`.
    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.forward[i - 1]
    }

    /// Inverse of [`IndexMap2n::pair`].
    pub fn position(&self, start: usize, l: usize) -> Option<usize> {
        self.forward
            .iter()
            .position(|&x| x == (start, l))
            .map(|k| k + 1)
    }

    /// Position holding `h(start, target)` for absolute vertices, after the
    /// shift `v -> v + 2` that brings `start` to 0 or 1. `None` when
    /// `start == target`.
    pub fn position_of_vertices(&self, start: usize, target: usize) -> Option<usize> {
        let size = 2 * self.n;
        let parity = start % 2;
        let rel = (target % size + size - (start % size - parity)) % size;
        match (parity, rel) {
            (p, r) if p == r => None,
            (0, r) => self.position(0, r),
            (_, 0) => self.position(1, size),
            (_, r) => self.position(1, r),
        }
    }

    /// Target vertex (a residue) at position `i`.
    pub fn target_vertex(&self, i: usize) -> usize {
        self.pair(i).1 % (2 * self.n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, (usize, usize))> + '_ {
        self.forward.iter().enumerate().map(|(k, &x)| (k + 1, x))
    }
}

/// `blockdiag(L', L'')` of the Laplacian with `q = 1 - p`, and the ordering of
/// its unknowns.
pub fn build_h_pm1(n: usize, p: &Rational) -> Result<(DenseMatrix, IndexMap2n)> {
    require_open_unit(p)?;
    let family = GraphFamily::pm1_alt(n, p.clone(), int(1) - p)?;
    let l = laplacian(&build_graph(&family)?);
    let (first, last) = (minor_drop_first(&l)?, minor_drop_last(&l)?);
    let m = 2 * n - 1;
    let h = DenseMatrix::from_fn(2 * m, 2 * m, |i, j| match (i <= m, j <= m) {
        (true, true) => first[(i, j)].clone(),
        (false, false) => last[(i - m, j - m)].clone(),
        _ => Rational::default(),
    });
    Ok((h, IndexMap2n::new(n)?))
}

/// Solution of `H h = 1`, ordered by [`IndexMap2n`].
pub fn solve_pm1_system(n: usize, p: &Rational) -> Result<Vec<Rational>> {
    let (h, map) = build_h_pm1(n, p)?;
    gauss_solve(&h, &vec![Rational::one(); map.len()])
}

/// Consecutive differences `h'_ℓ` of the block-system solution.
pub fn hprime_closed(n: usize, p: &Rational, l: usize) -> Result<Rational> {
    require_open_unit(p)?;
    require_range("ℓ", l, 1, 2 * (2 * n - 1))?;
    let (nn, ll, q) = (int(n as i64), int(l as i64), int(1) - p);
    let odd = l % 2 == 1;
    Ok(if l < 2 * n {
        if odd {
            (nn - ll + p) / p
        } else {
            (nn - ll + p) / q
        }
    } else if l == 2 * n {
        Rational::default()
    } else if odd {
        (int(3) * nn - ll - p) / p
    } else {
        (int(3) * nn - ll - p) / q
    })
}

/// `h(0, ℓ)` for `start = 0`, `h(1, ℓ + 1)` for `start = 1`; `1 <= ℓ <= 2n - 1`.
pub fn ht_pm1_closed(n: usize, p: &Rational, start: usize, l: usize) -> Result<Rational> {
    require_open_unit(p)?;
    require_range("n", n, 2, usize::MAX)?;
    require_range("start", start, 0, 1)?;
    require_range("ℓ", l, 1, 2 * n - 1)?;
    let q = int(1) - p;
    let (nn, ll) = (int(n as i64), int(l as i64));
    let two_n = int(2) * &nn;
    let num = if l % 2 == 0 {
        &ll * (&two_n - &ll)
    } else if start == 0 {
        (&ll - int(1)) * (&two_n - &ll + int(1)) + int(4) * &q * (&nn - &ll + p)
    } else {
        (&ll - int(1)) * (&two_n - &ll + int(1)) + int(4) * p * (&nn - &ll + int(1) - p)
    };
    Ok(num / (int(4) * p * q))
}

/// The same hitting times rebuilt as prefix sums of [`hprime_closed`].
pub fn ht_pm1_prefix(n: usize, p: &Rational, start: usize, l: usize) -> Result<Rational> {
    require_range("start", start, 0, 1)?;
    require_range("ℓ", l, 1, 2 * n - 1)?;
    let short = (l % 2 == 0) == (start == 0);
    let upto = if short { 2 * n - l } else { 4 * n - l - 1 };
    (1..=upto).map(|i| hprime_closed(n, p, i)).sum()
}

/// Closed-form values laid out by [`IndexMap2n`]; should solve `H h = 1`.
pub fn h_vector_closed(n: usize, p: &Rational) -> Result<Vec<Rational>> {
    let map = IndexMap2n::new(n)?;
    map.iter()
        .map(|(_, (start, l))| ht_pm1_closed(n, p, start, l - start))
        .collect()
}

/// `h(start, target)` for absolute vertices, via the shift `v -> v + 2`.
pub fn ht_pm1(n: usize, p: &Rational, start: usize, target: usize) -> Result<Rational> {
    let size = 2 * n;
    require_range("start", start, 0, size - 1)?;
    require_range("target", target, 0, size - 1)?;
    let parity = start % 2;
    let rel = (target + size - (start - parity)) % size;
    if rel == parity {
        return Ok(Rational::default());
    }
    let l = (rel + size - parity) % size;
    ht_pm1_closed(n, p, parity, l)
}
