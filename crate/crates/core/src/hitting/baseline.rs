//! Closed forms for the unweighted graphs `Cay(Z_N, {±1, ±2})` (Fibonacci)
//! and `Cay(Z_N, {+1, +2})` (Jacobsthal), evaluated as stated.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::require_range;
use crate::error::Result;
use crate::numerics::{int, rat, Rational};

/// `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(i: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..i {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `J_0 = 0`, `J_1 = 1`, `J_i = J_{i-1} + 2 J_{i-2}`.
pub fn jacobsthal(i: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..i {
        let next = &b + &a * 2;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `(2^i - (-1)^i) / 3`.
pub fn jacobsthal_closed(i: usize) -> BigInt {
    let sign = if i % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    ((BigInt::one() << i) - sign) / 3
}

fn big(x: BigInt) -> Rational {
    Rational::from_integer(x)
}

/// `(2/5) (ℓ(N - ℓ) + 2N F_ℓ F_{N-ℓ} / F_N)` on `Cay(Z_N, {±1, ±2})`.
pub fn ht_pm1pm2_baseline(order: usize, l: usize) -> Result<Rational> {
    require_range("N", order, 5, usize::MAX)?;
    require_range("ℓ", l, 1, order - 1)?;
    let (nn, ll) = (int(order as i64), int(l as i64));
    let ratio = big(fibonacci(l) * fibonacci(order - l)) / big(fibonacci(order));
    Ok(rat(2, 5) * (&ll * (&nn - &ll) + int(2) * nn * ratio))
}

/// The Jacobsthal expression for `h(0, ℓ)` on unweighted `Cay(Z_N, {+1, +2})`.
pub fn ht_plus12_baseline(order: usize, l: usize) -> Result<Rational> {
    require_range("N", order, 3, usize::MAX)?;
    require_range("ℓ", l, 1, order - 1)?;
    let j = |i: usize| big(jacobsthal(i));
    let (nn, ll) = (int(order as i64), int(l as i64));
    let first = int(2) * j(l - 1) * (int(3) * &ll * j(order - l - 1) + int(2) * &ll * j(order - l));
    let second = j(l)
        * ((&nn + &ll + int(3)) * j(order - l - 1) + (&nn + int(3) * &ll + int(1)) * j(order - l));
    Ok((first + second) / (int(3) * j(order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, GraphFamily};
    use crate::hitting::oracle::hitting_time;

    #[test]
    fn sequences() {
        let f: Vec<BigInt> = (1..=7).map(fibonacci).collect();
        assert_eq!(f, [1, 1, 2, 3, 5, 8, 13].map(BigInt::from));
        assert_eq!(jacobsthal(5), BigInt::from(11));
        assert_eq!(jacobsthal(0), BigInt::zero());
        for i in 0..=64 {
            assert_eq!(jacobsthal(i), jacobsthal_closed(i));
        }
    }

    #[test]
    fn fibonacci_baseline_matches_oracle() {
        for order in 5..13 {
            let g = build_graph(&GraphFamily::pm1pm2(order).unwrap()).unwrap();
            for l in 1..order {
                assert_eq!(
                    ht_pm1pm2_baseline(order, l).unwrap(),
                    hitting_time(&g, 0, l).unwrap()
                );
            }
        }
        for l in 1..5 {
            assert_eq!(ht_pm1pm2_baseline(5, l).unwrap(), int(4));
        }
    }

    #[test]
    fn jacobsthal_baseline_values() {
        let printed: Vec<Rational> = (1..5).map(|l| ht_plus12_baseline(5, l).unwrap()).collect();
        assert_eq!(
            printed,
            vec![rat(24, 11), rat(82, 33), rat(36, 11), rat(46, 11)]
        );
        assert_eq!(ht_plus12_baseline(3, 1).unwrap(), rat(14, 9));
        assert_eq!(ht_plus12_baseline(4, 3).unwrap(), rat(18, 5));
    }

    #[test]
    fn jacobsthal_baseline_against_oracle() {
        for order in 3..11 {
            let g = build_graph(&GraphFamily::plus12_unweighted(order).unwrap()).unwrap();
            for l in 1..order {
                let agrees =
                    ht_plus12_baseline(order, l).unwrap() == hitting_time(&g, 0, l).unwrap();
                assert_eq!(agrees, l == order - 1, "N={order} ℓ={l}");
            }
        }
        let g = build_graph(&GraphFamily::plus12_unweighted(5).unwrap()).unwrap();
        assert_eq!(hitting_time(&g, 0, 1).unwrap(), rat(34, 11));
    }
}
