//! Effective resistance `r(u, v) = (h(u, v) + h(v, u)) / sum w` and the
//! Kirchhoff index `Kf = sum_{u < v} r(u, v)`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{build_graph, GraphFamily, WeightedDigraph};
use crate::hitting::{
    hitting_time, oracle_hitting, require_closed_unit, require_open_unit, require_range,
};
use crate::numerics::{int, powi, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct ResistanceValue {
    pub u: usize,
    pub v: usize,
    pub value: Rational,
}

/// Sum of `w(x, y)` over ordered pairs; undirected edges count twice.
pub fn total_weight(g: &WeightedDigraph) -> Rational {
    g.weights().entries().iter().sum()
}

pub fn effective_resistance(g: &WeightedDigraph, u: usize, v: usize) -> Result<ResistanceValue> {
    let value = if u == v {
        Rational::zero()
    } else {
        (hitting_time(g, u, v)? + hitting_time(g, v, u)?) / total_weight(g)
    };
    Ok(ResistanceValue { u, v, value })
}

fn column_sum(g: &WeightedDigraph, target: usize) -> Result<Rational> {
    Ok(oracle_hitting(g, target)?.times.into_iter().sum())
}

/// All-pairs Kirchhoff index from oracle hitting times.
pub fn kirchhoff_from_hitting(g: &WeightedDigraph) -> Result<Rational> {
    let total: Rational = (0..g.vertex_count())
        .into_par_iter()
        .map(|t| column_sum(g, t))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    Ok(total / total_weight(g))
}

/// Kirchhoff index of a family member, solving only for the targets in one
/// period of the rotation symmetry.
pub fn kirchhoff_by_symmetry(family: &GraphFamily) -> Result<Rational> {
    let g = build_graph(family)?;
    let s = family.shift_period();
    let mut total = Rational::zero();
    for t in 0..s {
        total += column_sum(&g, t)?;
    }
    let copies = int((g.vertex_count() / s) as i64);
    Ok(total * copies / total_weight(&g))
}

/// Closed form for the weighted `2n`-cycle.
pub fn kf_pm1_closed(n: usize, p: &Rational) -> Result<Rational> {
    require_open_unit(p)?;
    require_range("n", n, 2, usize::MAX)?;
    let nn = int(n as i64);
    let pq3 = int(3) * p * (int(1) - p);
    Ok(&nn * ((&nn - int(1)) * (&nn + int(1)) + &pq3) / pq3)
}

fn plus12_setup(order: usize, p: &Rational) -> Result<(Rational, Rational, Rational)> {
    require_closed_unit(p)?;
    require_range("N", order, 3, usize::MAX)?;
    let a = p - int(1);
    let a_n = powi(&a, order as i64);
    if (&a_n - int(1)).is_zero() {
        return Err(Error::Degenerate(format!(
            "(p - 1)^N = 1 at p = {p}, N = {order}: some targets are unreachable"
        )));
    }
    Ok((int(order as i64), a, a_n))
}

/// The displayed closed form for `Cay(Z_N, {+1, +2})`.
pub fn kf_plus12_closed(order: usize, p: &Rational) -> Result<Rational> {
    let (nn, _, a_n) = plus12_setup(order, p)?;
    let b = p - int(2);
    let num =
        &nn * (int(8) + (&a_n + int(2) * p - int(9)) * p - &nn * &b * (&a_n + int(2) * p - int(3)));
    Ok(num / (int(2) * &b * &b * (a_n - int(1))))
}

/// `sum_ℓ h(0, ℓ)` with each term from the hitting-time closed form.
pub fn kf_plus12_closed_sum(order: usize, p: &Rational) -> Result<Rational> {
    plus12_setup(order, p)?;
    (1..order)
        .map(|l| crate::hitting::ht_plus12_closed(order, p, l))
        .sum()
}

/// The geometric-sum expression that precedes the displayed closed form in
/// its derivation, evaluated literally.
pub fn kf_plus12_proof_penultimate(order: usize, p: &Rational) -> Result<Rational> {
    let (nn, a, a_n) = plus12_setup(order, p)?;
    let geometric = (int(1) - powi(&a, order as i64 - 1)) / (int(1) - &a);
    let num =
        &nn * &a * (geometric - &nn + int(1)) - (&a_n - int(1)) * (&nn * (&nn - int(1)) / int(2));
    Ok(num / ((p - int(2)) * (a_n - int(1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn pm1(n: usize, p: Rational) -> WeightedDigraph {
        let q = int(1) - &p;
        build_graph(&GraphFamily::pm1_alt(n, p, q).unwrap()).unwrap()
    }

    fn plus12(order: usize, p: Rational) -> WeightedDigraph {
        let q = int(1) - &p;
        build_graph(&GraphFamily::plus12(order, p, q).unwrap()).unwrap()
    }

    #[test]
    fn total_weights() {
        assert_eq!(total_weight(&pm1(2, rat(1, 2))), int(4));
        assert_eq!(total_weight(&pm1(5, rat(1, 3))), int(10));
        assert_eq!(total_weight(&plus12(7, rat(2, 5))), int(7));
    }

    #[test]
    fn four_cycle_resistances() {
        let g = pm1(2, rat(1, 2));
        assert_eq!(effective_resistance(&g, 0, 1).unwrap().value, rat(3, 2));
        assert_eq!(effective_resistance(&g, 0, 2).unwrap().value, int(2));
        assert!(effective_resistance(&g, 3, 3).unwrap().value.is_zero());
        assert_eq!(kirchhoff_from_hitting(&g).unwrap(), int(10));
    }

    #[test]
    fn plus12_three_cycle() {
        assert_eq!(
            kirchhoff_from_hitting(&plus12(3, rat(1, 2))).unwrap(),
            int(4)
        );
    }

    #[test]
    fn scaling_conductances() {
        let g = pm1(3, rat(1, 3));
        let kf = kirchhoff_from_hitting(&g).unwrap();
        let c = rat(5, 2);
        assert_eq!(
            kirchhoff_from_hitting(&g.scaled(&c).unwrap()).unwrap(),
            kf / c
        );
    }

    #[test]
    fn pm1_closed_form_matches_oracle() {
        assert_eq!(kf_pm1_closed(2, &rat(1, 2)).unwrap(), int(10));
        for n in 2..8 {
            for p in [rat(1, 2), rat(1, 3), rat(1, 4), rat(3, 7), rat(2, 5)] {
                let g = pm1(n, p.clone());
                assert_eq!(
                    kf_pm1_closed(n, &p).unwrap(),
                    kirchhoff_from_hitting(&g).unwrap()
                );
                assert_eq!(
                    kf_pm1_closed(n, &p).unwrap(),
                    kf_pm1_closed(n, &(int(1) - &p)).unwrap()
                );
            }
        }
    }

    #[test]
    fn plus12_kirchhoff_columns() {
        let cases = [
            (3, rat(1, 2), int(4), rat(10, 3)),
            (3, rat(1, 3), rat(27, 7), rat(117, 35)),
            (4, rat(1, 2), rat(44, 5), rat(36, 5)),
            (5, rat(1, 2), rat(150, 11), rat(400, 33)),
        ];
        for (order, p, oracle, printed) in cases {
            assert_eq!(
                kirchhoff_from_hitting(&plus12(order, p.clone())).unwrap(),
                oracle
            );
            assert_eq!(kf_plus12_closed_sum(order, &p).unwrap(), oracle);
            assert_eq!(kf_plus12_closed(order, &p).unwrap(), printed);
            assert_eq!(kf_plus12_proof_penultimate(order, &p).unwrap(), printed);
        }
        for order in 3..12 {
            let all = [
                kirchhoff_from_hitting(&plus12(order, int(1))).unwrap(),
                kf_plus12_closed(order, &int(1)).unwrap(),
                kf_plus12_proof_penultimate(order, &int(1)).unwrap(),
            ];
            let sum = int((order * (order - 1) / 2) as i64);
            assert!(all.iter().all(|x| *x == sum));
        }
        assert!(kf_plus12_closed(4, &int(0)).is_err());
    }

    #[test]
    fn half_weight_cycle_doubles_unit_resistance() {
        for n in 2..6 {
            let g = pm1(n, rat(1, 2));
            for k in 0..2 * n {
                let unit = rat((k * (2 * n - k)) as i64, (2 * n) as i64);
                assert_eq!(effective_resistance(&g, 0, k).unwrap().value, unit * int(2));
            }
        }
    }

    fn families() -> impl Strategy<Value = GraphFamily> {
        prop_oneof![
            (2usize..6, 1i64..10).prop_map(|(n, a)| GraphFamily::pm1_alt(
                n,
                rat(a, 10),
                rat(10 - a, 10)
            )
            .unwrap()),
            (3usize..9, 1i64..=10).prop_map(|(n, a)| GraphFamily::plus12(
                n,
                rat(a, 10),
                rat(10 - a, 10)
            )
            .unwrap()),
            (5usize..9).prop_map(|n| GraphFamily::pm1pm2(n).unwrap()),
            (3usize..9).prop_map(|n| GraphFamily::plus12_unweighted(n).unwrap()),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn symmetric_and_nonnegative(f in families(), u in 0usize..16, v in 0usize..16) {
            let g = build_graph(&f).unwrap();
            let n = g.vertex_count();
            let (u, v) = (u % n, v % n);
            let a = effective_resistance(&g, u, v).unwrap().value;
            prop_assert_eq!(&a, &effective_resistance(&g, v, u).unwrap().value);
            prop_assert!(!a.is_negative());
            prop_assert_eq!(a.is_zero(), u == v);
        }

        #[test]
        fn symmetry_shortcut_agrees(f in families()) {
            let g = build_graph(&f).unwrap();
            prop_assert_eq!(kirchhoff_by_symmetry(&f).unwrap(), kirchhoff_from_hitting(&g).unwrap());
        }

        #[test]
        fn triangle_inequality(n in 2usize..7, a in 1i64..10) {
            let g = pm1(n, rat(a, 10));
            let size = 2 * n;
            let r: Vec<Vec<Rational>> = (0..size)
                .map(|u| (0..size).map(|v| effective_resistance(&g, u, v).unwrap().value).collect())
                .collect();
            for u in 0..size {
                for v in 0..size {
                    for w in 0..size {
                        prop_assert!(r[u][w] <= &r[u][v] + &r[v][w]);
                    }
                }
            }
        }
    }
}
