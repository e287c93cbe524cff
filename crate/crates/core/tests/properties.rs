//! Cross-module properties over random edge weights.

use cayht_core::audit::{run_job, Check, Job};
use cayht_core::decomposition::{verify_plus12_lu, verify_pm1_decomposition};
use cayht_core::graph::build_graph;
use cayht_core::hitting::{
    hitting_time, ht_plus12, ht_pm1, solve_plus12_system, solve_pm1_system, IndexMap2n,
};
use cayht_core::numerics::{int, rat};
use cayht_core::resistance::{kirchhoff_by_symmetry, kirchhoff_from_hitting};
use cayht_core::{GraphFamily, Rational};
use proptest::prelude::*;

fn open_unit() -> impl Strategy<Value = Rational> {
    (1i64..40).prop_flat_map(|d| (1..=d).prop_map(move |k| rat(k, d + 1)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pm1_three_routes_agree(n in 2usize..6, p in open_unit(), s in 0usize..12, t in 0usize..12) {
        let (s, t) = (s % (2 * n), t % (2 * n));
        let g = build_graph(&GraphFamily::pm1_alt(n, p.clone(), int(1) - &p).unwrap()).unwrap();
        let oracle = hitting_time(&g, s, t).unwrap();
        prop_assert_eq!(&ht_pm1(n, &p, s, t).unwrap(), &oracle);
        if s < 2 && s != t {
            let map = IndexMap2n::new(n).unwrap();
            let i = map.position_of_vertices(s, t).unwrap();
            prop_assert_eq!(&solve_pm1_system(n, &p).unwrap()[i - 1], &oracle);
        }
    }

    #[test]
    fn plus12_three_routes_agree(order in 3usize..11, p in open_unit(), t in 1usize..11) {
        let t = t % order;
        prop_assume!(t != 0);
        let g = build_graph(&GraphFamily::plus12(order, p.clone(), int(1) - &p).unwrap()).unwrap();
        let oracle = hitting_time(&g, 0, t).unwrap();
        prop_assert_eq!(&ht_plus12(order, &p, 0, t).unwrap(), &oracle);
        prop_assert_eq!(&solve_plus12_system(order, &p).unwrap()[t - 1], &oracle);
    }

    #[test]
    fn factorizations_hold(n in 2usize..6, order in 6usize..10, p in open_unit()) {
        prop_assert!(verify_pm1_decomposition(n, &p).unwrap().is_empty());
        prop_assert!(verify_plus12_lu(order, &p).unwrap().is_empty());
    }

    #[test]
    fn kirchhoff_shortcut_matches_full_sum(n in 2usize..5, a in 1i64..6, b in 1i64..6) {
        let family = GraphFamily::pm1_alt(n, int(a), int(b)).unwrap();
        let full = kirchhoff_from_hitting(&build_graph(&family).unwrap()).unwrap();
        prop_assert_eq!(kirchhoff_by_symmetry(&family).unwrap(), full);
    }

    #[test]
    fn closed_checks_are_clean(n in 2usize..6, p in open_unit()) {
        for check in [Check::ClosedPm1, Check::ResidualPm1, Check::HprimePm1, Check::KfPm1] {
            let r = run_job(&Job { check, size: n, p: Some(p.clone()) }).unwrap();
            prop_assert!(r.report.is_empty(), "{}", check);
        }
    }
}
