//! Values computed by an independent fraction-arithmetic solver and frozen here.

use cayht_core::graph::build_graph;
use cayht_core::hitting::{hitting_time, ht_plus12, ht_pm1, oracle_hitting};
use cayht_core::numerics::{format_rational, int, parse_rational, rat};
use cayht_core::resistance::{effective_resistance, kirchhoff_by_symmetry, kirchhoff_from_hitting};
use cayht_core::{GraphFamily, Rational};

fn r(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn row(family: &GraphFamily, start: usize) -> Vec<String> {
    let g = build_graph(family).unwrap();
    (0..g.vertex_count())
        .map(|t| format_rational(&hitting_time(&g, start, t).unwrap()))
        .collect()
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter()
        .map(|s| r(s))
        .map(|x| format_rational(&x))
        .collect()
}

#[test]
fn pm1_n4_two_fifths() {
    let g = GraphFamily::pm1_alt(4, rat(2, 5), rat(3, 5)).unwrap();
    assert_eq!(
        row(&g, 0),
        strs(&["0", "17/2", "25/2", "16", "50/3", "91/6", "25/2", "6"])
    );
    assert_eq!(
        row(&g, 1),
        strs(&["17/2", "0", "6", "25/2", "91/6", "50/3", "16", "25/2"])
    );
    for t in 0..8 {
        assert_eq!(ht_pm1(4, &rat(2, 5), 0, t).unwrap(), r(&row(&g, 0)[t]));
    }
}

#[test]
fn edge_weight_placement() {
    let g = build_graph(&GraphFamily::pm1_alt(3, rat(1, 3), rat(2, 3)).unwrap()).unwrap();
    assert_eq!(g.weight(0, 1), &rat(1, 3));
    assert_eq!(g.weight(1, 2), &rat(2, 3));
    assert_eq!(g.weight(1, 0), &rat(1, 3));
}

#[test]
fn plus12_n7_quarter() {
    let g = GraphFamily::plus12(7, rat(1, 4), rat(3, 4)).unwrap();
    let want = strs(&[
        "0", "1972/379", "872/379", "2076/379", "1552/379", "2324/379", "2124/379",
    ]);
    assert_eq!(row(&g, 0), want);
    for (t, w) in want.iter().enumerate().skip(1) {
        assert_eq!(
            format_rational(&ht_plus12(7, &rat(1, 4), 3, (3 + t) % 7).unwrap()),
            *w
        );
    }
}

#[test]
fn plus12_unnormalized_weights() {
    let g = GraphFamily::plus12(6, int(2), int(3)).unwrap();
    let want = strs(&[
        "0",
        "8195/1862",
        "2570/931",
        "465/98",
        "4240/931",
        "10555/1862",
    ]);
    assert_eq!(row(&g, 0), want);
    let normalized = GraphFamily::plus12(6, rat(2, 5), rat(3, 5)).unwrap();
    assert_eq!(row(&normalized, 0), want);
}

#[test]
fn pm1pm2_n7() {
    let g = GraphFamily::pm1pm2(7).unwrap();
    assert_eq!(
        row(&g, 0),
        strs(&["0", "76/13", "80/13", "96/13", "96/13", "80/13", "76/13"])
    );
}

#[test]
fn resistances_and_indices() {
    let family = GraphFamily::pm1_alt(3, rat(1, 3), rat(2, 3)).unwrap();
    let g = build_graph(&family).unwrap();
    assert_eq!(effective_resistance(&g, 0, 3).unwrap().value, rat(10, 3));
    assert_eq!(effective_resistance(&g, 0, 1).unwrap().value, rat(7, 3));
    assert_eq!(kirchhoff_from_hitting(&g).unwrap(), int(39));
    assert_eq!(kirchhoff_by_symmetry(&family).unwrap(), int(39));

    let scaled = GraphFamily::pm1_alt(3, int(1), int(2)).unwrap();
    assert_eq!(kirchhoff_by_symmetry(&scaled).unwrap(), int(13));

    let plus = GraphFamily::plus12(6, rat(1, 3), rat(2, 3)).unwrap();
    assert_eq!(
        kirchhoff_from_hitting(&build_graph(&plus).unwrap()).unwrap(),
        rat(3105, 133)
    );
    assert_eq!(kirchhoff_by_symmetry(&plus).unwrap(), rat(3105, 133));
}

#[test]
fn whole_vector_matches_pointwise_solves() {
    let g = build_graph(&GraphFamily::plus12(9, rat(3, 7), rat(4, 7)).unwrap()).unwrap();
    let hv = oracle_hitting(&g, 4).unwrap();
    for s in 0..9 {
        assert_eq!(hv.time_from(s), &hitting_time(&g, s, 4).unwrap());
    }
}
