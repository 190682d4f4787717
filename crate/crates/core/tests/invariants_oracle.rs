//! Exhaustive cross-checks of the exact invariants against brute force on
//! every isomorphism class of small order.

use eigenbounds::graph::VertexSet;
use eigenbounds::invariants::{
    diameter, domination_number, girth, is_dominating_set, minimum_dominating_set, profile,
};
use eigenbounds::{enumerate_nonisomorphic, Count, Graph};

/// Smallest dominating set size by scanning all 2^n subsets.
fn brute_force_gamma(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&bits| is_dominating_set(g, &VertexSet::from_bits(n, bits)))
        .map(|bits| bits.count_ones() as usize)
        .min()
        .expect("the full vertex set always dominates")
}

#[test]
fn domination_number_matches_brute_force() {
    for n in 1..=7 {
        for g in enumerate_nonisomorphic(n).unwrap() {
            let expected = brute_force_gamma(&g);
            assert_eq!(domination_number(&g), expected, "graph {:?}", g);
            let set = minimum_dominating_set(&g);
            assert!(is_dominating_set(&g, &set));
            assert_eq!(set.len(), expected);
        }
    }
}

#[test]
fn minimum_dominating_set_is_deterministic() {
    for g in enumerate_nonisomorphic(6).unwrap() {
        assert_eq!(minimum_dominating_set(&g), minimum_dominating_set(&g));
    }
}

#[test]
fn girth_is_infinite_exactly_on_forests() {
    for n in 1..=7 {
        for g in enumerate_nonisomorphic(n).unwrap() {
            let is_forest = g.edge_count() == n - g.components().len();
            assert_eq!(girth(&g) == Count::Infinite, is_forest, "graph {:?}", g);
            if let Count::Finite(k) = girth(&g) {
                assert!((3..=n).contains(&k));
            }
        }
    }
}

#[test]
fn diameter_is_infinite_exactly_when_disconnected() {
    for n in 1..=6 {
        for g in enumerate_nonisomorphic(n).unwrap() {
            match diameter(&g) {
                Count::Infinite => assert!(!g.is_connected()),
                Count::Finite(d) => {
                    assert!(g.is_connected());
                    assert!(d <= n - 1);
                }
            }
        }
    }
}

#[test]
fn min_degree_never_exceeds_order_minus_domination() {
    for n in 2..=7 {
        for g in enumerate_nonisomorphic(n).unwrap() {
            let p = profile(&g);
            assert!(
                p.delta_min <= p.n - p.gamma,
                "delta {} vs n - gamma = {} on {:?}",
                p.delta_min,
                p.n - p.gamma,
                g
            );
        }
    }
}

#[test]
fn profile_component_orders_partition_the_graph() {
    for g in enumerate_nonisomorphic(6).unwrap() {
        let p = profile(&g);
        assert_eq!(p.component_orders.iter().sum::<usize>(), p.n);
        assert_eq!(p.component_orders.len(), g.components().len());
    }
}

#[test]
fn hoffman_singleton_domination_number() {
    let g = eigenbounds::make_family(&eigenbounds::FamilySpec::HoffmanSingleton).unwrap();
    assert_eq!(domination_number(&g), 7);
}
