//! Enumeration cross-checked against brute force over all labeled graphs,
//! and canonical-form invariance under random relabelings.

use eigenbounds::{canonical_code, enumerate_nonisomorphic, Graph};
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Isomorphism-class codes obtained the slow way: canonicalize every one of
/// the 2^C(n,2) labeled graphs.
fn brute_force_codes(n: usize) -> BTreeSet<Vec<u8>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut codes = BTreeSet::new();
    for bits in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        codes.insert(canonical_code(&g).unwrap());
    }
    codes
}

#[test]
fn enumeration_agrees_with_labeled_exhaustion() {
    for n in 1..=6 {
        let expected = brute_force_codes(n);
        let reps: BTreeSet<Vec<u8>> = enumerate_nonisomorphic(n)
            .unwrap()
            .iter()
            .map(|g| canonical_code(g).unwrap())
            .collect();
        assert_eq!(reps, expected, "order {n}");
    }
}

#[test]
fn class_counts_to_order_8() {
    let expected = [1usize, 2, 4, 11, 34, 156, 1044, 12346];
    for (n, want) in expected.iter().enumerate().map(|(i, w)| (i + 1, w)) {
        assert_eq!(enumerate_nonisomorphic(n).unwrap().len(), *want, "order {n}");
    }
}

#[test]
fn representatives_parse_and_are_distinct() {
    let reps = enumerate_nonisomorphic(7).unwrap();
    let mut seen = BTreeSet::new();
    for g in &reps {
        let code = canonical_code(g).unwrap();
        let back = eigenbounds::parse_graph6(&code).unwrap();
        assert_eq!(&back, g, "representatives are stored in canonical labeling");
        assert!(seen.insert(code), "duplicate representative");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn canonical_code_is_relabeling_invariant(
        n in 2usize..=8,
        raw in proptest::collection::vec((0usize..8, 0usize..8), 0..24),
        seeds in proptest::collection::vec(any::<u64>(), 5),
    ) {
        let edges: Vec<(usize, usize)> = raw
            .into_iter()
            .map(|(a, b)| (a % n, b % n))
            .filter(|(a, b)| a != b)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let base = canonical_code(&g).unwrap();
        for seed in seeds {
            // Fisher-Yates driven by splitmix-style hashing of the seed.
            let mut perm: Vec<usize> = (0..n).collect();
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let relabeled = g.permuted(&perm);
            prop_assert_eq!(canonical_code(&relabeled).unwrap(), base.clone());
        }
    }
}
