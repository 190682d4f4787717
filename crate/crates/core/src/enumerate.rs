//! Canonical forms and exhaustive enumeration of small graphs up to
//! isomorphism.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle adjacency bit string over all vertex relabelings, found by
//! a depth-first search over partial labelings with prefix pruning. Two
//! graphs are isomorphic exactly when their canonical forms agree, which
//! turns isomorphism dedup into integer comparison: the cap of 10 vertices
//! keeps the whole bit string inside one u64 (45 bits).
//!
//! Enumeration proceeds by vertex extension: every isomorphism class on k
//! vertices contains a member obtained by adding one vertex to some class on
//! k - 1 vertices (delete any vertex and re-canonicalize), so extending every
//! representative by every possible neighborhood and deduplicating canonical
//! forms is exhaustive by induction.

use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6::encode_graph6;
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest order accepted by [`enumerate_nonisomorphic`].
pub const MAX_ENUMERATION_ORDER: usize = 8;
/// Largest order accepted by [`canonical_code`].
pub const MAX_CANONICAL_ORDER: usize = 10;

/// Errors from the enumeration module's size guards.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("enumeration supports 1..={MAX_ENUMERATION_ORDER} vertices, got {0}")]
    EnumerationOrder(usize),
    #[error("canonical codes support 1..={MAX_CANONICAL_ORDER} vertices, got {0}")]
    CanonicalOrder(usize),
}

/// Canonical byte string of a graph: the graph6 encoding of its
/// lexicographically minimal labeling. Equal codes iff isomorphic.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>, EnumError> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(EnumError::CanonicalOrder(n));
    }
    let bits = canonical_bits(g);
    Ok(encode_graph6(&graph_from_triangle_bits(n, bits)).into_bytes())
}

/// One representative per isomorphism class on `n` vertices, in canonical
/// form, ordered by ascending canonical bit string.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>, EnumError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(EnumError::EnumerationOrder(n));
    }
    let mut level = vec![Graph::empty(1).unwrap()];
    for k in 2..=n {
        let mut codes = BTreeSet::new();
        for g in &level {
            for neighborhood in 0u64..1 << (k - 1) {
                codes.insert(canonical_bits(&extend(g, neighborhood)));
            }
        }
        level = codes
            .into_iter()
            .map(|bits| graph_from_triangle_bits(k, bits))
            .collect();
    }
    Ok(level)
}

/// Adds one vertex adjacent to the given subset of the existing vertices.
fn extend(g: &Graph, neighborhood: u64) -> Graph {
    let n = g.n();
    debug_assert!(n < MAX_VERTICES && neighborhood < 1 << n);
    let mut adj: Vec<u64> = g.vertices().map(|u| g.neighbors(u)).collect();
    for u in g.vertices() {
        if neighborhood >> u & 1 == 1 {
            adj[u] |= 1 << n;
        }
    }
    adj.push(neighborhood);
    Graph::from_rows(n + 1, adj)
}

/// Upper-triangle bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
/// with the first pair in the most significant position, so integer order on
/// the packed word is lexicographic order on the bit string.
#[cfg_attr(not(test), allow(dead_code))]
fn triangle_bits(g: &Graph) -> u64 {
    let n = g.n();
    let mut bits = 0u64;
    for j in 1..n {
        for i in 0..j {
            bits = bits << 1 | u64::from(g.has_edge(i, j));
        }
    }
    bits
}

/// Rebuilds a graph from packed upper-triangle bits.
fn graph_from_triangle_bits(n: usize, bits: u64) -> Graph {
    let total = n * (n - 1) / 2;
    let mut adj = vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> (total - 1 - idx) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    Graph::from_rows(n, adj)
}

/// Minimal packed triangle bits over all relabelings.
///
/// Vertices are placed one position at a time; placing a vertex at position
/// `k` appends the k-bit column of its adjacencies to the already placed
/// vertices. A partial labeling whose accumulated bits exceed the
/// corresponding prefix of the best complete labeling cannot produce a
/// smaller result (later bits rank strictly lower), so it is pruned.
fn canonical_bits(g: &Graph) -> u64 {
    let n = g.n();
    if n == 1 {
        return 0;
    }
    let total = n * (n - 1) / 2;

    // Candidate order is a pure speed heuristic (low degree first tends to
    // reach small prefixes early); correctness comes from exhaustive search.
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&u| (g.degree(u), u));

    let mut best = u64::MAX >> (64 - total);
    let mut placed = Vec::with_capacity(n);
    descend(g, &by_degree, total, &mut placed, 0u64, 0u64, 0, &mut best);
    best
}

#[allow(clippy::too_many_arguments)]
fn descend(
    g: &Graph,
    by_degree: &[usize],
    total: usize,
    placed: &mut Vec<usize>,
    used: u64,
    acc: u64,
    filled: usize,
    best: &mut u64,
) {
    let pos = placed.len();
    let n = g.n();
    if pos == n {
        if acc < *best {
            *best = acc;
        }
        return;
    }
    for &v in by_degree {
        if used >> v & 1 == 1 {
            continue;
        }
        let mut column = 0u64;
        for &p in placed.iter() {
            column = column << 1 | u64::from(g.has_edge(v, p));
        }
        let acc2 = acc << pos | column;
        let filled2 = filled + pos;
        if acc2 > *best >> (total - filled2) {
            continue;
        }
        placed.push(v);
        descend(g, by_degree, total, placed, used | 1 << v, acc2, filled2, best);
        placed.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn all_labelings_of_p3_share_one_code() {
        let p3 = path(3);
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let codes: BTreeSet<Vec<u8>> = perms
            .iter()
            .map(|perm| canonical_code(&p3.permuted(perm)).unwrap())
            .collect();
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn same_order_same_size_nonisomorphic_differ() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let star4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_code(&c4).unwrap(), canonical_code(&star4).unwrap());
    }

    #[test]
    fn reversal_is_invisible() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)]).unwrap();
        let reversed = g.permuted(&[5, 4, 3, 2, 1, 0]);
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&reversed).unwrap());
    }

    #[test]
    fn code_is_valid_graph6_of_isomorphic_graph() {
        let g = path(5);
        let code = canonical_code(&g).unwrap();
        let back = crate::graph6::parse_graph6(&code).unwrap();
        assert_eq!(back.n(), 5);
        assert_eq!(back.edge_count(), 4);
        // A path stays a path under relabeling: two ends, three inner.
        let mut degs: Vec<usize> = back.vertices().map(|u| back.degree(u)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn class_counts_through_six_vertices() {
        let expected = [1, 2, 4, 11, 34, 156];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_nonisomorphic(i + 1).unwrap().len(), want);
        }
    }

    #[test]
    fn enumeration_yields_canonical_distinct_representatives() {
        let graphs = enumerate_nonisomorphic(5).unwrap();
        let codes: BTreeSet<Vec<u8>> = graphs
            .iter()
            .map(|g| canonical_code(g).unwrap())
            .collect();
        assert_eq!(codes.len(), graphs.len());
        for g in &graphs {
            assert_eq!(triangle_bits(g), canonical_bits(g), "representative not canonical");
        }
    }

    #[test]
    fn size_guards() {
        assert_eq!(
            enumerate_nonisomorphic(9).unwrap_err(),
            EnumError::EnumerationOrder(9)
        );
        assert_eq!(
            enumerate_nonisomorphic(0).unwrap_err(),
            EnumError::EnumerationOrder(0)
        );
        let g11 = Graph::empty(11).unwrap();
        assert_eq!(canonical_code(&g11).unwrap_err(), EnumError::CanonicalOrder(11));
    }

    #[test]
    fn triangle_bits_round_trip() {
        let g = Graph::from_edges(5, &[(0, 2), (1, 4), (2, 3)]).unwrap();
        assert_eq!(graph_from_triangle_bits(5, triangle_bits(&g)), g);
    }
}
