//! Exact combinatorial invariants: degrees, girth, diameter, domination
//! number, neighbor-degree sums, and Moore-graph recognition.
//!
//! Everything here is exact integer combinatorics; the only cross-module
//! contract is that quantities that can be unbounded (girth of a forest,
//! diameter of a disconnected graph) use the explicit [`Count::Infinite`]
//! marker rather than a sentinel number.

use crate::graph::{mask, BitIter, Graph, VertexSet};
use serde::{Serialize, Serializer};

/// Exact count that may be unbounded. `Finite(a) < Finite(b) < Infinite`
/// under the derived order, so threshold tests read naturally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Count {
    Finite(usize),
    Infinite,
}

impl Count {
    /// True when the value is at least `k`; `Infinite` passes every threshold.
    pub fn is_at_least(self, k: usize) -> bool {
        match self {
            Count::Finite(v) => v >= k,
            Count::Infinite => true,
        }
    }
}

impl std::fmt::Display for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Count::Finite(v) => write!(f, "{v}"),
            Count::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Count::Finite(v) => s.serialize_u64(*v as u64),
            Count::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Summary of the exact invariants of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub n: usize,
    pub m: usize,
    pub delta_min: usize,
    pub delta_max: usize,
    pub girth: Count,
    pub diameter: Count,
    pub gamma: usize,
    /// Component orders, listed by smallest contained vertex.
    pub component_orders: Vec<usize>,
}

/// Minimum and maximum vertex degree.
pub fn degree_extremes(g: &Graph) -> (usize, usize) {
    let mut lo = g.n();
    let mut hi = 0;
    for u in g.vertices() {
        let d = g.degree(u);
        lo = lo.min(d);
        hi = hi.max(d);
    }
    (lo, hi)
}

/// Sum of the degrees of the neighbors of `u`.
pub fn neighbor_degree_sum(g: &Graph, u: usize) -> usize {
    BitIter(g.neighbors(u)).map(|v| g.degree(v)).sum()
}

/// Length of a shortest cycle; `Infinite` exactly when the graph is a forest.
///
/// BFS from every vertex, recording the shortest cycle closed by a non-tree
/// edge; the minimum over all roots is exact for unweighted graphs.
pub fn girth(g: &Graph) -> Count {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in g.vertices() {
        let mut seen = 1u64 << root;
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for v in BitIter(g.neighbors(u)) {
                if seen >> v & 1 == 0 {
                    seen |= 1 << v;
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push(v);
                } else if v != parent[u] {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Count::Infinite
    } else {
        Count::Finite(best)
    }
}

/// Maximum eccentricity via all-pairs BFS; `Infinite` exactly when the graph
/// is disconnected.
pub fn diameter(g: &Graph) -> Count {
    let n = g.n();
    let full = mask(n);
    let mut best = 0;
    for root in g.vertices() {
        let mut seen = 1u64 << root;
        let mut frontier = seen;
        let mut depth = 0;
        while frontier != 0 {
            let mut next = 0u64;
            for u in BitIter(frontier) {
                next |= g.neighbors(u);
            }
            frontier = next & !seen;
            if frontier != 0 {
                seen |= frontier;
                depth += 1;
            }
        }
        if seen != full {
            return Count::Infinite;
        }
        best = best.max(depth);
    }
    Count::Finite(best)
}

/// True iff every vertex outside `x` has a neighbor in `x`.
pub fn is_dominating_set(g: &Graph, x: &VertexSet) -> bool {
    assert_eq!(x.universe(), g.n(), "vertex set universe mismatch");
    g.vertices()
        .all(|v| x.contains(v) || g.neighbors(v) & x.bits() != 0)
}

/// A minimum dominating set, found by branch and bound; deterministic for a
/// given graph. The domination number is its size.
pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let full = mask(n);
    let closed: Vec<u64> = g.vertices().map(|u| g.neighbors(u) | 1 << u).collect();
    let max_cover = closed.iter().map(|c| c.count_ones()).max().unwrap() as usize;

    // Greedy cover gives the initial upper bound and a valid fallback set.
    let mut best_set = 0u64;
    let mut undominated = full;
    while undominated != 0 {
        let pick = g
            .vertices()
            .max_by_key(|&u| ((closed[u] & undominated).count_ones(), std::cmp::Reverse(u)))
            .unwrap();
        best_set |= 1 << pick;
        undominated &= !closed[pick];
    }
    let mut best = best_set.count_ones() as usize;

    // Branch on the lowest-index undominated vertex; only members of its
    // closed neighborhood can dominate it. Candidates in descending degree,
    // ties by ascending index, for a strong greedy-first search order.
    let mut candidates: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| {
            let mut c: Vec<usize> = BitIter(closed[v]).collect();
            c.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
            c
        })
        .collect();
    for row in &mut candidates {
        row.shrink_to_fit();
    }

    fn descend(
        closed: &[u64],
        candidates: &[Vec<usize>],
        full: u64,
        max_cover: usize,
        dominated: u64,
        chosen: u64,
        size: usize,
        best: &mut usize,
        best_set: &mut u64,
    ) {
        if dominated == full {
            if size < *best {
                *best = size;
                *best_set = chosen;
            }
            return;
        }
        let open = (full & !dominated).count_ones() as usize;
        if size + open.div_ceil(max_cover) >= *best {
            return;
        }
        let v = (full & !dominated).trailing_zeros() as usize;
        for &u in &candidates[v] {
            descend(
                closed,
                candidates,
                full,
                max_cover,
                dominated | closed[u],
                chosen | 1 << u,
                size + 1,
                best,
                best_set,
            );
        }
    }
    descend(&closed, &candidates, full, max_cover, 0, 0, 0, &mut best, &mut best_set);

    VertexSet::from_bits(n, best_set)
}

/// Domination number: size of a minimum dominating set.
pub fn domination_number(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

/// True iff the graph is connected, d-regular with d at least 2, has girth 5,
/// and order d squared plus 1 (the diameter-2 Moore condition). When the
/// structural test passes, diameter 2 is asserted as a cross-check.
pub fn is_moore_d2(g: &Graph) -> bool {
    let (lo, hi) = degree_extremes(g);
    let ok = lo == hi
        && lo >= 2
        && g.is_connected()
        && girth(g) == Count::Finite(5)
        && g.n() == hi * hi + 1;
    if ok {
        assert_eq!(
            diameter(g),
            Count::Finite(2),
            "regular girth-5 graph of order d^2+1 must have diameter 2"
        );
    }
    ok
}

/// Computes the full invariant profile of a graph.
pub fn profile(g: &Graph) -> InvariantProfile {
    let n = g.n();
    let (delta_min, delta_max) = degree_extremes(g);
    let p = InvariantProfile {
        n,
        m: g.edge_count(),
        delta_min,
        delta_max,
        girth: girth(g),
        diameter: diameter(g),
        gamma: domination_number(g),
        component_orders: g.components().iter().map(|(s, _)| s.len()).collect(),
    };
    debug_assert!(p.delta_min <= p.delta_max && p.delta_max <= n - 1);
    debug_assert!(p.gamma >= n.div_ceil(p.delta_max + 1));
    debug_assert!(n < 2 || p.delta_min <= n - p.gamma);
    debug_assert!(match p.girth {
        Count::Finite(v) => (3..=n).contains(&v),
        Count::Infinite => true,
    });
    p
}
