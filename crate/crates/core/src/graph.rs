//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n`. Adjacency is stored as one `u64` bitset row per
//! vertex, so every neighborhood query is a couple of word operations.
//! Graphs are immutable after construction; the constructors reject loops,
//! out-of-range endpoints, and orders outside `1..=64`, which makes the
//! internal invariants (symmetric rows, zero diagonal, no stray high bits)
//! unconditional everywhere else.

use thiserror::Error;

/// Hard cap on the number of vertices, chosen so a neighborhood row fits in
/// one machine word.
pub const MAX_VERTICES: usize = 64;

/// Errors from graph constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    OrderZero,
    #[error("graph order {0} exceeds the maximum of {MAX_VERTICES}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} (simple graphs only)")]
    LoopEdge(usize),
    #[error("disjoint union of orders {left} and {right} exceeds {MAX_VERTICES}")]
    UnionTooLarge { left: usize, right: usize },
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::OrderZero);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Graph on `n` vertices with the given edge list. Duplicate edges are
    /// collapsed; loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g.debug_validate();
        Ok(g)
    }

    /// Rebuilds a graph from raw adjacency rows. Caller guarantees symmetry,
    /// zero diagonal, and no bits at or above `n`; this is checked in debug
    /// builds.
    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert!(n >= 1 && n <= MAX_VERTICES && adj.len() == n);
        let g = Graph { n, adj };
        g.debug_validate();
        g
    }

    fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        {
            let universe = mask(self.n);
            for u in 0..self.n {
                debug_assert_eq!(self.adj[u] & !universe, 0, "stray bits in row {u}");
                debug_assert_eq!(self.adj[u] >> u & 1, 0, "loop at {u}");
                for v in 0..self.n {
                    debug_assert_eq!(
                        self.adj[u] >> v & 1,
                        self.adj[v] >> u & 1,
                        "asymmetric pair ({u},{v})"
                    );
                }
            }
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Iterator over `0..n`.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Whether `{u, v}` is an edge. Out-of-range or equal endpoints are not.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `u` as a bitset row.
    pub fn neighbors(&self, u: usize) -> u64 {
        assert!(u < self.n, "vertex {u} out of range for order {}", self.n);
        self.adj[u]
    }

    /// Degree of `u`.
    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count_ones() as usize
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let universe = mask(self.n);
        let adj = (0..self.n)
            .map(|u| !self.adj[u] & universe & !(1 << u))
            .collect();
        Graph::from_rows(self.n, adj)
    }

    /// Disjoint union, with `other`'s vertices relabeled to start at `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::UnionTooLarge { left: self.n, right: other.n });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| row << self.n));
        Ok(Graph::from_rows(n, adj))
    }

    /// Subgraph induced by `set`, vertices relabeled to `0..set.len()` in
    /// increasing original order. `set` must be nonempty and within this
    /// graph's universe.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        assert_eq!(set.universe(), self.n, "vertex set universe mismatch");
        let keep: Vec<usize> = set.iter().collect();
        assert!(!keep.is_empty(), "induced subgraph needs at least one vertex");
        let adj = keep
            .iter()
            .map(|&u| {
                let mut row = 0u64;
                for (new_v, &v) in keep.iter().enumerate() {
                    row |= u64::from(self.adj[u] >> v & 1) << new_v;
                }
                row
            })
            .collect();
        Graph::from_rows(keep.len(), adj)
    }

    /// Relabels vertices: image vertex `perm[u]` takes the role of `u`.
    /// `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen >> p & 1 == 0, "not a permutation of 0..n");
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in BitIter(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph::from_rows(self.n, adj)
    }

    /// Connected components, ordered by smallest contained vertex. Each entry
    /// pairs the member set with the induced subgraph on it.
    pub fn components(&self) -> Vec<(VertexSet, Graph)> {
        let mut unvisited = mask(self.n);
        let mut out = Vec::new();
        while unvisited != 0 {
            let root = unvisited.trailing_zeros() as usize;
            let mut comp = 1u64 << root;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for u in BitIter(frontier) {
                    next |= self.adj[u];
                }
                frontier = next & !comp;
                comp |= frontier;
            }
            unvisited &= !comp;
            let set = VertexSet::from_bits(self.n, comp);
            let sub = self.induced(&set);
            out.push((set, sub));
        }
        out
    }

    /// Whether the graph has exactly one component.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Number of edges with exactly one endpoint in `x`.
    pub fn cut_size(&self, x: &VertexSet) -> usize {
        assert_eq!(x.universe(), self.n, "vertex set universe mismatch");
        x.iter()
            .map(|u| (self.adj[u] & !x.bits()).count_ones() as usize)
            .sum()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<(usize, usize)> = self
            .vertices()
            .flat_map(|u| BitIter(self.adj[u] & !mask(u + 1)).map(move |v| (u, v)))
            .collect();
        write!(f, "Graph(n={}, edges={:?})", self.n, edges)
    }
}

/// Subset of the vertices of a graph of order `universe`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    bits: u64,
}

impl VertexSet {
    /// Set from a raw bitmask; bits at or above `universe` must be clear.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        assert!(universe >= 1 && universe <= MAX_VERTICES);
        assert_eq!(bits & !mask(universe), 0, "bits outside universe");
        VertexSet { universe, bits }
    }

    /// Set from explicit member indices.
    pub fn from_indices(universe: usize, members: &[usize]) -> Self {
        let mut bits = 0u64;
        for &v in members {
            assert!(v < universe, "vertex {v} out of range for universe {universe}");
            bits |= 1 << v;
        }
        VertexSet::from_bits(universe, bits)
    }

    /// Empty set over the given universe.
    pub fn empty(universe: usize) -> Self {
        VertexSet::from_bits(universe, 0)
    }

    /// Full set over the given universe.
    pub fn full(universe: usize) -> Self {
        VertexSet::from_bits(universe, mask(universe))
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.bits >> v & 1 == 1
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        VertexSet::from_bits(self.universe, !self.bits & mask(self.universe))
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.bits)
    }
}

/// All-ones mask for the low `n` bits.
pub(crate) fn mask(n: usize) -> u64 {
    debug_assert!(n >= 1 && n <= 64);
    u64::MAX >> (64 - n)
}

/// Iterates set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}
