//! Immutable simple graphs on vertices `0..n` with bitset adjacency.
//!
//! Graphs are values: every surgery returns a fresh graph, and subgraph
//! operations also return the relabeling map so sets found in the subgraph can
//! be lifted back to the original labels. This keeps recursive algorithms and
//! parallel sweeps free of shared mutable state.

use std::fmt;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} not allowed in a simple graph")]
    SelfLoop { v: usize },
    #[error("vertex count {n} exceeds the supported cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
}

/// An immutable simple graph. `adj[v]` is the open neighborhood `N(v)`.
///
/// Invariants (checked at construction): adjacency is symmetric, irreflexive,
/// and every neighbor index lies in `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, cap: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges are tolerated.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds the graph whose upper-triangle edge slots are the low bits of
    /// `bits`, in the column-major order `(0,1), (0,2), (1,2), (0,3), ...`
    /// (the same order the graph6 encoding uses). Requires `n(n-1)/2 <= 64`.
    pub fn from_edge_bits(n: usize, bits: u64) -> Result<Graph, GraphError> {
        let slots = n * n.saturating_sub(1) / 2;
        assert!(slots <= 64, "edge-bit constructor supports at most 64 edge slots");
        let mut edges = Vec::new();
        for (k, (i, j)) in upper_triangle_pairs(n).enumerate() {
            if bits >> k & 1 == 1 {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// The set `{0, ..., n-1}`.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::all_below(self.n)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, in column-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        upper_triangle_pairs(self.n)
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Vertex-disjoint union: `other`'s vertices are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|s| s.shifted_up(self.n)));
        Ok(Graph { n, adj })
    }

    /// The induced subgraph on `keep`, with the relabeling map recorded:
    /// new vertex `i` corresponds to original vertex `labels[i]`.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Subgraph, GraphError> {
        if !keep.is_subset_of(&self.vertex_set()) {
            let v = keep.difference(&self.vertex_set()).first().unwrap();
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let labels = keep.to_vec();
        let mut adj = vec![VertexSet::EMPTY; labels.len()];
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Ok(Subgraph { graph: Graph { n: labels.len(), adj }, labels })
    }

    /// Deletes the closed neighborhood of `v`, keeping everything else.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Subgraph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let keep = self.vertex_set().difference(&self.closed_neighborhood(v));
        self.induced_subgraph(&keep)
    }

    /// Edge-complement on the same vertex set. An involution.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let adj = self
            .vertices()
            .map(|v| {
                let mut s = all.difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = self.vertex_set();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = VertexSet::singleton(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(&self.adj[v]);
                }
                frontier = next.difference(&comp);
                comp = comp.union(&frontier);
            }
            unseen = unseen.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// Asserts the representation invariants: no self-loops, all neighbors in
    /// range, adjacency symmetric. Cheap enough for tests and debugging.
    pub fn assert_valid(&self) {
        for v in self.vertices() {
            assert!(!self.adj[v].contains(v), "self-loop at {v}");
            assert!(
                self.adj[v].is_subset_of(&self.vertex_set()),
                "neighbor out of range at {v}"
            );
            for u in self.adj[v].iter() {
                assert!(self.adj[u].contains(v), "asymmetric edge ({u},{v})");
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An induced subgraph plus the map back to the host graph's labels.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `labels[i]` is the original label of subgraph vertex `i`.
    pub labels: Vec<usize>,
}

impl Subgraph {
    /// Lifts a vertex set of the subgraph back to original labels.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.labels[v]).collect()
    }
}

/// Upper-triangle vertex pairs in column-major order:
/// `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`
pub fn upper_triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}
