//! Simple undirected graphs on dense vertex ids, plus the oriented cycle and
//! path vocabulary the factor surgeries are written in.

mod cycle;
pub mod named;
mod text;
mod vertex_set;

pub use cycle::{splice_cycle, splice_runs, CycleError, OrientedCycle, OrientedPath};
pub use text::{parse_graph, write_graph};
pub use vertex_set::VertexSet;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Immutable simple graph. Adjacency is symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list; repeated pairs collapse to one edge.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Builds a graph from neighbor masks (n <= 64). Panics if the masks are
    /// not a symmetric irreflexive relation.
    pub fn from_masks(masks: &[u64]) -> Graph {
        let n = masks.len();
        assert!(n <= 64);
        for (v, &m) in masks.iter().enumerate() {
            assert_eq!((m >> v) & 1, 0, "self-loop at {v}");
            let mut rest = m;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                assert!(
                    u < n && (masks[u] >> v) & 1 == 1,
                    "asymmetric pair ({v},{u})"
                );
            }
        }
        let adj = masks.iter().map(|&m| VertexSet::from_mask(n, m)).collect();
        Self::from_adjacency(adj)
    }

    fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        let edge_count = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph { n, adj, edge_count }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Neighbor masks for the n <= 64 fast path.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask fast path needs n <= 64");
        self.adj.iter().map(VertexSet::mask).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count * 2 == self.n * self.n.saturating_sub(1)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `N_G(S)`: every vertex adjacent to some member of `s`.
    pub fn neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// `V_H(S) = N_G(S) ∩ h`.
    pub fn restricted_neighborhood(&self, s: &VertexSet, h: &VertexSet) -> VertexSet {
        self.neighborhood_of(s).intersection(h)
    }

    /// `V̄_H(S) = h ∖ V_H(S)`.
    pub fn restricted_non_neighborhood(&self, s: &VertexSet, h: &VertexSet) -> VertexSet {
        h.difference(&self.neighborhood_of(s))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// First edge (lexicographic) with both ends in `s`.
    pub fn edge_within(&self, s: &VertexSet) -> Option<(usize, usize)> {
        s.iter().find_map(|u| {
            self.adj[u]
                .intersection(s)
                .iter()
                .find(|&v| v > u)
                .map(|v| (u, v))
        })
    }

    /// Connected components of the subgraph induced on `alive`, each as a vertex set,
    /// ordered by their smallest vertex.
    pub fn components_within(&self, alive: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = alive.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::singleton(self.n, start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.adj[v].intersection(&remaining).iter() {
                    if comp.insert(u) {
                        stack.push(u);
                    }
                }
            }
            remaining = remaining.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// `ω(G − S)`.
    pub fn component_count_without(&self, removed: &VertexSet) -> usize {
        self.components_within(&removed.complement()).len()
    }

    /// Induced subgraph on `keep`, relabelled in ascending order; also returns the
    /// map from new ids to old ids.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.to_vec();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (new_id[u], new_id[v]));
        let g = Graph::from_edge_list(old.len(), edges).expect("induced edges are valid");
        (g, old)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| {
                let mut s = full.difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Self::from_adjacency(adj)
    }

    /// Graph with the given vertex pairs toggled.
    pub fn with_flipped_pairs(&self, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = self.adj.clone();
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= self.n {
                    return Err(GraphError::OutOfRange {
                        vertex: w,
                        n: self.n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(v) {
                adj[u].remove(v);
                adj[v].remove(u);
            } else {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Ok(Self::from_adjacency(adj))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}
