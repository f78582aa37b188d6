//! Exhaustive small-graph families: every labeled edge set, or one
//! representative per isomorphism class of a hereditary family.

use crate::graph::Graph;
use petgraph::graph::UnGraph;
use std::collections::HashMap;

/// Every labeled graph on `n` vertices in Gray-code order of the edge set
/// (pairs `(u, v)`, `u < v`, lexicographic, bit `i` toggles pair `i`). Graphs
/// with minimum degree below `min_degree` are skipped without being built.
#[derive(Debug, Clone, Copy)]
pub struct EdgeSetSweep {
    n: usize,
    min_degree: usize,
}

impl EdgeSetSweep {
    /// `min_degree` is capped at `n − 1` so complete graphs always pass.
    pub fn new(n: usize, min_degree: usize) -> Self {
        assert!(
            n * n.saturating_sub(1) / 2 <= 40,
            "edge-set sweep beyond 40 pairs"
        );
        EdgeSetSweep {
            n,
            min_degree: min_degree.min(n.saturating_sub(1)),
        }
    }

    /// Number of edge sets walked, visited or not.
    pub fn total(&self) -> u64 {
        1u64 << (self.n * self.n.saturating_sub(1) / 2)
    }

    /// Calls `visit` with the neighbor masks of each graph that passes the
    /// degree filter.
    pub fn for_each(&self, mut visit: impl FnMut(&[u64])) {
        let n = self.n;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut adj = vec![0u64; n];
        let mut deg = vec![0usize; n];
        let need = self.min_degree;
        let mut low = if need > 0 { n } else { 0 };
        if low == 0 {
            visit(&adj);
        }
        for i in 1..self.total() {
            let (u, v) = pairs[i.trailing_zeros() as usize];
            let adding = (adj[u] >> v) & 1 == 0;
            adj[u] ^= 1 << v;
            adj[v] ^= 1 << u;
            for w in [u, v] {
                if adding {
                    deg[w] += 1;
                    if deg[w] == need {
                        low -= 1;
                    }
                } else {
                    if deg[w] == need {
                        low += 1;
                    }
                    deg[w] -= 1;
                }
            }
            if low == 0 {
                visit(&adj);
            }
        }
    }
}

/// One graph per isomorphism class, grouped by order, for a family closed
/// under vertex deletion. `classes[k]` holds the graphs on `k` vertices.
///
/// Classes on `k + 1` vertices come from adding a vertex to each class on
/// `k` vertices in every possible way; a hereditary family is reached in
/// full this way. Duplicates are caught by invariant buckets and an exact
/// isomorphism test.
pub fn isomorphism_classes(n_max: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    assert!(n_max <= 16, "class enumeration beyond 16 vertices");
    let mut classes: Vec<Vec<Graph>> = vec![vec![Graph::from_masks(&[])]];
    for k in 0..n_max {
        let mut found = ClassSet::default();
        for g in &classes[k] {
            let base = g.masks();
            for nbrs in 0..1u64 << k {
                let mut adj = base.clone();
                adj.push(nbrs);
                for (u, m) in adj.iter_mut().enumerate().take(k) {
                    *m |= ((nbrs >> u) & 1) << k;
                }
                let h = Graph::from_masks(&adj);
                if keep(&h) {
                    found.insert(h);
                }
            }
        }
        classes.push(found.graphs);
    }
    classes
}

#[derive(Default)]
struct ClassSet {
    graphs: Vec<Graph>,
    shapes: Vec<UnGraph<(), ()>>,
    buckets: HashMap<Vec<(usize, usize, usize)>, Vec<usize>>,
}

impl ClassSet {
    fn insert(&mut self, g: Graph) -> bool {
        let shape = UnGraph::<(), ()>::from_edges(g.edges().map(|(u, v)| (u as u32, v as u32)));
        let mut shape = shape;
        while shape.node_count() < g.n() {
            shape.add_node(());
        }
        let bucket = self.buckets.entry(invariant(&g)).or_default();
        if bucket
            .iter()
            .any(|&i| petgraph::algo::is_isomorphic(&self.shapes[i], &shape))
        {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        self.shapes.push(shape);
        true
    }
}

/// Sorted per-vertex (degree, neighbour degree sum, triangles).
fn invariant(g: &Graph) -> Vec<(usize, usize, usize)> {
    let adj = g.masks();
    let mut key: Vec<(usize, usize, usize)> = (0..g.n())
        .map(|v| {
            let mut nbr_deg = 0;
            let mut tri = 0;
            let mut rest = adj[v];
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                nbr_deg += adj[u].count_ones() as usize;
                tri += (adj[u] & adj[v]).count_ones() as usize;
            }
            (adj[v].count_ones() as usize, nbr_deg, tri / 2)
        })
        .collect();
    key.sort_unstable();
    key
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::is_2k2_free;

    #[test]
    fn sweep_counts_match_closed_forms() {
        let mut all = 0;
        EdgeSetSweep::new(4, 0).for_each(|_| all += 1);
        assert_eq!(all, 64);

        // labeled graphs on 4 vertices with minimum degree 2: C4 (3), K4 minus
        // an edge (6), K4 (1)
        let mut dense = 0;
        EdgeSetSweep::new(4, 2).for_each(|_| dense += 1);
        assert_eq!(dense, 10);

        let mut complete_only = 0;
        EdgeSetSweep::new(3, 9).for_each(|adj| {
            assert_eq!(adj, &[0b110, 0b101, 0b011]);
            complete_only += 1;
        });
        assert_eq!(complete_only, 1);
    }

    #[test]
    fn class_counts() {
        let all = isomorphism_classes(6, |_| true);
        let counts: Vec<usize> = all.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);

        let free = isomorphism_classes(4, |g| is_2k2_free(g).is_none());
        assert_eq!(free[4].len(), 10);
    }
}
