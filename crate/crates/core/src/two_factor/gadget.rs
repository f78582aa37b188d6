//! Reduction from 2-factors to perfect matchings.
//!
//! A vertex of degree `d` becomes `d` slots, one per incident edge, plus `d − 2`
//! cores joined to every slot. An edge `uv` becomes the slot–slot edge between
//! its slot at `u` and its slot at `v`. In a perfect matching the cores absorb
//! all but two slots at each vertex, and the two left over pick its factor edges.

use super::blossom::maximum_matching;
use crate::graph::{Graph, VertexSet};

pub struct GadgetGraph {
    pub adj: Vec<Vec<usize>>,
    /// For each gadget vertex that is a slot: the original edge it stands for.
    pub slot_edge: Vec<Option<(usize, usize)>>,
}

impl GadgetGraph {
    /// Gadget for the subgraph of `g` induced on `support`. Returns `None` when
    /// some vertex has fewer than two neighbors there.
    pub fn build(g: &Graph, support: &VertexSet) -> Option<GadgetGraph> {
        let n = g.n();
        let mut slot_of: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut adj: Vec<Vec<usize>> = Vec::new();
        let mut slot_edge = Vec::new();
        for v in support.iter() {
            let nbrs = g.neighbors(v).intersection(support);
            let d = nbrs.len();
            if d < 2 {
                return None;
            }
            let first_slot = adj.len();
            for u in nbrs.iter() {
                slot_of[v].push((u, adj.len()));
                adj.push(Vec::new());
                slot_edge.push(Some((v.min(u), v.max(u))));
            }
            let first_core = adj.len();
            for _ in 0..d - 2 {
                adj.push(Vec::new());
                slot_edge.push(None);
            }
            for s in first_slot..first_core {
                for c in first_core..first_core + d - 2 {
                    adj[s].push(c);
                    adj[c].push(s);
                }
            }
        }
        for v in support.iter() {
            for &(u, s) in &slot_of[v] {
                if u > v {
                    let t = slot_of[u].iter().find(|&&(w, _)| w == v).unwrap().1;
                    adj[s].push(t);
                    adj[t].push(s);
                }
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Some(GadgetGraph { adj, slot_edge })
    }

    /// Original edges picked by a perfect matching, or `None` if there is none.
    pub fn factor_edges(&self) -> Option<Vec<(usize, usize)>> {
        let mate = maximum_matching(&self.adj);
        let mut edges = Vec::new();
        for (s, m) in mate.iter().enumerate() {
            let t = (*m)?;
            if let (Some(e), Some(_)) = (self.slot_edge[s], self.slot_edge[t]) {
                if s < t {
                    edges.push(e);
                }
            }
        }
        edges.sort_unstable();
        Some(edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn gadget_sizes() {
        let g = named::complete(4);
        let gad = GadgetGraph::build(&g, &g.vertex_set()).unwrap();
        // 4 vertices × (3 slots + 1 core)
        assert_eq!(gad.adj.len(), 16);
        assert!(GadgetGraph::build(&named::star(3), &VertexSet::full(4)).is_none());
    }

    #[test]
    fn picks_two_edges_per_vertex() {
        let g = named::petersen();
        let edges = GadgetGraph::build(&g, &g.vertex_set())
            .unwrap()
            .factor_edges()
            .unwrap();
        let mut deg = [0; 10];
        for (u, v) in edges {
            assert!(g.has_edge(u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
        assert!(deg.iter().all(|&d| d == 2));
    }
}
