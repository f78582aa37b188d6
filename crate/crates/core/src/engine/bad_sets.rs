use super::classify::Classification;
use crate::graph::{Graph, VertexSet};
use crate::two_factor::TwoFactor;
use serde::Serialize;
use std::collections::BTreeMap;

/// Bad vertices of each non-alternating cycle.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BadSets {
    /// Non-alternating cycle index to its bad vertices.
    pub by_cycle: BTreeMap<usize, VertexSet>,
    /// Bad B-type vertex to the first alternating cycle `K` with `N(x) ∩ V(K) = B ∩ V(K)`.
    pub bad_wrt: BTreeMap<usize, usize>,
}

impl BadSets {
    pub fn of(&self, cycle: usize) -> Option<&VertexSet> {
        self.by_cycle.get(&cycle)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.by_cycle.values().any(|s| s.contains(v))
    }
}

/// A-type vertices of each non-alternating cycle, plus its B-type vertices
/// whose neighbourhood on some alternating cycle is exactly that cycle's B side.
pub fn compute_bad_sets(g: &Graph, f: &TwoFactor, cls: &Classification) -> BadSets {
    let n = g.n();
    let b_side: Vec<(usize, VertexSet)> = cls
        .alternating
        .iter()
        .map(|&k| (k, f.cycle_vertex_set(k).intersection(&cls.b0)))
        .collect();
    let mut out = BadSets::default();
    for &h in &cls.non_alternating {
        let mut set = VertexSet::empty(n);
        for &x in f.cycle(h).vertices() {
            if cls.is_a(x) {
                set.insert(x);
                continue;
            }
            let hit = b_side
                .iter()
                .find(|(k, b)| &g.neighbors(x).intersection(&f.cycle_vertex_set(*k)) == b);
            if let Some(&(k, _)) = hit {
                set.insert(x);
                out.bad_wrt.insert(x, k);
            }
        }
        out.by_cycle.insert(h, set);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::classify::classify;
    use crate::graph::OrientedCycle;

    #[test]
    fn isolated_cycle_has_no_bad_vertices() {
        // triangle 0 1 2 with no edges to a 4-cycle 3 4 5 6
        let g = Graph::from_edge_list(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)])
            .unwrap();
        let f = TwoFactor::new(
            &g,
            vec![
                OrientedCycle::new(&g, vec![0, 1, 2]).unwrap(),
                OrientedCycle::new(&g, vec![3, 4, 5, 6]).unwrap(),
            ],
        )
        .unwrap();
        let cls = classify(&g, &f);
        let bad = compute_bad_sets(&g, &f, &cls);
        assert!(bad.by_cycle.values().all(VertexSet::is_empty));
    }

    #[test]
    fn b_vertex_seeing_the_b_side_is_bad() {
        // square 0 1 2 3 alternates A and B; triangle 4 5 6 is all B
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 4)];
        // 0 and 2 are A-type: each sees consecutive 4 5
        edges.extend_from_slice(&[(0, 4), (0, 5), (2, 4), (2, 5)]);
        // 6 sees exactly the B side of the square
        edges.extend_from_slice(&[(6, 1), (6, 3)]);
        let g = Graph::from_edge_list(7, edges).unwrap();
        let f = TwoFactor::new(
            &g,
            vec![
                OrientedCycle::new(&g, vec![0, 1, 2, 3]).unwrap(),
                OrientedCycle::new(&g, vec![4, 5, 6]).unwrap(),
            ],
        )
        .unwrap();
        let cls = classify(&g, &f);
        assert_eq!(cls.alternating, vec![0]);
        let bad = compute_bad_sets(&g, &f, &cls);
        let h = bad.of(1).unwrap();
        assert!(h.contains(6));
        assert_eq!(bad.bad_wrt.get(&6), Some(&0));
    }
}
