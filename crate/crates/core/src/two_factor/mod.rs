//! 2-factors: construction through a matching gadget, and putting a deleted
//! vertex back into a factor of the remaining graph.

mod blossom;
mod factor;
mod gadget;
mod reinsert;

pub use blossom::maximum_matching;
pub use factor::{FactorError, TwoFactor};
pub use gadget::GadgetGraph;
pub use reinsert::{reinsert_vertex, successor_set, ReinsertError};

use crate::graph::{Graph, OrientedCycle, VertexSet};

/// Some 2-factor of `g`, or `None` if it has none.
///
/// Each cycle starts at its minimum vertex and heads toward the smaller of that
/// vertex's two factor neighbors.
pub fn find_two_factor(g: &Graph) -> Option<TwoFactor> {
    find_two_factor_within(g, &g.vertex_set())
}

/// A 2-factor of the subgraph induced on `support`.
pub fn find_two_factor_within(g: &Graph, support: &VertexSet) -> Option<TwoFactor> {
    if support.len() < 3 {
        return None;
    }
    let edges = GadgetGraph::build(g, support)?.factor_edges()?;
    let cycles = cycles_from_edges(g.n(), support, &edges);
    Some(TwoFactor::new(g, cycles).expect("matching yields a valid factor"))
}

/// Splits a 2-regular edge set into canonically oriented cycles.
pub(crate) fn cycles_from_edges(
    n: usize,
    support: &VertexSet,
    edges: &[(usize, usize)],
) -> Vec<OrientedCycle> {
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in support.iter() {
        if seen[start] {
            continue;
        }
        debug_assert_eq!(nbrs[start].len(), 2);
        let mut walk = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = *nbrs[start].iter().min().unwrap();
        while cur != start {
            walk.push(cur);
            seen[cur] = true;
            let next = if nbrs[cur][0] == prev {
                nbrs[cur][1]
            } else {
                nbrs[cur][0]
            };
            prev = cur;
            cur = next;
        }
        cycles.push(OrientedCycle::from_trusted(walk));
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn named_factors() {
        let c7 = named::cycle(7);
        let f = find_two_factor(&c7).unwrap();
        assert_eq!(f.omega(), 1);
        assert_eq!(f.cycle(0).vertices(), &[0, 1, 2, 3, 4, 5, 6]);

        let k4 = named::complete(4);
        let f = find_two_factor(&k4).unwrap();
        assert_eq!(f.omega(), 1);
        assert!(f.validate(&k4, &k4.vertex_set()).is_ok());

        assert!(find_two_factor(&named::star(3)).is_none());
        assert!(find_two_factor(&named::path(2)).is_none());
        assert!(find_two_factor(&named::complete_bipartite(2, 3)).is_none());
    }

    #[test]
    fn within_a_support() {
        let g = named::complete(5);
        let support = VertexSet::from_vertices(5, [0, 2, 3, 4]);
        let f = find_two_factor_within(&g, &support).unwrap();
        assert_eq!(f.support(), support);
    }
}
