use super::{FactorError, TwoFactor};
use crate::graph::{splice_runs, Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReinsertError {
    #[error("not a 2-factor of the graph minus {vertex}: {source}")]
    InvalidFactor { vertex: usize, source: FactorError },
}

/// Puts `x` back into a 2-factor of `g − x` without adding cycles.
///
/// With `y⁺` the successor in `f_minus`: if `x` sees some `y` and `y⁺`, it goes
/// between them. Otherwise, if `y⁺z⁺` is an edge for neighbors `y ≠ z` of `x`,
/// the factor is rerouted as `y x z ← y⁺ z⁺ → y`, which keeps one cycle when
/// `y` and `z` share a cycle and merges their two cycles when they do not.
/// Returns `None` exactly when `N(x)⁺ ∪ {x}` is independent.
pub fn reinsert_vertex(
    g: &Graph,
    x: usize,
    f_minus: &TwoFactor,
) -> Result<Option<TwoFactor>, ReinsertError> {
    let mut expected = g.vertex_set();
    expected.remove(x);
    f_minus
        .validate(g, &expected)
        .map_err(|source| ReinsertError::InvalidFactor { vertex: x, source })?;
    let nx: Vec<usize> = g.neighbors(x).iter().collect();

    for &y in &nx {
        let yp = f_minus.succ(y);
        if g.has_edge(x, yp) {
            let ci = f_minus.cycle_of(y);
            let c = f_minus.cycle(ci);
            let cycle = splice_runs(g, &[vec![x], c.arc(yp, y)])
                .expect("insertion between adjacent neighbors");
            return Ok(Some(
                f_minus
                    .replace(g, &[ci], vec![cycle])
                    .expect("valid replacement"),
            ));
        }
    }
    for &y in &nx {
        for &z in &nx {
            if y == z {
                continue;
            }
            let (yp, zp) = (f_minus.succ(y), f_minus.succ(z));
            if !g.has_edge(yp, zp) {
                continue;
            }
            let (cy, cz) = (f_minus.cycle_of(y), f_minus.cycle_of(z));
            let (c, d) = (f_minus.cycle(cy), f_minus.cycle(cz));
            let (cycle, removed) = if cy == cz {
                (
                    splice_runs(g, &[vec![y, x], c.arc_back(z, yp), c.arc(zp, c.pred(y))]),
                    vec![cy],
                )
            } else {
                (
                    splice_runs(g, &[vec![y, x], d.arc_back(z, zp), c.arc(yp, c.pred(y))]),
                    vec![cy, cz],
                )
            };
            let cycle = cycle.expect("rerouting through x");
            return Ok(Some(
                f_minus
                    .replace(g, &removed, vec![cycle])
                    .expect("valid replacement"),
            ));
        }
    }
    Ok(None)
}

/// `N(x)⁺ ∪ {x}` with successors taken in `f_minus`.
pub fn successor_set(g: &Graph, x: usize, f_minus: &TwoFactor) -> VertexSet {
    let mut s = VertexSet::from_vertices(g.n(), g.neighbors(x).iter().map(|y| f_minus.succ(y)));
    s.insert(x);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, OrientedCycle};
    use crate::two_factor::find_two_factor_within;

    fn factor(g: &Graph, cycles: &[&[usize]]) -> TwoFactor {
        TwoFactor::new(
            g,
            cycles
                .iter()
                .map(|c| OrientedCycle::new(g, c.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn triangle_is_not_a_factor_of_c4_minus_a_vertex() {
        let k4 = named::complete(4);
        let tri = factor(&k4, &[&[1, 2, 3]]);
        let c4 = named::cycle(4);
        assert!(matches!(
            reinsert_vertex(&c4, 0, &tri),
            Err(ReinsertError::InvalidFactor { vertex: 0, .. })
        ));
    }

    #[test]
    fn inserts_between_consecutive_neighbors() {
        // C4 plus chord 13: G − 0 is the triangle 1 2 3
        let g = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        let tri = factor(&g, &[&[1, 2, 3]]);
        let out = reinsert_vertex(&g, 0, &tri).unwrap().unwrap();
        assert_eq!(out.omega(), 1);
        assert_eq!(out.succ(3), 0);
        assert_eq!(out.succ(0), 1);
    }

    #[test]
    fn none_when_successor_set_is_independent() {
        let g = Graph::from_edge_list(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 1),
                (0, 4),
            ],
        )
        .unwrap();
        // G − 0 is the 6-cycle 1..6; N(0) = {1, 4}, successors {2, 5} with 0: independent
        let f = factor(&g, &[&[1, 2, 3, 4, 5, 6]]);
        assert_eq!(reinsert_vertex(&g, 0, &f).unwrap(), None);
        assert!(g.is_independent(&successor_set(&g, 0, &f)));
    }

    #[test]
    fn reroutes_across_two_cycles() {
        // two triangles 1 2 3 and 4 5 6; x = 0 sees 1 and 4; successors 2 and 5 adjacent
        let g = Graph::from_edge_list(
            7,
            [
                (1, 2),
                (2, 3),
                (3, 1),
                (4, 5),
                (5, 6),
                (6, 4),
                (0, 1),
                (0, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let f = factor(&g, &[&[1, 2, 3], &[4, 5, 6]]);
        let out = reinsert_vertex(&g, 0, &f).unwrap().unwrap();
        assert_eq!(out.omega(), 1);
        assert!(out.validate(&g, &g.vertex_set()).is_ok());
    }

    #[test]
    fn exhaustive_small_graphs_match_independence_test() {
        // every graph on 6 vertices where G − 0 has a factor
        let pairs: Vec<(usize, usize)> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .collect();
        for bits in (0u32..1 << 15).step_by(7) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(6, edges).unwrap();
            let mut sup = g.vertex_set();
            sup.remove(0);
            let Some(f) = find_two_factor_within(&g, &sup) else {
                continue;
            };
            let out = reinsert_vertex(&g, 0, &f).unwrap();
            assert_eq!(out.is_none(), g.is_independent(&successor_set(&g, 0, &f)));
            if let Some(h) = out {
                assert!(h.omega() <= f.omega());
                assert!(h.validate(&g, &g.vertex_set()).is_ok());
            }
        }
    }
}
