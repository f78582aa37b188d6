use crate::graph::{Graph, VertexSet};
use crate::two_factor::TwoFactor;
use serde::Serialize;

/// Vertex and cycle types of a 2-factor with at least two cycles.
///
/// A vertex is A-type when it sees two consecutive vertices of some other
/// cycle, B-type otherwise. A factor edge is B-type when both ends are. A cycle
/// is alternating when none of its edges is B-type and A and B strictly
/// alternate along it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub a_type: VertexSet,
    /// For A-type `x`: the first cycle index `D` and vertex `y ∈ D` with `xy, xy⁺ ∈ E`.
    pub a_witness: Vec<Option<(usize, usize)>>,
    /// Cycle indices whose vertices alternate between A and B.
    pub alternating: Vec<usize>,
    /// The remaining cycle indices.
    pub non_alternating: Vec<usize>,
    /// A-type vertices on alternating cycles.
    pub a0: VertexSet,
    /// B-type vertices on alternating cycles.
    pub b0: VertexSet,
}

impl Classification {
    pub fn is_a(&self, v: usize) -> bool {
        self.a_type.contains(v)
    }

    pub fn is_b(&self, v: usize) -> bool {
        !self.a_type.contains(v)
    }

    /// Whether the factor edge `v v⁺` has two B-type ends.
    pub fn is_b_edge(&self, f: &TwoFactor, v: usize) -> bool {
        self.is_b(v) && self.is_b(f.succ(v))
    }

    pub fn is_alternating(&self, cycle: usize) -> bool {
        self.alternating.contains(&cycle)
    }
}

/// The first cycle `D ≠ cycle(x)` and `y ∈ D` with `x` adjacent to `y` and its
/// successor in `view`. Cycles are scanned by index, `y` by vertex id.
pub fn a_witness_in(g: &Graph, view: &TwoFactor, x: usize) -> Option<(usize, usize)> {
    let own = view.cycle_of(x);
    (0..view.omega()).filter(|&d| d != own).find_map(|d| {
        let on_d = view.cycle_vertex_set(d);
        g.neighbors(x)
            .intersection(&on_d)
            .iter()
            .find(|&y| g.has_edge(x, view.succ(y)))
            .map(|y| (d, y))
    })
}

pub fn classify(g: &Graph, f: &TwoFactor) -> Classification {
    let n = g.n();
    let a_witness: Vec<Option<(usize, usize)>> = (0..n).map(|x| a_witness_in(g, f, x)).collect();
    let a_type = VertexSet::from_vertices(n, (0..n).filter(|&x| a_witness[x].is_some()));
    let mut alternating = Vec::new();
    let mut non_alternating = Vec::new();
    let mut a0 = VertexSet::empty(n);
    let mut b0 = VertexSet::empty(n);
    for (ci, c) in f.cycles().iter().enumerate() {
        let alt = c
            .edges()
            .all(|(u, v)| a_type.contains(u) != a_type.contains(v));
        if alt {
            alternating.push(ci);
            for &v in c.vertices() {
                if a_type.contains(v) {
                    a0.insert(v);
                } else {
                    b0.insert(v);
                }
            }
        } else {
            non_alternating.push(ci);
        }
    }
    Classification {
        a_type,
        a_witness,
        alternating,
        non_alternating,
        a0,
        b0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, OrientedCycle};

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
    fn two_isolated_triangles_are_all_b() {
        let g = named::disjoint_union(&named::complete(3), &named::complete(3));
        let f = factor(&g, &[&[0, 1, 2], &[3, 4, 5]]);
        let cls = classify(&g, &f);
        assert!(cls.a_type.is_empty());
        assert!(cls.alternating.is_empty());
        assert_eq!(cls.non_alternating, vec![0, 1]);
        assert!((0..6).all(|v| cls.is_b_edge(&f, v)));
    }

    #[test]
    fn k6_split_into_triangles_is_all_a() {
        let g = named::complete(6);
        let f = factor(&g, &[&[0, 1, 2], &[3, 4, 5]]);
        let cls = classify(&g, &f);
        assert_eq!(cls.a_type, g.vertex_set());
        assert_eq!(cls.a_witness[0], Some((1, 3)));
    }

    #[test]
    fn witness_respects_orientation_of_view() {
        // x = 0 sees 3 and 4 on the triangle 3 4 5
        let g = Graph::from_edge_list(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (0, 4),
            ],
        )
        .unwrap();
        let f = factor(&g, &[&[0, 1, 2], &[3, 4, 5]]);
        assert_eq!(a_witness_in(&g, &f, 0), Some((1, 3)));
        assert_eq!(a_witness_in(&g, &f.reversed(), 0), Some((1, 4)));
    }
}
