use super::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("vertex {0} appears more than once")]
    Overlap(usize),
    #[error("junction {junction}: {from} and {to} are not adjacent")]
    NotAdjacent {
        junction: usize,
        from: usize,
        to: usize,
    },
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("a path needs at least one vertex")]
    EmptyPath,
}

fn check_simple(g: &Graph, vertices: &[usize]) -> Result<(), CycleError> {
    let mut seen = vec![false; g.n()];
    for &v in vertices {
        if v >= g.n() {
            return Err(CycleError::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(CycleError::Overlap(v));
        }
    }
    Ok(())
}

/// A path `v_0 v_1 .. v_k` of distinct, consecutively adjacent vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedPath {
    vertices: Vec<usize>,
}

impl OrientedPath {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, CycleError> {
        if vertices.is_empty() {
            return Err(CycleError::EmptyPath);
        }
        check_simple(g, &vertices)?;
        for (i, w) in vertices.windows(2).enumerate() {
            if !g.has_edge(w[0], w[1]) {
                return Err(CycleError::NotAdjacent {
                    junction: i,
                    from: w[0],
                    to: w[1],
                });
            }
        }
        Ok(OrientedPath { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn reversed(&self) -> OrientedPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        OrientedPath { vertices }
    }
}

/// Cycle with a fixed orientation; `vertices[i + 1]` is the successor of `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedCycle {
    vertices: Vec<usize>,
}

impl OrientedCycle {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, CycleError> {
        if vertices.len() < 3 {
            return Err(CycleError::TooShort(vertices.len()));
        }
        check_simple(g, &vertices)?;
        let k = vertices.len();
        for i in 0..k {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            if !g.has_edge(a, b) {
                return Err(CycleError::NotAdjacent {
                    junction: i,
                    from: a,
                    to: b,
                });
            }
        }
        Ok(OrientedCycle { vertices })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_trusted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.len() >= 3);
        OrientedCycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn succ(&self, v: usize) -> usize {
        let i = self.position(v).expect("vertex on cycle");
        self.vertices[(i + 1) % self.len()]
    }

    pub fn pred(&self, v: usize) -> usize {
        let i = self.position(v).expect("vertex on cycle");
        self.vertices[(i + self.len() - 1) % self.len()]
    }

    pub fn min_vertex(&self) -> usize {
        *self.vertices.iter().min().unwrap()
    }

    pub fn reversed(&self) -> OrientedCycle {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        OrientedCycle { vertices }
    }

    /// Same orientation, listed from `start`.
    pub fn rotated_to(&self, start: usize) -> OrientedCycle {
        let i = self.position(start).expect("vertex on cycle");
        let mut vertices = self.vertices[i..].to_vec();
        vertices.extend_from_slice(&self.vertices[..i]);
        OrientedCycle { vertices }
    }

    /// Starts at the minimum vertex and heads toward its smaller neighbor on the cycle.
    pub fn canonical(&self) -> OrientedCycle {
        let c = self.rotated_to(self.min_vertex());
        if c.vertices[1] > *c.vertices.last().unwrap() {
            c.reversed().rotated_to(c.vertices[0])
        } else {
            c
        }
    }

    /// Vertices from `from` to `to` following the orientation, both inclusive.
    pub fn arc(&self, from: usize, to: usize) -> Vec<usize> {
        let k = self.len();
        let mut i = self.position(from).expect("vertex on cycle");
        let mut out = vec![from];
        while self.vertices[i] != to {
            i = (i + 1) % k;
            out.push(self.vertices[i]);
            assert!(out.len() <= k, "vertex {to} not on cycle");
        }
        out
    }

    /// Vertices from `from` to `to` against the orientation, both inclusive.
    pub fn arc_back(&self, from: usize, to: usize) -> Vec<usize> {
        let k = self.len();
        let mut i = self.position(from).expect("vertex on cycle");
        let mut out = vec![from];
        while self.vertices[i] != to {
            i = (i + k - 1) % k;
            out.push(self.vertices[i]);
            assert!(out.len() <= k, "vertex {to} not on cycle");
        }
        out
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Joins the segments end to start, closing the last back to the first.
pub fn splice_cycle(g: &Graph, segments: &[OrientedPath]) -> Result<OrientedCycle, CycleError> {
    let vertices: Vec<usize> = segments
        .iter()
        .flat_map(|s| s.vertices.iter().copied())
        .collect();
    check_simple(g, &vertices)?;
    let k = segments.len();
    for i in 0..k {
        let from = segments[i].last();
        let to = segments[(i + 1) % k].first();
        if k == 1 && segments[0].len() < 3 {
            break;
        }
        if !g.has_edge(from, to) {
            return Err(CycleError::NotAdjacent {
                junction: i,
                from,
                to,
            });
        }
    }
    if vertices.len() < 3 {
        return Err(CycleError::TooShort(vertices.len()));
    }
    Ok(OrientedCycle { vertices })
}

/// Splices raw vertex runs; each run must itself be a path in `g`.
pub fn splice_runs(g: &Graph, runs: &[Vec<usize>]) -> Result<OrientedCycle, CycleError> {
    let segments = runs
        .iter()
        .map(|r| OrientedPath::new(g, r.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    splice_cycle(g, &segments)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use proptest::prelude::*;

    fn path(g: &Graph, v: &[usize]) -> OrientedPath {
        OrientedPath::new(g, v.to_vec()).unwrap()
    }

    #[test]
    fn splice_reassembles_c4() {
        let g = named::cycle(4);
        let c = splice_cycle(&g, &[path(&g, &[0, 1]), path(&g, &[2, 3])]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3]);
        assert_eq!(c.succ(3), 0);
        assert_eq!(c.pred(0), 3);
    }

    #[test]
    fn splice_single_hamiltonian_path_of_k4() {
        let g = named::complete(4);
        let c = splice_cycle(&g, &[path(&g, &[2, 0, 3, 1])]).unwrap();
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn splice_reports_failures() {
        let g = named::cycle(6);
        let err = splice_cycle(&g, &[path(&g, &[0, 1]), path(&g, &[3, 4])]).unwrap_err();
        assert_eq!(
            err,
            CycleError::NotAdjacent {
                junction: 0,
                from: 1,
                to: 3
            }
        );
        let err = splice_cycle(&g, &[path(&g, &[0, 1, 2]), path(&g, &[2, 3])]).unwrap_err();
        assert_eq!(err, CycleError::Overlap(2));
    }

    #[test]
    fn merge_of_two_triangles_through_a_deleted_vertex() {
        // triangles C = 0 1 2, D = 3 4 5; x = 0, y = 3, y+ = 4, y++ = 5, x+ = 1
        // chords 03 and 15 give x y <-D- y++ x+ -C-> x on everything but y+.
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
                (1, 5),
            ],
        )
        .unwrap();
        let c = OrientedCycle::new(&g, vec![0, 1, 2]).unwrap();
        let d = OrientedCycle::new(&g, vec![3, 4, 5]).unwrap();
        let (x, y) = (0, 3);
        let (xp, ypp) = (c.succ(x), d.succ(d.succ(y)));
        let merged = splice_runs(&g, &[vec![x], d.arc_back(y, ypp), c.arc(xp, c.pred(x))]).unwrap();
        let mut vs = merged.vertices().to_vec();
        vs.sort();
        assert_eq!(vs, vec![0, 1, 2, 3, 5]);
    }

    #[test]
    fn arcs_follow_orientation() {
        let g = named::cycle(6);
        let c = OrientedCycle::new(&g, (0..6).collect()).unwrap();
        assert_eq!(c.arc(4, 1), vec![4, 5, 0, 1]);
        assert_eq!(c.arc_back(1, 4), vec![1, 0, 5, 4]);
        assert_eq!(c.arc(2, 2), vec![2]);
        assert_eq!(c.reversed().canonical(), c);
    }

    proptest! {
        #[test]
        fn splitting_a_cycle_and_splicing_restores_it(n in 3usize..40, cuts in proptest::collection::btree_set(1usize..40, 0..6), rot in 0usize..40) {
            let g = named::cycle(n);
            let order: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
            let mut bounds: Vec<usize> = cuts.into_iter().filter(|&c| c < n).collect();
            bounds.insert(0, 0);
            bounds.push(n);
            let segments: Vec<OrientedPath> = bounds
                .windows(2)
                .map(|w| OrientedPath::new(&g, order[w[0]..w[1]].to_vec()).unwrap())
                .collect();
            let c = splice_cycle(&g, &segments).unwrap();
            prop_assert_eq!(c.vertices(), &order[..]);
            let mut v = c.vertices()[0];
            let mut seen = std::collections::BTreeSet::new();
            for _ in 0..c.len() {
                prop_assert!(seen.insert(v));
                prop_assert_eq!(c.pred(c.succ(v)), v);
                v = c.succ(v);
            }
            prop_assert_eq!(v, c.vertices()[0]);
        }
    }
}
