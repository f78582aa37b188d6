//! Small named graphs used throughout the tests and suites.

use super::Graph;

pub fn empty(n: usize) -> Graph {
    Graph::from_edge_list(n, []).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// `C_n` on `0 - 1 - .. - (n-1) - 0`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// `P_n` on `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edge_list(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edge_list(10, outer.chain(inner).chain(spokes)).unwrap()
}

/// Vertex-disjoint union, second graph shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let edges = a
        .edges()
        .chain(b.edges().map(|(u, v)| (u + shift, v + shift)));
    Graph::from_edge_list(a.n() + b.n(), edges).unwrap()
}
