use crate::bits::{low_mask, lowest, BitIter};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Two edges that induce `2K₂`; `first < second` lexicographically and each edge is `(lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Induced2K2 {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

impl Induced2K2 {
    pub fn new(a: (usize, usize), b: (usize, usize)) -> Self {
        let norm = |(u, v): (usize, usize)| (u.min(v), u.max(v));
        let (a, b) = (norm(a), norm(b));
        Induced2K2 {
            first: a.min(b),
            second: a.max(b),
        }
    }

    pub fn vertices(&self) -> [usize; 4] {
        let mut v = [self.first.0, self.first.1, self.second.0, self.second.1];
        v.sort_unstable();
        v
    }

    /// Checks that the four vertices really induce two disjoint edges in `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let (a, b) = self.first;
        let (c, d) = self.second;
        let distinct = {
            let v = self.vertices();
            v.windows(2).all(|w| w[0] != w[1])
        };
        distinct
            && g.has_edge(a, b)
            && g.has_edge(c, d)
            && !g.has_edge(a, c)
            && !g.has_edge(a, d)
            && !g.has_edge(b, c)
            && !g.has_edge(b, d)
    }
}

/// Pair scan: the lexicographically first pair of edges inducing `2K₂`.
pub fn find_2k2_by_edge_pairs(g: &Graph) -> Option<Induced2K2> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        let blocked = g.neighbors(a).union(g.neighbors(b));
        for &(c, d) in &edges[i + 1..] {
            if !blocked.contains(c) && !blocked.contains(d) {
                return Some(Induced2K2::new((a, b), (c, d)));
            }
        }
    }
    None
}

/// Non-neighborhood scan: for each edge `xy`, the vertices seeing neither end
/// must be independent.
pub fn find_2k2_by_non_neighborhoods(g: &Graph) -> Option<Induced2K2> {
    if g.n() <= 64 {
        let adj = g.masks();
        let full = low_mask(g.n());
        for (x, y) in g.edges() {
            let rest = full & !(adj[x] | adj[y] | (1 << x) | (1 << y));
            for v in BitIter(rest) {
                let inside = adj[v] & rest;
                if inside != 0 {
                    return Some(Induced2K2::new((x, y), (v, lowest(inside))));
                }
            }
        }
        return None;
    }
    for (x, y) in g.edges() {
        let mut rest = g
            .vertex_set()
            .difference(&g.neighbors(x).union(g.neighbors(y)));
        rest.remove(x);
        rest.remove(y);
        if let Some(e) = g.edge_within(&rest) {
            return Some(Induced2K2::new((x, y), e));
        }
    }
    None
}

/// `None` iff `g` is 2K₂-free. Uses the non-neighborhood scan; the pair scan is
/// its cross-check.
pub fn is_2k2_free(g: &Graph) -> Option<Induced2K2> {
    find_2k2_by_non_neighborhoods(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_examples() {
        assert_eq!(is_2k2_free(&named::cycle(4)), None);
        assert_eq!(find_2k2_by_edge_pairs(&named::cycle(4)), None);
        for g in [named::path(5), named::cycle(6)] {
            let w = find_2k2_by_edge_pairs(&g).unwrap();
            assert_eq!(w.vertices(), [0, 1, 3, 4]);
            assert!(w.holds_in(&g));
            let w2 = find_2k2_by_non_neighborhoods(&g).unwrap();
            assert!(w2.holds_in(&g));
        }
        assert_eq!(is_2k2_free(&named::complete(6)), None);
        assert_eq!(
            is_2k2_free(&named::petersen()).map(|w| w.holds_in(&named::petersen())),
            Some(true)
        );
    }

    #[test]
    fn large_universe_path_matches_mask_path() {
        let g = named::disjoint_union(&named::complete(40), &named::complete(30));
        let w = find_2k2_by_non_neighborhoods(&g).unwrap();
        assert!(w.holds_in(&g));
        assert!(find_2k2_by_edge_pairs(&g).unwrap().holds_in(&g));
    }
}
