//! Structural facts about 2K₂-free graphs and minimum 2-factors, as
//! predicates that return a counterexample when they fail.

use crate::engine::{classify, direct_merge_scan};
use crate::graph::{Graph, VertexSet};
use crate::limits::{SizeLimitError, SizeLimits};
use crate::oracles::{find_2k2_by_edge_pairs, find_2k2_by_non_neighborhoods, minimum_cover_within};
use crate::two_factor::TwoFactor;

/// The pair scan and the non-neighbourhood scan disagree on `g`.
pub fn recognizers_disagree(g: &Graph) -> bool {
    find_2k2_by_edge_pairs(g).is_some() != find_2k2_by_non_neighborhoods(g).is_some()
}

/// `{x : d(x) ≤ (n − α)/2}`.
pub fn low_degree_vertices(g: &Graph, alpha: usize) -> VertexSet {
    let n = g.n();
    VertexSet::from_vertices(n, (0..n).filter(|&x| 2 * g.degree(x) + alpha <= n))
}

/// An edge inside the low-degree set; a 2K₂-free graph has none.
pub fn low_degree_edge(g: &Graph, alpha: usize) -> Option<(usize, usize)> {
    g.edge_within(&low_degree_vertices(g, alpha))
}

/// Vertices `x` such that `G − x` has a 2-factor with fewer than `omega` cycles.
pub fn coabsorbable_vertices(
    g: &Graph,
    omega: usize,
    limits: &SizeLimits,
) -> Result<VertexSet, SizeLimitError> {
    let n = g.n();
    let mut out = VertexSet::empty(n);
    for x in 0..n {
        let mut rest = g.vertex_set();
        rest.remove(x);
        if let Some(f) = minimum_cover_within(g, &rest, limits)? {
            if f.omega() < omega {
                out.insert(x);
            }
        }
    }
    Ok(out)
}

/// A co-absorbable vertex with degree above `α − 1`, given the minimum cycle
/// count `omega` of `g`.
pub fn high_degree_coabsorbable(
    g: &Graph,
    omega: usize,
    alpha: usize,
    limits: &SizeLimits,
) -> Result<Option<usize>, SizeLimitError> {
    let co = coabsorbable_vertices(g, omega, limits)?;
    Ok(co.iter().find(|&x| g.degree(x) + 1 > alpha))
}

/// A cross edge whose factor neighbours are adjacent, as the merged factor.
pub fn mergeable_cross_edge(g: &Graph, f: &TwoFactor) -> Option<TwoFactor> {
    direct_merge_scan(g, f)
}

/// A B-type factor edge `xy` and an edge of another cycle that does not have
/// exactly one end in `N({x, y})`.
pub fn alternation_failure(g: &Graph, f: &TwoFactor) -> Option<((usize, usize), (usize, usize))> {
    if f.omega() < 2 {
        return None;
    }
    let cls = classify(g, f);
    for x in 0..g.n() {
        if !cls.is_b_edge(f, x) {
            continue;
        }
        let y = f.succ(x);
        let own = f.cycle_of(x);
        for d in (0..f.omega()).filter(|&d| d != own) {
            for (p, q) in f.cycle(d).edges() {
                let sees = |w: usize| g.has_edge(w, x) || g.has_edge(w, y);
                if sees(p) == sees(q) {
                    return Some(((x, y), (p, q)));
                }
            }
        }
    }
    None
}

/// A cycle holding a B-type edge with fewer than `n/3 + 2` vertices.
pub fn short_b_cycle(g: &Graph, f: &TwoFactor) -> Option<usize> {
    let n = g.n();
    if f.omega() < 2 {
        return None;
    }
    let cls = classify(g, f);
    (0..f.omega()).find(|&c| {
        let cycle = f.cycle(c);
        3 * cycle.len() < n + 6 && cycle.vertices().iter().any(|&v| cls.is_b_edge(f, v))
    })
}
