use crate::bits::{low_mask, lowest};
use crate::graph::{Graph, VertexSet};
use crate::limits::{SizeLimitError, SizeLimits};

/// `α(G)` with a maximum independent set, as a maximum clique of the complement
/// found by branch and bound with a greedy-coloring bound.
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet), SizeLimitError> {
    independence_number_with(g, &SizeLimits::from_env().unwrap_or_default())
}

pub fn independence_number_with(
    g: &Graph,
    limits: &SizeLimits,
) -> Result<(usize, VertexSet), SizeLimitError> {
    SizeLimits::check(limits.independence.min(64), g.n(), "independence")?;
    let n = g.n();
    let full = low_mask(n);
    let cadj: Vec<u64> = g
        .masks()
        .iter()
        .enumerate()
        .map(|(v, &m)| full & !m & !(1 << v))
        .collect();
    let mut best = (0usize, 0u64);
    expand(&cadj, 0, 0, full, &mut best);
    Ok((best.0, VertexSet::from_mask(n, best.1)))
}

fn expand(cadj: &[u64], r: u64, rsize: usize, mut p: u64, best: &mut (usize, u64)) {
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(p.count_ones() as usize);
    let mut uncolored = p;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = lowest(q);
            q &= !(1 << v) & !cadj[v];
            uncolored &= !(1 << v);
            order.push((v, color));
        }
    }
    for &(v, c) in order.iter().rev() {
        if rsize + c <= best.0 {
            return;
        }
        let r2 = r | (1 << v);
        let p2 = p & cadj[v];
        if p2 == 0 {
            if rsize + 1 > best.0 {
                *best = (rsize + 1, r2);
            }
        } else {
            expand(cadj, r2, rsize + 1, p2, best);
        }
        p &= !(1 << v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use proptest::prelude::*;

    fn alpha(g: &Graph) -> (usize, VertexSet) {
        independence_number_with(g, &SizeLimits::default()).unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        let adj = g.masks();
        (0u64..1 << n)
            .filter(|&s| crate::bits::BitIter(s).all(|v| adj[v] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn named_values() {
        assert_eq!(alpha(&named::cycle(5)).0, 2);
        let (a, s) = alpha(&named::complete_bipartite(3, 3));
        assert_eq!(a, 3);
        assert!(s.to_vec() == vec![0, 1, 2] || s.to_vec() == vec![3, 4, 5]);
        let p = named::petersen();
        let (a, s) = alpha(&p);
        assert_eq!(a, 4);
        assert_eq!(brute_alpha(&p), 4);
        assert!(p.is_independent(&s));
        assert_eq!(alpha(&named::empty(0)).0, 0);
        assert_eq!(alpha(&named::complete(7)).0, 1);
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(n in 1usize..13, bits in any::<u128>()) {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.enumerate().filter(|(i, _)| (bits >> (i % 128)) & 1 == 1).map(|(_, e)| e).collect();
            let g = Graph::from_edge_list(n, edges).unwrap();
            let (a, s) = alpha(&g);
            prop_assert_eq!(a, brute_alpha(&g));
            prop_assert_eq!(s.len(), a);
            prop_assert!(g.is_independent(&s));
        }
    }
}
