use super::hamiltonian::spanning_cycle_within;
use crate::bits::{lowest, BitIter};
use crate::graph::{Graph, OrientedCycle, VertexSet};
use crate::limits::{SizeLimitError, SizeLimits};
use crate::two_factor::{find_two_factor_within, TwoFactor};

/// A 2-factor with the fewest cycles, by exhaustive search over cycle covers.
pub fn minimum_component_two_factor(
    g: &Graph,
) -> Result<Option<(TwoFactor, usize)>, SizeLimitError> {
    minimum_component_two_factor_with(g, &SizeLimits::from_env().unwrap_or_default())
}

pub fn minimum_component_two_factor_with(
    g: &Graph,
    limits: &SizeLimits,
) -> Result<Option<(TwoFactor, usize)>, SizeLimitError> {
    Ok(minimum_cover_within(g, &g.vertex_set(), limits)?.map(|f| {
        let w = f.omega();
        (f, w)
    }))
}

/// Minimum-cycle 2-factor of the subgraph induced on `support`.
pub fn minimum_cover_within(
    g: &Graph,
    support: &VertexSet,
    limits: &SizeLimits,
) -> Result<Option<TwoFactor>, SizeLimitError> {
    SizeLimits::check(limits.min_factor.min(64), g.n(), "minimum 2-factor")?;
    if find_two_factor_within(g, support).is_none() {
        return Ok(None);
    }
    let adj = g.masks();
    let sup = support.mask();
    let cycles = if let Some(c) = spanning_cycle_within(&adj, sup) {
        vec![c]
    } else {
        let mut search = CoverSearch {
            adj: &adj,
            best: None,
            current: Vec::new(),
        };
        search.cover(sup);
        search.best.expect("a factor exists")
    };
    let cycles = cycles
        .into_iter()
        .map(OrientedCycle::from_trusted)
        .collect();
    Ok(Some(
        TwoFactor::new(g, cycles).expect("search yields valid cycles"),
    ))
}

struct CoverSearch<'a> {
    adj: &'a [u64],
    best: Option<Vec<Vec<usize>>>,
    current: Vec<Vec<usize>>,
}

impl CoverSearch<'_> {
    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, Vec::len)
    }

    /// Not Hamiltonian, so two cycles is optimal once reached.
    fn done(&self) -> bool {
        self.best_len() == 2
    }

    fn cover(&mut self, uncovered: u64) {
        if uncovered == 0 {
            if self.current.len() < self.best_len() {
                self.best = Some(self.current.clone());
            }
            return;
        }
        let count = self.current.len();
        if count + 1 >= self.best_len() {
            return;
        }
        if BitIter(uncovered).any(|v| (self.adj[v] & uncovered).count_ones() < 2) {
            return;
        }
        if count + 2 == self.best_len() {
            // only a single closing cycle can improve
            if let Some(c) = spanning_cycle_within(self.adj, uncovered) {
                self.current.push(c);
                self.best = Some(self.current.clone());
                self.current.pop();
            }
            return;
        }
        let v = lowest(uncovered);
        let mut path = vec![v];
        self.cycles_from(v, uncovered & !(1 << v), uncovered, &mut path);
    }

    fn cycles_from(&mut self, v: usize, free: u64, uncovered: u64, path: &mut Vec<usize>) {
        if self.done() {
            return;
        }
        let last = *path.last().unwrap();
        if path.len() >= 3 && self.adj[last] >> v & 1 == 1 && path[1] < last {
            let used: u64 = path.iter().fold(0, |m, &u| m | 1 << u);
            let rest = uncovered & !used;
            if rest == 0 || rest.count_ones() >= 3 {
                self.current.push(path.clone());
                self.cover(rest);
                self.current.pop();
                if self.done() {
                    return;
                }
            }
        }
        for u in BitIter(self.adj[last] & free) {
            path.push(u);
            self.cycles_from(v, free & !(1 << u), uncovered, path);
            path.pop();
            if self.done() {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn min(g: &Graph) -> Option<(TwoFactor, usize)> {
        minimum_component_two_factor_with(g, &SizeLimits::default()).unwrap()
    }

    #[test]
    fn named_examples() {
        let (f, w) = min(&named::cycle(5)).unwrap();
        assert_eq!(w, 1);
        assert_eq!(f.cycle(0).len(), 5);
        let two = named::disjoint_union(&named::complete(3), &named::complete(3));
        assert_eq!(min(&two).unwrap().1, 2);
        assert!(min(&named::star(3)).is_none());
        // Petersen: not Hamiltonian, but two 5-cycles
        assert_eq!(min(&named::petersen()).unwrap().1, 2);
    }

    #[test]
    fn three_triangles_need_three_cycles() {
        let t = named::complete(3);
        let g = named::disjoint_union(&named::disjoint_union(&t, &t), &t);
        let (f, w) = min(&g).unwrap();
        assert_eq!(w, 3);
        assert!(f.validate(&g, &g.vertex_set()).is_ok());
    }

    #[test]
    fn limit_applies() {
        let lim = SizeLimits::default().with_spec("min_factor=4").unwrap();
        assert!(minimum_component_two_factor_with(&named::cycle(5), &lim).is_err());
    }
}
