use crate::bits::{lowest, reach, BitIter};
use crate::graph::{Graph, OrientedCycle};
use crate::limits::{SizeLimitError, SizeLimits};

/// A Hamiltonian cycle found by backtracking from vertex 0, or `None`.
pub fn hamiltonian_cycle_bruteforce(g: &Graph) -> Result<Option<OrientedCycle>, SizeLimitError> {
    hamiltonian_cycle_with(g, &SizeLimits::from_env().unwrap_or_default())
}

pub fn hamiltonian_cycle_with(
    g: &Graph,
    limits: &SizeLimits,
) -> Result<Option<OrientedCycle>, SizeLimitError> {
    SizeLimits::check(limits.hamiltonian.min(64), g.n(), "hamiltonian")?;
    let full = crate::bits::low_mask(g.n());
    Ok(spanning_cycle_within(&g.masks(), full).map(OrientedCycle::from_trusted))
}

/// A cycle through exactly the vertices of `support`, as a vertex sequence.
pub(crate) fn spanning_cycle_within(adj: &[u64], support: u64) -> Option<Vec<usize>> {
    if support.count_ones() < 3 {
        return None;
    }
    if BitIter(support).any(|v| (adj[v] & support).count_ones() < 2) {
        return None;
    }
    if reach(adj, support, lowest(support)) != support {
        return None;
    }
    let start = lowest(support);
    let mut path = Vec::with_capacity(support.count_ones() as usize);
    path.push(start);
    let mut search = Search { adj, start, path };
    search
        .extend(support & !(1 << start))
        .then_some(search.path)
}

struct Search<'a> {
    adj: &'a [u64],
    start: usize,
    path: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, unvisited: u64) -> bool {
        let cur = *self.path.last().unwrap();
        if unvisited == 0 {
            return self.adj[cur] >> self.start & 1 == 1;
        }
        let ends = (1u64 << cur) | (1u64 << self.start);
        // every unvisited vertex still needs two usable neighbors
        let mut forced = None;
        for v in BitIter(unvisited) {
            let avail = self.adj[v] & (unvisited | ends);
            if avail.count_ones() < 2 {
                return false;
            }
            if avail.count_ones() == 2 && avail >> cur & 1 == 1 && cur != self.start {
                if forced.is_some() {
                    return false;
                }
                forced = Some(v);
            }
        }
        // the rest of the path must stay connected to the current end
        let region = unvisited | (1 << cur);
        if reach(self.adj, region, cur) != region {
            return false;
        }
        let candidates = match forced {
            Some(v) => 1u64 << v,
            None => self.adj[cur] & unvisited,
        };
        for v in BitIter(candidates) {
            self.path.push(v);
            if self.extend(unvisited & !(1 << v)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn ham(g: &Graph) -> Option<OrientedCycle> {
        hamiltonian_cycle_with(g, &SizeLimits::default()).unwrap()
    }

    #[test]
    fn named_graphs() {
        let c6 = named::cycle(6);
        assert_eq!(ham(&c6).unwrap().vertices(), &[0, 1, 2, 3, 4, 5]);
        assert!(ham(&named::star(3)).is_none());
        assert!(ham(&named::petersen()).is_none());
        assert!(ham(&named::complete_bipartite(3, 4)).is_none());
        let k = named::complete(9);
        let c = ham(&k).unwrap();
        assert!(OrientedCycle::new(&k, c.vertices().to_vec()).is_ok());
        assert_eq!(c.len(), 9);
        assert!(ham(&named::path(2)).is_none());
    }

    #[test]
    fn found_cycles_are_valid() {
        let g = named::complete_bipartite(5, 5);
        let c = ham(&g).unwrap();
        assert!(OrientedCycle::new(&g, c.vertices().to_vec()).is_ok());
    }
}
