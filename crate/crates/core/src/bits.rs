//! Word-sized kernels shared by the oracles (graphs with at most 64 vertices).

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub(crate) fn lowest(m: u64) -> usize {
    m.trailing_zeros() as usize
}

pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Vertices reachable from `start` inside `alive`.
#[inline]
pub(crate) fn reach(adj: &[u64], alive: u64, start: usize) -> u64 {
    let mut comp = 1u64 << start;
    let mut frontier = comp;
    while frontier != 0 {
        let v = lowest(frontier);
        frontier &= frontier - 1;
        let fresh = adj[v] & alive & !comp;
        comp |= fresh;
        frontier |= fresh;
    }
    comp
}

/// Number of connected components of the subgraph induced on `alive`.
#[inline]
pub(crate) fn component_count(adj: &[u64], alive: u64) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        rest &= !reach(adj, rest, lowest(rest));
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_of_a_path_minus_middle() {
        // path 0-1-2-3-4
        let adj = [0b00010, 0b00101, 0b01010, 0b10100, 0b01000];
        assert_eq!(component_count(&adj, 0b11111), 1);
        assert_eq!(component_count(&adj, 0b11011), 2);
        assert_eq!(component_count(&adj, 0b10101), 3);
        assert_eq!(component_count(&adj, 0), 0);
    }
}
