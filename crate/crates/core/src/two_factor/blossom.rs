//! Edmonds' blossom algorithm for maximum matching in general graphs.
//!
//! Free vertices are grown in ascending order and neighbors scanned in the
//! order of the adjacency lists, so results are deterministic.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

pub struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    pub fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Runs to a maximum matching and returns `mate[v]` (`None` when unmatched).
    pub fn solve(mut self) -> Vec<Option<usize>> {
        let n = self.adj.len();
        // greedy start
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let ppv = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = ppv;
            }
        }
        self.mate
            .into_iter()
            .map(|m| (m != NONE).then_some(m))
            .collect()
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free endpoint of an
    /// augmenting path, or `NONE`.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        NONE
    }
}

pub fn maximum_matching(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    Blossom::new(adj).solve()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn adj_from(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        adj
    }

    fn size(m: &[Option<usize>]) -> usize {
        m.iter().filter(|x| x.is_some()).count() / 2
    }

    fn brute(n: usize, edges: &[(usize, usize)]) -> usize {
        fn go(i: usize, used: u32, edges: &[(usize, usize)]) -> usize {
            if i == edges.len() {
                return 0;
            }
            let skip = go(i + 1, used, edges);
            let (u, v) = edges[i];
            if used >> u & 1 == 0 && used >> v & 1 == 0 {
                skip.max(1 + go(i + 1, used | 1 << u | 1 << v, edges))
            } else {
                skip
            }
        }
        let _ = n;
        go(0, 0, edges)
    }

    #[test]
    fn odd_cycle_needs_blossom() {
        // 5-cycle with a pendant: perfect matching only via the blossom
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)];
        let m = maximum_matching(&adj_from(6, &edges));
        assert_eq!(size(&m), 3);
        for (v, &mv) in m.iter().enumerate() {
            let u = mv.unwrap();
            assert_eq!(m[u], Some(v));
            assert!(edges.contains(&(u.min(v), u.max(v))));
        }
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 1usize..11, bits in any::<u64>()) {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| bits >> (i % 64) & 1 == 1).map(|(_, &e)| e).collect();
            let m = maximum_matching(&adj_from(n, &edges));
            for (v, &mv) in m.iter().enumerate() {
                if let Some(u) = mv {
                    prop_assert_eq!(m[u], Some(v));
                    prop_assert!(edges.contains(&(u.min(v), u.max(v))));
                }
            }
            prop_assert_eq!(size(&m), brute(n, &edges));
        }
    }
}
