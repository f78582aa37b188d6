//! One non-alternating cycle `C`: grow rotation endpoints from each bad vertex
//! and cut them off together with the alternating B side.

use super::step::{Flow, Step};
use super::trace;
use crate::graph::VertexSet;

/// Rotation endpoints of one root, level by level, with their spanning paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UConstruction {
    pub root: usize,
    /// `levels[i]` holds `(u, path)` with `path` a spanning path of `C` from `u` to the root.
    pub levels: Vec<Vec<(usize, Vec<usize>)>>,
}

impl UConstruction {
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.levels.iter().flatten().map(|(u, _)| *u)
    }
}

/// `p₀ … p_j p_{j+1} … p_m` becomes `p_j … p₀ p_{j+1} … p_m`.
fn rotate_front(path: &[usize], j: usize) -> Vec<usize> {
    let mut out: Vec<usize> = path[..=j].iter().rev().copied().collect();
    out.extend_from_slice(&path[j + 1..]);
    out
}

impl Step<'_> {
    pub(crate) fn case1(&mut self) -> Flow<()> {
        let c = self.cls.non_alternating[0];
        let vbad = self
            .bad
            .of(c)
            .cloned()
            .unwrap_or_else(|| VertexSet::empty(self.n()));
        if vbad.is_empty() {
            return Err(self.cut_witness(trace::ISOLATED_ALTERNATING_B, self.cls.a0.clone()));
        }
        let mut all = VertexSet::empty(self.n());
        for x in vbad.iter() {
            let u = self.grow_rotations(c, x, &vbad)?;
            for v in u.vertices() {
                all.insert(v);
            }
        }
        let rule = trace::ROTATION_CUT;
        let touched = self
            .g
            .neighborhood_of(&all)
            .intersection(&self.cycle_set(c));
        if touched.len() > 2 * all.len() {
            return Err(self.internal(
                rule,
                "rotation endpoints have too many neighbours on the cycle",
            ));
        }
        Err(self.cut_witness(rule, self.cls.a0.union(&touched)))
    }

    /// An alternating cycle `D` and `a ∈ B ∩ V(D)` adjacent to the bad vertex `x`.
    fn rotation_anchor(&self, x: usize) -> Flow<(usize, usize)> {
        let rule = trace::ROTATION_ABSORPTION;
        let (d, a) = if let Some((d, z)) = self.cls.a_witness[x] {
            (d, if self.cls.is_b(z) { z } else { self.f.succ(z) })
        } else if let Some(&k) = self.bad.bad_wrt.get(&x) {
            let a = self.cycle_set(k).intersection(&self.cls.b0).first();
            (
                k,
                a.ok_or_else(|| self.internal(rule, "alternating cycle without B side"))?,
            )
        } else {
            return Err(self.internal(rule, format!("{x} is neither A-type nor bad")));
        };
        if !self.cls.is_alternating(d) || !self.cls.is_b(a) || !self.has(x, a) {
            return Err(self.internal(rule, format!("no alternating anchor for {x}")));
        }
        Ok((d, a))
    }

    fn grow_rotations(&mut self, c: usize, x: usize, vbad: &VertexSet) -> Flow<UConstruction> {
        let rule = trace::ROTATION_ABSORPTION;
        let (d, a) = self.rotation_anchor(x)?;
        let xp = self.f.succ(x);
        if !self.reg.contains(xp) {
            return Err(self.internal(rule, format!("{xp} beside bad {x} is not registered")));
        }
        let cc = self.f.cycle(c);
        let mut seen = VertexSet::singleton(self.n(), xp);
        let mut out = UConstruction {
            root: x,
            levels: vec![vec![(xp, cc.arc(xp, x))]],
        };
        loop {
            let mut next: Vec<(usize, Vec<usize>)> = Vec::new();
            for (v, path) in out.levels.last().expect("level zero") {
                let mut pivots: Vec<(usize, usize)> = (1..path.len() - 1)
                    .filter(|&j| !vbad.contains(path[j + 1]) && self.has(path[j + 1], *v))
                    .map(|j| (path[j + 1], j))
                    .collect();
                pivots.sort_unstable();
                for (_, j) in pivots {
                    if seen.insert(path[j]) {
                        next.push((path[j], rotate_front(path, j)));
                    }
                }
            }
            if next.is_empty() {
                return Ok(out);
            }
            next.sort_by_key(|(u, _)| *u);
            for (v, path) in &next {
                self.absorb_rotation_end(c, d, a, *v, path, vbad)?;
            }
            out.levels.push(next);
        }
    }

    /// Either `v` closes through `D` into one cycle, or `v` is dropped by
    /// closing the rest of the path through `D`.
    fn absorb_rotation_end(
        &mut self,
        c: usize,
        d: usize,
        a: usize,
        v: usize,
        path: &[usize],
        vbad: &VertexSet,
    ) -> Flow<()> {
        let ap = self.f.succ(a);
        let dc = self.f.cycle(d);
        if self.has(v, ap) {
            // u⁺ →D→ u x … v
            let back: Vec<usize> = path.iter().rev().copied().collect();
            return Err(self.merged(
                trace::ROTATION_MERGE,
                &[c, d],
                vec![vec![dc.arc(ap, a), back]],
            ));
        }
        let rule = trace::ROTATION_ABSORPTION;
        let y = path[1];
        if vbad.contains(y) {
            return if self.reg.contains(v) {
                Ok(())
            } else {
                Err(self.internal(rule, format!("{v} beside bad {y} is not registered")))
            };
        }
        if !self.has(y, ap) {
            return Err(self.violation(rule, (v, y), (a, ap)));
        }
        // y … x u ←D← u⁺ y
        let runs = vec![path[1..].to_vec(), dc.arc_back(a, ap)];
        self.certify(rule, v, &[c, d], vec![runs])
    }
}

#[cfg(test)]
mod tests {
    use super::rotate_front;

    #[test]
    fn rotation_reverses_the_prefix() {
        assert_eq!(rotate_front(&[0, 1, 2, 3, 4], 2), vec![2, 1, 0, 3, 4]);
        assert_eq!(rotate_front(&[5, 6, 7], 1), vec![6, 5, 7]);
    }
}
