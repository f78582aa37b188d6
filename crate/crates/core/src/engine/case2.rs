//! Two non-alternating cycles `C` and `D`, split by one B-type edge of each.

use super::step::{Flow, Step};
use super::trace;
use crate::graph::VertexSet;

/// `X_H` are the vertices of `H` missing the other cycle's B-type edge, `Y_H`
/// the ones seeing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub c: usize,
    pub d: usize,
    pub edge_c: (usize, usize),
    pub edge_d: (usize, usize),
    pub x_c: VertexSet,
    pub y_c: VertexSet,
    pub x_d: VertexSet,
    pub y_d: VertexSet,
}

impl Partition {
    /// The same split seen from `D`.
    fn swapped(&self) -> Partition {
        Partition {
            c: self.d,
            d: self.c,
            edge_c: self.edge_d,
            edge_d: self.edge_c,
            x_c: self.x_d.clone(),
            y_c: self.y_d.clone(),
            x_d: self.x_c.clone(),
            y_d: self.y_c.clone(),
        }
    }
}

/// `p₀ … p_j p_{j+1} … p_m` becomes `p₀ … p_j p_m … p_{j+1}`.
fn rotate_back(path: &[usize], pivot: usize) -> Option<Vec<usize>> {
    let j = path.iter().position(|&v| v == pivot)?;
    let mut out = path[..=j].to_vec();
    out.extend(path[j + 1..].iter().rev());
    Some(out)
}

impl Step<'_> {
    pub(crate) fn case2(&mut self) -> Flow<()> {
        let rule = trace::PARTITION_ALTERNATION;
        let (c, d) = (self.cls.non_alternating[0], self.cls.non_alternating[1]);
        let edge_c = self
            .first_b_edge(c)
            .ok_or_else(|| self.internal(rule, "no B-type edge"))?;
        let edge_d = self
            .first_b_edge(d)
            .ok_or_else(|| self.internal(rule, "no B-type edge"))?;
        let first = self.partition(c, d, edge_c, edge_d)?;
        self.partition_claims(&first)?;

        let u0 = self.crossing_b_edge(&first)?;
        let v0 = self.crossing_b_edge(&first.swapped())?;
        let second = self.partition(c, d, (u0, self.f.succ(u0)), (v0, self.f.succ(v0)))?;
        if second.x_c != first.y_c || second.x_d != first.y_d {
            return Err(self.internal(rule, "second B-type edges do not swap the partition"));
        }
        self.partition_claims(&second)?;
        Err(self.internal(
            trace::TERMINAL,
            "no rule applies to the two non-alternating cycles",
        ))
    }

    fn partition(
        &self,
        c: usize,
        d: usize,
        edge_c: (usize, usize),
        edge_d: (usize, usize),
    ) -> Flow<Partition> {
        let rule = trace::PARTITION_ALTERNATION;
        self.check_alternation(rule, edge_c, d)?;
        self.check_alternation(rule, edge_d, c)?;
        let sees = |(p, q): (usize, usize)| {
            self.g
                .neighborhood_of(&VertexSet::from_vertices(self.n(), [p, q]))
        };
        let (vc, vd) = (self.cycle_set(c), self.cycle_set(d));
        let y_c = vc.intersection(&sees(edge_d));
        let y_d = vd.intersection(&sees(edge_c));
        Ok(Partition {
            c,
            d,
            edge_c,
            edge_d,
            x_c: vc.difference(&y_c),
            y_c,
            x_d: vd.difference(&y_d),
            y_d,
        })
    }

    /// Bad vertices on the X side of either cycle lead to an independent set
    /// of half the graph or to a merge.
    fn partition_claims(&mut self, p: &Partition) -> Flow<()> {
        let bad_in = |h: usize, x: &VertexSet| {
            self.bad
                .of(h)
                .map(|b| b.intersection(x))
                .and_then(|s| s.first())
        };
        let (bc, bd) = (bad_in(p.c, &p.x_c), bad_in(p.d, &p.x_d));
        match (bc, bd) {
            (None, None) => Ok(()),
            (Some(xc), Some(xd)) => {
                self.register_y_side(p, xc)?;
                self.register_y_side(&p.swapped(), xd)?;
                let set = p.y_c.union(&p.y_d).union(&self.cls.b0);
                Err(self.independent_or_explain(trace::HALF_INDEPENDENT_SET, set, &[]))
            }
            (Some(xc), None) => self.one_sided(&p.swapped(), xc),
            (None, Some(xd)) => self.one_sided(p, xd),
        }
    }

    /// `X_C` holds no bad vertex while `x ∈ X_D` is bad.
    fn one_sided(&mut self, p: &Partition, x: usize) -> Flow<()> {
        self.register_y_side(&p.swapped(), x)?;
        let cross = p.x_c.iter().find_map(|a| {
            self.g
                .neighbors(a)
                .intersection(&p.y_d)
                .first()
                .map(|b| (a, b))
        });
        let Some((a, b)) = cross else {
            let set = p.x_c.union(&p.y_d).union(&self.cls.b0);
            return Err(self.independent_or_explain(
                trace::HALF_INDEPENDENT_SET,
                set,
                &[(&p.x_c, p.edge_d)],
            ));
        };
        let mut y = b;
        for _ in 0..p.y_d.len() {
            y = self.ladder_step(a, y)?;
        }
        Err(self.internal(
            trace::PARTITION_LADDER,
            format!("{a} sees all of the Y side yet misses its edge"),
        ))
    }

    /// With `x ∈ X_H` bad, registers every vertex of `Y_H` by rotating two
    /// spanning paths of `H` that start at `x`.
    fn register_y_side(&mut self, p: &Partition, x: usize) -> Flow<()> {
        let rule = trace::PARTITION_ABSORPTION;
        let f = self.f;
        let h = p.c;
        let hc = f.cycle(h);
        let seq = hc.arc(x, f.pred(x));
        let k = seq.len() / 2;
        let y = |i: usize| seq[2 * i - 1];
        if !self.reg.contains(y(1)) || !self.reg.contains(y(k)) {
            return Err(self.internal(rule, format!("neighbours of bad {x} are not registered")));
        }
        let mut path_s = hc.arc_back(x, f.succ(x));
        let mut path_t = seq.clone();
        let (mut s, mut t) = (1, k);
        while t - s >= 2 {
            let (a, b) = (y(s), y(t));
            let (ap, bm) = (seq[2 * s], seq[2 * t - 2]);
            if self.has(a, b) {
                return Err(self.internal(rule, format!("registered {a} and {b} are adjacent")));
            }
            if self.has(ap, bm) {
                return Err(self.violation(rule, (ap, bm), p.edge_d));
            }
            if self.has(a, bm) {
                path_t = rotate_back(&path_s, bm)
                    .ok_or_else(|| self.internal(rule, "pivot off path"))?;
                t -= 1;
                if path_t.last() != Some(&y(t)) {
                    return Err(self.internal(rule, "rotation ended at the wrong vertex"));
                }
                self.certify_path_end(h, x, &path_t)?;
            } else if self.has(ap, b) {
                path_s = rotate_back(&path_t, ap)
                    .ok_or_else(|| self.internal(rule, "pivot off path"))?;
                s += 1;
                if path_s.last() != Some(&y(s)) {
                    return Err(self.internal(rule, "rotation ended at the wrong vertex"));
                }
                self.certify_path_end(h, x, &path_s)?;
            } else {
                return Err(self.violation(rule, (a, ap), (bm, b)));
            }
        }
        Ok(())
    }

    /// `path` spans `H` from bad `x` to `w`; close it through the cycle that
    /// makes `x` bad or A-type, either whole or without `w`.
    fn certify_path_end(&mut self, h: usize, x: usize, path: &[usize]) -> Flow<()> {
        let rule = trace::PARTITION_ABSORPTION;
        let f = self.f;
        let w = path[path.len() - 1];
        let wp = path[path.len() - 2];
        let short = path[..path.len() - 1].to_vec();
        if let Some((k, z)) = self.cls.a_witness[x] {
            let kc = f.cycle(k);
            let zp = f.succ(z);
            // closing through z ←K← z⁺ or z⁺ →K→ z, both back to x
            let (back, fwd) = (kc.arc_back(z, zp), kc.arc(zp, z));
            if self.has(w, z) {
                return Err(self.merged(
                    trace::PARTITION_MERGE,
                    &[h, k],
                    vec![vec![path.to_vec(), back]],
                ));
            }
            if self.has(w, zp) {
                return Err(self.merged(
                    trace::PARTITION_MERGE,
                    &[h, k],
                    vec![vec![path.to_vec(), fwd]],
                ));
            }
            if self.has(wp, z) {
                return self.certify(rule, w, &[h, k], vec![vec![short, back]]);
            }
            if self.has(wp, zp) {
                return self.certify(rule, w, &[h, k], vec![vec![short, fwd]]);
            }
            return Err(self.violation(rule, (wp, w), (z, zp)));
        }
        let k = *self
            .bad
            .bad_wrt
            .get(&x)
            .ok_or_else(|| self.internal(rule, format!("{x} is neither A-type nor bad")))?;
        let z = self
            .cycle_set(k)
            .intersection(&self.cls.b0)
            .first()
            .ok_or_else(|| self.internal(rule, "alternating cycle without B side"))?;
        let zp = f.succ(z);
        let fwd = f.cycle(k).arc(zp, z);
        if self.has(w, z) {
            return Err(self.internal(rule, format!("path end {w} sees the alternating B side")));
        }
        if self.has(w, zp) {
            return Err(self.merged(
                trace::PARTITION_MERGE,
                &[h, k],
                vec![vec![path.to_vec(), fwd]],
            ));
        }
        if self.has(wp, z) {
            return if self.reg.contains(w) {
                Ok(())
            } else {
                Err(self.internal(rule, format!("{w} beside bad {wp} is not registered")))
            };
        }
        if self.has(wp, zp) {
            return self.certify(rule, w, &[h, k], vec![vec![short, fwd]]);
        }
        Err(self.violation(rule, (wp, w), (z, zp)))
    }

    /// A vertex `u₀ ∈ X_C` with a neighbour in `X_D` and `u₀⁺` B-type, found by
    /// ladder steps from the first edge between the X sides.
    fn crossing_b_edge(&mut self, p: &Partition) -> Flow<usize> {
        let cross = p.x_c.iter().find_map(|a| {
            self.g
                .neighbors(a)
                .intersection(&p.x_d)
                .first()
                .map(|b| (a, b))
        });
        let Some((a, b)) = cross else {
            let set = p.x_c.union(&p.x_d).union(&self.cls.b0);
            let parts = [(&p.x_c, p.edge_d), (&p.x_d, p.edge_c)];
            return Err(self.independent_or_explain(trace::HALF_INDEPENDENT_SET, set, &parts));
        };
        let mut u = a;
        for _ in 0..p.x_c.len() {
            if self.cls.is_b(self.f.succ(u)) {
                return Ok(u);
            }
            u = self.ladder_step(b, u)?;
        }
        Err(self.internal(
            trace::PARTITION_LADDER,
            "X side alternates with A-type vertices",
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::rotate_back;

    #[test]
    fn rotation_reverses_the_suffix() {
        assert_eq!(rotate_back(&[0, 1, 2, 3, 4], 1), Some(vec![0, 1, 4, 3, 2]));
        assert_eq!(rotate_back(&[0, 1], 7), None);
    }
}
