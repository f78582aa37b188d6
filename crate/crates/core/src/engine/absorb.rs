//! Certificates for single droppable vertices, and the checks built on them.

use super::classify::a_witness_in;
use super::step::{Dir, Flow, Step};
use super::trace::{self, Rule};
use crate::graph::VertexSet;

impl Step<'_> {
    /// Both factor neighbours of every A-type vertex.
    pub(crate) fn certify_a_type(&mut self) -> Flow<()> {
        for x in self.cls.a_type.to_vec() {
            for dir in [Dir::Forward, Dir::Backward] {
                self.certify_a_neighbour(x, dir)?;
            }
        }
        Ok(())
    }

    /// `x` sees `y, y⁺` on `D`; drops `x⁺` using the forced edge from `x⁺⁺`.
    fn certify_a_neighbour(&mut self, x: usize, dir: Dir) -> Flow<()> {
        let rule = trace::A_TYPE_ABSORPTION;
        let v = self.view(dir);
        let xp = v.succ(x);
        if self.reg.contains(xp) {
            return Ok(());
        }
        let (d, y) = a_witness_in(self.g, v, x)
            .ok_or_else(|| self.internal(rule, "A-type vertex without witness"))?;
        let c = v.cycle_of(x);
        let (xpp, yp) = (v.succ(xp), v.succ(y));
        if self.has(xp, y) || self.has(xp, yp) {
            return Err(self.internal(rule, "cross-edge neighbours adjacent after the merge scan"));
        }
        let (cc, dd) = (v.cycle(c), v.cycle(d));
        let runs = if self.has(xpp, y) {
            // x y⁺ →D→ y x⁺⁺ →C→ x
            vec![vec![x], dd.arc(yp, y), cc.arc(xpp, cc.pred(x))]
        } else if self.has(xpp, yp) {
            // x y ←D← y⁺ x⁺⁺ →C→ x
            vec![vec![x], dd.arc_back(y, yp), cc.arc(xpp, cc.pred(x))]
        } else {
            return Err(self.violation(rule, (xp, xpp), (y, yp)));
        };
        self.certify(rule, xp, &[c, d], vec![runs])
    }

    /// Both factor neighbours of every bad B-type vertex.
    pub(crate) fn certify_bad(&mut self) -> Flow<()> {
        let bad: Vec<(usize, usize)> = self.bad.bad_wrt.iter().map(|(&x, &k)| (x, k)).collect();
        for (x, k) in bad {
            for dir in [Dir::Forward, Dir::Backward] {
                self.certify_bad_neighbour(x, k, dir)?;
            }
        }
        Ok(())
    }

    fn certify_bad_neighbour(&mut self, x: usize, k: usize, dir: Dir) -> Flow<()> {
        let rule = trace::BAD_VERTEX_ABSORPTION;
        let v = self.view(dir);
        let xp = v.succ(x);
        if self.reg.contains(xp) {
            return Ok(());
        }
        let h = v.cycle_of(x);
        let y = self
            .cycle_set(k)
            .intersection(&self.cls.b0)
            .first()
            .ok_or_else(|| self.internal(rule, "alternating cycle without B side"))?;
        let (xpp, yp, ym) = (v.succ(xp), v.succ(y), v.pred(y));
        if self.has(xp, y) || self.has(xp, yp) {
            return Err(self.internal(rule, "cross-edge neighbours adjacent after the merge scan"));
        }
        let (hc, kc) = (v.cycle(h), v.cycle(k));
        if self.has(xpp, yp) {
            // x y ←K← y⁺ x⁺⁺ →H→ x
            let runs = vec![vec![x], kc.arc_back(y, yp), hc.arc(xpp, hc.pred(x))];
            return self.certify(rule, xp, &[h, k], vec![runs]);
        }
        if !self.has(xpp, y) {
            return Err(self.violation(rule, (xp, xpp), (y, yp)));
        }
        // y⁺ is A-type: it sees z, z⁺ on some Q ≠ K, and y⁻ sees z or z⁺
        let (q, z) = a_witness_in(self.g, v, yp)
            .ok_or_else(|| self.internal(rule, "A side vertex without witness"))?;
        let zp = v.succ(z);
        if self.has(y, z) || self.has(y, zp) {
            return Err(self.internal(rule, "cross-edge neighbours adjacent after the merge scan"));
        }
        let through_z = if self.has(ym, z) {
            true
        } else if self.has(ym, zp) {
            false
        } else {
            return Err(self.violation(rule, (ym, y), (z, zp)));
        };
        let k_run = if through_z {
            kc.arc_back(ym, yp)
        } else {
            kc.arc(yp, ym)
        };
        let qc = v.cycle(q);
        if q == h {
            // x y x⁺⁺ →H→ z (K from y⁻ or y⁺) z⁺ →H→ x
            let runs = vec![vec![x, y], hc.arc(xpp, z), k_run, hc.arc(zp, hc.pred(x))];
            self.certify(rule, xp, &[h, k], vec![runs])
        } else {
            let first = vec![vec![x, y], hc.arc(xpp, hc.pred(x))];
            let second = vec![vec![z], k_run, qc.arc(zp, qc.pred(z))];
            self.certify(rule, xp, &[h, k, q], vec![first, second])
        }
    }

    /// B-type `x` next to registered `y` on another cycle: `xy⁺ ∉ E` and
    /// `xy⁺⁺ ∈ E`. Returns `y⁺⁺`.
    pub(crate) fn ladder_step(&mut self, x: usize, y: usize) -> Flow<usize> {
        let rule = trace::LADDER_ABSORPTION;
        let f = self.f;
        if !self.reg.contains(y) || !self.has(x, y) || f.cycle_of(x) == f.cycle_of(y) {
            return Err(self.internal(
                rule,
                format!("ladder from {x} needs a registered neighbour, got {y}"),
            ));
        }
        let (c, d) = (f.cycle_of(x), f.cycle_of(y));
        let (xp, yp) = (f.succ(x), f.succ(y));
        let ypp = f.succ(yp);
        if self.has(x, yp) {
            return Err(self.internal(rule, format!("B-type vertex {x} sees consecutive {y} {yp}")));
        }
        if self.has(xp, ypp) {
            // x y ←D← y⁺⁺ x⁺ →C→ x drops y⁺, which is adjacent to registered y
            let (cc, dc) = (f.cycle(c), f.cycle(d));
            let runs = vec![vec![x], dc.arc_back(y, ypp), cc.arc(xp, cc.pred(x))];
            self.certify(rule, yp, &[c, d], vec![runs])?;
            return Err(self.internal(rule, "adjacent registered vertices were not resolved"));
        }
        if self.has(x, ypp) {
            Ok(ypp)
        } else {
            Err(self.violation(rule, (x, xp), (yp, ypp)))
        }
    }

    /// Every vertex of a non-alternating cycle that sees the alternating B side
    /// must be bad; a B-type one is walked along the ladder to confirm it.
    pub(crate) fn check_bad_propagation(&mut self) -> Flow<()> {
        let rule = trace::BAD_SET_PROPAGATION;
        for h in self.cls.non_alternating.clone() {
            let bad = self
                .bad
                .of(h)
                .cloned()
                .unwrap_or_else(|| VertexSet::empty(self.n()));
            for x in self.cycle_set(h).iter() {
                if bad.contains(x) {
                    continue;
                }
                let Some(y0) = self.g.neighbors(x).intersection(&self.cls.b0).first() else {
                    continue;
                };
                let steps = self.f.cycle(self.f.cycle_of(y0)).len() / 2;
                let mut y = y0;
                for _ in 0..steps {
                    y = self.ladder_step(x, y)?;
                }
                return Err(self.internal(
                    rule,
                    format!("{x} sees the whole B side of a cycle but is not bad"),
                ));
            }
        }
        Ok(())
    }

    /// The factor edge `xy` is B-type: every edge of cycle `d` has exactly
    /// one end in `N({x, y})`.
    pub(crate) fn check_alternation(
        &self,
        rule: Rule,
        (x, y): (usize, usize),
        d: usize,
    ) -> Flow<()> {
        for (p, q) in self.f.cycle(d).edges() {
            let sees = |w: usize| self.has(w, x) || self.has(w, y);
            match (sees(p), sees(q)) {
                (false, false) => return Err(self.violation(rule, (x, y), (p, q))),
                (true, true) => {
                    return Err(self.internal(
                        rule,
                        format!("both ends of {p}-{q} see the B-type edge {x}-{y}"),
                    ))
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// First B-type factor edge `(u, u⁺)` of cycle `c`, by smallest `u`.
    pub(crate) fn first_b_edge(&self, c: usize) -> Option<(usize, usize)> {
        self.cycle_set(c)
            .iter()
            .find(|&u| self.cls.is_b_edge(self.f, u))
            .map(|u| (u, self.f.succ(u)))
    }

    /// Non-alternating cycles must be few and long; otherwise an independent
    /// set larger than n/3 falls out.
    pub(crate) fn check_cycle_counts(&mut self) -> Flow<()> {
        let n = self.n();
        if self.cls.non_alternating.is_empty() {
            let b = self.g.vertex_set().difference(&self.cls.a_type);
            return Err(self.independent_witness(trace::ALL_ALTERNATING, b));
        }
        let rule = trace::SHORT_B_CYCLE;
        for &c in &self.cls.non_alternating {
            let (x, y) = self.first_b_edge(c).ok_or_else(|| {
                self.internal(rule, "non-alternating cycle without a B-type edge")
            })?;
            for d in 0..self.f.omega() {
                if d != c {
                    self.check_alternation(rule, (x, y), d)?;
                }
            }
            let outside = self.g.vertex_set().difference(&self.cycle_set(c));
            let seen = self.g.neighborhood_of(&VertexSet::from_vertices(n, [x, y]));
            let mut set = outside.difference(&seen);
            if 3 * (set.len() + 1) > n {
                if let Some(e) = self.g.edge_within(&set) {
                    return Err(self.violation(rule, (x, y), e));
                }
                set.insert(x);
                return Err(self.independent_witness(rule, set));
            }
        }
        if self.cls.non_alternating.len() > 2 {
            return Err(self.internal(
                trace::TOO_MANY_B_CYCLES,
                "three long cycles exceed n vertices",
            ));
        }
        Ok(())
    }
}
