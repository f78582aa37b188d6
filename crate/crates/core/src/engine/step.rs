use super::bad_sets::BadSets;
use super::classify::Classification;
use super::trace::{self, Produced, Rule, Trace};
use super::StuckReason;
use crate::certificate::{verify_certificate, Certificate};
use crate::graph::{splice_runs, Graph, OrientedCycle, VertexSet};
use crate::oracles::Induced2K2;
use crate::two_factor::{reinsert_vertex, successor_set, TwoFactor};
use std::collections::BTreeMap;

/// How a step ends: a smaller factor, a witness, or a report of where the
/// argument broke.
#[derive(Debug)]
pub(crate) enum Exit {
    Progress {
        rule: Rule,
        factor: Box<TwoFactor>,
        consumed: Vec<usize>,
    },
    Witness {
        rule: Rule,
        certificate: Box<Certificate>,
    },
    Stuck {
        rule: Rule,
        reason: StuckReason,
    },
}

pub(crate) type Flow<T> = Result<T, Exit>;

/// A cycle given as vertex runs joined end to start.
pub(crate) type Runs = Vec<Vec<usize>>;

/// Vertices with a verified 2-factor of `G − v` that has fewer cycles than
/// the current factor.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoAbsorbRegistry {
    certs: BTreeMap<usize, TwoFactor>,
}

impl CoAbsorbRegistry {
    pub fn get(&self, v: usize) -> Option<&TwoFactor> {
        self.certs.get(&v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.certs.contains_key(&v)
    }

    pub fn len(&self) -> usize {
        self.certs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.certs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &TwoFactor)> {
        self.certs.iter().map(|(&v, f)| (v, f))
    }

    pub fn vertices(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.certs.keys().copied())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Dir {
    Forward,
    Backward,
}

pub(crate) struct Step<'a> {
    pub g: &'a Graph,
    pub f: &'a TwoFactor,
    pub rev: TwoFactor,
    pub cls: Classification,
    pub reg: CoAbsorbRegistry,
    pub bad: BadSets,
    pub trace: &'a mut Trace,
}

impl<'a> Step<'a> {
    pub fn new(g: &'a Graph, f: &'a TwoFactor, cls: Classification, trace: &'a mut Trace) -> Self {
        Step {
            g,
            f,
            rev: f.reversed(),
            cls,
            reg: CoAbsorbRegistry::default(),
            bad: BadSets::default(),
            trace,
        }
    }

    pub fn view(&self, dir: Dir) -> &TwoFactor {
        match dir {
            Dir::Forward => self.f,
            Dir::Backward => &self.rev,
        }
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn has(&self, u: usize, v: usize) -> bool {
        self.g.has_edge(u, v)
    }

    pub fn internal(&self, rule: Rule, message: impl Into<String>) -> Exit {
        Exit::Stuck {
            rule,
            reason: StuckReason::Internal {
                rule: rule.name.to_string(),
                message: message.into(),
            },
        }
    }

    /// The forced edge is missing; the two edges should induce `2K₂`.
    pub fn violation(&self, rule: Rule, e1: (usize, usize), e2: (usize, usize)) -> Exit {
        let quad = Induced2K2::new(e1, e2);
        if quad.holds_in(self.g) {
            Exit::Stuck {
                rule,
                reason: StuckReason::ClaimViolation {
                    rule: rule.name.to_string(),
                    quad,
                },
            }
        } else {
            self.internal(
                rule,
                format!("edges {e1:?} and {e2:?} were expected to induce 2K2"),
            )
        }
    }

    fn build(&self, cycles: &[Runs]) -> Result<Vec<OrientedCycle>, String> {
        cycles
            .iter()
            .map(|runs| splice_runs(self.g, runs).map_err(|e| format!("splice failed: {e}")))
            .collect()
    }

    /// Replaces the listed cycles by the given ones, which must cover the same
    /// vertices in fewer cycles.
    pub fn merged(&self, rule: Rule, removed: &[usize], cycles: Vec<Runs>) -> Exit {
        let built = match self.build(&cycles) {
            Ok(b) => b,
            Err(e) => return self.internal(rule, e),
        };
        match self.f.replace(self.g, removed, built) {
            Ok(factor)
                if factor.omega() < self.f.omega() && factor.support() == self.g.vertex_set() =>
            {
                Exit::Progress {
                    rule,
                    factor: Box::new(factor),
                    consumed: removed.to_vec(),
                }
            }
            Ok(_) => self.internal(
                rule,
                "merge did not cover the same vertices with fewer cycles",
            ),
            Err(e) => self.internal(rule, format!("merge is not a 2-factor: {e}")),
        }
    }

    /// Stores a 2-factor of `G − v` built from the listed cycles, then checks
    /// `v` against every adjacent registered vertex.
    pub fn certify(
        &mut self,
        rule: Rule,
        v: usize,
        removed: &[usize],
        cycles: Vec<Runs>,
    ) -> Flow<()> {
        if self.reg.contains(v) {
            return Ok(());
        }
        let built = self.build(&cycles).map_err(|e| self.internal(rule, e))?;
        let factor = self.f.replace(self.g, removed, built).map_err(|e| {
            self.internal(rule, format!("certificate for {v} is not a 2-factor: {e}"))
        })?;
        let mut expected = self.g.vertex_set();
        expected.remove(v);
        if factor.support() != expected || factor.omega() >= self.f.omega() {
            return Err(self.internal(
                rule,
                format!("certificate for {v} has the wrong support or size"),
            ));
        }
        let consumed = removed
            .iter()
            .map(|&i| self.f.cycle(i).vertices().to_vec())
            .collect();
        self.trace.push(
            rule,
            consumed,
            Produced::Certificate {
                vertex: v,
                cycles: factor.to_lists(),
            },
            self.f.omega(),
            Some(factor.omega()),
        );
        let clash = self.g.neighbors(v).iter().find(|&u| self.reg.contains(u));
        self.reg.certs.insert(v, factor);
        match clash {
            Some(u) => Err(self.resolve(u, v)),
            None => Ok(()),
        }
    }

    /// Two adjacent registered vertices: one of them re-enters its smaller
    /// factor, or one of three independent sets exceeds n/3.
    fn resolve(&self, a: usize, b: usize) -> Exit {
        for x in [a, b] {
            let cert = &self.reg.certs[&x];
            match reinsert_vertex(self.g, x, cert) {
                Ok(Some(factor)) => {
                    return Exit::Progress {
                        rule: trace::COABSORBABLE_REINSERT,
                        factor: Box::new(factor),
                        consumed: Vec::new(),
                    }
                }
                Ok(None) => {}
                Err(e) => return self.internal(trace::COABSORBABLE_REINSERT, e.to_string()),
            }
        }
        let rule = trace::COABSORBABLE_INDEPENDENT_SET;
        let ia = successor_set(self.g, a, &self.reg.certs[&a]);
        let ib = successor_set(self.g, b, &self.reg.certs[&b]);
        let mut pair = VertexSet::from_vertices(self.n(), [a, b]);
        pair.union_with(&self.g.neighborhood_of(&pair));
        let mut j = self.g.vertex_set().difference(&pair);
        if let Some(e) = self.g.edge_within(&j) {
            return self.violation(rule, (a, b), e);
        }
        j.insert(a);
        let best = [ia, ib, j]
            .into_iter()
            .max_by_key(VertexSet::len)
            .expect("three candidates");
        self.independent_witness(rule, best)
    }

    pub fn independent_witness(&self, rule: Rule, set: VertexSet) -> Exit {
        self.witness(rule, Certificate::IndependentSetWitness(set))
    }

    pub fn cut_witness(&self, rule: Rule, set: VertexSet) -> Exit {
        self.witness(rule, Certificate::ToughnessWitness(set))
    }

    fn witness(&self, rule: Rule, certificate: Certificate) -> Exit {
        match verify_certificate(self.g, &certificate, None) {
            Ok(()) => Exit::Witness {
                rule,
                certificate: Box::new(certificate),
            },
            Err(e) => self.internal(
                rule,
                format!("{} failed verification: {e}", certificate.kind()),
            ),
        }
    }

    /// `set` must be independent; an edge inside one of `parts` is explained
    /// by the part's guard edge, which together with it induces `2K₂`.
    pub fn independent_or_explain(
        &self,
        rule: Rule,
        set: VertexSet,
        parts: &[(&VertexSet, (usize, usize))],
    ) -> Exit {
        if let Some((p, q)) = self.g.edge_within(&set) {
            return match parts.iter().find(|(s, _)| s.contains(p) && s.contains(q)) {
                Some((_, guard)) => self.violation(rule, *guard, (p, q)),
                None => self.internal(
                    rule,
                    format!("edge {p}-{q} inside a set that should be independent"),
                ),
            };
        }
        self.independent_witness(rule, set)
    }

    /// Vertices of cycle `i` in ascending order.
    pub fn cycle_set(&self, i: usize) -> VertexSet {
        self.f.cycle_vertex_set(i)
    }
}
