use crate::graph::{CycleError, Graph, OrientedCycle, VertexSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

const NONE: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("cycle {index}: {source}")]
    BadCycle { index: usize, source: CycleError },
    #[error("vertex {0} lies on two cycles")]
    SharedVertex(usize),
    #[error("a 2-factor needs at least one cycle")]
    Empty,
    #[error("covers {covered} but should cover {expected}")]
    WrongSupport {
        covered: VertexSet,
        expected: VertexSet,
    },
}

/// Vertex-disjoint oriented cycles. The covered vertex set is the union of the
/// cycles: all of `V(G)` for a 2-factor of `G`, or `V(G) − x` for one of `G − x`.
///
/// Cycles are kept sorted by their smallest vertex; orientations are kept as given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoFactor {
    n: usize,
    cycles: Vec<OrientedCycle>,
    succ: Vec<usize>,
    pred: Vec<usize>,
    cycle_of: Vec<usize>,
}

impl TwoFactor {
    pub fn new(g: &Graph, cycles: Vec<OrientedCycle>) -> Result<TwoFactor, FactorError> {
        for (index, c) in cycles.iter().enumerate() {
            OrientedCycle::new(g, c.vertices().to_vec())
                .map_err(|source| FactorError::BadCycle { index, source })?;
        }
        Self::assemble(g.n(), cycles)
    }

    /// Builds from cycles already validated against the host graph.
    pub(crate) fn assemble(
        n: usize,
        mut cycles: Vec<OrientedCycle>,
    ) -> Result<TwoFactor, FactorError> {
        if cycles.is_empty() {
            return Err(FactorError::Empty);
        }
        cycles.sort_by_key(OrientedCycle::min_vertex);
        let mut succ = vec![NONE; n];
        let mut pred = vec![NONE; n];
        let mut cycle_of = vec![NONE; n];
        for (ci, c) in cycles.iter().enumerate() {
            for (a, b) in c.edges() {
                if cycle_of[a] != NONE {
                    return Err(FactorError::SharedVertex(a));
                }
                cycle_of[a] = ci;
                succ[a] = b;
                pred[b] = a;
            }
        }
        Ok(TwoFactor {
            n,
            cycles,
            succ,
            pred,
            cycle_of,
        })
    }

    /// Checks every invariant against `g` and the expected covered set.
    pub fn validate(&self, g: &Graph, expected: &VertexSet) -> Result<(), FactorError> {
        let rebuilt = TwoFactor::new(g, self.cycles.clone())?;
        if self.n != g.n() || rebuilt != *self {
            return Err(FactorError::WrongSupport {
                covered: self.support(),
                expected: expected.clone(),
            });
        }
        let covered = self.support();
        if covered != *expected {
            return Err(FactorError::WrongSupport {
                covered,
                expected: expected.clone(),
            });
        }
        Ok(())
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    /// `ω(F)`.
    pub fn omega(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycles(&self) -> &[OrientedCycle] {
        &self.cycles
    }

    pub fn cycle(&self, i: usize) -> &OrientedCycle {
        &self.cycles[i]
    }

    pub fn covers(&self, v: usize) -> bool {
        v < self.n && self.cycle_of[v] != NONE
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::from_vertices(self.n, (0..self.n).filter(|&v| self.cycle_of[v] != NONE))
    }

    pub fn cycle_vertex_set(&self, i: usize) -> VertexSet {
        VertexSet::from_vertices(self.n, self.cycles[i].vertices().iter().copied())
    }

    #[inline]
    pub fn succ(&self, v: usize) -> usize {
        debug_assert!(self.covers(v));
        self.succ[v]
    }

    #[inline]
    pub fn pred(&self, v: usize) -> usize {
        debug_assert!(self.covers(v));
        self.pred[v]
    }

    /// Index of the cycle through `v`.
    #[inline]
    pub fn cycle_of(&self, v: usize) -> usize {
        debug_assert!(self.covers(v));
        self.cycle_of[v]
    }

    pub fn is_factor_edge(&self, u: usize, v: usize) -> bool {
        self.covers(u) && (self.succ[u] == v || self.pred[u] == v)
    }

    /// Same cycles with every orientation flipped.
    pub fn reversed(&self) -> TwoFactor {
        TwoFactor {
            n: self.n,
            cycles: self.cycles.iter().map(OrientedCycle::reversed).collect(),
            succ: self.pred.clone(),
            pred: self.succ.clone(),
            cycle_of: self.cycle_of.clone(),
        }
    }

    /// Same cycles with the orientation of cycle `i` flipped.
    pub fn with_cycle_reversed(&self, i: usize) -> TwoFactor {
        let mut cycles = self.cycles.clone();
        cycles[i] = cycles[i].reversed();
        Self::assemble(self.n, cycles).expect("reversal keeps the factor valid")
    }

    /// Drops the listed cycles and adds `added`, which must cover exactly the
    /// vertices wanted in the result.
    pub fn replace(
        &self,
        g: &Graph,
        removed: &[usize],
        added: Vec<OrientedCycle>,
    ) -> Result<TwoFactor, FactorError> {
        let mut cycles: Vec<OrientedCycle> = self
            .cycles
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, c)| c.clone())
            .collect();
        for (index, c) in added.iter().enumerate() {
            OrientedCycle::new(g, c.vertices().to_vec())
                .map_err(|source| FactorError::BadCycle { index, source })?;
        }
        cycles.extend(added);
        Self::assemble(self.n, cycles)
    }

    /// Cycle vertex lists, for serialization and display.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.cycles.iter().map(|c| c.vertices().to_vec()).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct FactorRepr {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl Serialize for TwoFactor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FactorRepr {
            n: self.n,
            cycles: self.to_lists(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwoFactor {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FactorRepr::deserialize(deserializer)?;
        for c in &repr.cycles {
            if c.len() < 3 || c.iter().any(|&v| v >= repr.n) {
                return Err(serde::de::Error::custom("malformed cycle"));
            }
        }
        let cycles = repr
            .cycles
            .into_iter()
            .map(OrientedCycle::from_trusted)
            .collect();
        TwoFactor::assemble(repr.n, cycles).map_err(serde::de::Error::custom)
    }
}
