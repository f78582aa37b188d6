//! Cycle merging for 2K₂-free graphs, one verified step at a time.
//!
//! Each step either returns a 2-factor with fewer cycles, an independent set
//! or cut showing the graph is not 2-tough, or a `Stuck` report naming the
//! rule that could not continue. Every returned object is checked with
//! [`verify_certificate`] before it leaves the engine.

mod absorb;
mod bad_sets;
mod case1;
mod case2;
mod classify;
mod merge;
mod step;
pub mod trace;

pub use bad_sets::{compute_bad_sets, BadSets};
pub use case1::UConstruction;
pub use case2::Partition;
pub use classify::{a_witness_in, classify, Classification};
pub use merge::direct_merge_scan;
pub use step::CoAbsorbRegistry;
pub use trace::{Produced, TraceRecord};

use crate::certificate::{verify_certificate, Certificate};
use crate::graph::{Graph, OrientedCycle, VertexSet};
use crate::limits::SizeLimits;
use crate::oracles::{
    find_2k2_by_non_neighborhoods, is_t_tough_with, minimum_component_two_factor_with, Induced2K2,
};
use crate::rational::Rational;
use crate::two_factor::{find_two_factor, TwoFactor};
use serde::{Deserialize, Serialize};
use step::{Exit, Flow, Step};
use thiserror::Error;
use trace::Trace;

/// Where the argument could not continue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StuckReason {
    /// A forced edge was missing, so the graph contains this induced `2K₂`.
    ClaimViolation { rule: String, quad: Induced2K2 },
    /// A step that should be unreachable was reached.
    Internal { rule: String, message: String },
}

/// Result of a single step on a factor with at least two cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineOutcome {
    Hamiltonian(OrientedCycle),
    Progress(TwoFactor),
    Witness(Certificate),
    Stuck(StuckReason),
}

/// Final answer of [`run_engine`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RunOutcome {
    Hamiltonian {
        cycle: OrientedCycle,
    },
    Witness {
        certificate: Certificate,
    },
    /// The graph has no 2-factor; `cut` is a verified set with `|S| < 2·ω(G − S)`
    /// when the toughness oracle was within its size limit.
    NoTwoFactor {
        cut: Option<VertexSet>,
    },
    Stuck {
        reason: StuckReason,
    },
}

impl RunOutcome {
    pub fn tag(&self) -> &'static str {
        match self {
            RunOutcome::Hamiltonian { .. } => "hamiltonian",
            RunOutcome::Witness { .. } => "witness",
            RunOutcome::NoTwoFactor { .. } => "no_two_factor",
            RunOutcome::Stuck { .. } => "stuck",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineResult {
    pub outcome: RunOutcome,
    /// Cycle counts of the successive factors.
    pub omega_trajectory: Vec<usize>,
    pub trace: Vec<TraceRecord>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph has {0} vertices, need at least 3")]
    TooSmall(usize),
    #[error("graph is not 2K2-free: {0:?}")]
    Not2K2Free(Induced2K2),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StartFactor {
    /// Any 2-factor, from the matching gadget.
    #[default]
    Gadget,
    /// A 2-factor with the fewest cycles, by exhaustive search.
    Minimum,
}

#[derive(Debug, Clone, Default)]
pub struct EngineOptions {
    /// Skip the 2K₂ check on input.
    pub pretrust_2k2_free: bool,
    pub start: StartFactor,
    pub limits: SizeLimits,
}

pub fn run_engine(g: &Graph) -> Result<EngineResult, EngineError> {
    run_engine_with(g, &EngineOptions::default())
}

pub fn run_engine_with(g: &Graph, options: &EngineOptions) -> Result<EngineResult, EngineError> {
    if g.n() < 3 {
        return Err(EngineError::TooSmall(g.n()));
    }
    if !options.pretrust_2k2_free {
        if let Some(q) = find_2k2_by_non_neighborhoods(g) {
            return Err(EngineError::Not2K2Free(q));
        }
    }
    let start = match options.start {
        StartFactor::Minimum => minimum_component_two_factor_with(g, &options.limits)
            .ok()
            .map(|found| found.map(|(f, _)| f))
            .unwrap_or_else(|| find_two_factor(g)),
        StartFactor::Gadget => find_two_factor(g),
    };
    let mut trace = Trace::default();
    let Some(f) = start else {
        let cut = is_t_tough_with(g, Rational::from_integer(2), &options.limits)
            .ok()
            .flatten();
        let cut = cut.filter(|s| {
            verify_certificate(g, &Certificate::ToughnessWitness(s.clone()), None).is_ok()
        });
        trace.push(
            trace::INITIAL_FACTOR,
            Vec::new(),
            Produced::NoTwoFactor,
            0,
            None,
        );
        return Ok(EngineResult {
            outcome: RunOutcome::NoTwoFactor { cut },
            omega_trajectory: Vec::new(),
            trace: trace.into_records(),
        });
    };
    trace.push(
        trace::INITIAL_FACTOR,
        Vec::new(),
        Produced::Factor {
            cycles: f.to_lists(),
        },
        0,
        Some(f.omega()),
    );
    Ok(run_from(g, f, trace))
}

/// Runs the loop from a given 2-factor of `g`.
pub fn run_engine_from(g: &Graph, f: TwoFactor) -> EngineResult {
    run_from(g, f, Trace::default())
}

fn run_from(g: &Graph, mut f: TwoFactor, mut trace: Trace) -> EngineResult {
    let mut omega_trajectory = vec![f.omega()];
    let outcome = loop {
        trace.step += 1;
        match step_with(g, &f, &mut trace) {
            EngineOutcome::Hamiltonian(cycle) => break RunOutcome::Hamiltonian { cycle },
            EngineOutcome::Progress(next) => {
                omega_trajectory.push(next.omega());
                f = next;
            }
            EngineOutcome::Witness(certificate) => break RunOutcome::Witness { certificate },
            EngineOutcome::Stuck(reason) => break RunOutcome::Stuck { reason },
        }
    };
    EngineResult {
        outcome,
        omega_trajectory,
        trace: trace.into_records(),
    }
}

/// One step from `f`; `Progress` carries a verified factor with fewer cycles.
pub fn engine_step(g: &Graph, f: &TwoFactor) -> (EngineOutcome, Vec<TraceRecord>) {
    let mut trace = Trace::default();
    let out = step_with(g, f, &mut trace);
    (out, trace.into_records())
}

fn step_with(g: &Graph, f: &TwoFactor, trace: &mut Trace) -> EngineOutcome {
    let before = f.omega();
    if before == 1 {
        let cycle = f.cycle(0).clone();
        let cert = Certificate::HamiltonianCycle(cycle.clone());
        return match verify_certificate(g, &cert, None) {
            Ok(()) => {
                trace.push(
                    trace::HAMILTONIAN,
                    Vec::new(),
                    Produced::Witness { certificate: cert },
                    1,
                    Some(1),
                );
                EngineOutcome::Hamiltonian(cycle)
            }
            Err(e) => stuck(
                trace,
                trace::HAMILTONIAN,
                before,
                format!("single cycle failed verification: {e}"),
            ),
        };
    }
    let exit = {
        let mut step = Step::new(g, f, classify(g, f), trace);
        match step.run() {
            Err(exit) => exit,
            Ok(()) => step.internal(trace::TERMINAL, "no rule concluded the step"),
        }
    };
    let consumed_lists = |ids: &[usize]| {
        ids.iter()
            .map(|&i| f.cycle(i).vertices().to_vec())
            .collect()
    };
    match exit {
        Exit::Progress {
            rule,
            factor,
            consumed,
        } => {
            let cert = Certificate::SmallerTwoFactor(*factor);
            if let Err(e) = verify_certificate(g, &cert, Some(f)) {
                return stuck(
                    trace,
                    rule,
                    before,
                    format!("smaller factor failed verification: {e}"),
                );
            }
            let Certificate::SmallerTwoFactor(factor) = cert else {
                unreachable!()
            };
            trace.push(
                rule,
                consumed_lists(&consumed),
                Produced::Factor {
                    cycles: factor.to_lists(),
                },
                before,
                Some(factor.omega()),
            );
            EngineOutcome::Progress(factor)
        }
        Exit::Witness { rule, certificate } => {
            if let Err(e) = verify_certificate(g, &certificate, None) {
                return stuck(
                    trace,
                    rule,
                    before,
                    format!("witness failed verification: {e}"),
                );
            }
            trace.push(
                rule,
                Vec::new(),
                Produced::Witness {
                    certificate: (*certificate).clone(),
                },
                before,
                None,
            );
            EngineOutcome::Witness(*certificate)
        }
        Exit::Stuck { rule, reason } => {
            let produced = match &reason {
                StuckReason::ClaimViolation { quad, .. } => Produced::Violation { quad: *quad },
                StuckReason::Internal { message, .. } => Produced::Stuck {
                    reason: message.clone(),
                },
            };
            trace.push(rule, Vec::new(), produced, before, None);
            EngineOutcome::Stuck(reason)
        }
    }
}

fn stuck(trace: &mut Trace, rule: trace::Rule, before: usize, message: String) -> EngineOutcome {
    trace.push(
        rule,
        Vec::new(),
        Produced::Stuck {
            reason: message.clone(),
        },
        before,
        None,
    );
    EngineOutcome::Stuck(StuckReason::Internal {
        rule: rule.name.to_string(),
        message,
    })
}

impl Step<'_> {
    /// The fixed rule order: cross-edge merge, A-type certificates, cycle
    /// counts, bad sets, bad-vertex certificates, then one or two
    /// non-alternating cycles.
    fn run(&mut self) -> Flow<()> {
        if let Some((cycle, removed)) = merge::find_cross_merge(self.g, self.f) {
            let runs = vec![cycle.vertices().to_vec()];
            return Err(self.merged(trace::CROSS_EDGE_MERGE, &removed, vec![runs]));
        }
        self.certify_a_type()?;
        self.check_cycle_counts()?;
        self.bad = compute_bad_sets(self.g, self.f, &self.cls);
        self.check_bad_propagation()?;
        self.certify_bad()?;
        match self.cls.non_alternating.len() {
            1 => self.case1(),
            2 => self.case2(),
            k => Err(self.internal(
                trace::TOO_MANY_B_CYCLES,
                format!("{k} non-alternating cycles"),
            )),
        }
    }
}

/// Certificates for the factor neighbours of A-type and bad vertices of `f`,
/// or the outcome that ended certification early.
pub fn certify_coabsorbables(g: &Graph, f: &TwoFactor) -> Result<CoAbsorbRegistry, EngineOutcome> {
    let mut trace = Trace::default();
    let mut step = Step::new(g, f, classify(g, f), &mut trace);
    let flow = (|| {
        if let Some((cycle, removed)) = merge::find_cross_merge(step.g, step.f) {
            return Err(step.merged(
                trace::CROSS_EDGE_MERGE,
                &removed,
                vec![vec![cycle.vertices().to_vec()]],
            ));
        }
        step.certify_a_type()?;
        step.bad = compute_bad_sets(step.g, step.f, &step.cls);
        step.certify_bad()
    })();
    match flow {
        Ok(()) => Ok(step.reg),
        Err(Exit::Progress { factor, .. }) => Err(EngineOutcome::Progress(*factor)),
        Err(Exit::Witness { certificate, .. }) => Err(EngineOutcome::Witness(*certificate)),
        Err(Exit::Stuck { reason, .. }) => Err(EngineOutcome::Stuck(reason)),
    }
}
