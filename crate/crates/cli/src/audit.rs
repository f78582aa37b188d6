//! Re-checks every object an engine run emitted, independently of the checks
//! the engine already ran.

use std::ops::AddAssign;
use toughham_core::certificate::verify_toughness_witness;
use toughham_core::engine::{EngineResult, Produced, RunOutcome};
use toughham_core::{
    verify_certificate, Certificate, Graph, OrientedCycle, Rational, TwoFactor, VertexSet,
};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AuditCounts {
    pub hamiltonian_cycles: u64,
    pub smaller_factors: u64,
    pub removal_factors: u64,
    pub toughness_witnesses: u64,
    pub independent_sets: u64,
    pub no_factor_cuts: u64,
}

impl AuditCounts {
    pub fn total(&self) -> u64 {
        self.hamiltonian_cycles
            + self.smaller_factors
            + self.removal_factors
            + self.toughness_witnesses
            + self.independent_sets
            + self.no_factor_cuts
    }
}

impl AddAssign for AuditCounts {
    fn add_assign(&mut self, o: Self) {
        self.hamiltonian_cycles += o.hamiltonian_cycles;
        self.smaller_factors += o.smaller_factors;
        self.removal_factors += o.removal_factors;
        self.toughness_witnesses += o.toughness_witnesses;
        self.independent_sets += o.independent_sets;
        self.no_factor_cuts += o.no_factor_cuts;
    }
}

fn factor_from_lists(g: &Graph, lists: &[Vec<usize>]) -> Result<TwoFactor, String> {
    let cycles = lists
        .iter()
        .map(|c| OrientedCycle::new(g, c.clone()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    TwoFactor::new(g, cycles).map_err(|e| e.to_string())
}

fn check_witness(g: &Graph, cert: &Certificate, counts: &mut AuditCounts) -> Result<(), String> {
    verify_certificate(g, cert, None).map_err(|e| format!("{}: {e}", cert.kind()))?;
    match cert {
        Certificate::HamiltonianCycle(_) => counts.hamiltonian_cycles += 1,
        Certificate::ToughnessWitness(s) => {
            check_cut(g, s)?;
            counts.toughness_witnesses += 1;
        }
        Certificate::IndependentSetWitness(_) => counts.independent_sets += 1,
        Certificate::SmallerTwoFactor(_) => {
            return Err("smaller factor emitted as a witness".into())
        }
    }
    Ok(())
}

fn check_cut(g: &Graph, s: &VertexSet) -> Result<(), String> {
    let ratio = verify_toughness_witness(g, s).map_err(|e| e.to_string())?;
    let components = g.component_count_without(s);
    if components < 2 || ratio >= Rational::from_integer(2) {
        return Err(format!("cut ratio {ratio} with {components} components"));
    }
    Ok(())
}

/// Verifies each factor, certificate and witness in the trace and the final
/// outcome.
pub fn audit_run(g: &Graph, result: &EngineResult) -> Result<AuditCounts, String> {
    let mut counts = AuditCounts::default();
    let mut current: Option<TwoFactor> = None;
    for rec in &result.trace {
        match &rec.produced {
            Produced::Factor { cycles } => {
                let f =
                    factor_from_lists(g, cycles).map_err(|e| format!("step {}: {e}", rec.step))?;
                if let Some(prev) = &current {
                    let cert = Certificate::SmallerTwoFactor(f.clone());
                    verify_certificate(g, &cert, Some(prev))
                        .map_err(|e| format!("step {}: {e}", rec.step))?;
                    counts.smaller_factors += 1;
                } else if f.support() != g.vertex_set() {
                    return Err("initial factor does not span".into());
                }
                current = Some(f);
            }
            Produced::Certificate { vertex, cycles } => {
                let f =
                    factor_from_lists(g, cycles).map_err(|e| format!("step {}: {e}", rec.step))?;
                let mut rest = g.vertex_set();
                rest.remove(*vertex);
                if f.support() != rest || f.omega() >= rec.omega_before {
                    return Err(format!(
                        "step {}: certificate for {vertex} has the wrong support or size",
                        rec.step
                    ));
                }
                counts.removal_factors += 1;
            }
            Produced::Witness { certificate } => check_witness(g, certificate, &mut counts)?,
            Produced::Violation { .. } | Produced::Stuck { .. } | Produced::NoTwoFactor => {}
        }
    }
    match &result.outcome {
        RunOutcome::Hamiltonian { cycle } => {
            verify_certificate(g, &Certificate::HamiltonianCycle(cycle.clone()), None)
                .map_err(|e| e.to_string())?
        }
        RunOutcome::Witness { certificate } => {
            verify_certificate(g, certificate, None).map_err(|e| e.to_string())?
        }
        RunOutcome::NoTwoFactor { cut: Some(s) } => {
            check_cut(g, s)?;
            counts.no_factor_cuts += 1;
        }
        RunOutcome::NoTwoFactor { cut: None } | RunOutcome::Stuck { .. } => {}
    }
    Ok(counts)
}
