use crate::audit::{audit_run, AuditCounts};
use crate::record::RunRecord;
use std::time::Instant;
use toughham_core::engine::{
    run_engine_with, EngineError, EngineOptions, EngineResult, RunOutcome,
};
use toughham_core::oracles::{is_2k2_free, toughness_with, Toughness};
use toughham_core::Graph;

/// An engine run with its record and the independent audit of its output.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub record: RunRecord,
    pub result: EngineResult,
    pub audit: Result<AuditCounts, String>,
}

impl Analysis {
    /// 0 on a Hamiltonian cycle, 1 on a witness or a missing 2-factor, 2 when stuck.
    pub fn exit_code(&self) -> i32 {
        exit_code(&self.result.outcome)
    }
}

pub fn exit_code(outcome: &RunOutcome) -> i32 {
    match outcome {
        RunOutcome::Hamiltonian { .. } => 0,
        RunOutcome::Witness { .. } | RunOutcome::NoTwoFactor { .. } => 1,
        RunOutcome::Stuck { .. } => 2,
    }
}

/// Runs the engine on `g`. `toughness` is computed here when not supplied and
/// the oracle limit allows.
pub fn analyze(
    g: &Graph,
    id: &str,
    seed: Option<u64>,
    options: &EngineOptions,
    toughness: Option<Toughness>,
) -> Result<Analysis, EngineError> {
    let toughness = toughness.or_else(|| toughness_with(g, &options.limits).ok().map(|r| r.value));
    let start = Instant::now();
    let result = run_engine_with(g, options)?;
    let elapsed = start.elapsed();
    let free = !options.pretrust_2k2_free || is_2k2_free(g).is_none();
    let record = RunRecord::new(id, g, toughness, free, &result)
        .with_seed(seed)
        .with_time(elapsed);
    let audit = audit_run(g, &result);
    Ok(Analysis {
        record,
        result,
        audit,
    })
}
