//! Looks for 2K₂-free graphs in a toughness band that are not Hamiltonian.

use crate::audit::AuditCounts;
use crate::record::RecordLog;
use crate::report::invariant_report;
use crate::run::analyze;
use rayon::prelude::*;
use std::io;
use thiserror::Error;
use toughham_core::engine::{EngineOptions, RunOutcome};
use toughham_core::generators::{isomorphism_classes, GenRng, GenSpec};
use toughham_core::graph::write_graph;
use toughham_core::oracles::{hamiltonian_cycle_with, is_2k2_free, toughness_with, Toughness};
use toughham_core::{Graph, Rational, SizeLimits};

/// Edge probabilities the sampler draws from before repair.
pub const DENSITIES: [f64; 6] = [0.6, 0.65, 0.7, 0.75, 0.8, 0.85];

const REPAIR_BUDGET: usize = 10_000;
const BATCH: usize = 128;
const MAX_EXHAUSTIVE: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Draw repaired random graphs until `count` land in the band, giving up
    /// after `100 · count` draws.
    Sampled { count: usize },
    /// One graph per isomorphism class of 2K₂-free graphs.
    Exhaustive,
}

#[derive(Debug, Clone)]
pub struct SearchParams {
    pub n_min: usize,
    pub n_max: usize,
    /// Lower end of the band; the upper end is 2 when this is below 2, open otherwise.
    pub threshold: Rational,
    pub mode: SearchMode,
    pub seed: u64,
    pub limits: SizeLimits,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("graphs need at least 3 vertices, range starts at {0}")]
    TooSmall(usize),
    #[error("n = {n} is beyond the oracle limit {limit}")]
    BeyondLimit { n: usize, limit: usize },
    #[error("exhaustive search stops at {MAX_EXHAUSTIVE} vertices, asked for {0}")]
    ExhaustiveTooLarge(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A band graph without a Hamiltonian cycle, with what is needed to rebuild it.
#[derive(Debug, Clone)]
pub struct Hit {
    pub id: String,
    pub spec: Option<GenSpec>,
    pub graph_text: String,
    pub report: String,
}

#[derive(Default)]
pub struct SearchReport {
    pub generated: u64,
    pub in_band: u64,
    pub hamiltonian_in_band: u64,
    pub stuck: u64,
    pub hits: Vec<Hit>,
    /// Disagreements between the engine, its audit and the oracles.
    pub inconsistencies: Vec<String>,
    pub audit: AuditCounts,
    pub log: RecordLog,
}

impl SearchReport {
    pub fn summary(&self) -> String {
        format!(
            "generated {} in_band {} hamiltonian {} hits {} stuck {} inconsistencies {} records {} digest {}",
            self.generated,
            self.in_band,
            self.hamiltonian_in_band,
            self.hits.len(),
            self.stuck,
            self.inconsistencies.len(),
            self.log.count(),
            self.log.digest()
        )
    }
}

struct Candidate {
    id: String,
    spec: Option<GenSpec>,
    graph: Graph,
}

struct Examined {
    in_band: bool,
    hamiltonian: bool,
    stuck: bool,
    hit: Option<Hit>,
    problems: Vec<String>,
    audit: AuditCounts,
    record: crate::record::RunRecord,
}

fn band_contains(threshold: Rational, t: Toughness) -> bool {
    let two = Rational::from_integer(2);
    t.at_least(threshold) && (threshold >= two || !t.at_least(two))
}

fn examine(c: &Candidate, threshold: Rational, limits: &SizeLimits) -> Examined {
    let g = &c.graph;
    let mut problems = Vec::new();
    let t = toughness_with(g, limits)
        .expect("range checked against the limit")
        .value;
    let options = EngineOptions {
        pretrust_2k2_free: true,
        limits: *limits,
        ..EngineOptions::default()
    };
    if is_2k2_free(g).is_some() {
        problems.push(format!(
            "{}: generator returned a graph with an induced 2K2",
            c.id
        ));
    }
    let analysis = analyze(
        g,
        &c.id,
        c.spec.as_ref().and_then(spec_seed),
        &options,
        Some(t),
    )
    .expect("n >= 3");
    let mut record = analysis.record;
    let audit = analysis.audit.unwrap_or_else(|e| {
        problems.push(format!("{}: audit failed: {e}", c.id));
        AuditCounts::default()
    });
    let engine_ham = matches!(analysis.result.outcome, RunOutcome::Hamiltonian { .. });
    let stuck = matches!(analysis.result.outcome, RunOutcome::Stuck { .. });
    if t.at_least(Rational::from_integer(2)) && !engine_ham {
        problems.push(format!(
            "{}: 2-tough but the engine returned {}",
            c.id, record.outcome
        ));
    }
    let in_band = band_contains(threshold, t);
    let mut hamiltonian = false;
    let mut hit = None;
    if in_band {
        hamiltonian = hamiltonian_cycle_with(g, limits)
            .expect("range checked against the limit")
            .is_some();
        record.bruteforce_hamiltonian = Some(hamiltonian);
        if engine_ham && !hamiltonian {
            problems.push(format!(
                "{}: engine cycle but the exact oracle finds none",
                c.id
            ));
        }
        if !hamiltonian {
            let report = invariant_report(g, limits)
                .map(|r| r.to_string())
                .unwrap_or_default();
            hit = Some(Hit {
                id: c.id.clone(),
                spec: c.spec.clone(),
                graph_text: write_graph(g),
                report,
            });
        }
    }
    Examined {
        in_band,
        hamiltonian,
        stuck,
        hit,
        problems,
        audit,
        record,
    }
}

fn spec_seed(spec: &GenSpec) -> Option<u64> {
    match spec {
        GenSpec::Split { seed, .. }
        | GenSpec::TwoK2Free { seed, .. }
        | GenSpec::Perturbed { seed, .. } => Some(*seed),
        GenSpec::Chvatal { .. } => None,
    }
}

impl SearchReport {
    fn absorb(&mut self, e: Examined) -> io::Result<()> {
        self.generated += 1;
        self.in_band += e.in_band as u64;
        self.hamiltonian_in_band += (e.in_band && e.hamiltonian) as u64;
        self.stuck += e.stuck as u64;
        self.hits.extend(e.hit);
        self.inconsistencies.extend(e.problems);
        self.audit += e.audit;
        self.log.push(e.record)
    }
}

pub fn search(params: &SearchParams, log: RecordLog) -> Result<SearchReport, SearchError> {
    let mut report = SearchReport {
        log,
        ..SearchReport::default()
    };
    if params.n_min > params.n_max {
        return Ok(report);
    }
    if params.n_min < 3 {
        return Err(SearchError::TooSmall(params.n_min));
    }
    let limit = params
        .limits
        .toughness
        .min(params.limits.hamiltonian)
        .min(64);
    if params.n_max > limit {
        return Err(SearchError::BeyondLimit {
            n: params.n_max,
            limit,
        });
    }
    let run = |batch: &[Candidate]| -> Vec<Examined> {
        batch
            .par_iter()
            .map(|c| examine(c, params.threshold, &params.limits))
            .collect()
    };
    match params.mode {
        SearchMode::Exhaustive => {
            if params.n_max > MAX_EXHAUSTIVE {
                return Err(SearchError::ExhaustiveTooLarge(params.n_max));
            }
            let classes = isomorphism_classes(params.n_max, |g| is_2k2_free(g).is_none());
            for (n, graphs) in classes.iter().enumerate().skip(params.n_min) {
                let batch: Vec<Candidate> = graphs
                    .iter()
                    .enumerate()
                    .map(|(i, g)| Candidate {
                        id: format!("class-n{n}-{i}"),
                        spec: None,
                        graph: g.clone(),
                    })
                    .collect();
                for e in run(&batch) {
                    report.absorb(e)?;
                }
            }
        }
        SearchMode::Sampled { count } => {
            let mut rng = GenRng::new(params.seed);
            let span = (params.n_max - params.n_min + 1) as u64;
            let max_draws = 100 * count as u64;
            let mut draws = 0u64;
            'outer: while report.in_band < count as u64 && draws < max_draws {
                let mut batch = Vec::with_capacity(BATCH);
                while batch.len() < BATCH && draws < max_draws {
                    let n = params.n_min + (draws % span) as usize;
                    draws += 1;
                    let p = DENSITIES[rng.below(DENSITIES.len() as u64) as usize];
                    let spec = GenSpec::TwoK2Free {
                        n,
                        p,
                        seed: rng.next_u64(),
                        max_retries: REPAIR_BUDGET,
                    };
                    match spec.generate() {
                        Ok(graph) => batch.push(Candidate {
                            id: spec.id(),
                            spec: Some(spec),
                            graph,
                        }),
                        Err(e) => report.inconsistencies.push(format!("{}: {e}", spec.id())),
                    }
                }
                for e in run(&batch) {
                    report.absorb(e)?;
                    if report.in_band >= count as u64 {
                        break 'outer;
                    }
                }
            }
        }
    }
    report.log.flush()?;
    Ok(report)
}
