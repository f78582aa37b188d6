//! The Hamiltonicity and 2-factor checks over the labeled sweep and the
//! generated corpus.

use crate::audit::AuditCounts;
use crate::record::RecordLog;
use crate::run::analyze;
use std::io;
use toughham_core::engine::{EngineOptions, RunOutcome};
use toughham_core::generators::{EdgeSetSweep, GenRng, GenSpec};
use toughham_core::oracles::{hamiltonian_cycle_with, is_2k2_free, toughness_with};
use toughham_core::two_factor::find_two_factor;
use toughham_core::{Graph, Rational, SizeLimits};

/// Tallies for one corpus. Graphs below toughness 3/2 are only counted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CorpusStats {
    pub graphs: u64,
    pub two_k2_free: u64,
    pub tough_three_halves: u64,
    pub two_factor_found: u64,
    pub tough_two: u64,
    pub engine_hamiltonian: u64,
    pub bruteforce_confirmed: u64,
    pub stuck: u64,
    pub failures: Vec<String>,
    pub audit: AuditCounts,
}

impl CorpusStats {
    pub fn hamiltonian_agreement(&self) -> bool {
        self.tough_two == self.engine_hamiltonian
            && self.tough_two == self.bruteforce_confirmed
            && self.stuck == 0
    }

    pub fn two_factor_agreement(&self) -> bool {
        self.tough_three_halves == self.two_factor_found
    }

    fn merge(&mut self, o: CorpusStats) {
        self.graphs += o.graphs;
        self.two_k2_free += o.two_k2_free;
        self.tough_three_halves += o.tough_three_halves;
        self.two_factor_found += o.two_factor_found;
        self.tough_two += o.tough_two;
        self.engine_hamiltonian += o.engine_hamiltonian;
        self.bruteforce_confirmed += o.bruteforce_confirmed;
        self.stuck += o.stuck;
        self.failures.extend(o.failures);
        self.audit += o.audit;
    }
}

fn check(
    g: &Graph,
    id: &str,
    seed: Option<u64>,
    limits: &SizeLimits,
    stats: &mut CorpusStats,
    log: &mut RecordLog,
) -> io::Result<()> {
    stats.graphs += 1;
    if is_2k2_free(g).is_some() {
        return Ok(());
    }
    stats.two_k2_free += 1;
    let t = toughness_with(g, limits)
        .expect("corpus within the toughness limit")
        .value;
    if !t.at_least(Rational::new(3, 2)) {
        return Ok(());
    }
    stats.tough_three_halves += 1;
    if find_two_factor(g).is_some() {
        stats.two_factor_found += 1;
    } else {
        stats
            .failures
            .push(format!("{id}: toughness {t} but no 2-factor"));
    }
    if !t.at_least(Rational::from_integer(2)) {
        return Ok(());
    }
    stats.tough_two += 1;
    let options = EngineOptions {
        pretrust_2k2_free: true,
        limits: *limits,
        ..EngineOptions::default()
    };
    let analysis = analyze(g, id, seed, &options, Some(t)).expect("n >= 3 for 2-tough graphs");
    let mut record = analysis.record;
    match analysis.audit {
        Ok(c) => stats.audit += c,
        Err(e) => stats.failures.push(format!("{id}: audit failed: {e}")),
    }
    match &analysis.result.outcome {
        RunOutcome::Hamiltonian { .. } => stats.engine_hamiltonian += 1,
        RunOutcome::Stuck { .. } => {
            stats.stuck += 1;
            stats.failures.push(format!("{id}: stuck"));
        }
        other => stats
            .failures
            .push(format!("{id}: 2-tough but {}", other.tag())),
    }
    let exact = hamiltonian_cycle_with(g, limits).expect("corpus within the Hamiltonian limit");
    record.bruteforce_hamiltonian = Some(exact.is_some());
    if exact.is_some() {
        stats.bruteforce_confirmed += 1;
    } else {
        stats
            .failures
            .push(format!("{id}: the exact oracle finds no Hamiltonian cycle"));
    }
    log.push(record)
}

fn edge_set_id(adj: &[u64]) -> String {
    let n = adj.len();
    let mut bits = 0u64;
    let mut i = 0;
    for (u, row) in adj.iter().enumerate() {
        for v in u + 1..n {
            bits |= ((row >> v) & 1) << i;
            i += 1;
        }
    }
    format!("labeled-n{n}-{bits:x}")
}

/// Every labeled graph on `n` vertices. Graphs of minimum degree below 3
/// are skipped unseen: a non-complete graph with a vertex of degree `d` has
/// toughness at most `d/2`.
pub fn labeled_sweep(
    n: usize,
    limits: &SizeLimits,
    log: &mut RecordLog,
) -> io::Result<CorpusStats> {
    let sweep = EdgeSetSweep::new(n, 3);
    let mut stats = CorpusStats::default();
    let mut result = Ok(());
    sweep.for_each(|adj| {
        if result.is_ok() {
            let g = Graph::from_masks(adj);
            result = check(&g, &edge_set_id(adj), None, limits, &mut stats, log);
        }
    });
    result?;
    stats.graphs = sweep.total();
    Ok(stats)
}

/// Labeled sweeps for every order from 3 to `n_max`.
pub fn labeled_sweeps(
    n_max: usize,
    limits: &SizeLimits,
    log: &mut RecordLog,
) -> io::Result<CorpusStats> {
    let mut total = CorpusStats::default();
    for n in 3..=n_max {
        total.merge(labeled_sweep(n, limits, log)?);
    }
    Ok(total)
}

const FREE_DENSITIES: [f64; 5] = [0.7, 0.75, 0.8, 0.85, 0.9];
const SPLIT_DENSITIES: [f64; 5] = [0.5, 0.6, 0.7, 0.8, 0.9];

/// `count` specs on 9 to 12 vertices: three in four are repaired random
/// graphs, the rest split graphs with an independent side of at most n/3.
pub fn generated_specs(count: usize, seed: u64) -> Vec<GenSpec> {
    let mut rng = GenRng::new(seed);
    (0..count)
        .map(|i| {
            let n = 9 + i % 4;
            if rng.below(4) == 0 {
                let n_indep = 2 + rng.below((n / 3 - 1) as u64) as usize;
                GenSpec::Split {
                    n_clique: n - n_indep,
                    n_indep,
                    p: SPLIT_DENSITIES[rng.below(5) as usize],
                    seed: rng.next_u64(),
                }
            } else {
                GenSpec::TwoK2Free {
                    n,
                    p: FREE_DENSITIES[rng.below(5) as usize],
                    seed: rng.next_u64(),
                    max_retries: 10_000,
                }
            }
        })
        .collect()
}

pub fn generated_corpus(
    specs: &[GenSpec],
    limits: &SizeLimits,
    log: &mut RecordLog,
) -> io::Result<CorpusStats> {
    let mut stats = CorpusStats::default();
    for spec in specs {
        let (id, seed) = match spec {
            GenSpec::Split { seed, .. } | GenSpec::TwoK2Free { seed, .. } => {
                (spec.id(), Some(*seed))
            }
            _ => (spec.id(), None),
        };
        match spec.generate() {
            Ok(g) => check(&g, &id, seed, limits, &mut stats, log)?,
            Err(e) => stats.failures.push(format!("{id}: {e}")),
        }
    }
    Ok(stats)
}
