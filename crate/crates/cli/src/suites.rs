//! Property suites: each invariant is checked over exhaustive small families
//! and seeded random graphs, and reported with its count of violations.

use crate::audit::AuditCounts;
use crate::corpus::generated_specs;
use crate::record::RecordLog;
use crate::run::analyze;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;
use toughham_core::engine::{EngineOptions, RunOutcome};
use toughham_core::generators::{
    chvatal_family_with, isomorphism_classes, perturb, random_2k2_free, random_gnp,
    random_split_graph, GenRng, GenSpec,
};
use toughham_core::graph::named;
use toughham_core::oracles::{
    find_2k2_by_edge_pairs, hamiltonian_cycle_with, independence_number_with, is_2k2_free,
    minimum_component_two_factor_with, toughness_with,
};
use toughham_core::properties::{
    alternation_failure, coabsorbable_vertices, high_degree_coabsorbable, low_degree_edge,
    mergeable_cross_edge, recognizers_disagree, short_b_cycle,
};
use toughham_core::{Graph, Rational, SizeLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemmas,
    Claims,
    Engine,
    Generators,
}

#[derive(Debug, Error)]
#[error("unknown suite `{0}`; expected lemmas, claims, engine or generators")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lemmas" => Ok(Suite::Lemmas),
            "claims" => Ok(Suite::Claims),
            "engine" => Ok(Suite::Engine),
            "generators" => Ok(Suite::Generators),
            other => Err(UnknownSuite(other.to_string())),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Lemmas => "lemmas",
            Suite::Claims => "claims",
            Suite::Engine => "engine",
            Suite::Generators => "generators",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Random instances per invariant.
    pub random_instances: usize,
    pub seed: u64,
    /// Every graph up to this order is checked.
    pub all_graphs_max: usize,
    /// Every 2K₂-free graph up to this order is checked.
    pub free_graphs_max: usize,
    pub limits: SizeLimits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            random_instances: 1000,
            seed: 2024,
            all_graphs_max: 8,
            free_graphs_max: 9,
            limits: SizeLimits::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteItem {
    pub name: String,
    pub checked: u64,
    pub violations: u64,
    /// The first few counterexamples.
    pub examples: Vec<String>,
}

impl SuiteItem {
    fn new(name: &str) -> Self {
        SuiteItem {
            name: name.to_string(),
            ..Self::default()
        }
    }

    fn tally(&mut self, failure: Option<String>) {
        self.checked += 1;
        if let Some(f) = failure {
            self.violations += 1;
            if self.examples.len() < 5 {
                self.examples.push(f);
            }
        }
    }

    fn absorb(&mut self, outcomes: impl IntoIterator<Item = Option<Option<String>>>) {
        for o in outcomes.into_iter().flatten() {
            self.tally(o);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub items: Vec<SuiteItem>,
    /// Counts of engine objects re-verified, for the engine suite.
    pub audit: AuditCounts,
    /// Digest of the engine suite's run records.
    pub digest: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.items
            .iter()
            .all(|i| i.violations == 0 && i.checked > 0)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.items {
            let mark = if i.violations == 0 && i.checked > 0 {
                "ok"
            } else {
                "FAIL"
            };
            writeln!(
                f,
                "{mark:4} {:48} checked {:>8} violations {}",
                i.name, i.checked, i.violations
            )?;
            for e in &i.examples {
                writeln!(f, "       {e}")?;
            }
        }
        write!(
            f,
            "suite {}: {}",
            self.suite,
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteReport {
    let (items, audit, digest) = match suite {
        Suite::Lemmas => (lemmas(config), AuditCounts::default(), None),
        Suite::Claims => (claims(config), AuditCounts::default(), None),
        Suite::Engine => engine(config),
        Suite::Generators => (generators(config), AuditCounts::default(), None),
    };
    SuiteReport {
        suite,
        items,
        audit,
        digest,
    }
}

/// Named graphs for the exhaustive part: every graph on 3 to
/// `all_graphs_max` vertices, then every 2K₂-free graph of larger order up
/// to `free_graphs_max`.
fn exhaustive_family(config: &SuiteConfig) -> Vec<(String, Graph)> {
    let all = isomorphism_classes(config.all_graphs_max, |_| true);
    let mut out: Vec<(String, Graph)> = Vec::new();
    for (n, graphs) in all.iter().enumerate().skip(3) {
        out.extend(
            graphs
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("all-n{n}-{i}"), g.clone())),
        );
    }
    if config.free_graphs_max > config.all_graphs_max {
        let free = isomorphism_classes(config.free_graphs_max, |g| is_2k2_free(g).is_none());
        for (n, graphs) in free.iter().enumerate().skip(config.all_graphs_max + 1) {
            out.extend(
                graphs
                    .iter()
                    .enumerate()
                    .map(|(i, g)| (format!("free-n{n}-{i}"), g.clone())),
            );
        }
    }
    out
}

fn free_family(config: &SuiteConfig) -> Vec<(String, Graph)> {
    let free = isomorphism_classes(config.free_graphs_max, |g| is_2k2_free(g).is_none());
    let mut out = Vec::new();
    for (n, graphs) in free.iter().enumerate().skip(3) {
        out.extend(
            graphs
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("free-n{n}-{i}"), g.clone())),
        );
    }
    out
}

/// `count` seeded graphs; `make` turns (rng, index) into a spec.
fn random_family(
    count: usize,
    seed: u64,
    make: impl Fn(&mut GenRng, usize) -> GenSpec,
) -> Vec<(String, Graph)> {
    let mut rng = GenRng::new(seed);
    (0..count)
        .filter_map(|i| {
            let spec = make(&mut rng, i);
            spec.generate().ok().map(|g| (spec.id(), g))
        })
        .collect()
}

fn unit_p(rng: &mut GenRng) -> f64 {
    // two decimals keep spec ids short
    (rng.below(101) as f64) / 100.0
}

fn random_free(count: usize, seed: u64, n_lo: usize, n_hi: usize) -> Vec<(String, Graph)> {
    random_family(count, seed, |rng, i| GenSpec::TwoK2Free {
        n: n_lo + i % (n_hi - n_lo + 1),
        p: 0.3 + 0.6 * unit_p(rng),
        seed: rng.next_u64(),
        max_retries: 10_000,
    })
}

/// Dense 2K₂-free graphs with two extra twins of degree 2 on the two
/// highest-degree vertices. The twins force a 4-cycle into every 2-factor,
/// so minimum factors have at least two cycles while α stays small.
fn forced_square_family(count: usize, seed: u64) -> Vec<(String, Graph)> {
    random_family(count, seed, |rng, i| GenSpec::TwoK2Free {
        n: 7 + i % 4,
        p: 0.75 + 0.2 * unit_p(rng),
        seed: rng.next_u64(),
        max_retries: 10_000,
    })
    .into_iter()
    .filter_map(|(id, base)| {
        let n = base.n();
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| std::cmp::Reverse(base.degree(v)));
        let (a, b) = (by_degree[0], by_degree[1]);
        let edges = base.edges().chain([(a, n), (b, n), (a, n + 1), (b, n + 1)]);
        let g = Graph::from_edge_list(n + 2, edges).ok()?;
        is_2k2_free(&g)
            .is_none()
            .then(|| (format!("{id}-twins"), g))
    })
    .collect()
}

fn lemmas(config: &SuiteConfig) -> Vec<SuiteItem> {
    let limits = &config.limits;
    let exhaustive = exhaustive_family(config);
    let k = config.random_instances;

    let mut recog = SuiteItem::new("pair scan and non-neighbourhood scan agree");
    let mut rng = GenRng::new(config.seed);
    let gnp: Vec<(String, Graph)> = (0..k)
        .map(|i| {
            let n = 4 + i % 11;
            let p = unit_p(&mut rng);
            let seed = rng.next_u64();
            let g = random_gnp(n, p, seed).expect("p in [0, 1]");
            (format!("gnp-n{n}-p{p}-s{seed}"), g)
        })
        .collect();
    recog.absorb(
        exhaustive
            .iter()
            .chain(&gnp)
            .map(|(id, g)| Some(recognizers_disagree(g).then(|| id.clone()))),
    );
    let raw = random_family(k, config.seed ^ 0x51, |rng, i| GenSpec::Perturbed {
        base: Box::new(GenSpec::Split {
            n_clique: 3 + i % 5,
            n_indep: 2 + i % 4,
            p: unit_p(rng),
            seed: rng.next_u64(),
        }),
        flips: 1 + i % 4,
        seed: rng.next_u64(),
    });
    recog.absorb(
        raw.iter()
            .map(|(id, g)| Some(recognizers_disagree(g).then(|| id.clone()))),
    );

    let mut low = SuiteItem::new("low-degree vertices are independent");
    let free_random = random_free(k, config.seed ^ 0x77, 5, 20);
    let low_results: Vec<Option<Option<String>>> = exhaustive
        .par_iter()
        .chain(free_random.par_iter())
        .map(|(id, g)| {
            if is_2k2_free(g).is_some() {
                return None;
            }
            let (alpha, _) = independence_number_with(g, limits).ok()?;
            Some(low_degree_edge(g, alpha).map(|e| format!("{id}: edge {e:?}")))
        })
        .collect();
    low.absorb(low_results);

    let mut degree = SuiteItem::new("co-absorbable vertices have degree below alpha");
    let small_random = random_family(k, config.seed ^ 0x99, |rng, i| GenSpec::TwoK2Free {
        n: 5 + i % 6,
        p: 0.5 + 0.45 * unit_p(rng),
        seed: rng.next_u64(),
        max_retries: 10_000,
    });
    let mut rng = GenRng::new(config.seed ^ 0x9a);
    let gnp_random: Vec<(String, Graph)> = (0..k)
        .map(|i| {
            let n = 5 + i % 6;
            let p = 0.4 + 0.5 * unit_p(&mut rng);
            let seed = rng.next_u64();
            (
                format!("gnp-n{n}-p{p}-s{seed}"),
                random_gnp(n, p, seed).expect("p in [0, 1]"),
            )
        })
        .collect();
    let degree_results: Vec<Option<Option<String>>> = exhaustive
        .par_iter()
        .chain(small_random.par_iter())
        .chain(gnp_random.par_iter())
        .map(|(id, g)| {
            let (_, omega) = minimum_component_two_factor_with(g, limits).ok()??;
            let (alpha, _) = independence_number_with(g, limits).ok()?;
            let bad = high_degree_coabsorbable(g, omega, alpha, limits).ok()?;
            Some(bad.map(|x| {
                format!(
                    "{id}: vertex {x} has degree {} with alpha {alpha}",
                    g.degree(x)
                )
            }))
        })
        .collect();
    degree.absorb(degree_results);
    vec![recog, low, degree]
}

fn claims(config: &SuiteConfig) -> Vec<SuiteItem> {
    let limits = &config.limits;
    let mut family = exhaustive_family(config);
    family.extend(random_free(
        config.random_instances,
        config.seed ^ 0x33,
        6,
        11,
    ));
    family.extend(forced_square_family(
        config.random_instances,
        config.seed ^ 0x34,
    ));

    struct Row {
        merge: Option<Option<String>>,
        independent: Option<Option<String>>,
        alternation: Option<Option<String>>,
        length: Option<Option<String>>,
    }
    let rows: Vec<Row> = family
        .par_iter()
        .map(|(id, g)| {
            let mut row = Row {
                merge: None,
                independent: None,
                alternation: None,
                length: None,
            };
            let Ok(Some((f, omega))) = minimum_component_two_factor_with(g, limits) else {
                return row;
            };
            row.merge = Some(
                mergeable_cross_edge(g, &f)
                    .map(|h| format!("{id}: merges to {} cycles", h.omega())),
            );
            if is_2k2_free(g).is_some() {
                return row;
            }
            row.alternation = Some(
                alternation_failure(g, &f)
                    .map(|(e, d)| format!("{id}: B-type edge {e:?}, edge {d:?}")),
            );
            let Ok((alpha, _)) = independence_number_with(g, limits) else {
                return row;
            };
            if 3 * alpha > g.n() {
                return row;
            }
            row.length = Some(
                short_b_cycle(g, &f)
                    .map(|c| format!("{id}: cycle {c} of length {}", f.cycle(c).len())),
            );
            if omega >= 2 {
                if let Ok(co) = coabsorbable_vertices(g, omega, limits) {
                    row.independent =
                        Some(g.edge_within(&co).map(|e| format!("{id}: adjacent {e:?}")));
                }
            }
            row
        })
        .collect();

    let mut merge = SuiteItem::new("minimum factors admit no cross-edge merge");
    let mut independent = SuiteItem::new("co-absorbable vertices are independent");
    let mut alternation = SuiteItem::new("cycles alternate around a B-type edge");
    let mut length = SuiteItem::new("cycles with a B-type edge have n/3 + 2 vertices");
    for r in rows {
        merge.absorb([r.merge]);
        independent.absorb([r.independent]);
        alternation.absorb([r.alternation]);
        length.absorb([r.length]);
    }
    vec![merge, independent, alternation, length]
}

fn engine(config: &SuiteConfig) -> (Vec<SuiteItem>, AuditCounts, Option<String>) {
    let limits = &config.limits;
    let mut family = free_family(config);
    for spec in generated_specs(500, config.seed) {
        if let Ok(g) = spec.generate() {
            family.push((spec.id(), g));
        }
    }
    for l in 1..=3 {
        if let Ok(g) = chvatal_family_with(l, limits) {
            family.push((format!("chvatal-l{l}"), g));
        }
    }
    let options = EngineOptions {
        limits: *limits,
        ..EngineOptions::default()
    };
    let runs: Vec<_> = family
        .par_iter()
        .map(|(id, g)| {
            let t = toughness_with(g, limits).ok().map(|r| r.value);
            let analysis = analyze(g, id, None, &options, t);
            (id, g, t, analysis)
        })
        .collect();

    let mut verified = SuiteItem::new("engine outputs pass the verifier");
    let mut tough = SuiteItem::new("2-tough inputs end Hamiltonian");
    let mut stuck = SuiteItem::new("no run is stuck");
    let mut cut = SuiteItem::new("missing 2-factors come with a cut");
    let mut audit = AuditCounts::default();
    let mut log = RecordLog::default();
    for (id, g, t, analysis) in runs {
        let Ok(a) = analysis else {
            verified.tally(Some(format!("{id}: rejected")));
            continue;
        };
        verified.tally(match &a.audit {
            Ok(c) => {
                audit += *c;
                None
            }
            Err(e) => Some(format!("{id}: {e}")),
        });
        stuck.tally(
            matches!(a.result.outcome, RunOutcome::Stuck { .. })
                .then(|| format!("{id}: {:?}", a.result.outcome)),
        );
        if let RunOutcome::NoTwoFactor { cut: c } = &a.result.outcome {
            cut.tally(c.is_none().then(|| format!("{id}: no cut")));
        }
        if t.is_some_and(|t| t.at_least(Rational::from_integer(2))) {
            let ham = matches!(a.result.outcome, RunOutcome::Hamiltonian { .. });
            let exact = hamiltonian_cycle_with(g, limits).ok().flatten().is_some();
            tough.tally((!ham || !exact).then(|| format!("{id}: outcome {}", a.record.outcome)));
        }
        let _ = log.push(a.record);
    }
    let digest = Some(log.digest());
    (vec![verified, tough, stuck, cut], audit, digest)
}

fn generators(config: &SuiteConfig) -> Vec<SuiteItem> {
    let mut rng = GenRng::new(config.seed);
    let k = config.random_instances;

    let mut determinism = SuiteItem::new("same spec, same graph");
    let mut split = SuiteItem::new("split outputs are split and 2K2-free");
    let mut repaired = SuiteItem::new("repaired outputs are 2K2-free");
    let mut flips = SuiteItem::new("perturb changes at most k pairs, k = 0 none");
    for i in 0..k {
        let n = 3 + i % 10;
        let seed = rng.next_u64();
        let p = unit_p(&mut rng);
        let specs = [
            GenSpec::Split {
                n_clique: n,
                n_indep: 1 + i % 7,
                p,
                seed,
            },
            GenSpec::TwoK2Free {
                n,
                p,
                seed,
                max_retries: 10_000,
            },
        ];
        for spec in &specs {
            determinism.tally((spec.generate() != spec.generate()).then(|| spec.id()));
        }
        let s = random_split_graph(n, 1 + i % 7, p, seed).expect("p in [0, 1]");
        split.tally(split_failure(&s, n).map(|why| format!("{}: {why}", specs[0].id())));
        match random_2k2_free(n, p, seed, 10_000) {
            Ok(g) => repaired.tally(
                (is_2k2_free(&g).is_some() || find_2k2_by_edge_pairs(&g).is_some())
                    .then(|| specs[1].id()),
            ),
            Err(e) => repaired.tally(Some(format!("{}: {e}", specs[1].id()))),
        }
        let k_flips = i % 5;
        let h = perturb(&s, k_flips, seed);
        let d = changed_pairs(&s, &h);
        let ok = d <= k_flips && d % 2 == k_flips % 2 && (k_flips > 0 || h == s);
        flips.tally((!ok).then(|| format!("{k_flips} flips changed {d} pairs")));
    }
    let c6 = named::cycle(6);
    flips.tally(
        (changed_pairs(&c6, &perturb(&c6, 1, 3)) != 1).then(|| "C6 with one flip".to_string()),
    );

    let mut gate = SuiteItem::new("Chvatal graphs pass the toughness and 2-factor gate");
    for l in 1..=3 {
        gate.tally(
            chvatal_family_with(l, &config.limits)
                .err()
                .map(|e| e.to_string()),
        );
    }
    vec![determinism, split, repaired, flips, gate]
}

fn changed_pairs(a: &Graph, b: &Graph) -> usize {
    a.edges().filter(|&(u, v)| !b.has_edge(u, v)).count()
        + b.edges().filter(|&(u, v)| !a.has_edge(u, v)).count()
}

/// The first `n_clique` vertices must form a clique and the rest an
/// independent set.
fn split_failure(g: &Graph, n_clique: usize) -> Option<String> {
    if is_2k2_free(g).is_some() {
        return Some("induced 2K2".into());
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let both_clique = v < n_clique;
            let both_indep = u >= n_clique;
            if both_clique && !g.has_edge(u, v) {
                return Some(format!("clique pair {u} {v} missing"));
            }
            if both_indep && g.has_edge(u, v) {
                return Some(format!("independent pair {u} {v} joined"));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            random_instances: 40,
            seed: 3,
            all_graphs_max: 6,
            free_graphs_max: 7,
            limits: SizeLimits::default(),
        }
    }

    #[test]
    fn names_parse() {
        assert_eq!("claims".parse::<Suite>().unwrap(), Suite::Claims);
        assert!("proofs".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Lemmas, Suite::Claims, Suite::Generators] {
            let r = run_suite(suite, &small());
            assert!(r.passed(), "{r}");
        }
    }
}
