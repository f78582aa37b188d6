use super::rng::GenRng;
use crate::graph::Graph;
use crate::limits::{SizeLimitError, SizeLimits};
use crate::oracles::{find_2k2_by_edge_pairs, is_2k2_free, toughness_with, Toughness};
use crate::rational::Rational;
use crate::two_factor::find_two_factor;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("graph would have {0} vertices, at most 64 are supported")]
    TooLarge(usize),
    #[error("still not 2K2-free after {0} edge deletions")]
    Exhausted(usize),
    #[error("family parameter must be positive")]
    ZeroParameter,
    #[error("construction for l = {l} failed validation: {reason}")]
    ConstructionUnvalidated { l: usize, reason: String },
    #[error(transparent)]
    SizeLimit(#[from] SizeLimitError),
}

fn check_probability(p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::Probability(p))
    }
}

fn check_size(n: usize) -> Result<(), GenError> {
    if n > 64 {
        Err(GenError::TooLarge(n))
    } else {
        Ok(())
    }
}

fn link(adj: &mut [u64], u: usize, v: usize) {
    adj[u] |= 1 << v;
    adj[v] |= 1 << u;
}

/// Clique on `0..n_clique`, independent set on the rest; each clique and
/// independent pair is drawn with probability `p`, clique vertex major.
pub fn random_split_graph(
    n_clique: usize,
    n_indep: usize,
    p: f64,
    seed: u64,
) -> Result<Graph, GenError> {
    check_probability(p)?;
    let n = n_clique + n_indep;
    check_size(n)?;
    let mut rng = GenRng::new(seed);
    let mut adj = vec![0u64; n];
    for u in 0..n_clique {
        for v in u + 1..n_clique {
            link(&mut adj, u, v);
        }
    }
    for u in 0..n_clique {
        for v in n_clique..n {
            if rng.chance(p) {
                link(&mut adj, u, v);
            }
        }
    }
    Ok(Graph::from_masks(&adj))
}

/// `G(n, p)` over pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    check_probability(p)?;
    check_size(n)?;
    let mut rng = GenRng::new(seed);
    let mut adj = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                link(&mut adj, u, v);
            }
        }
    }
    Ok(Graph::from_masks(&adj))
}

/// `G(n, p)` repaired by deleting the lower edge of each induced `2K₂` the
/// pair scan finds, at most `max_retries` times.
pub fn random_2k2_free(n: usize, p: f64, seed: u64, max_retries: usize) -> Result<Graph, GenError> {
    let g = random_gnp(n, p, seed)?;
    let mut adj = g.masks();
    for _ in 0..=max_retries {
        let current = Graph::from_masks(&adj);
        let Some(quad) = find_2k2_by_edge_pairs(&current) else {
            return Ok(current);
        };
        let (u, v) = quad.first;
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }
    let last = Graph::from_masks(&adj);
    if is_2k2_free(&last).is_none() {
        Ok(last)
    } else {
        Err(GenError::Exhausted(max_retries))
    }
}

/// Chvátal's split graphs: `t(G_l) = 3l/(2l+1)` with no 2-factor.
///
/// Hubs `h_1..h_l` and `a_1..a_{2l+1}` form a clique; each independent
/// `x_i` sees every hub and only `a_i` besides. Every `x_i` needs a hub edge
/// in a 2-factor but the hubs offer `2l`; removing the hubs and all but one
/// `a_i` leaves `2l + 1` components.
///
/// Served only after the oracles confirm the toughness value and the missing
/// 2-factor.
pub fn chvatal_family(l: usize) -> Result<Graph, GenError> {
    chvatal_family_with(l, &SizeLimits::from_env().unwrap_or_default())
}

pub fn chvatal_family_with(l: usize, limits: &SizeLimits) -> Result<Graph, GenError> {
    if l == 0 {
        return Err(GenError::ZeroParameter);
    }
    let g = chvatal_unchecked(l)?;
    let fail = |reason: String| GenError::ConstructionUnvalidated { l, reason };
    if let Some(q) = is_2k2_free(&g) {
        return Err(fail(format!("induced 2K2 {q:?}")));
    }
    let expected = Toughness::Finite(Rational::ratio(3 * l, 2 * l + 1));
    let report = toughness_with(&g, limits)?;
    if report.value != expected {
        return Err(fail(format!(
            "toughness {} instead of {}",
            report.value, expected
        )));
    }
    if find_two_factor(&g).is_some() {
        return Err(fail("a 2-factor exists".into()));
    }
    Ok(g)
}

/// The construction without the oracle gate. Hubs are `0..l`, the `a_i`
/// follow, then the `x_i`.
pub fn chvatal_unchecked(l: usize) -> Result<Graph, GenError> {
    let k = 2 * l + 1;
    let clique = l + k;
    let n = clique + k;
    check_size(n)?;
    let mut adj = vec![0u64; n];
    for u in 0..clique {
        for v in u + 1..clique {
            link(&mut adj, u, v);
        }
    }
    for i in 0..k {
        let x = clique + i;
        link(&mut adj, x, l + i);
        for h in 0..l {
            link(&mut adj, x, h);
        }
    }
    Ok(Graph::from_masks(&adj))
}

/// Flips `k` vertex pairs drawn uniformly with replacement.
pub fn perturb(g: &Graph, k: usize, seed: u64) -> Graph {
    let n = g.n();
    if n < 2 {
        return g.clone();
    }
    let mut rng = GenRng::new(seed);
    let pairs: Vec<(usize, usize)> = (0..k)
        .map(|_| {
            let u = rng.below(n as u64) as usize;
            let mut v = rng.below(n as u64 - 1) as usize;
            if v >= u {
                v += 1;
            }
            (u.min(v), u.max(v))
        })
        .collect();
    g.with_flipped_pairs(&pairs).expect("pairs are in range")
}

/// A reproducible graph: family parameters plus seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GenSpec {
    Split {
        n_clique: usize,
        n_indep: usize,
        p: f64,
        seed: u64,
    },
    TwoK2Free {
        n: usize,
        p: f64,
        seed: u64,
        max_retries: usize,
    },
    Chvatal {
        l: usize,
    },
    Perturbed {
        base: Box<GenSpec>,
        flips: usize,
        seed: u64,
    },
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph, GenError> {
        match self {
            GenSpec::Split {
                n_clique,
                n_indep,
                p,
                seed,
            } => random_split_graph(*n_clique, *n_indep, *p, *seed),
            GenSpec::TwoK2Free {
                n,
                p,
                seed,
                max_retries,
            } => random_2k2_free(*n, *p, *seed, *max_retries),
            GenSpec::Chvatal { l } => chvatal_family(*l),
            GenSpec::Perturbed { base, flips, seed } => {
                Ok(perturb(&base.generate()?, *flips, *seed))
            }
        }
    }

    /// Short identifier, also used as the corpus file stem.
    pub fn id(&self) -> String {
        match self {
            GenSpec::Split {
                n_clique,
                n_indep,
                p,
                seed,
            } => format!("split-c{n_clique}-i{n_indep}-p{p}-s{seed}"),
            GenSpec::TwoK2Free {
                n,
                p,
                seed,
                max_retries,
            } => format!("free-n{n}-p{p}-s{seed}-r{max_retries}"),
            GenSpec::Chvatal { l } => format!("chvatal-l{l}"),
            GenSpec::Perturbed { base, flips, seed } => {
                format!("{}-flip{flips}-s{seed}", base.id())
            }
        }
    }

    pub fn file_name(&self) -> String {
        format!("{}.graph", self.id())
    }
}
