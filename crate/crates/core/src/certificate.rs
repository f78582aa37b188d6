//! Objects the engine can return, each checkable on its own.

use crate::graph::{CycleError, Graph, OrientedCycle, VertexSet};
use crate::rational::Rational;
use crate::two_factor::{FactorError, TwoFactor};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Certificate {
    HamiltonianCycle(OrientedCycle),
    /// A 2-factor with fewer cycles than the one it is compared against.
    SmallerTwoFactor(TwoFactor),
    /// `S` with `ω(G − S) ≥ 2` and `|S| < 2·ω(G − S)`.
    ToughnessWitness(VertexSet),
    /// Independent `I` with `|I| > n/3`.
    IndependentSetWitness(VertexSet),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::HamiltonianCycle(_) => "hamiltonian_cycle",
            Certificate::SmallerTwoFactor(_) => "smaller_two_factor",
            Certificate::ToughnessWitness(_) => "toughness_witness",
            Certificate::IndependentSetWitness(_) => "independent_set_witness",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("cycle invalid: {0}")]
    BadCycle(#[from] CycleError),
    #[error("cycle misses {missing} vertices")]
    NotSpanning { missing: usize },
    #[error("factor invalid: {0}")]
    BadFactor(#[from] FactorError),
    #[error("a smaller factor needs a factor to compare against")]
    MissingContext,
    #[error("factor has {omega} cycles, not fewer than {reference}")]
    NotSmaller { omega: usize, reference: usize },
    #[error("set mentions a vertex outside the graph")]
    OutOfRange,
    #[error("deleting the set leaves {components} component(s), need at least 2")]
    TooFewComponents { components: usize },
    #[error("|S| = {size} is not below 2·ω = {}", 2 * components)]
    RatioNotBelowTwo { size: usize, components: usize },
    #[error("set is not independent: edge {0:?}")]
    NotIndependent((usize, usize)),
    #[error("|I| = {size} is not above n/3 for n = {n}")]
    TooSmall { size: usize, n: usize },
}

/// Checks a certificate against `g`; `context` is the factor a
/// `SmallerTwoFactor` must beat.
pub fn verify_certificate(
    g: &Graph,
    cert: &Certificate,
    context: Option<&TwoFactor>,
) -> Result<(), VerifyError> {
    match cert {
        Certificate::HamiltonianCycle(c) => {
            let c = OrientedCycle::new(g, c.vertices().to_vec())?;
            if c.len() != g.n() {
                return Err(VerifyError::NotSpanning {
                    missing: g.n() - c.len(),
                });
            }
            Ok(())
        }
        Certificate::SmallerTwoFactor(f) => {
            let reference = context.ok_or(VerifyError::MissingContext)?;
            f.validate(g, &g.vertex_set())?;
            if f.omega() >= reference.omega() {
                return Err(VerifyError::NotSmaller {
                    omega: f.omega(),
                    reference: reference.omega(),
                });
            }
            Ok(())
        }
        Certificate::ToughnessWitness(s) => verify_toughness_witness(g, s).map(|_| ()),
        Certificate::IndependentSetWitness(i) => {
            check_universe(g, i)?;
            if let Some(e) = g.edge_within(i) {
                return Err(VerifyError::NotIndependent(e));
            }
            if 3 * i.len() <= g.n() {
                return Err(VerifyError::TooSmall {
                    size: i.len(),
                    n: g.n(),
                });
            }
            let s = independent_set_to_toughness(g, i);
            let ratio = verify_toughness_witness(g, &s)?;
            debug_assert_eq!(ratio, Rational::ratio(g.n() - i.len(), i.len()));
            Ok(())
        }
    }
}

fn check_universe(g: &Graph, s: &VertexSet) -> Result<(), VerifyError> {
    if s.universe() != g.n() {
        return Err(VerifyError::OutOfRange);
    }
    Ok(())
}

/// Returns `|S| / ω(G − S)` when it is below 2 with at least two components.
pub fn verify_toughness_witness(g: &Graph, s: &VertexSet) -> Result<Rational, VerifyError> {
    check_universe(g, s)?;
    let components = g.component_count_without(s);
    if components < 2 {
        return Err(VerifyError::TooFewComponents { components });
    }
    if s.len() >= 2 * components {
        return Err(VerifyError::RatioNotBelowTwo {
            size: s.len(),
            components,
        });
    }
    Ok(Rational::ratio(s.len(), components))
}

/// `V ∖ I`: every vertex of an independent `I` is isolated once it is deleted,
/// so the ratio is `(n − |I|)/|I|`, below 2 whenever `|I| > n/3`.
pub fn independent_set_to_toughness(g: &Graph, i: &VertexSet) -> VertexSet {
    i.complement().intersection(&g.vertex_set())
}
