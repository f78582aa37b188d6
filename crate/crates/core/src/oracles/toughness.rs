use crate::bits::{component_count, low_mask};
use crate::graph::{Graph, VertexSet};
use crate::limits::{SizeLimitError, SizeLimits};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use std::fmt;

/// `t(G)`: finite for non-complete graphs, infinite for complete ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Toughness {
    Finite(Rational),
    Infinite,
}

impl Toughness {
    pub fn at_least(&self, t: Rational) -> bool {
        match self {
            Toughness::Infinite => true,
            Toughness::Finite(v) => *v >= t,
        }
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(r) => write!(f, "{r}"),
            Toughness::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessReport {
    pub value: Toughness,
    /// A minimizing cut; `None` exactly when the value is infinite.
    pub witness: Option<VertexSet>,
    /// `ω(G − witness)`, zero when there is no witness.
    pub components: usize,
}

/// Exact toughness by enumerating every vertex subset.
///
/// Among minimizing sets the smallest one wins, then the one with the smallest
/// bit mask, so the witness is reproducible.
pub fn toughness(g: &Graph) -> Result<ToughnessReport, SizeLimitError> {
    toughness_with(g, &SizeLimits::from_env().unwrap_or_default())
}

pub fn toughness_with(g: &Graph, limits: &SizeLimits) -> Result<ToughnessReport, SizeLimitError> {
    SizeLimits::check(limits.toughness.min(63), g.n(), "toughness")?;
    if g.is_complete() {
        return Ok(ToughnessReport {
            value: Toughness::Infinite,
            witness: None,
            components: 0,
        });
    }
    let n = g.n();
    let adj = g.masks();
    let full = low_mask(n);
    // best ratio kept as (|S|, ω) compared by cross-multiplication
    let mut best: Option<(usize, usize, u64)> = None;
    for size in 0..n.saturating_sub(1) {
        if let Some((bs, bw, _)) = best {
            // ω(G − S) ≤ n − |S|, so larger sets cannot beat the current ratio
            if size * bw >= bs * (n - size) {
                break;
            }
        }
        for s in subsets_of_size(n, size) {
            let w = component_count(&adj, full & !s);
            if w < 2 {
                continue;
            }
            let better = match best {
                None => true,
                Some((bs, bw, _)) => size * bw < bs * w,
            };
            if better {
                best = Some((size, w, s));
            }
        }
    }
    let (s, w, mask) = best.expect("a non-complete graph has a disconnecting set");
    Ok(ToughnessReport {
        value: Toughness::Finite(Rational::ratio(s, w)),
        witness: Some(VertexSet::from_mask(n, mask)),
        components: w,
    })
}

/// `Ok(None)` when `g` is `t`-tough, otherwise a set `S` with `|S| < t·ω(G − S)`.
pub fn is_t_tough(g: &Graph, t: Rational) -> Result<Option<VertexSet>, SizeLimitError> {
    is_t_tough_with(g, t, &SizeLimits::from_env().unwrap_or_default())
}

pub fn is_t_tough_with(
    g: &Graph,
    t: Rational,
    limits: &SizeLimits,
) -> Result<Option<VertexSet>, SizeLimitError> {
    SizeLimits::check(limits.toughness.min(63), g.n(), "toughness")?;
    assert!(t.numer() >= 0, "toughness threshold must be non-negative");
    if g.is_complete() {
        return Ok(None);
    }
    let n = g.n();
    let adj = g.masks();
    let full = low_mask(n);
    let (p, q) = (t.numer() as usize, t.denom() as usize);
    for size in 0..n.saturating_sub(1) {
        // need ω > size·q/p, and ω ≤ n − size
        if size * q >= p * (n - size) {
            break;
        }
        for s in subsets_of_size(n, size) {
            let w = component_count(&adj, full & !s);
            if w >= 2 && size * q < p * w {
                return Ok(Some(VertexSet::from_mask(n, s)));
            }
        }
    }
    Ok(None)
}

/// All `size`-subsets of `{0..n-1}` as masks, in increasing numeric order.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
    let mut next = if size == 0 {
        Some(0u64)
    } else if size > n {
        None
    } else {
        Some(low_mask(size))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (r != 0 && nxt < limit).then_some(nxt)
        };
        Some(cur)
    })
}
