use std::fmt;
use toughham_core::limits::SizeLimitError;
use toughham_core::oracles::{
    independence_number_with, is_2k2_free, toughness_with, Induced2K2, ToughnessReport,
};
use toughham_core::two_factor::find_two_factor;
use toughham_core::{Graph, SizeLimits, VertexSet};

/// Everything `invariants` prints, each value with the object that proves it.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub toughness: ToughnessReport,
    pub alpha: usize,
    pub alpha_witness: VertexSet,
    pub induced_2k2: Option<Induced2K2>,
    pub two_factor_cycles: Option<usize>,
}

pub fn invariant_report(g: &Graph, limits: &SizeLimits) -> Result<InvariantReport, SizeLimitError> {
    let toughness = toughness_with(g, limits)?;
    let (alpha, alpha_witness) = independence_number_with(g, limits)?;
    Ok(InvariantReport {
        n: g.n(),
        m: g.edge_count(),
        toughness,
        alpha,
        alpha_witness,
        induced_2k2: is_2k2_free(g),
        two_factor_cycles: find_two_factor(g).map(|f| f.omega()),
    })
}

pub(crate) fn set_text(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "m: {}", self.m)?;
        match &self.toughness.witness {
            Some(s) => writeln!(
                f,
                "toughness: {} (S = {}, {} components)",
                self.toughness.value,
                set_text(s),
                self.toughness.components
            )?,
            None => writeln!(f, "toughness: {} (complete graph)", self.toughness.value)?,
        }
        writeln!(
            f,
            "independence: {} (I = {})",
            self.alpha,
            set_text(&self.alpha_witness)
        )?;
        match &self.induced_2k2 {
            None => writeln!(f, "2k2-free: true")?,
            Some(q) => writeln!(
                f,
                "2k2-free: false (edges {}-{} and {}-{})",
                q.first.0, q.first.1, q.second.0, q.second.1
            )?,
        }
        match self.two_factor_cycles {
            Some(1) => write!(f, "2-factor: yes (1 cycle)"),
            Some(k) => write!(f, "2-factor: yes ({k} cycles)"),
            None => write!(f, "2-factor: no"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use toughham_core::graph::named;

    #[test]
    fn six_cycle_report() {
        let r = invariant_report(&named::cycle(6), &SizeLimits::default()).unwrap();
        let text = r.to_string();
        assert!(text.contains("toughness: 1/1"));
        assert!(text.contains("independence: 3"));
        assert!(text.contains("2k2-free: false (edges 0-1 and 3-4)"));
        assert!(text.contains("2-factor: yes (1 cycle)"));
    }

    #[test]
    fn complete_and_empty() {
        let k4 = invariant_report(&named::complete(4), &SizeLimits::default()).unwrap();
        assert!(k4.to_string().contains("toughness: inf"));
        assert_eq!(k4.alpha, 1);
        assert!(k4.induced_2k2.is_none());
        let e3 = invariant_report(&named::empty(3), &SizeLimits::default()).unwrap();
        assert!(e3.to_string().contains("toughness: 0/1"));
        assert_eq!(e3.two_factor_cycles, None);
    }
}
