use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::io::{self, Write};
use std::time::Duration;
use toughham_core::engine::{EngineResult, RunOutcome};
use toughham_core::oracles::Toughness;
use toughham_core::{Certificate, Graph};

/// One line of a run log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub id: String,
    pub n: usize,
    pub m: usize,
    /// `"p/q"`, `"inf"`, or `"unknown"` past the oracle limit.
    pub toughness: String,
    pub is_2k2_free: bool,
    /// `hamiltonian`, `witness`, `no_two_factor` or `stuck`.
    pub outcome: String,
    pub omega_trajectory: Vec<usize>,
    /// The vertex set of a witness or of the cut attached to `no_two_factor`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Set when the exact Hamiltonicity oracle was also run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bruteforce_hamiltonian: Option<bool>,
    pub wall_time_us: u64,
    pub seed: Option<u64>,
}

impl RunRecord {
    pub fn new(
        id: impl Into<String>,
        g: &Graph,
        toughness: Option<Toughness>,
        free: bool,
        result: &EngineResult,
    ) -> Self {
        RunRecord {
            id: id.into(),
            n: g.n(),
            m: g.edge_count(),
            toughness: toughness.map_or_else(|| "unknown".to_string(), |t| t.to_string()),
            is_2k2_free: free,
            outcome: result.outcome.tag().to_string(),
            omega_trajectory: result.omega_trajectory.clone(),
            witness: witness_vertices(&result.outcome),
            bruteforce_hamiltonian: None,
            wall_time_us: 0,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_time(mut self, elapsed: Duration) -> Self {
        self.wall_time_us = elapsed.as_micros() as u64;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_json_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }

    /// The JSON line with the timing field zeroed.
    pub fn stable_line(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time_us = 0;
        copy.to_json_line()
    }
}

fn witness_vertices(outcome: &RunOutcome) -> Option<Vec<usize>> {
    match outcome {
        RunOutcome::Witness {
            certificate: Certificate::ToughnessWitness(s) | Certificate::IndependentSetWitness(s),
        } => Some(s.to_vec()),
        RunOutcome::NoTwoFactor { cut } => cut.as_ref().map(|s| s.to_vec()),
        _ => None,
    }
}

/// Counts records and hashes their timing-free lines; optionally keeps or
/// writes them.
pub struct RecordLog {
    hasher: Sha256,
    count: u64,
    kept: Option<Vec<RunRecord>>,
    sink: Option<Box<dyn Write + Send>>,
}

impl Default for RecordLog {
    fn default() -> Self {
        RecordLog {
            hasher: Sha256::new(),
            count: 0,
            kept: None,
            sink: None,
        }
    }
}

impl RecordLog {
    pub fn keeping() -> Self {
        RecordLog {
            kept: Some(Vec::new()),
            ..Self::default()
        }
    }

    pub fn writing_to(sink: Box<dyn Write + Send>) -> Self {
        RecordLog {
            sink: Some(sink),
            ..Self::default()
        }
    }

    pub fn push(&mut self, record: RunRecord) -> io::Result<()> {
        self.hasher.update(record.stable_line().as_bytes());
        self.hasher.update(b"\n");
        self.count += 1;
        if let Some(sink) = self.sink.as_mut() {
            writeln!(sink, "{}", record.to_json_line())?;
        }
        if let Some(kept) = self.kept.as_mut() {
            kept.push(record);
        }
        Ok(())
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn records(&self) -> &[RunRecord] {
        self.kept.as_deref().unwrap_or(&[])
    }

    /// Hex SHA-256 of every timing-free line so far.
    pub fn digest(&self) -> String {
        self.hasher
            .clone()
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    pub fn flush(&mut self) -> io::Result<()> {
        match self.sink.as_mut() {
            Some(s) => s.flush(),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use toughham_core::engine::run_engine;
    use toughham_core::graph::named;
    use toughham_core::oracles::toughness;

    #[test]
    fn round_trip_and_stable_digest() {
        let g = named::complete(5);
        let result = run_engine(&g).unwrap();
        let t = toughness(&g).unwrap().value;
        let a =
            RunRecord::new("k5", &g, Some(t), true, &result).with_time(Duration::from_millis(3));
        let b = a.clone().with_time(Duration::from_millis(9));
        assert_eq!(RunRecord::from_json_line(&a.to_json_line()).unwrap(), a);
        assert_eq!(a.toughness, "inf");
        assert_eq!(a.outcome, "hamiltonian");

        let (mut la, mut lb) = (RecordLog::keeping(), RecordLog::default());
        la.push(a).unwrap();
        lb.push(b).unwrap();
        assert_eq!(la.digest(), lb.digest());
        assert_eq!(la.records().len(), 1);
        assert_eq!(lb.count(), 1);
    }
}
