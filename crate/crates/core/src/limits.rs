//! Enumeration bounds for the exact oracles.
//!
//! `TOUGHHAM_SIZE_LIMIT` either holds a single integer applied to every bound,
//! or comma-separated `key=value` pairs with keys `toughness`, `independence`,
//! `hamiltonian` and `min_factor`.

use thiserror::Error;

pub const SIZE_LIMIT_ENV: &str = "TOUGHHAM_SIZE_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeLimits {
    pub toughness: usize,
    pub independence: usize,
    pub hamiltonian: usize,
    pub min_factor: usize,
}

impl Default for SizeLimits {
    fn default() -> Self {
        SizeLimits {
            toughness: 24,
            independence: 40,
            hamiltonian: 20,
            min_factor: 12,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{oracle}: n = {n} exceeds the configured limit {limit}")]
pub struct SizeLimitError {
    pub oracle: &'static str,
    pub n: usize,
    pub limit: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("bad {SIZE_LIMIT_ENV} value `{0}`")]
pub struct LimitSpecError(String);

impl SizeLimits {
    /// Defaults overridden by the environment variable, if set.
    pub fn from_env() -> Result<Self, LimitSpecError> {
        match std::env::var(SIZE_LIMIT_ENV) {
            Ok(spec) => Self::default().with_spec(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn with_spec(mut self, spec: &str) -> Result<Self, LimitSpecError> {
        let bad = || LimitSpecError(spec.to_string());
        let spec = spec.trim();
        if let Ok(all) = spec.parse::<usize>() {
            return Ok(SizeLimits {
                toughness: all,
                independence: all,
                hamiltonian: all,
                min_factor: all,
            });
        }
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: usize = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "toughness" => self.toughness = value,
                "independence" => self.independence = value,
                "hamiltonian" => self.hamiltonian = value,
                "min_factor" => self.min_factor = value,
                _ => return Err(bad()),
            }
        }
        Ok(self)
    }

    pub(crate) fn check(
        limit: usize,
        n: usize,
        oracle: &'static str,
    ) -> Result<(), SizeLimitError> {
        if n > limit {
            Err(SizeLimitError { oracle, n, limit })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_forms() {
        let d = SizeLimits::default();
        assert_eq!(d.with_spec("10").unwrap().hamiltonian, 10);
        let s = d.with_spec("toughness=30, min_factor=9").unwrap();
        assert_eq!((s.toughness, s.min_factor, s.independence), (30, 9, 40));
        assert!(d.with_spec("speed=3").is_err());
        assert!(d.with_spec("toughness").is_err());
    }
}
