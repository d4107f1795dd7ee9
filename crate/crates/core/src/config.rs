//! Run configuration: JSON file merged under command-line overrides.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::GridSpec;
use crate::observables::{default_sweep, Convention};
use crate::verify::SuiteConfig;
use crate::wavepacket::LGParams;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub params: LGParams,
    /// Replaces `params.a`, `params.b` by `(√((1+s)/2), √((1−s)/2))` when set.
    pub sigma_z: Option<f64>,
    pub grid: GridSpec,
    pub z: f64,
    pub convention: Convention,
    pub rho_band: [f64; 2],
    pub rho0: f64,
    pub nodes: usize,
    pub sweep: Option<Vec<f64>>,
    pub sweep_points: usize,
    /// Also integrate the spectral oracle at every sweep point.
    pub oracle_sweep: bool,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub position_grid: Option<usize>,
    /// Momenta `(px, py, pz)` tabulated by the `spinors` command.
    pub momenta: Vec<[f64; 3]>,
    pub out: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        let suite = SuiteConfig::default();
        RunConfig {
            params: LGParams::default(),
            sigma_z: None,
            grid: GridSpec::default(),
            z: 0.0,
            convention: Convention::AsPublished,
            rho_band: [2.0, 8.0],
            rho0: 5.0,
            nodes: 256,
            sweep: None,
            sweep_points: 21,
            oracle_sweep: false,
            seed: suite.seed,
            samples: suite.samples,
            tolerance: suite.tolerance,
            position_grid: suite.position_grid,
            momenta: vec![[0.0, 0.0, 0.0], [0.0, 0.0, 0.75], [0.3, -0.4, 1.2], [0.0, 0.0, 10.0]],
            out: PathBuf::from("out"),
        }
    }
}

/// Command-line values that win over the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
    pub convention: Option<Convention>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// File (or defaults), then overrides, then validation.
    pub fn resolve(path: Option<&Path>, overrides: &Overrides) -> Result<Self> {
        let mut cfg = match path {
            Some(p) => Self::load(p)?,
            None => Self::default(),
        };
        if let Some(out) = &overrides.out {
            cfg.out = out.clone();
        }
        if let Some(seed) = overrides.seed {
            cfg.seed = seed;
        }
        if let Some(c) = overrides.convention {
            cfg.convention = c;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// LG parameters after the optional `sigma_z` substitution.
    pub fn lg(&self) -> Result<LGParams> {
        match self.sigma_z {
            Some(s) => self.params.with_sigma_z(s),
            None => Ok(self.params),
        }
    }

    pub fn sweep_values(&self) -> Vec<f64> {
        self.sweep
            .clone()
            .unwrap_or_else(|| default_sweep(self.sweep_points))
    }

    pub fn suite(&self) -> SuiteConfig {
        SuiteConfig {
            seed: self.seed,
            samples: self.samples,
            tolerance: self.tolerance,
            position_grid: self.position_grid,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.lg()?.validate()?;
        self.grid.validate()?;
        let [lo, hi] = self.rho_band;
        if !(lo > 0.0 && hi > lo) {
            return Err(Error::Config(format!("rho_band must satisfy 0 < lo < hi, got {lo}, {hi}")));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::Config(format!("tolerance must be > 0, got {}", self.tolerance)));
        }
        if self.samples == 0 {
            return Err(Error::Config("samples must be > 0".into()));
        }
        if let Some(s) = &self.sweep {
            if s.iter().any(|v| !(-1.0..=1.0).contains(v)) {
                return Err(Error::Config("sweep values must lie in [-1, 1]".into()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        let c = RunConfig::default();
        c.validate().unwrap();
        assert_eq!(c.sweep_values().len(), 21);
    }

    #[test]
    fn partial_json_and_overrides() {
        let c = RunConfig::from_json(r#"{"sigma_z": 0.0, "seed": 3, "convention": "self-consistent"}"#)
            .unwrap();
        assert_eq!(c.seed, 3);
        assert_eq!(c.convention, Convention::SelfConsistent);
        assert!(c.lg().unwrap().sigma_z().abs() < 1e-15);
        assert!(RunConfig::from_json(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn invalid_params_rejected() {
        let mut c = RunConfig::default();
        c.params.m = -1.0;
        assert!(c.validate().is_err());
        let mut c = RunConfig::default();
        c.rho_band = [3.0, 1.0];
        assert!(c.validate().is_err());
    }
}
