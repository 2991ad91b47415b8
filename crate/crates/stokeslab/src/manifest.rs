//! JSON manifest written next to the CSV files of a `study` invocation.

use serde::{Deserialize, Serialize};
use stokeslab_core::StudyConfig;

pub const FILE_NAME: &str = "manifest.json";

pub const NDOF_CONVENTION: &str = "ndof counts velocity plus pressure degrees of freedom, Dirichlet values included";

/// Serializable view of a [`StudyConfig`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub problem: String,
    pub nu: f64,
    pub pair: String,
    pub mode: String,
    pub estimator: String,
    pub refine: String,
    pub max_levels: usize,
    pub max_ndof: usize,
    pub marking_fraction: f64,
    pub quad_degree: usize,
    pub initial_subdivisions: Option<usize>,
}

impl From<&StudyConfig> for RunConfig {
    fn from(c: &StudyConfig) -> Self {
        RunConfig {
            problem: c.problem.name().into(),
            nu: c.nu,
            pair: c.pair.name().into(),
            mode: if c.robust { "robust" } else { "classical" }.into(),
            estimator: c.estimator.name().into(),
            refine: c.refine.name().into(),
            max_levels: c.max_levels,
            max_ndof: c.max_ndof,
            marking_fraction: c.marking_fraction,
            quad_degree: c.quad_degree,
            initial_subdivisions: c.initial_subdivisions,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunEntry {
    pub config: RunConfig,
    /// CSV file name, relative to the manifest.
    pub csv: String,
    pub levels: usize,
    pub final_ndof: Option<usize>,
    /// Per-level mesh and indicator dumps, relative to the manifest.
    pub mesh_dumps: Vec<String>,
    /// Set when the solver gave up; the CSV holds the levels before it.
    pub failure: Option<String>,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub csv_schema: u32,
    pub csv_header: String,
    pub ndof_convention: String,
    pub seed: u64,
    pub threads: usize,
    /// Seconds since the Unix epoch.
    pub started: f64,
    pub finished: f64,
    pub runs: Vec<RunEntry>,
}
