//! Per-level JSON dumps of the mesh and its refinement indicators.

use serde::{Deserialize, Serialize};
use stokeslab_core::adapt::LevelState;
use stokeslab_core::EstimatorKind;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshDump {
    pub level: usize,
    pub ndof: usize,
    pub nodes: Vec<[f64; 2]>,
    pub cells: Vec<[usize; 3]>,
    pub mu_class: Vec<f64>,
    pub mu_new: Vec<f64>,
}

impl MeshDump {
    pub fn from_level(s: &LevelState<'_>) -> Self {
        MeshDump {
            level: s.record.level,
            ndof: s.record.ndof,
            nodes: s.mesh.nodes().to_vec(),
            cells: s.mesh.cells().to_vec(),
            mu_class: s.report.mu_cells(EstimatorKind::Class),
            mu_new: s.report.mu_cells(EstimatorKind::New),
        }
    }
}
