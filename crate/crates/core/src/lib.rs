//! Finite element core for the 2D Stokes equations.
//!
//! Classical inf-sup stable pairs (Taylor-Hood, MINI, P2-P0, P2-bubble) and
//! their pressure-robust variants, where the right-hand side is tested with a
//! BDM reconstruction of the velocity test function. On top of the solvers sit
//! two residual a posteriori estimators: the standard one, whose volume term
//! carries the discrete pressure, and a curl-based one whose volume term only
//! sees `curl(f + nu * laplace u_h)` and is therefore independent of the
//! irrotational part of the body force.
//!
//! The crate is `no_std` and only needs `alloc`; all IO lives in the
//! `stokeslab` companion crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod adapt;
pub mod assembly;
pub mod error;
pub mod estimators;
pub mod fe;
pub mod field;
pub mod hdiv;
pub mod linsolve;
pub mod math;
pub mod mesh;
pub mod poly;
pub mod problems;
pub mod quadrature;
pub mod reconstruction;
pub mod sparse;

pub use adapt::{eoc, loglog_slope, run_study, run_study_with, LevelRecord, RefineMode, StudyConfig, StudyLog};
pub use assembly::{assemble, assemble_with, discrete_divergence_residual, StokesSystem};
pub use error::{Error, Result};
pub use estimators::{estimate, exact_error, mark, oscillation, EstimatorKind, EstimatorReport};
pub use fe::{DofLayout, ElementPair};
pub use field::DiscreteField;
pub use hdiv::HdivSpace;
pub use linsolve::{solve_saddle, Solution};
pub use mesh::Mesh;
pub use problems::{Domain, ProblemId, ProblemSpec};
pub use quadrature::QuadRule;
pub use reconstruction::{ReconstructionKind, ReconstructionOp};
