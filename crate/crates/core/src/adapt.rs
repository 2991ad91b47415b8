//! SOLVE -> ESTIMATE -> MARK -> REFINE.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::assembly::assemble;
use crate::error::{Error, Result};
use crate::estimators::{estimate, exact_error, mark, EstimatorKind, EstimatorReport, Totals, QUAD_DEGREE};
use crate::fe::{DofLayout, ElementPair};
use crate::field::DiscreteField;
use crate::linsolve::solve_saddle;
use crate::math;
use crate::mesh::Mesh;
use crate::problems::{Domain, ProblemId};
use crate::reconstruction::ReconstructionOp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RefineMode {
    Uniform,
    Adaptive,
}

impl RefineMode {
    pub fn name(self) -> &'static str {
        match self {
            RefineMode::Uniform => "uniform",
            RefineMode::Adaptive => "adaptive",
        }
    }
}

impl FromStr for RefineMode {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s.to_ascii_lowercase().as_str() {
            "uniform" => Ok(RefineMode::Uniform),
            "adaptive" => Ok(RefineMode::Adaptive),
            _ => Err(()),
        }
    }
}

impl fmt::Display for RefineMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StudyConfig {
    pub problem: ProblemId,
    pub nu: f64,
    pub pair: ElementPair,
    pub robust: bool,
    /// Estimator whose cell indicators drive marking.
    pub estimator: EstimatorKind,
    pub refine: RefineMode,
    pub max_levels: usize,
    pub max_ndof: usize,
    pub marking_fraction: f64,
    pub quad_degree: usize,
    /// Subdivisions of the initial structured mesh; `None` for the domain
    /// default.
    pub initial_subdivisions: Option<usize>,
}

impl StudyConfig {
    pub fn new(problem: ProblemId, nu: f64, pair: ElementPair, robust: bool) -> Self {
        StudyConfig {
            problem,
            nu,
            pair,
            robust,
            estimator: if robust { EstimatorKind::New } else { EstimatorKind::Class },
            refine: RefineMode::Uniform,
            max_levels: 25,
            max_ndof: 200_000,
            marking_fraction: 0.25,
            quad_degree: QUAD_DEGREE,
            initial_subdivisions: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.marking_fraction > 0.0 && self.marking_fraction <= 1.0) {
            return Err(Error::InvalidConfig("marking fraction must lie in (0, 1]"));
        }
        if !(self.nu > 0.0 && self.nu.is_finite()) {
            return Err(Error::InvalidConfig("viscosity must be positive"));
        }
        if self.max_levels == 0 {
            return Err(Error::InvalidConfig("at least one level is required"));
        }
        if self.initial_subdivisions == Some(0) {
            return Err(Error::InvalidConfig("subdivision count must be positive"));
        }
        ReconstructionOp::for_mode(self.pair, self.robust)?;
        crate::quadrature::triangle_rule(self.quad_degree)?;
        Ok(())
    }

    pub fn initial_mesh(&self) -> Result<Mesh> {
        let domain = self.problem.spec(self.nu).domain();
        match self.initial_subdivisions {
            Some(n) => domain.mesh(n),
            None => Ok(domain.initial_mesh()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevelRecord {
    pub level: usize,
    pub ndof: usize,
    pub cells: usize,
    pub err_h1: f64,
    pub mu_class: f64,
    pub mu_new: f64,
    pub totals: Totals,
    pub eff_class: f64,
    pub eff_new: f64,
    pub residual: f64,
    /// Cells marked for the next level; zero for uniform refinement.
    pub marked: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyLog {
    pub config: StudyConfig,
    pub records: Vec<LevelRecord>,
    /// Set when a solve failed; the records before it are complete.
    pub failure: Option<Error>,
}

impl StudyLog {
    pub fn ndofs(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.ndof as f64).collect()
    }

    pub fn column(&self, f: impl Fn(&LevelRecord) -> f64) -> Vec<f64> {
        self.records.iter().map(f).collect()
    }
}

/// Everything computed on one level, handed to observers.
pub struct LevelState<'a> {
    pub mesh: &'a Mesh,
    pub layout: &'a DofLayout,
    pub velocity: &'a DiscreteField,
    pub pressure: &'a DiscreteField,
    pub report: &'a EstimatorReport,
    pub record: &'a LevelRecord,
}

/// `ndof` of `pair` on `mesh`: velocity plus pressure DOFs.
pub fn ndof(pair: ElementPair, mesh: &Mesh) -> usize {
    DofLayout::new(pair, mesh).ndof()
}

/// Structured mesh size whose `ndof` is closest to `target`.
pub fn subdivisions_for_ndof(domain: Domain, pair: ElementPair, target: usize) -> Result<usize> {
    let mut best = (usize::MAX, 1);
    for n in 1.. {
        let d = ndof(pair, &domain.mesh(n)?);
        let gap = d.abs_diff(target);
        if gap < best.0 {
            best = (gap, n);
        }
        if d > target {
            break;
        }
    }
    Ok(best.1)
}

pub fn run_study(config: &StudyConfig) -> Result<StudyLog> {
    run_study_with(config, &|| 0.0, &mut |_| {})
}

/// [`run_study`] with a wall clock in seconds and a per-level observer.
pub fn run_study_with(config: &StudyConfig, clock: &dyn Fn() -> f64, observe: &mut dyn FnMut(&LevelState<'_>)) -> Result<StudyLog> {
    config.validate()?;
    let problem = config.problem.spec(config.nu);
    let op = ReconstructionOp::for_mode(config.pair, config.robust)?;
    let mut mesh = config.initial_mesh()?;
    let mut log = StudyLog { config: *config, records: Vec::new(), failure: None };

    for level in 0..config.max_levels {
        let start = clock();
        let sys = assemble(&problem, config.pair, &mesh, &op)?;
        let sol = match solve_saddle(&sys) {
            Ok(s) => s,
            Err(e) => {
                log.failure = Some(e);
                break;
            }
        };
        let layout = sys.layout;
        let u = DiscreteField::velocity(&layout, sol.velocity)?;
        let p = DiscreteField::pressure(&layout, sol.pressure)?;
        let report = estimate(&mesh, &problem, &layout, &u, &p, &op, config.quad_degree)?;
        let (err_h1, _) = exact_error(&mesh, &problem, &layout, &u, config.quad_degree)?;

        let marked = match config.refine {
            RefineMode::Adaptive => mark(&report.mu_cells(config.estimator), config.marking_fraction),
            RefineMode::Uniform => Vec::new(),
        };
        let (mu_class, mu_new) = (report.mu_class(), report.mu_new());
        let record = LevelRecord {
            level,
            ndof: layout.ndof(),
            cells: mesh.num_cells(),
            err_h1,
            mu_class,
            mu_new,
            totals: report.totals,
            eff_class: mu_class / err_h1,
            eff_new: mu_new / err_h1,
            residual: sol.residual,
            marked: marked.len(),
            seconds: clock() - start,
        };
        observe(&LevelState { mesh: &mesh, layout: &layout, velocity: &u, pressure: &p, report: &report, record: &record });
        log.records.push(record);

        if level + 1 == config.max_levels {
            break;
        }
        let next = match config.refine {
            RefineMode::Uniform => mesh.refine_uniform(),
            RefineMode::Adaptive => mesh.refine_adaptive(&marked)?,
        };
        if ndof(config.pair, &next) > config.max_ndof {
            break;
        }
        mesh = next;
    }
    Ok(log)
}

/// `rate_i = -2 log(e_{i+1} / e_i) / log(n_{i+1} / n_i)`.
pub fn eoc(ndof: &[f64], err: &[f64]) -> Result<Vec<f64>> {
    if ndof.len() != err.len() || ndof.len() < 2 {
        return Err(Error::RateUndefined);
    }
    if ndof.iter().chain(err).any(|&v| !(v > 0.0)) {
        return Err(Error::RateUndefined);
    }
    Ok((0..ndof.len() - 1)
        .map(|i| -2.0 * math::ln(err[i + 1] / err[i]) / math::ln(ndof[i + 1] / ndof[i]))
        .collect())
}

/// Least-squares slope of `log err` against `log ndof`.
pub fn loglog_slope(ndof: &[f64], err: &[f64]) -> Result<f64> {
    if ndof.len() != err.len() || ndof.len() < 2 || ndof.iter().chain(err).any(|&v| !(v > 0.0)) {
        return Err(Error::RateUndefined);
    }
    let n = ndof.len() as f64;
    let xs: Vec<f64> = ndof.iter().map(|&v| math::ln(v)).collect();
    let ys: Vec<f64> = err.iter().map(|&v| math::ln(v)).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::RateUndefined);
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    Ok(sxy / sxx)
}
