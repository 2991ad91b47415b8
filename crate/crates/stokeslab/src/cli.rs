//! Command-line interface.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stokeslab_core::{ElementPair, EstimatorKind, ProblemId, RefineMode, StudyConfig};

use crate::error::Error;
use crate::study::{self, Batch};
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "stokeslab", version, about = "Classical and pressure-robust Stokes discretizations with a posteriori error control")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run convergence or adaptive studies and write CSV logs.
    Study(StudyArgs),
    /// Run the internal property suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Classical,
    Robust,
}

#[derive(Debug, Args)]
pub struct StudyArgs {
    /// smooth, lshape or hydrostatic.
    #[arg(long, value_parser = parse_with::<ProblemId>)]
    pub problem: ProblemId,
    /// th2, mini, p2p0 or p2b.
    #[arg(long, value_parser = parse_with::<ElementPair>)]
    pub pair: ElementPair,
    /// Comma-separated; every mode is run for every viscosity.
    #[arg(long, value_delimiter = ',', default_value = "classical")]
    pub mode: Vec<Mode>,
    /// Indicator that drives marking: class or new. Defaults to new for
    /// robust runs and class otherwise.
    #[arg(long, value_parser = parse_with::<EstimatorKind>)]
    pub estimator: Option<EstimatorKind>,
    /// Comma-separated viscosities.
    #[arg(long, value_delimiter = ',', required = true, value_parser = parse_positive)]
    pub nu: Vec<f64>,
    #[arg(long, default_value = "uniform", value_parser = parse_with::<RefineMode>)]
    pub refine: RefineMode,
    #[arg(long, conflicts_with = "fixed_mesh_ndof")]
    pub levels: Option<usize>,
    /// Stop before a level would exceed this many DOFs; accepts 2e5.
    #[arg(long, value_parser = parse_count)]
    pub max_ndof: Option<usize>,
    /// Solve once on the structured mesh whose DOF count is closest.
    #[arg(long, value_parser = parse_count, conflicts_with = "subdivisions")]
    pub fixed_mesh_ndof: Option<usize>,
    /// Subdivisions of the initial structured mesh.
    #[arg(long)]
    pub subdivisions: Option<usize>,
    #[arg(long, default_value_t = 0.25)]
    pub marking_fraction: f64,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// Recorded in the manifest; studies themselves are deterministic.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = stokeslab_core::estimators::QUAD_DEGREE)]
    pub quad_degree: usize,
    /// Write the mesh and cell indicators of every level as JSON.
    #[arg(long)]
    pub dump_mesh: bool,
    /// Write zero in the seconds column so that reruns are byte-identical.
    #[arg(long)]
    pub no_timings: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Fewer random fields and refinement levels.
    #[arg(long)]
    pub quick: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_with<T: FromStr>(s: &str) -> Result<T, String> {
    s.parse().map_err(|_| format!("unknown value '{s}'"))
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("'{s}' is not a positive number")),
    }
}

/// A non-negative integer, also written in exponent form such as `2e5`.
fn parse_count(s: &str) -> Result<usize, String> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.fract() == 0.0 && v < 1e15 => Ok(v as usize),
        _ => Err(format!("'{s}' is not a whole number")),
    }
}

impl StudyArgs {
    pub fn configs(&self) -> Result<Vec<StudyConfig>, Error> {
        let mut out = Vec::new();
        let mut modes = self.mode.clone();
        modes.dedup();
        for &nu in &self.nu {
            for &mode in &modes {
                let robust = mode == Mode::Robust;
                let mut c = StudyConfig::new(self.problem, nu, self.pair, robust);
                if let Some(e) = self.estimator {
                    c.estimator = e;
                }
                c.refine = self.refine;
                c.marking_fraction = self.marking_fraction;
                c.quad_degree = self.quad_degree;
                c.initial_subdivisions = self.subdivisions;
                if let Some(l) = self.levels {
                    c.max_levels = l;
                }
                if let Some(m) = self.max_ndof {
                    c.max_ndof = m;
                }
                if let Some(target) = self.fixed_mesh_ndof {
                    let domain = self.problem.spec(nu).domain();
                    let n = stokeslab_core::adapt::subdivisions_for_ndof(domain, self.pair, target).map_err(Error::Config)?;
                    c.initial_subdivisions = Some(n);
                    c.max_levels = 1;
                }
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        Ok(out)
    }
}

fn study(args: &StudyArgs) -> Result<ExitCode, Error> {
    let batch = Batch {
        configs: args.configs()?,
        out: args.out.clone(),
        seed: args.seed,
        timings: !args.no_timings,
        dump_mesh: args.dump_mesh,
        threads: study::threads_from_env(),
    };
    let outcome = study::run_batch(&batch, &|log| {
        let last = log.records.last();
        eprintln!(
            "{}: {} levels, ndof {}, err {:.3e}{}",
            study::file_stem(&log.config),
            log.records.len(),
            last.map_or(0, |r| r.ndof),
            last.map_or(f64::NAN, |r| r.err_h1),
            log.failure.as_ref().map_or(String::new(), |e| format!(" (stopped: {e})")),
        );
    })?;
    let failed = outcome.failed();
    if failed > 0 {
        return Err(Error::RunsFailed { failed, total: outcome.logs.len() });
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: &VerifyArgs) -> ExitCode {
    let checks = verify::run_suite(args.quick, args.seed);
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &checks {
        println!("{:<4}  {:<width$}  {:>7.2}s  {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.seconds, c.detail);
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("{} of {} checks passed", checks.len() - failed, checks.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}

/// Parses `args` and runs the command. Usage errors exit with 2.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match &cli.command {
        Command::Verify(v) => verify(v),
        Command::Study(s) => study(s).unwrap_or_else(|e| {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn study_args(extra: &[&str]) -> StudyArgs {
        let mut argv = vec!["stokeslab", "study", "--problem", "smooth", "--pair", "p2b"];
        argv.extend_from_slice(extra);
        match Cli::try_parse_from(argv).unwrap().command {
            Command::Study(s) => s,
            _ => unreachable!(),
        }
    }

    #[test]
    fn counts_accept_exponent_notation() {
        assert_eq!(parse_count("2e5"), Ok(200_000));
        assert_eq!(parse_count("1100"), Ok(1100));
        assert!(parse_count("2.5").is_err());
        assert!(parse_count("-1").is_err());
    }

    #[test]
    fn viscosities_and_modes_form_a_cross_product() {
        let a = study_args(&["--nu", "1,1e-3", "--mode", "classical,robust"]);
        let c = a.configs().unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.iter().filter(|c| c.robust).count(), 2);
        assert_eq!(c[1].estimator, EstimatorKind::New);
    }

    #[test]
    fn fixed_mesh_means_a_single_level() {
        let c = study_args(&["--nu", "1", "--fixed-mesh-ndof", "1100"]).configs().unwrap();
        assert_eq!(c[0].max_levels, 1);
        assert!(c[0].initial_subdivisions.is_some());
    }

    #[test]
    fn bad_values_are_usage_errors() {
        for argv in [
            vec!["stokeslab", "study", "--problem", "cube", "--pair", "p2b", "--nu", "1"],
            vec!["stokeslab", "study", "--problem", "smooth", "--pair", "p2b", "--nu", "-1"],
            vec!["stokeslab", "study", "--problem", "smooth", "--pair", "p2b", "--nu", "1", "--levels", "3", "--fixed-mesh-ndof", "10"],
        ] {
            let e = Cli::try_parse_from(argv).unwrap_err();
            assert_eq!(e.exit_code(), 2);
        }
    }
}
