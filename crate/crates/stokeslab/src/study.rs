//! Runs a batch of study configurations and writes their CSVs, mesh dumps
//! and the manifest into one directory.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use stokeslab_core::adapt::run_study_with;
use stokeslab_core::{StudyConfig, StudyLog};

use crate::error::{Error, Result};
use crate::manifest::{self, Manifest, RunConfig, RunEntry};
use crate::meshio::MeshDump;

/// Environment variable that caps the number of concurrent runs.
pub const THREADS_VAR: &str = "STOKESLAB_THREADS";

#[derive(Debug, Clone)]
pub struct Batch {
    pub configs: Vec<StudyConfig>,
    pub out: PathBuf,
    pub seed: u64,
    /// Write wall-clock seconds; off gives byte-identical CSVs across runs.
    pub timings: bool,
    pub dump_mesh: bool,
    pub threads: Option<usize>,
}

pub struct Outcome {
    pub manifest: Manifest,
    pub logs: Vec<StudyLog>,
}

impl Outcome {
    pub fn failed(&self) -> usize {
        self.logs.iter().filter(|l| l.failure.is_some()).count()
    }
}

/// `STOKESLAB_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_VAR).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

fn format_nu(nu: f64) -> String {
    // 1e-3 rather than 0.001; 2.5e-1 stays readable too
    format!("{nu:e}")
}

/// File stem identifying a configuration, e.g. `lshape_p2p0_robust_adaptive-new_nu1e-3`.
pub fn file_stem(c: &StudyConfig) -> String {
    let mode = if c.robust { "robust" } else { "classical" };
    let refine = match c.refine {
        stokeslab_core::RefineMode::Uniform => "uniform".to_string(),
        stokeslab_core::RefineMode::Adaptive => format!("adaptive-{}", c.estimator.name()),
    };
    let mut stem = format!("{}_{}_{mode}_{refine}_nu{}", c.problem.name(), c.pair.name(), format_nu(c.nu));
    if let Some(n) = c.initial_subdivisions {
        stem.push_str(&format!("_n{n}"));
    }
    stem.to_ascii_lowercase()
}

fn unix_now() -> f64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0.0, |d| d.as_secs_f64())
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<()> {
    let file = fs::File::create(path).map_err(Error::io(path))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n").and_then(|_| w.flush()).map_err(Error::io(path))
}

fn run_one(config: &StudyConfig, batch: &Batch) -> Result<(StudyLog, RunEntry)> {
    let stem = file_stem(config);
    let start = Instant::now();
    let mut dumps = Vec::new();
    let mut dump_error = None;
    let clock = || start.elapsed().as_secs_f64();
    let log = run_study_with(config, &clock, &mut |s| {
        if !batch.dump_mesh || dump_error.is_some() {
            return;
        }
        let name = format!("{stem}_level{:02}.json", s.record.level);
        match write_json(&batch.out.join(&name), &MeshDump::from_level(s)) {
            Ok(()) => dumps.push(name),
            Err(e) => dump_error = Some(e),
        }
    })?;
    if let Some(e) = dump_error {
        return Err(e);
    }

    let csv_name = format!("{stem}.csv");
    let path = batch.out.join(&csv_name);
    let file = fs::File::create(&path).map_err(Error::io(&path))?;
    let mut w = BufWriter::new(file);
    crate::csv::write_log(&mut w, &log, batch.timings).and_then(|_| w.flush()).map_err(Error::io(&path))?;

    let entry = RunEntry {
        config: RunConfig::from(config),
        csv: csv_name,
        levels: log.records.len(),
        final_ndof: log.records.last().map(|r| r.ndof),
        mesh_dumps: dumps,
        failure: log.failure.as_ref().map(ToString::to_string),
        seconds: if batch.timings { start.elapsed().as_secs_f64() } else { 0.0 },
    };
    Ok((log, entry))
}

/// Validates every configuration, runs them in parallel and writes the
/// manifest last. A run whose solver fails still leaves its partial CSV.
pub fn run_batch(batch: &Batch, progress: &(dyn Fn(&StudyLog) + Sync)) -> Result<Outcome> {
    for c in &batch.configs {
        c.validate().map_err(Error::Config)?;
    }
    fs::create_dir_all(&batch.out).map_err(Error::io(&batch.out))?;

    let threads = batch.threads.unwrap_or_else(rayon::current_num_threads);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    let started = unix_now();
    let results: Vec<Result<(StudyLog, RunEntry)>> = pool.install(|| {
        batch
            .configs
            .par_iter()
            .map(|c| {
                let r = run_one(c, batch);
                if let Ok((log, _)) = &r {
                    progress(log);
                }
                r
            })
            .collect()
    });

    let mut logs = Vec::with_capacity(results.len());
    let mut runs = Vec::with_capacity(results.len());
    for r in results {
        let (log, entry) = r?;
        logs.push(log);
        runs.push(entry);
    }
    let manifest = Manifest {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        csv_schema: crate::csv::SCHEMA_VERSION,
        csv_header: crate::csv::HEADER.into(),
        ndof_convention: manifest::NDOF_CONVENTION.into(),
        seed: batch.seed,
        threads,
        started,
        finished: unix_now(),
        runs,
    };
    write_json(&batch.out.join(manifest::FILE_NAME), &manifest)?;
    Ok(Outcome { manifest, logs })
}
