//! The `stokeslab` binary end to end.

use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

use stokeslab::manifest::Manifest;

fn stokeslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stokeslab")).args(args).env("STOKESLAB_THREADS", "2").output().unwrap()
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn study(out: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["study", "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    stokeslab(&args)
}

#[test]
fn uniform_study_writes_one_row_per_level() {
    let dir = tempfile::tempdir().unwrap();
    let o = study(dir.path(), &["--problem", "smooth", "--pair", "th2", "--mode", "classical", "--nu", "1e-3", "--refine", "uniform", "--levels", "5"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let manifest: Manifest = serde_json::from_str(&read(&dir.path().join("manifest.json"))).unwrap();
    assert_eq!(manifest.runs.len(), 1);
    assert_eq!(manifest.csv_header, stokeslab::csv::HEADER);
    let run = &manifest.runs[0];
    assert_eq!((run.config.pair.as_str(), run.config.mode.as_str(), run.levels), ("TH2", "classical", 5));

    let csv = read(&dir.path().join(&run.csv));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(stokeslab::csv::HEADER));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 5);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r.len(), 15);
        assert_eq!(r[0], i as f64);
        // efficiency columns are the ratio of the logged columns
        assert!((r[12] - r[3] / r[2]).abs() <= 1e-12 * r[12]);
        assert!((r[13] - r[4] / r[2]).abs() <= 1e-12 * r[13]);
    }
    assert!(rows.windows(2).all(|w| w[1][1] > w[0][1] && w[1][2] < w[0][2]));
}

#[test]
fn viscosity_sweep_on_a_fixed_mesh() {
    let dir = tempfile::tempdir().unwrap();
    let o = study(dir.path(), &["--problem", "smooth", "--pair", "p2b", "--mode", "robust", "--nu", "1,1e-2,1e-4", "--fixed-mesh-ndof", "1100"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let manifest: Manifest = serde_json::from_str(&read(&dir.path().join("manifest.json"))).unwrap();
    assert_eq!(manifest.runs.len(), 3);
    let errs: Vec<f64> = manifest
        .runs
        .iter()
        .map(|r| {
            assert_eq!(r.levels, 1);
            let csv = read(&dir.path().join(&r.csv));
            csv.lines().nth(1).unwrap().split(',').nth(2).unwrap().parse().unwrap()
        })
        .collect();
    for e in &errs {
        assert!((e / errs[0] - 1.0).abs() < 1e-6, "{errs:?}");
    }
}

#[test]
fn reruns_without_timings_are_byte_identical() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let o = study(
            dir.path(),
            &["--problem", "lshape", "--pair", "p2p0", "--mode", "robust", "--nu", "1e-2", "--refine", "adaptive", "--levels", "4", "--no-timings", "--dump-mesh"],
        );
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let manifest: Manifest = serde_json::from_str(&read(&dir.path().join("manifest.json"))).unwrap();
        let run = &manifest.runs[0];
        assert_eq!(run.mesh_dumps.len(), 4);
        let dump: serde_json::Value = serde_json::from_str(&read(&dir.path().join(&run.mesh_dumps[3]))).unwrap();
        assert_eq!(dump["cells"].as_array().unwrap().len(), dump["mu_new"].as_array().unwrap().len());
        read(&dir.path().join(&run.csv))
    };
    assert_eq!(run(), run());
}

#[test]
fn bad_flags_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["--problem", "smooth", "--pair", "q3", "--nu", "1"][..],
        &["--problem", "smooth", "--pair", "th2", "--nu", "zero"],
        &["--problem", "smooth", "--pair", "th2", "--nu", "1", "--max-ndof", "lots"],
        // no reconstruction is available for continuous pressures
        &["--problem", "smooth", "--pair", "th2", "--mode", "robust", "--nu", "1"],
        &["--problem", "smooth", "--pair", "th2", "--nu", "1", "--marking-fraction", "1.5"],
        &["--problem", "smooth", "--pair", "th2", "--nu", "1", "--quad-degree", "40"],
    ] {
        let o = study(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    assert!(!dir.path().join("manifest.json").exists());
}

#[test]
fn quick_verify_passes_within_a_minute() {
    let start = Instant::now();
    let o = stokeslab(&["verify", "--quick"]);
    let elapsed = start.elapsed().as_secs_f64();
    let table = String::from_utf8_lossy(&o.stdout);
    assert!(o.status.success(), "{table}");
    assert!(table.lines().filter(|l| l.starts_with("PASS")).count() >= 8, "{table}");
    assert!(elapsed < 60.0, "{elapsed} s");
}
