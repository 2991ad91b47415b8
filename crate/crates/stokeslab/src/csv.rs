//! Study logs as CSV, one row per level.
//!
//! Floats carry 17 significant digits so that they read back bit for bit.
//! `eta_cons1` holds the consistency term of `eta_new`, which coincides with
//! the classical one for pressure-robust runs and is the extra classical
//! consistency bound otherwise (where the classical `eta_cons1` vanishes).

use std::io::{self, Write};

use stokeslab_core::{LevelRecord, StudyLog};

/// Bumped whenever a column changes meaning or position.
pub const SCHEMA_VERSION: u32 = 1;

pub const HEADER: &str = "level,ndof,err_h1,mu_class,mu_new,eta_vol,eta_curl,eta_jump,eta_jump2,eta_cons1,eta_cons2,div_norm,eff_class,eff_new,seconds";

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn row(r: &LevelRecord, timings: bool) -> String {
    let t = &r.totals;
    let fields = [
        r.err_h1,
        r.mu_class,
        r.mu_new,
        t.eta_vol,
        t.eta_curl,
        t.eta_jump,
        t.eta_jump2,
        t.eta_cons_new,
        t.eta_cons2,
        t.div_norm,
        r.eff_class,
        r.eff_new,
        if timings { r.seconds } else { 0.0 },
    ];
    let mut s = format!("{},{}", r.level, r.ndof);
    for v in fields {
        s.push(',');
        s.push_str(&num(v));
    }
    s
}

/// Writes the header and every record. With `timings` off the `seconds`
/// column is zero and the file depends on the configuration only.
pub fn write_log(w: &mut impl Write, log: &StudyLog, timings: bool) -> io::Result<()> {
    writeln!(w, "{HEADER}")?;
    for r in &log.records {
        writeln!(w, "{}", row(r, timings))?;
    }
    Ok(())
}
