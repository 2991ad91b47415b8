//! Direct solver for the Stokes saddle-point system with a zero-mean
//! pressure constraint.
//!
//! Dirichlet unknowns are eliminated, the remaining system
//!
//! ```text
//! [ A   B^T  0 ] [u]   [b]
//! [ B   0    m ] [p] = [g]
//! [ 0   m^T  0 ] [l]   [0]
//! ```
//!
//! is reduced by computing the multiplier from the summed pressure rows and
//! pinning one pressure. The reduced matrix is scaled symmetrically, its
//! pressure block is shifted by `-delta` to make it quasi-definite, and the
//! `L D L^T` factors of the shifted matrix drive iterative refinement on the
//! exact reduced system. The residual is reported for the full system.

mod ldl;

use alloc::vec;
use alloc::vec::Vec;

pub use ldl::Ldl;

use crate::assembly::StokesSystem;
use crate::error::{Error, Result};
use crate::math;
use crate::sparse::Triplets;

/// Relative residual every solve must reach.
pub const RESIDUAL_TOL: f64 = 1e-10;

/// Pressure-block shift in scaled units.
const DELTA: f64 = 1e-8;
const MAX_REFINEMENTS: usize = 40;

/// Velocity (Dirichlet values included) and pressure coefficients.
#[derive(Debug, Clone)]
pub struct Solution {
    pub velocity: Vec<f64>,
    pub pressure: Vec<f64>,
    /// Lagrange multiplier of the mean constraint.
    pub multiplier: f64,
    /// `||K x - rhs|| / ||rhs||` of the full bordered system.
    pub residual: f64,
    /// `max |d| / min |d|` of the `L D L^T` factor.
    pub pivot_ratio: f64,
    pub refinement_steps: usize,
}

fn norm(v: &[f64]) -> f64 {
    math::sqrt(v.iter().map(|x| x * x).sum())
}

/// Solves the assembled system; fails if the residual contract is missed.
pub fn solve_saddle(sys: &StokesSystem) -> Result<Solution> {
    let nv = sys.a.nrows();
    let np = sys.b.nrows();
    let nu = sys.nu;

    // unknown numbering: free velocities, pressures, multiplier
    let mut vmap = vec![usize::MAX; nv];
    let mut free = Vec::new();
    for (i, d) in sys.dirichlet.iter().enumerate() {
        if d.is_none() {
            vmap[i] = free.len();
            free.push(i);
        }
    }
    let nf = free.len();
    let n = nf + np + 1;
    let lam = n - 1;
    let ud: Vec<f64> = sys.dirichlet.iter().map(|d| d.unwrap_or(0.0)).collect();

    // exact bordered matrix with both triangles, and its right-hand side
    let mut rhs = vec![0.0; n];
    let mut t = Triplets::with_capacity(n, n, sys.a.nnz() + 2 * sys.b.nnz() + 2 * np);
    for (r, &i) in free.iter().enumerate() {
        rhs[r] = sys.rhs[i];
        let (cols, vals) = sys.a.row(i);
        for (&j, &v) in cols.iter().zip(vals) {
            match sys.dirichlet[j] {
                None => t.push(r, vmap[j], v),
                Some(g) => rhs[r] -= v * g,
            }
        }
    }
    for p in 0..np {
        let (cols, vals) = sys.b.row(p);
        for (&j, &v) in cols.iter().zip(vals) {
            match sys.dirichlet[j] {
                None => {
                    t.push(nf + p, vmap[j], v);
                    t.push(vmap[j], nf + p, v);
                }
                Some(g) => rhs[nf + p] -= v * g,
            }
        }
        t.push(nf + p, lam, sys.mean[p]);
        t.push(lam, nf + p, sys.mean[p]);
    }
    let k = t.into_csr();

    // The pressure basis sums to one and B^T 1 vanishes on free velocities,
    // so summing the pressure rows gives the multiplier directly. What is
    // left is consistent; one pressure is pinned and the mean fixed after.
    let msum: f64 = sys.mean.iter().sum();
    let multiplier = rhs[nf..lam].iter().sum::<f64>() / msum;
    let pin = nf + np - 1;
    let m = pin;
    let mut rhs_p: Vec<f64> = rhs[..m].to_vec();
    for p in 0..np - 1 {
        rhs_p[nf + p] -= sys.mean[p] * multiplier;
    }
    let mut t = Triplets::with_capacity(m, m, k.nnz());
    for i in 0..m {
        let (cols, vals) = k.row(i);
        for (&j, &v) in cols.iter().zip(vals) {
            if j < m {
                t.push(i, j, v);
            }
        }
    }
    let kp = t.into_csr();

    // symmetric scaling: rows by `rs`, columns by `cs`
    let mut s = vec![1.0; m];
    for r in 0..nf {
        let d = kp.get(r, r);
        s[r] = if d > 0.0 { math::sqrt(nu / d) } else { 1.0 };
    }
    for p in nf..m {
        let (cols, vals) = kp.row(p);
        let mut acc = 0.0;
        for (&j, &v) in cols.iter().zip(vals) {
            if j < nf {
                acc += (v * s[j]) * (v * s[j]);
            }
        }
        s[p] = if acc > 0.0 { 1.0 / math::sqrt(acc) } else { 1.0 };
    }
    let mut rs = s.clone();
    let mut cs = s;
    for r in 0..nf {
        rs[r] /= nu;
    }
    for c in nf..m {
        cs[c] *= nu;
    }

    let mut t = Triplets::with_capacity(m, m, kp.nnz() + np);
    for i in 0..m {
        let (cols, vals) = kp.row(i);
        for (&j, &v) in cols.iter().zip(vals) {
            t.push(i, j, rs[i] * v * cs[j]);
        }
        if i >= nf {
            t.push(i, i, -DELTA);
        }
    }
    let shifted = t.into_csr();

    let ldl = Ldl::factor(&shifted)?;

    let rhs_norm = norm(&rhs_p);
    let mut x = vec![0.0; m];
    let mut r = rhs_p.clone();
    let mut steps = 0;
    let mut best_scaled = f64::INFINITY;
    let scaled_rhs = norm(&rhs_p.iter().zip(&rs).map(|(a, b)| a * b).collect::<Vec<_>>());
    while rhs_norm > 0.0 && steps < MAX_REFINEMENTS {
        let mut dx: Vec<f64> = r.iter().zip(&rs).map(|(a, b)| a * b).collect();
        let scaled = norm(&dx) / scaled_rhs;
        // stop at round-off level or when refinement no longer helps
        if scaled <= 1e-15 || scaled > 0.5 * best_scaled {
            break;
        }
        best_scaled = best_scaled.min(scaled);
        ldl.solve(&mut dx);
        for i in 0..m {
            x[i] += cs[i] * dx[i];
        }
        let kx = kp.mul_vec(&x);
        for i in 0..m {
            r[i] = rhs_p[i] - kx[i];
        }
        steps += 1;
    }

    // back to the bordered unknowns with zero-mean pressure
    let mut full = vec![0.0; n];
    full[..m].copy_from_slice(&x);
    let shift = sys.mean.iter().zip(&full[nf..lam]).map(|(a, b)| a * b).sum::<f64>() / msum;
    for v in &mut full[nf..lam] {
        *v -= shift;
    }
    full[lam] = multiplier;
    let kx = k.mul_vec(&full);
    let full_norm = norm(&rhs);
    let res = if full_norm > 0.0 {
        norm(&rhs.iter().zip(&kx).map(|(a, b)| a - b).collect::<Vec<_>>()) / full_norm
    } else {
        0.0
    };
    if res > RESIDUAL_TOL {
        return Err(Error::NotConverged { residual: res, pivot_ratio: ldl.pivot_ratio() });
    }

    let mut velocity = ud;
    for (r, &i) in free.iter().enumerate() {
        velocity[i] = full[r];
    }
    Ok(Solution {
        velocity,
        pressure: full[nf..lam].to_vec(),
        multiplier,
        residual: res,
        pivot_ratio: ldl.pivot_ratio(),
        refinement_steps: steps,
    })
}
