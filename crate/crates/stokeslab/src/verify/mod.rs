//! Property suite behind `stokeslab verify`.
//!
//! Every check is deterministic for a given seed and reports its worst
//! observed value next to the threshold it is held to.

pub mod contract;
pub mod oracle;
pub mod quad;

use std::time::Instant;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stokeslab_core::fe::Space;
use stokeslab_core::mesh::{build_unit_square, Mesh};
use stokeslab_core::problems::Potential;
use stokeslab_core::quadrature::{edge_rule, triangle_rule, MAX_DEGREE};
use stokeslab_core::{
    assemble, estimate, exact_error, solve_saddle, DiscreteField, DofLayout, ElementPair, EstimatorReport, ProblemSpec, ReconstructionOp,
};

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

/// Signature of [`stokeslab_core::estimate`], so that checks can be run
/// against a substitute.
pub type EstimateFn =
    fn(&Mesh, &ProblemSpec, &DofLayout, &DiscreteField, &DiscreteField, &ReconstructionOp, usize) -> stokeslab_core::Result<EstimatorReport>;

fn timed(name: &'static str, f: impl FnOnce() -> Result<(bool, String), stokeslab_core::Error>) -> Check {
    let start = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    Check { name, passed, detail, seconds: start.elapsed().as_secs_f64() }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Every shipped rule against exact monomial integrals.
pub fn quadrature_exactness() -> Check {
    timed("quadrature exactness", || {
        let mut worst = 0.0f64;
        for degree in 1..=MAX_DEGREE {
            let tri = triangle_rule(degree)?;
            let edge = edge_rule(degree)?;
            for a in 0..=degree as u32 {
                for b in 0..=degree as u32 - a {
                    // ∫ x^a y^b over the reference triangle = a! b! / (a+b+2)!
                    let exact = factorial(a) * factorial(b) / factorial(a + b + 2);
                    let q: f64 = tri.iter().map(|([x, y], w)| w * x.powi(a as i32) * y.powi(b as i32)).sum();
                    worst = worst.max((q - exact).abs() / exact);
                }
                let exact = 1.0 / f64::from(a + 1);
                let q: f64 = edge.iter().map(|([s, _], w)| w * s.powi(a as i32)).sum();
                worst = worst.max((q - exact).abs() / exact);
            }
        }
        Ok((worst <= 1e-13, format!("worst relative error {worst:.1e} (limit 1e-13)")))
    })
}

/// Partition of unity of the Lagrange spaces and analytic gradients against
/// central differences at random reference points.
pub fn basis_functions(seed: u64) -> Check {
    timed("basis partition of unity and gradients", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points: Vec<[f64; 2]> = (0..10)
            .map(|_| {
                let (a, b): (f64, f64) = (rng.random_range(0.0..1.0), rng.random_range(0.0..1.0));
                if a + b < 1.0 { [a, b] } else { [1.0 - a, 1.0 - b] }
            })
            .collect();
        let (mut unity, mut grad) = (0.0f64, 0.0f64);
        let h = 1e-6;
        for space in Space::ALL {
            for &[x, y] in &points {
                let s = space.eval(x, y);
                if matches!(space, Space::P0 | Space::P1 | Space::P2) {
                    unity = unity.max((s.values[..s.len].iter().sum::<f64>() - 1.0).abs());
                }
                let (px, mx, py, my) = (space.eval(x + h, y), space.eval(x - h, y), space.eval(x, y + h), space.eval(x, y - h));
                for i in 0..s.len {
                    let fd = [(px.values[i] - mx.values[i]) / (2.0 * h), (py.values[i] - my.values[i]) / (2.0 * h)];
                    grad = grad.max((fd[0] - s.grads[i][0]).abs()).max((fd[1] - s.grads[i][1]).abs());
                }
            }
        }
        Ok((unity < 1e-14 && grad < 1e-6, format!("unity defect {unity:.1e} (limit 1e-14), gradient gap {grad:.1e} (limit 1e-6)")))
    })
}

/// Divergence-free image and moment preservation of the reconstruction on
/// `fields` random discretely divergence-free fields per mesh and pair.
pub fn reconstruction_contract(fields: u64, seed: u64) -> Check {
    timed("reconstruction div-free and moments", || {
        let mut worst = contract::Contract::ZERO;
        for pair in [ElementPair::P2P0, ElementPair::P2B] {
            worst = worst.max(contract::sweep(pair, fields, seed)?);
        }
        let ok = worst.kernel <= 1e-12 && worst.div <= 1e-10 && worst.edge_moments <= 1e-12 && worst.cell_moments <= 1e-12;
        Ok((
            ok,
            format!(
                "{fields} fields per mesh: |div Pi v| {:.1e} (1e-10), edge moments {:.1e}, cell moments {:.1e} (1e-12)",
                worst.div, worst.edge_moments, worst.cell_moments
            ),
        ))
    })
}

/// `||v - Pi v||_T <= C h_T ||grad v||_T` with `C < 5` per cell, and an
/// aggregate constant that does not grow under refinement.
pub fn reconstruction_closeness(levels: &[usize]) -> Check {
    timed("reconstruction first-order closeness", || {
        let mut ok = true;
        let mut detail = Vec::new();
        for pair in [ElementPair::P2P0, ElementPair::P2B] {
            let c = contract::closeness(pair, levels)?;
            let k = c.aggregate.len();
            ok &= c.per_cell.iter().all(|&v| v < 5.0) && c.aggregate[k - 1] <= 1.1 * c.aggregate[k - 2].max(c.aggregate[0]);
            let max = c.per_cell.iter().fold(0.0f64, |m, &v| m.max(v));
            detail.push(format!("{pair}: C <= {max:.3}, aggregate {:.3} -> {:.3}", c.aggregate[0], c.aggregate[k - 1]));
        }
        Ok((ok, detail.join("; ")))
    })
}

fn grad_norm(problem: &ProblemSpec, pair: ElementPair, mesh: &Mesh, robust: bool) -> stokeslab_core::Result<f64> {
    let op = ReconstructionOp::for_mode(pair, robust)?;
    let sol = solve_saddle(&assemble(problem, pair, mesh, &op)?)?;
    let layout = DofLayout::new(pair, mesh);
    let u = DiscreteField::velocity(&layout, sol.velocity)?;
    Ok(exact_error(mesh, problem, &layout, &u, 10)?.0)
}

/// Gradient forces leave the pressure-robust velocity at rest, while the
/// classical velocity grows like `1 / nu`.
pub fn hydrostatic_invariance() -> Check {
    timed("hydrostatic invariance", || {
        let mesh = build_unit_square(4)?;
        let (mut robust, mut ratio_gap) = (0.0f64, 0.0f64);
        for pair in [ElementPair::P2P0, ElementPair::P2B] {
            for nu in [1.0, 1e-3, 1e-6] {
                robust = robust.max(grad_norm(&ProblemSpec::hydrostatic(nu, Potential::QUINTIC), pair, &mesh, true)?);
            }
            let c3 = grad_norm(&ProblemSpec::hydrostatic(1e-3, Potential::QUINTIC), pair, &mesh, false)?;
            let c4 = grad_norm(&ProblemSpec::hydrostatic(1e-4, Potential::QUINTIC), pair, &mesh, false)?;
            ratio_gap = ratio_gap.max((c4 / c3 / 10.0 - 1.0).abs());
        }
        Ok((robust < 1e-9 && ratio_gap < 0.02, format!("robust ||grad u_h|| {robust:.1e} (1e-9), classical decade ratio off by {:.2}%", 100.0 * ratio_gap)))
    })
}

/// Estimator terms against the dense-quadrature oracle.
pub fn estimator_oracles(seed: u64) -> Check {
    timed("estimator term oracles", || {
        let mut worst = oracle::Deviation { worst: 0.0, at: String::new(), compared: 0 };
        let mut compared = 0;
        for pair in ElementPair::ALL {
            for nu in [0.37, 1e-3] {
                let d = oracle::estimator_terms(pair, nu, seed)?;
                compared += d.compared;
                if d.worst >= worst.worst {
                    worst = d;
                }
            }
        }
        Ok((worst.worst <= 1e-12, format!("{compared} values, worst relative gap {:.1e} at {} (1e-12)", worst.worst, worst.at)))
    })
}

/// `A` is symmetric for every pair, with and without reconstruction.
pub fn symmetry() -> Check {
    timed("stiffness symmetry", || {
        let mesh = build_unit_square(3)?;
        let mut worst = 0.0f64;
        for pair in ElementPair::ALL {
            let sys = assemble(&ProblemSpec::smooth(1.0), pair, &mesh, &ReconstructionOp::identity(pair))?;
            for i in 0..sys.a.nrows() {
                let (cols, vals) = sys.a.row(i);
                for (&j, &v) in cols.iter().zip(vals) {
                    worst = worst.max((v - sys.a.get(j, i)).abs());
                }
            }
        }
        Ok((worst < 1e-13, format!("max |A - A^T| {worst:.1e} (1e-13)")))
    })
}

/// Efficiency indices of `estimator` on uniformly refined meshes: each must
/// lie in `[1, 100]` and they may not drift apart by more than a factor 1.5.
pub fn reliability(estimator: EstimateFn) -> Check {
    timed("estimator reliability and efficiency", || {
        let mut indices = Vec::new();
        for (pair, robust) in [(ElementPair::Th2, false), (ElementPair::P2B, true)] {
            let problem = ProblemSpec::smooth(1.0);
            let op = ReconstructionOp::for_mode(pair, robust)?;
            let mut run = Vec::new();
            for n in [4, 8, 16] {
                let mesh = build_unit_square(n)?;
                let sol = solve_saddle(&assemble(&problem, pair, &mesh, &op)?)?;
                let layout = DofLayout::new(pair, &mesh);
                let u = DiscreteField::velocity(&layout, sol.velocity)?;
                let p = DiscreteField::pressure(&layout, sol.pressure)?;
                let report = estimator(&mesh, &problem, &layout, &u, &p, &op, 10)?;
                let err = exact_error(&mesh, &problem, &layout, &u, 10)?.0;
                run.push(if robust { report.mu_new() } else { report.mu_class() } / err);
            }
            indices.push((pair, run));
        }
        let ok = indices.iter().all(|(_, r)| {
            let (lo, hi) = r.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &v| (lo.min(v), hi.max(v)));
            lo >= 1.0 && hi <= 100.0 && hi <= 1.5 * lo
        });
        let detail = indices
            .iter()
            .map(|(pair, r)| format!("{pair}: {}", r.iter().map(|v| format!("{v:.2}")).collect::<Vec<_>>().join(" ")))
            .collect::<Vec<_>>()
            .join("; ");
        Ok((ok, detail))
    })
}

/// The whole suite; `quick` trims the random sweeps.
pub fn run_suite(quick: bool, seed: u64) -> Vec<Check> {
    let (fields, levels): (u64, &[usize]) = if quick { (5, &[2, 4, 8]) } else { (50, &[2, 4, 8, 16]) };
    vec![
        quadrature_exactness(),
        basis_functions(seed),
        symmetry(),
        reconstruction_contract(fields, seed),
        reconstruction_closeness(levels),
        hydrostatic_invariance(),
        estimator_oracles(seed),
        reliability(estimate),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), 1.0);
        assert_eq!(factorial(5), 120.0);
    }

    #[test]
    fn fast_checks_pass() {
        for c in [quadrature_exactness(), basis_functions(3), symmetry()] {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
