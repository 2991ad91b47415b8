//! Residual a posteriori estimators.
//!
//! Everything is evaluated with `sigma = grad u_h`. Per-edge quantities are
//! split half and half onto the two adjacent cells, so every global total is
//! the l2 aggregate of its cell values.
//!
//! Classical estimator (`q` continuous, see [`EstimatorReport`]):
//! `eta_class = eta_vol + eta_jump + eta_cons1 + eta_cons2`.
//!
//! Curl-based estimator:
//! `eta_new = eta_curl + eta_jump + eta_jump2 + eta_cons`, where `eta_cons`
//! is `eta_cons1` for pressure-robust methods and the `(f + nu Lap u_h)`
//! consistency bound for classical ones.
//!
//! `mu^2 = nu^-2 eta^2 + ||div u_h||^2` for both.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fe::{DofLayout, PressureSpace};
use crate::field::{p1_on_cell, DiscreteField};
use crate::math::{dense_solve, sqrt};
use crate::mesh::Mesh;
use crate::poly::Poly;
use crate::problems::ProblemSpec;
use crate::quadrature::{edge_rule, triangle_rule, QuadRule};
use crate::reconstruction::ReconstructionOp;

/// Default quadrature degree for estimators and errors.
pub const QUAD_DEGREE: usize = 10;

/// Which estimator drives marking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EstimatorKind {
    Class,
    New,
}

impl EstimatorKind {
    pub fn name(self) -> &'static str {
        match self {
            EstimatorKind::Class => "class",
            EstimatorKind::New => "new",
        }
    }
}

impl core::str::FromStr for EstimatorKind {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s.to_ascii_lowercase().as_str() {
            "class" | "classical" => Ok(EstimatorKind::Class),
            "new" => Ok(EstimatorKind::New),
            _ => Err(()),
        }
    }
}

impl core::fmt::Display for EstimatorKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// l2 totals of the indicator families.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Totals {
    pub eta_vol: f64,
    pub eta_curl: f64,
    pub eta_jump: f64,
    pub eta_jump2: f64,
    pub eta_cons1: f64,
    /// Consistency term entering `eta_new`.
    pub eta_cons_new: f64,
    pub eta_cons2: f64,
    pub div_norm: f64,
}

/// Per-cell indicators, per-edge jumps and their totals.
///
/// For discontinuous pressures the volume residual uses the nodal average
/// `q` of `p_h`; classical methods then charge the distance of `q` to the
/// discrete pressure space as `eta_cons2`. Continuous pressures use
/// `q = p_h`.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimatorReport {
    pub nu: f64,
    pub vol: Vec<f64>,
    pub curl: Vec<f64>,
    pub jump: Vec<f64>,
    pub jump2: Vec<f64>,
    pub cons1: Vec<f64>,
    pub cons_new: Vec<f64>,
    pub cons2: Vec<f64>,
    pub div: Vec<f64>,
    /// Edge values; zero on boundary edges.
    pub jump_edge: Vec<f64>,
    pub jump2_edge: Vec<f64>,
    pub totals: Totals,
}

fn l2(v: &[f64]) -> f64 {
    sqrt(v.iter().map(|x| x * x).sum())
}

impl EstimatorReport {
    pub fn num_cells(&self) -> usize {
        self.vol.len()
    }

    pub fn eta_class(&self) -> f64 {
        let t = &self.totals;
        t.eta_vol + t.eta_jump + t.eta_cons1 + t.eta_cons2
    }

    pub fn eta_new(&self) -> f64 {
        let t = &self.totals;
        t.eta_curl + t.eta_jump + t.eta_jump2 + t.eta_cons_new
    }

    pub fn mu_class(&self) -> f64 {
        self.mu(self.eta_class())
    }

    pub fn mu_new(&self) -> f64 {
        self.mu(self.eta_new())
    }

    pub fn mu_total(&self, kind: EstimatorKind) -> f64 {
        match kind {
            EstimatorKind::Class => self.mu_class(),
            EstimatorKind::New => self.mu_new(),
        }
    }

    fn mu(&self, eta: f64) -> f64 {
        sqrt(eta * eta / (self.nu * self.nu) + self.totals.div_norm * self.totals.div_norm)
    }

    /// Cell indicators `mu(T)`, the local terms combined in l2.
    pub fn mu_cells(&self, kind: EstimatorKind) -> Vec<f64> {
        let nu2 = self.nu * self.nu;
        (0..self.num_cells())
            .map(|t| {
                let eta2 = match kind {
                    EstimatorKind::Class => {
                        self.vol[t] * self.vol[t]
                            + self.jump[t] * self.jump[t]
                            + self.cons1[t] * self.cons1[t]
                            + self.cons2[t] * self.cons2[t]
                    }
                    EstimatorKind::New => {
                        self.curl[t] * self.curl[t]
                            + self.jump[t] * self.jump[t]
                            + self.jump2[t] * self.jump2[t]
                            + self.cons_new[t] * self.cons_new[t]
                    }
                };
                sqrt(eta2 / nu2 + self.div[t] * self.div[t])
            })
            .collect()
    }
}

/// Squared `L^2(T)` norm of `(1 - pi_d) g` for a scalar `g` given at the
/// points of `rule`, `pi_d` the projection onto `P_d(T)`; `None` skips the
/// projection.
fn defect_sq(vals: &[f64], rule: &QuadRule, det: f64, d: Option<usize>) -> f64 {
    let Some(d) = d else {
        return vals.iter().zip(rule.iter()).map(|(v, (_, w))| w * det * v * v).sum();
    };
    let mono: Vec<(usize, usize)> = (0..=d).flat_map(|k| (0..=k).map(move |i| (i, k - i))).collect();
    let n = mono.len();
    let eval = |x: [f64; 2]| -> Vec<f64> { mono.iter().map(|&(i, j)| Poly::monomial(i, j, 1.0).eval(x[0], x[1])).collect() };
    let mut mass = vec![0.0; n * n];
    let mut rhs = vec![0.0; n];
    for (q, (x, w)) in rule.iter().enumerate() {
        let b = eval(x);
        for i in 0..n {
            rhs[i] += w * b[i] * vals[q];
            for j in 0..n {
                mass[i * n + j] += w * b[i] * b[j];
            }
        }
    }
    assert!(dense_solve(&mut mass, &mut rhs, n, 1), "monomial mass matrix is regular");
    rule.iter()
        .enumerate()
        .map(|(q, (x, w))| {
            let b = eval(x);
            let r = vals[q] - b.iter().zip(&rhs).map(|(a, c)| a * c).sum::<f64>();
            w * det * r * r
        })
        .sum()
}

/// `osc_k(g)^2 = sum_T h_T^2 ||(1 - pi_k) g||^2`, returned as its square root.
pub fn oscillation(mesh: &Mesh, g: &dyn Fn([f64; 2]) -> [f64; 2], k: usize, quad_degree: usize) -> Result<f64> {
    let rule = triangle_rule(quad_degree)?;
    let mut acc = 0.0;
    for t in 0..mesh.num_cells() {
        let geo = mesh.geometry(t);
        let h = mesh.diameter(t);
        let vals: Vec<[f64; 2]> = rule.iter().map(|([xi, eta], _)| g(geo.to_physical(xi, eta))).collect();
        for c in 0..2 {
            let comp: Vec<f64> = vals.iter().map(|v| v[c]).collect();
            acc += h * h * defect_sq(&comp, &rule, geo.det, Some(k));
        }
    }
    Ok(sqrt(acc))
}

/// Halvings toward a singular vertex in [`exact_error`].
const SINGULAR_LEVELS: usize = 40;

/// `rule` on the reference cell, composed over a mesh graded toward local
/// vertex `corner`: the corner child of a red refinement is split again,
/// the other three children take the rule as is.
fn graded_points(rule: &QuadRule, corner: usize) -> Vec<([f64; 2], f64)> {
    let verts = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
    let mid = |a: [f64; 2], b: [f64; 2]| [0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])];
    let mut tri = [verts[corner], verts[(corner + 1) % 3], verts[(corner + 2) % 3]];
    let mut out = Vec::with_capacity(3 * SINGULAR_LEVELS * rule.len() + rule.len());
    let mut push = |t: [[f64; 2]; 3]| {
        let e1 = [t[1][0] - t[0][0], t[1][1] - t[0][1]];
        let e2 = [t[2][0] - t[0][0], t[2][1] - t[0][1]];
        let det = (e1[0] * e2[1] - e1[1] * e2[0]).abs();
        for ([a, b], w) in rule.iter() {
            out.push(([t[0][0] + a * e1[0] + b * e2[0], t[0][1] + a * e1[1] + b * e2[1]], w * det));
        }
    };
    for _ in 0..SINGULAR_LEVELS {
        let [a, b, c] = tri;
        let (ab, bc, ca) = (mid(a, b), mid(b, c), mid(c, a));
        push([ab, b, bc]);
        push([ca, bc, c]);
        push([ab, bc, ca]);
        tri = [a, ab, ca];
    }
    push(tri);
    out
}

/// `(||grad(u - u_h)||, ||div u_h||)` with the given quadrature degree.
///
/// Cells touching the problem's singular point integrate the error with the
/// same rule on a graded subdivision, since a single rule cannot resolve the
/// unbounded gradient there.
pub fn exact_error(mesh: &Mesh, problem: &ProblemSpec, layout: &DofLayout, u: &DiscreteField, quad_degree: usize) -> Result<(f64, f64)> {
    if u.values().len() != layout.velocity_dofs() {
        return Err(Error::FieldLength { expected: layout.velocity_dofs(), got: u.values().len() });
    }
    let rule = triangle_rule(quad_degree)?;
    let plain: Vec<([f64; 2], f64)> = rule.iter().collect();
    let mut graded: [Option<Vec<([f64; 2], f64)>>; 3] = [None, None, None];
    let (mut e2, mut d2) = (0.0, 0.0);
    for t in 0..mesh.num_cells() {
        let geo = mesh.geometry(t);
        let chain = geo.chain();
        let uh = u.velocity_on_cell(mesh, layout, t);
        let g = [chain.grad(&uh[0]), chain.grad(&uh[1])];
        let corner = problem.singular_point().and_then(|s| mesh.cell(t).iter().position(|&v| mesh.node(v) == s));
        let points = match corner {
            Some(k) => graded[k].get_or_insert_with(|| graded_points(&rule, k)).as_slice(),
            None => plain.as_slice(),
        };
        for &([xi, eta], w) in points {
            let ex = problem.exact_grad_u(geo.to_physical(xi, eta));
            let w = w * geo.det;
            let mut s = 0.0;
            for i in 0..2 {
                for j in 0..2 {
                    let d = ex[i][j] - g[i][j].eval(xi, eta);
                    s += d * d;
                }
            }
            e2 += w * s;
            let div = g[0][0].eval(xi, eta) + g[1][1].eval(xi, eta);
            d2 += w * div * div;
        }
    }
    Ok((sqrt(e2), sqrt(d2)))
}

/// Cellwise data shared by cell and edge terms.
struct CellData {
    grad: [[Poly; 2]; 2],
    lap: [Poly; 2],
}

/// Evaluates every indicator for a solved pair `(u_h, p_h)` computed with
/// the reconstruction `op`.
pub fn estimate(
    mesh: &Mesh,
    problem: &ProblemSpec,
    layout: &DofLayout,
    u: &DiscreteField,
    p: &DiscreteField,
    op: &ReconstructionOp,
    quad_degree: usize,
) -> Result<EstimatorReport> {
    let pair = layout.pair();
    if op.pair() != pair {
        return Err(Error::MismatchedReconstruction { op: op.kind().name(), pair });
    }
    if u.values().len() != layout.velocity_dofs() {
        return Err(Error::FieldLength { expected: layout.velocity_dofs(), got: u.values().len() });
    }
    if p.values().len() != layout.pressure_dofs() {
        return Err(Error::FieldLength { expected: layout.pressure_dofs(), got: p.values().len() });
    }
    let nu = problem.nu();
    let rule = triangle_rule(quad_degree)?;
    let erule = edge_rule(quad_degree)?;
    let nc = mesh.num_cells();
    let continuous = pair.pressure_space() == PressureSpace::ContinuousP1;
    let nodal = if continuous { Vec::new() } else { p.nodal_average(mesh, layout) };

    // Consistency bounds project onto P_{q-1}, q the pressure degree; this
    // is exactly the orthogonality of the implemented reconstructions.
    let pdeg = pair.pressure_space().scalar_space().degree();
    let d_cons = pdeg.checked_sub(1);
    debug_assert!(op.is_identity() || op.kind().orthogonality_degree() == d_cons);

    let mut r = EstimatorReport {
        nu,
        vol: vec![0.0; nc],
        curl: vec![0.0; nc],
        jump: vec![0.0; nc],
        jump2: vec![0.0; nc],
        cons1: vec![0.0; nc],
        cons_new: vec![0.0; nc],
        cons2: vec![0.0; nc],
        div: vec![0.0; nc],
        jump_edge: vec![0.0; mesh.num_edges()],
        jump2_edge: vec![0.0; mesh.num_edges()],
        totals: Totals::default(),
    };

    let mut cells = Vec::with_capacity(nc);
    let mut lap_vals = [vec![0.0; rule.len()], vec![0.0; rule.len()]];
    let mut res_vals = [vec![0.0; rule.len()], vec![0.0; rule.len()]];
    let mut q_vals = vec![0.0; rule.len()];
    for t in 0..nc {
        let geo = mesh.geometry(t);
        let chain = geo.chain();
        let h = mesh.diameter(t);
        let uh = u.velocity_on_cell(mesh, layout, t);
        let grad = [chain.grad(&uh[0]), chain.grad(&uh[1])];
        let lap = [chain.laplace(&uh[0]), chain.laplace(&uh[1])];
        let curl_lap = chain.curl(&lap);
        let div = chain.div(&uh);
        let ph = p.pressure_on_cell(mesh, layout, t);
        let q = if continuous { ph } else { p1_on_cell(mesh, &nodal, t) };
        let gq = chain.grad(&q);

        let (mut vol, mut curl, mut divsq) = (0.0, 0.0, 0.0);
        for (k, ([xi, eta], w)) in rule.iter().enumerate() {
            let x = geo.to_physical(xi, eta);
            let w = w * geo.det;
            let f = problem.force(x);
            let l = [lap[0].eval(xi, eta), lap[1].eval(xi, eta)];
            let g = [gq[0].eval(xi, eta), gq[1].eval(xi, eta)];
            let rv = [f[0] - g[0] + nu * l[0], f[1] - g[1] + nu * l[1]];
            vol += w * (rv[0] * rv[0] + rv[1] * rv[1]);
            let c = problem.curl_force(x) + nu * curl_lap.eval(xi, eta);
            curl += w * c * c;
            let d = div.eval(xi, eta);
            divsq += w * d * d;
            q_vals[k] = q.eval(xi, eta);
            for c in 0..2 {
                lap_vals[c][k] = l[c];
                res_vals[c][k] = f[c] + nu * l[c];
            }
        }
        r.vol[t] = h * sqrt(vol);
        r.curl[t] = h * h * sqrt(curl);
        r.div[t] = sqrt(divsq);
        // ||grad q||_{(V_0h)*} <= min_{q_h in Q_h} ||q - q_h||, nonzero only
        // when the continuous q is not itself a discrete pressure
        if op.is_identity() && pdeg == 0 {
            r.cons2[t] = sqrt(defect_sq(&q_vals, &rule, geo.det, Some(0)));
        }

        let lap_def: f64 = (0..2).map(|c| defect_sq(&lap_vals[c], &rule, geo.det, d_cons)).sum();
        if !op.is_identity() {
            r.cons1[t] = nu * h * sqrt(lap_def);
            r.cons_new[t] = r.cons1[t];
        } else {
            let res_def: f64 = (0..2).map(|c| defect_sq(&res_vals[c], &rule, geo.det, d_cons)).sum();
            r.cons_new[t] = h * sqrt(res_def);
        }
        cells.push(CellData { grad, lap });
    }

    let mut jump_sq = vec![0.0; nc];
    let mut jump2_sq = vec![0.0; nc];
    for e in 0..mesh.num_edges() {
        let (c0, Some(c1)) = mesh.edge_cells(e) else { continue };
        let n = mesh.normal(e);
        let tau = mesh.tangent(e);
        let he = mesh.edge_length(e);
        let (g0, g1) = (mesh.geometry(c0), mesh.geometry(c1));
        let (mut j1, mut j2) = (0.0, 0.0);
        for ([s, _], w) in erule.iter() {
            let x = mesh.edge_point(e, s);
            let (r0, r1) = (g0.to_reference(x), g1.to_reference(x));
            let w = w * he;
            let mut a = 0.0;
            for i in 0..2 {
                let mut jn = 0.0;
                for k in 0..2 {
                    jn += (cells[c0].grad[i][k].eval(r0[0], r0[1]) - cells[c1].grad[i][k].eval(r1[0], r1[1])) * n[k];
                }
                a += nu * nu * jn * jn;
            }
            j1 += w * a;
            let f = problem.force(x);
            let side = |c: usize, rr: [f64; 2]| {
                let l = &cells[c].lap;
                (f[0] + nu * l[0].eval(rr[0], rr[1])) * tau[0] + (f[1] + nu * l[1].eval(rr[0], rr[1])) * tau[1]
            };
            let jt = side(c0, r0) - side(c1, r1);
            j2 += w * jt * jt;
        }
        let (e1, e2) = (he * j1, he * he * he * j2);
        r.jump_edge[e] = sqrt(e1);
        r.jump2_edge[e] = sqrt(e2);
        for c in [c0, c1] {
            jump_sq[c] += 0.5 * e1;
            jump2_sq[c] += 0.5 * e2;
        }
    }
    for t in 0..nc {
        r.jump[t] = sqrt(jump_sq[t]);
        r.jump2[t] = sqrt(jump2_sq[t]);
    }

    r.totals = Totals {
        eta_vol: l2(&r.vol),
        eta_curl: l2(&r.curl),
        eta_jump: l2(&r.jump_edge),
        eta_jump2: l2(&r.jump2_edge),
        eta_cons1: l2(&r.cons1),
        eta_cons_new: l2(&r.cons_new),
        eta_cons2: l2(&r.cons2),
        div_norm: l2(&r.div),
    };
    Ok(r)
}

/// `{T : mu(T) >= fraction * max mu}`; ties are marked.
pub fn mark(indicators: &[f64], fraction: f64) -> Vec<usize> {
    let max = indicators.iter().fold(0.0f64, |m, &v| m.max(v));
    indicators.iter().enumerate().filter(|(_, &v)| v >= fraction * max).map(|(t, _)| t).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::assemble;
    use crate::fe::ElementPair;
    use crate::linsolve::solve_saddle;
    use crate::mesh::build_unit_square;
    use crate::problems::Potential;

    fn solve(problem: &ProblemSpec, pair: ElementPair, mesh: &Mesh, robust: bool) -> (DofLayout, DiscreteField, DiscreteField, ReconstructionOp) {
        let op = ReconstructionOp::for_mode(pair, robust).unwrap();
        let sys = assemble(problem, pair, mesh, &op).unwrap();
        let sol = solve_saddle(&sys).unwrap();
        let u = DiscreteField::velocity(&sys.layout, sol.velocity).unwrap();
        let p = DiscreteField::pressure(&sys.layout, sol.pressure).unwrap();
        (sys.layout, u, p, op)
    }

    #[test]
    fn zero_data_gives_zero_report() {
        let mesh = build_unit_square(2).unwrap();
        let problem = ProblemSpec::hydrostatic(1.0, Potential::CONSTANT);
        for pair in ElementPair::ALL {
            let layout = DofLayout::new(pair, &mesh);
            let op = ReconstructionOp::identity(pair);
            let r = estimate(&mesh, &problem, &layout, &DiscreteField::zero_velocity(&layout), &DiscreteField::zero_pressure(&layout), &op, 10)
                .unwrap();
            assert_eq!(r.eta_class(), 0.0);
            assert_eq!(r.eta_new(), 0.0);
            assert_eq!(r.mu_class(), 0.0);
        }
    }

    #[test]
    fn totals_aggregate_cell_values() {
        let mesh = build_unit_square(3).unwrap();
        for (pair, robust) in [(ElementPair::Th2, false), (ElementPair::P2P0, true), (ElementPair::P2B, false)] {
            let problem = ProblemSpec::smooth(0.1);
            let (layout, u, p, op) = solve(&problem, pair, &mesh, robust);
            let r = estimate(&mesh, &problem, &layout, &u, &p, &op, 10).unwrap();
            let t = r.totals;
            for (total, cells) in [(t.eta_jump, &r.jump), (t.eta_jump2, &r.jump2), (t.eta_vol, &r.vol)] {
                assert!((total - l2(cells)).abs() <= 1e-12 * total.max(1e-300));
            }
            let mu = r.mu_cells(EstimatorKind::New);
            assert!(mu.iter().all(|&v| v >= 0.0));
            // the l2 sum of cell indicators never exceeds the total
            assert!(l2(&mu) <= r.mu_new() * (1.0 + 1e-12));
        }
    }

    #[test]
    fn hydrostatic_robust_run_has_vanishing_curl_estimator() {
        let mesh = build_unit_square(4).unwrap();
        let problem = ProblemSpec::hydrostatic(1e-3, Potential::QUINTIC);
        let (layout, u, p, op) = solve(&problem, ElementPair::P2B, &mesh, true);
        let r = estimate(&mesh, &problem, &layout, &u, &p, &op, 10).unwrap();
        assert!(r.totals.eta_curl < 1e-10);
        assert!(r.mu_new() < 1e-6, "{}", r.mu_new());
        // the classical estimator sees the pressure error
        assert!(r.mu_class() > 1.0);
    }

    #[test]
    fn projection_defect() {
        let rule = triangle_rule(6).unwrap();
        let lin: Vec<f64> = rule.iter().map(|([x, y], _)| 1.0 + 2.0 * x - y).collect();
        assert!(defect_sq(&lin, &rule, 1.0, Some(1)) < 1e-28);
        let c: Vec<f64> = rule.iter().map(|_| 3.0).collect();
        assert!(defect_sq(&c, &rule, 1.0, Some(0)) < 1e-28);
        assert!((defect_sq(&c, &rule, 2.0, None) - 9.0).abs() < 1e-13);
        // x - 1/3 on the reference triangle: ||.||^2 = 1/36
        let x: Vec<f64> = rule.iter().map(|([x, _], _)| x).collect();
        assert!((defect_sq(&x, &rule, 1.0, Some(0)) - 1.0 / 36.0).abs() < 1e-15);
    }

    #[test]
    fn oscillation_of_polynomials_vanishes() {
        let mesh = build_unit_square(2).unwrap();
        let g = |x: [f64; 2]| [x[0] * x[1], 1.0 - x[1] * x[1]];
        assert!(oscillation(&mesh, &g, 2, 10).unwrap() < 1e-12);
        assert!(oscillation(&mesh, &|_| [0.0, 0.0], 0, 10).unwrap() == 0.0);
        assert!(oscillation(&mesh, &g, 1, 10).unwrap() > 1e-3);
    }

    #[test]
    fn graded_rule_resolves_a_corner_singularity() {
        let rule = triangle_rule(10).unwrap();
        for corner in 0..3 {
            let pts = graded_points(&rule, corner);
            let poly: f64 = pts.iter().map(|([x, y], w)| w * x * x * y).sum();
            assert!((poly - 1.0 / 60.0).abs() < 1e-15);
        }
        // int_T 1/r over the reference cell = sqrt(2) ln(1 + sqrt(2))
        let exact = core::f64::consts::SQRT_2 * crate::math::ln(1.0 + core::f64::consts::SQRT_2);
        let r = |[x, y]: [f64; 2]| sqrt(x * x + y * y);
        let graded: f64 = graded_points(&rule, 0).iter().map(|&(x, w)| w / r(x)).sum();
        let single: f64 = rule.iter().map(|(x, w)| w / r(x)).sum();
        assert!((graded - exact).abs() < 1e-6 * exact);
        assert!((single - exact).abs() > 1e-4 * exact);
    }

    #[test]
    fn marking_rule() {
        assert_eq!(mark(&[1.0, 1.0, 1.0], 0.25), [0, 1, 2]);
        assert_eq!(mark(&[0.1, 4.0, 0.9, 1.0], 0.25), [1, 3]);
        assert_eq!(mark(&[0.1, 4.0, 0.9], 0.25), [1]);
    }
}
