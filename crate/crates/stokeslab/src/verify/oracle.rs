//! Cell and edge estimator terms against brute-force oracles.
//!
//! The oracle rebuilds every discrete field on every cell as a polynomial in
//! physical coordinates (interpolating the nodal DOF values, plus the bubble
//! coefficient times `27 l0 l1 l2`), forms the residuals analytically and
//! integrates them with collapsed Gauss-Legendre rules. None of the core
//! crate's reference-cell machinery is involved.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stokeslab_core::estimators::QUAD_DEGREE;
use stokeslab_core::mesh::Mesh;
use stokeslab_core::{estimate, DiscreteField, DofLayout, ElementPair, ProblemSpec, ReconstructionOp};

use super::quad;

/// Dense bivariate polynomial up to total degree 3: `c[i][j] x^i y^j`.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct P3 {
    c: [[f64; 4]; 4],
}

impl P3 {

    fn eval(&self, [x, y]: [f64; 2]) -> f64 {
        let mut s = 0.0;
        for i in 0..4 {
            for j in 0..4 - i {
                s += self.c[i][j] * x.powi(i as i32) * y.powi(j as i32);
            }
        }
        s
    }

    fn dx(&self) -> P3 {
        let mut p = P3::default();
        for i in 1..4 {
            for j in 0..4 - i {
                p.c[i - 1][j] = i as f64 * self.c[i][j];
            }
        }
        p
    }

    fn dy(&self) -> P3 {
        let mut p = P3::default();
        for i in 0..4 {
            for j in 1..4 - i {
                p.c[i][j - 1] = j as f64 * self.c[i][j];
            }
        }
        p
    }

    fn laplace(&self) -> P3 {
        self.dx().dx().add(&self.dy().dy(), 1.0)
    }

    fn add(&self, o: &P3, s: f64) -> P3 {
        let mut p = *self;
        for i in 0..4 {
            for j in 0..4 {
                p.c[i][j] += s * o.c[i][j];
            }
        }
        p
    }

    fn mul(&self, o: &P3) -> P3 {
        let mut p = P3::default();
        for (i, j, k, l) in index_quads() {
            let v = self.c[i][j] * o.c[k][l];
            if v != 0.0 {
                assert!(i + j + k + l <= 3, "degree overflow");
                p.c[i + k][j + l] += v;
            }
        }
        p
    }
}

/// All index quadruples with `i + j <= 3` and `k + l <= 3`.
fn index_quads() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    let pairs = || (0..4).flat_map(|i| (0..4 - i).map(move |j| (i, j)));
    pairs().flat_map(move |(i, j)| pairs().map(move |(k, l)| (i, j, k, l)))
}

fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs())).unwrap();
        a.swap(k, piv);
        b.swap(k, piv);
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
            b[i] -= f * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|j| a[k][j] * x[j]).sum();
        x[k] = (b[k] - s) / a[k][k];
    }
    x
}

/// Polynomial of degree `deg` (1 or 2) through the given point values.
fn interpolate(deg: usize, pts: &[([f64; 2], f64)]) -> P3 {
    let monos: Vec<(usize, usize)> = (0..=deg).flat_map(|d| (0..=d).map(move |j| (d - j, j))).collect();
    assert_eq!(monos.len(), pts.len());
    let a = pts.iter().map(|(x, _)| monos.iter().map(|&(i, j)| x[0].powi(i as i32) * x[1].powi(j as i32)).collect()).collect();
    let coef = solve_dense(a, pts.iter().map(|p| p.1).collect());
    let mut p = P3::default();
    for (&(i, j), c) in monos.iter().zip(coef) {
        p.c[i][j] = c;
    }
    p
}

/// Barycentric coordinates of the cell as physical linear polynomials.
fn barycentric(v: [[f64; 2]; 3]) -> [P3; 3] {
    core::array::from_fn(|k| {
        let vals: Vec<([f64; 2], f64)> = (0..3).map(|m| (v[m], if m == k { 1.0 } else { 0.0 })).collect();
        interpolate(1, &vals)
    })
}

fn cell_vertices(mesh: &Mesh, t: usize) -> [[f64; 2]; 3] {
    mesh.cell(t).map(|i| mesh.node(i))
}

fn diameter(v: [[f64; 2]; 3]) -> f64 {
    let d = |a: [f64; 2], b: [f64; 2]| ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt();
    d(v[0], v[1]).max(d(v[1], v[2])).max(d(v[2], v[0]))
}

struct CellFields {
    u: [P3; 2],
    q: P3,
}

fn rebuild(mesh: &Mesh, layout: &DofLayout, u: &[f64], p: &[f64]) -> Vec<CellFields> {
    let pair = layout.pair();
    let ns = layout.scalar_dofs();

    // pressure: continuous P1 values, or the node average of the cell values
    let continuous = pair == ElementPair::Th2 || pair == ElementPair::Mini;
    let cell_p = |t: usize, k: usize| -> f64 {
        let (dofs, n) = layout.cell_pressure(t, mesh);
        if n == 1 {
            p[dofs[0]]
        } else {
            p[dofs[k]]
        }
    };
    let mut nodal = vec![0.0; mesh.num_nodes()];
    let mut count = vec![0.0; mesh.num_nodes()];
    for t in 0..mesh.num_cells() {
        for (k, v) in mesh.cell(t).into_iter().enumerate() {
            nodal[v] += cell_p(t, k);
            count[v] += 1.0;
        }
    }
    for (a, c) in nodal.iter_mut().zip(&count) {
        *a /= c;
    }

    (0..mesh.num_cells())
        .map(|t| {
            let v = cell_vertices(mesh, t);
            let l = barycentric(v);
            let bubble = l[0].mul(&l[1]).mul(&l[2]);
            let (dofs, n) = layout.cell_velocity(t, mesh);
            let u = core::array::from_fn(|c| {
                let nodal_pts: Vec<([f64; 2], f64)> =
                    dofs[..n].iter().filter(|&&s| !layout.is_bubble(s)).map(|&s| (layout.point(s), u[c * ns + s])).collect();
                let deg = if nodal_pts.len() == 6 { 2 } else { 1 };
                let mut poly = interpolate(deg, &nodal_pts);
                for &s in dofs[..n].iter().filter(|&&s| layout.is_bubble(s)) {
                    poly = poly.add(&bubble, 27.0 * u[c * ns + s]);
                }
                poly
            });
            let q = (0..3).fold(P3::default(), |acc, k| {
                let val = if continuous { cell_p(t, k) } else { nodal[mesh.cell(t)[k]] };
                acc.add(&l[k], val)
            });
            CellFields { u, q }
        })
        .collect()
}

/// Star of four irregular triangles around an interior node.
pub fn star() -> Mesh {
    let nodes = vec![[0.45, 0.52], [0.0, 0.0], [1.1, 0.1], [0.9, 1.0], [-0.1, 0.8]];
    let cells = vec![[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 1]];
    Mesh::from_cells(nodes, cells)
}

/// Largest relative deviation between estimator and oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct Deviation {
    pub worst: f64,
    pub at: String,
    pub compared: usize,
}

impl Deviation {
    fn new() -> Self {
        Deviation { worst: 0.0, at: String::new(), compared: 0 }
    }

    fn record(&mut self, got: f64, want: f64, what: impl FnOnce() -> String) {
        self.compared += 1;
        // a vanishing oracle would make the comparison vacuous
        let rel = if want > 0.0 { (got - want).abs() / want } else { f64::INFINITY };
        if rel > self.worst || (rel.is_infinite() && self.worst.is_finite()) {
            self.worst = rel;
            self.at = what();
        }
    }
}

struct Edge {
    cells: (usize, usize),
    len: f64,
    tau: [f64; 2],
    normal: [f64; 2],
    ends: [[f64; 2]; 2],
}

fn interior_edges(mesh: &Mesh) -> Vec<(usize, Edge)> {
    (0..mesh.num_edges())
        .filter_map(|e| {
            let (c0, c1) = mesh.edge_cells(e);
            let [a, b] = mesh.edge(e).map(|i| mesh.node(i));
            let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
            let tau = [(b[0] - a[0]) / len, (b[1] - a[1]) / len];
            c1.map(|c1| (e, Edge { cells: (c0, c1), len, tau, normal: [tau[1], -tau[0]], ends: [a, b] }))
        })
        .collect()
}

/// `h_E^(1/2) ||nu (grad u_0 - sign grad u_1) n||_E` on every edge, zero on
/// the boundary. `sign = 1` is the flux jump.
pub fn edge_jumps(mesh: &Mesh, problem: &ProblemSpec, layout: &DofLayout, u: &[f64], sign: f64) -> Vec<f64> {
    let nu = problem.nu();
    let fields = rebuild(mesh, layout, u, &vec![0.0; layout.pressure_dofs()]);
    let mut out = vec![0.0; mesh.num_edges()];
    for (e, edge) in interior_edges(mesh) {
        let (f0, f1) = (&fields[edge.cells.0], &fields[edge.cells.1]);
        let n = edge.normal;
        let mut j1 = 0.0;
        for (x, _, w) in quad::segment_points(edge.ends[0], edge.ends[1], 16) {
            for i in 0..2 {
                let g0 = [f0.u[i].dx().eval(x), f0.u[i].dy().eval(x)];
                let g1 = [f1.u[i].dx().eval(x), f1.u[i].dy().eval(x)];
                let jn = nu * ((g0[0] - sign * g1[0]) * n[0] + (g0[1] - sign * g1[1]) * n[1]);
                j1 += w * jn * jn;
            }
        }
        out[e] = (edge.len * j1).sqrt();
    }
    out
}

/// Compares `eta_vol`, `eta_curl`, `eta_jump` and `eta_jump2` (per cell and
/// per edge) for random fields of `pair` on [`star`] with the smooth
/// problem's data.
pub fn estimator_terms(pair: ElementPair, nu: f64, seed: u64) -> stokeslab_core::Result<Deviation> {
    let mesh = star();
    let layout = DofLayout::new(pair, &mesh);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u: Vec<f64> = (0..layout.velocity_dofs()).map(|_| rng.random_range(-1.0..1.0)).collect();
    let p: Vec<f64> = (0..layout.pressure_dofs()).map(|_| rng.random_range(-1.0..1.0)).collect();
    let problem = ProblemSpec::smooth(nu);
    let report = estimate(
        &mesh,
        &problem,
        &layout,
        &DiscreteField::velocity(&layout, u.clone())?,
        &DiscreteField::pressure(&layout, p.clone())?,
        &ReconstructionOp::identity(pair),
        QUAD_DEGREE,
    )?;
    let fields = rebuild(&mesh, &layout, &u, &p);
    let mut dev = Deviation::new();

    for (t, cf) in fields.iter().enumerate() {
        let v = cell_vertices(&mesh, t);
        let h = diameter(v);
        let lap = [cf.u[0].laplace(), cf.u[1].laplace()];
        let gq = [cf.q.dx(), cf.q.dy()];
        let curl_lap = lap[1].dx().add(&lap[0].dy(), -1.0);
        let (mut vol, mut curl) = (0.0, 0.0);
        for (x, w) in quad::triangle_points(v, 14) {
            let f = problem.force(x);
            let r = [f[0] - gq[0].eval(x) + nu * lap[0].eval(x), f[1] - gq[1].eval(x) + nu * lap[1].eval(x)];
            vol += w * (r[0] * r[0] + r[1] * r[1]);
            let c = problem.curl_force(x) + nu * curl_lap.eval(x);
            curl += w * c * c;
        }
        dev.record(report.vol[t], h * vol.sqrt(), || format!("{pair} eta_vol cell {t}"));
        dev.record(report.curl[t], h * h * curl.sqrt(), || format!("{pair} eta_curl cell {t}"));
    }

    let mut cell_jump = vec![0.0; mesh.num_cells()];
    let mut cell_jump2 = vec![0.0; mesh.num_cells()];
    for (e, edge) in interior_edges(&mesh) {
        let (c0, c1) = edge.cells;
        let (f0, f1) = (&fields[c0], &fields[c1]);
        let (n, tau) = (edge.normal, edge.tau);
        let (mut j1, mut j2) = (0.0, 0.0);
        for (x, _, w) in quad::segment_points(edge.ends[0], edge.ends[1], 16) {
            let f = problem.force(x);
            for i in 0..2 {
                let g0 = [f0.u[i].dx().eval(x), f0.u[i].dy().eval(x)];
                let g1 = [f1.u[i].dx().eval(x), f1.u[i].dy().eval(x)];
                let jn = nu * ((g0[0] - g1[0]) * n[0] + (g0[1] - g1[1]) * n[1]);
                j1 += w * jn * jn;
            }
            let side = |cf: &CellFields| (0..2).map(|i| (f[i] + nu * cf.u[i].laplace().eval(x)) * tau[i]).sum::<f64>();
            let jt = side(f0) - side(f1);
            j2 += w * jt * jt;
        }
        let (e1, e2) = (edge.len * j1, edge.len.powi(3) * j2);
        dev.record(report.jump_edge[e], e1.sqrt(), || format!("{pair} eta_jump edge {e}"));
        dev.record(report.jump2_edge[e], e2.sqrt(), || format!("{pair} eta_jump2 edge {e}"));
        for c in [c0, c1] {
            cell_jump[c] += 0.5 * e1;
            cell_jump2[c] += 0.5 * e2;
        }
    }
    for e in (0..mesh.num_edges()).filter(|&e| mesh.is_boundary_edge(e)) {
        if report.jump_edge[e] != 0.0 || report.jump2_edge[e] != 0.0 {
            dev.worst = f64::INFINITY;
            dev.at = format!("{pair} boundary edge {e} carries a jump");
        }
    }
    for t in 0..mesh.num_cells() {
        dev.record(report.jump[t], cell_jump[t].sqrt(), || format!("{pair} eta_jump cell {t}"));
        dev.record(report.jump2[t], cell_jump2[t].sqrt(), || format!("{pair} eta_jump2 cell {t}"));
    }
    Ok(dev)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrature_of_the_oracle_is_exact() {
        let gl = quad::gauss_legendre(12);
        for k in 0..24 {
            let q: f64 = gl.iter().map(|(x, w)| w * x.powi(k)).sum();
            assert!((q - 1.0 / (k as f64 + 1.0)).abs() < 1e-14, "{k}");
        }
        // ∫ x^2 y^3 over the reference triangle is 2! 3! / 7!
        let tri = quad::triangle_points([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]], 10);
        let q: f64 = tri.iter().map(|(p, w)| w * p[0].powi(2) * p[1].powi(3)).sum();
        assert!((q - 12.0 / 5040.0).abs() < 1e-15);
    }

    #[test]
    fn rebuilt_fields_interpolate_the_dofs() {
        let mesh = star();
        for pair in ElementPair::ALL {
            let layout = DofLayout::new(pair, &mesh);
            let u: Vec<f64> = (0..layout.velocity_dofs()).map(|i| (i as f64 * 0.37).sin()).collect();
            let fields = rebuild(&mesh, &layout, &u, &vec![0.0; layout.pressure_dofs()]);
            let ns = layout.scalar_dofs();
            for (t, cf) in fields.iter().enumerate() {
                let (dofs, n) = layout.cell_velocity(t, &mesh);
                for &s in dofs[..n].iter().filter(|&&s| !layout.is_bubble(s)) {
                    for c in 0..2 {
                        assert!((cf.u[c].eval(layout.point(s)) - u[c * ns + s]).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn flipped_sign_changes_the_jumps() {
        let mesh = star();
        let layout = DofLayout::new(ElementPair::Th2, &mesh);
        let u: Vec<f64> = (0..layout.velocity_dofs()).map(|i| (i as f64).cos()).collect();
        let problem = ProblemSpec::smooth(1.0);
        let right = edge_jumps(&mesh, &problem, &layout, &u, 1.0);
        let wrong = edge_jumps(&mesh, &problem, &layout, &u, -1.0);
        assert!(right.iter().zip(&wrong).any(|(a, b)| (a - b).abs() > 1e-3));
    }
}
