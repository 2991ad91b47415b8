//! The reconstruction maps discretely divergence-free velocities to
//! divergence-free fields and preserves the moments it is built from.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stokeslab_core::mesh::{build_lshape, build_unit_square, Mesh};
use stokeslab_core::problems::Potential;
use stokeslab_core::quadrature::triangle_rule;
use stokeslab_core::sparse::Triplets;
use stokeslab_core::{assemble, solve_saddle, DiscreteField, DofLayout, ElementPair, ProblemSpec, ReconstructionOp, Result, StokesSystem};

use super::quad;

/// The unit square (`n = 3`) and an L-shape graded by two rounds of corner
/// refinement.
pub fn meshes() -> Vec<Mesh> {
    let square = build_unit_square(3).expect("positive subdivision");
    let mut lshape = build_lshape(2).expect("positive subdivision");
    for _ in 0..2 {
        let near: Vec<usize> = (0..lshape.num_cells())
            .filter(|&t| {
                let [x, y] = lshape.centroid(t);
                x * x + y * y < 0.5
            })
            .collect();
        lshape = lshape.refine_adaptive(&near).expect("cells exist");
    }
    vec![square, lshape]
}

fn zero_force_system(pair: ElementPair, mesh: &Mesh) -> Result<StokesSystem> {
    let op = ReconstructionOp::pressure_robust(pair)?;
    assemble(&ProblemSpec::hydrostatic(1.0, Potential::CONSTANT), pair, mesh, &op)
}

/// Orthogonal projection of a random vector onto the discrete kernel
/// `{v : b(v, q) = 0 for all q}` with zero boundary values. Also returns
/// `max |B v| / max |v|`.
fn random_kernel_field(sys: &StokesSystem, seed: u64) -> Result<(Vec<f64>, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = sys.a.nrows();
    let mut id = Triplets::new(n, n);
    for i in 0..n {
        id.push(i, i, 1.0);
    }
    let rhs = sys.dirichlet.iter().map(|d| if d.is_none() { rng.random_range(-1.0..1.0) } else { 0.0 }).collect();
    let proj = StokesSystem { a: id.into_csr(), rhs, nu: 1.0, ..sys.clone() };
    let v = solve_saddle(&proj)?.velocity;
    let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let bv = sys.b.mul_vec(&v).iter().fold(0.0f64, |m, x| m.max(x.abs()));
    Ok((v, bv / scale))
}

fn legendre(k: usize, s: f64) -> f64 {
    let x = 2.0 * s - 1.0;
    match k {
        0 => 1.0,
        1 => x,
        2 => 1.5 * x * x - 0.5,
        _ => unreachable!("BDM degree is at most 2"),
    }
}

/// Worst values over one field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Contract {
    /// `max |B v| / max |v|` of the input field.
    pub kernel: f64,
    /// `max |div Pi v|` at quadrature points.
    pub div: f64,
    /// Normal moments of `v - Pi v` against `P_k(E)`, `k` the BDM degree.
    pub edge_moments: f64,
    /// `P0` cell moments of `v - Pi v`, where the operator promises them.
    pub cell_moments: f64,
}

impl Contract {
    pub fn max(self, o: Contract) -> Contract {
        Contract {
            kernel: self.kernel.max(o.kernel),
            div: self.div.max(o.div),
            edge_moments: self.edge_moments.max(o.edge_moments),
            cell_moments: self.cell_moments.max(o.cell_moments),
        }
    }

    pub const ZERO: Contract = Contract { kernel: 0.0, div: 0.0, edge_moments: 0.0, cell_moments: 0.0 };
}

fn check_field(mesh: &Mesh, layout: &DofLayout, op: &ReconstructionOp, v: Vec<f64>) -> Result<Contract> {
    let field = DiscreteField::velocity(layout, v)?;
    let degree = op.kind().hdiv().map_or(0, |s| s.degree());
    let rule = triangle_rule(10)?;
    let mut out = Contract::ZERO;
    let on_cell: Vec<_> = (0..mesh.num_cells())
        .map(|t| (field.velocity_on_cell(mesh, layout, t), op.apply_on_cell(mesh, layout, &field, t)))
        .collect();
    let diff = |t: usize, x: [f64; 2]| {
        let r = mesh.geometry(t).to_reference(x);
        let (v, pv) = &on_cell[t];
        [v[0].eval(r[0], r[1]) - pv[0].eval(r[0], r[1]), v[1].eval(r[0], r[1]) - pv[1].eval(r[0], r[1])]
    };

    for t in 0..mesh.num_cells() {
        let div = mesh.geometry(t).chain().div(&on_cell[t].1);
        for ([xi, eta], _) in rule.iter() {
            out.div = out.div.max(div.eval(xi, eta).abs());
        }
        if op.kind().orthogonality_degree() == Some(0) {
            let v = mesh.cell(t).map(|i| mesh.node(i));
            let mut m = [0.0; 2];
            for (x, w) in quad::triangle_points(v, 8) {
                let d = diff(t, x);
                m[0] += w * d[0];
                m[1] += w * d[1];
            }
            out.cell_moments = out.cell_moments.max(m[0].abs()).max(m[1].abs());
        }
    }

    // normal moments seen from every adjacent cell
    for e in 0..mesh.num_edges() {
        let [a, b] = mesh.edge(e).map(|i| mesh.node(i));
        let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
        let n = [(b[1] - a[1]) / len, -(b[0] - a[0]) / len];
        let (c0, c1) = mesh.edge_cells(e);
        for t in std::iter::once(c0).chain(c1) {
            for k in 0..=degree {
                let m: f64 = quad::segment_points(a, b, 8)
                    .into_iter()
                    .map(|(x, s, w)| {
                        let d = diff(t, x);
                        w * (d[0] * n[0] + d[1] * n[1]) * legendre(k, s)
                    })
                    .sum();
                out.edge_moments = out.edge_moments.max(m.abs());
            }
        }
    }
    Ok(out)
}

/// Contract values of one random discretely divergence-free field.
pub fn random_field(mesh: &Mesh, pair: ElementPair, seed: u64) -> Result<Contract> {
    let op = ReconstructionOp::pressure_robust(pair)?;
    let sys = zero_force_system(pair, mesh)?;
    let (v, kernel) = random_kernel_field(&sys, seed)?;
    Ok(Contract { kernel, ..check_field(mesh, &sys.layout, &op, v)? })
}

/// Worst contract values over `fields` random fields on every mesh of
/// [`meshes`].
pub fn sweep(pair: ElementPair, fields: u64, seed: u64) -> Result<Contract> {
    let mut worst = Contract::ZERO;
    for mesh in meshes() {
        for k in 0..fields {
            worst = worst.max(random_field(&mesh, pair, seed.wrapping_add(k))?);
        }
    }
    Ok(worst)
}

/// Observed constants `C` in `||v - Pi v||_T <= C h_T ||grad v||_T`.
#[derive(Debug, Clone, PartialEq)]
pub struct Closeness {
    /// Largest per-cell ratio on each level.
    pub per_cell: Vec<f64>,
    /// `||v - Pi v|| / (h ||grad v||)` over the whole mesh, worst field.
    pub aggregate: Vec<f64>,
}

/// [`Closeness`] on unit squares with `levels` subdivisions, five random
/// fields each.
pub fn closeness(pair: ElementPair, levels: &[usize]) -> Result<Closeness> {
    let op = ReconstructionOp::pressure_robust(pair)?;
    let rule = triangle_rule(10)?;
    let mut out = Closeness { per_cell: Vec::new(), aggregate: Vec::new() };
    for &n in levels {
        let mesh = build_unit_square(n)?;
        let sys = zero_force_system(pair, &mesh)?;
        let h = (0..mesh.num_cells()).map(|t| mesh.diameter(t)).fold(0.0f64, f64::max);
        let (mut c, mut agg) = (0.0f64, 0.0f64);
        for seed in 0..5 {
            let field = DiscreteField::velocity(&sys.layout, random_kernel_field(&sys, seed)?.0)?;
            let (mut d_all, mut g_all) = (0.0, 0.0);
            for t in 0..mesh.num_cells() {
                let geo = mesh.geometry(t);
                let chain = geo.chain();
                let v = field.velocity_on_cell(&mesh, &sys.layout, t);
                let pv = op.apply_on_cell(&mesh, &sys.layout, &field, t);
                let grads = [chain.grad(&v[0]), chain.grad(&v[1])];
                let (mut d2, mut g2) = (0.0, 0.0);
                for ([xi, eta], w) in rule.iter() {
                    let w = w * geo.det;
                    for i in 0..2 {
                        d2 += w * (v[i].eval(xi, eta) - pv[i].eval(xi, eta)).powi(2);
                        g2 += w * (grads[i][0].eval(xi, eta).powi(2) + grads[i][1].eval(xi, eta).powi(2));
                    }
                }
                if g2 > 1e-20 {
                    c = c.max(d2.sqrt() / (mesh.diameter(t) * g2.sqrt()));
                }
                d_all += d2;
                g_all += g2;
            }
            agg = agg.max(d_all.sqrt() / (h * g_all.sqrt()));
        }
        out.per_cell.push(c);
        out.aggregate.push(agg);
    }
    Ok(out)
}
