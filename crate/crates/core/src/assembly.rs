//! Assembly of the discrete Stokes system
//!
//! `nu (grad u_h, grad v_h) - (p_h, div v_h) = (f, Pi v_h)`,
//! `(q_h, div u_h) = 0`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fe::{DofLayout, ElementPair, ShapeValues, Space};
use crate::field::DiscreteField;
use crate::mesh::Mesh;
use crate::problems::ProblemSpec;
use crate::quadrature::{triangle_rule, QuadRule};
use crate::reconstruction::ReconstructionOp;
use crate::sparse::{CsrMatrix, Triplets};

/// Default quadrature degree for the body force.
pub const RHS_DEGREE: usize = 10;

/// Assembled blocks before boundary conditions are applied.
#[derive(Debug, Clone)]
pub struct StokesSystem {
    pub layout: DofLayout,
    pub nu: f64,
    /// `nu (grad phi_j, grad phi_i)` over all velocity DOFs.
    pub a: CsrMatrix,
    /// `-(q_j, div phi_i)`, pressure rows by velocity columns.
    pub b: CsrMatrix,
    /// `(f, Pi phi_i)`.
    pub rhs: Vec<f64>,
    /// `m_j = ∫ q_j`.
    pub mean: Vec<f64>,
    /// Prescribed value of every Dirichlet velocity DOF.
    pub dirichlet: Vec<Option<f64>>,
}

/// Shape values at the points of a rule.
pub(crate) fn tabulate(space: Space, rule: &QuadRule) -> Vec<ShapeValues> {
    rule.iter().map(|([xi, eta], _)| space.eval(xi, eta)).collect()
}

/// Physical gradient from a reference gradient: `grad_x = G^T grad_xi`.
#[inline]
pub(crate) fn physical(g: &[[f64; 2]; 2], r: [f64; 2]) -> [f64; 2] {
    [g[0][0] * r[0] + g[1][0] * r[1], g[0][1] * r[0] + g[1][1] * r[1]]
}

pub fn assemble(problem: &ProblemSpec, pair: ElementPair, mesh: &Mesh, op: &ReconstructionOp) -> Result<StokesSystem> {
    assemble_with(problem, pair, mesh, op, RHS_DEGREE)
}

/// Like [`assemble`] with an explicit quadrature degree for `f`.
pub fn assemble_with(
    problem: &ProblemSpec,
    pair: ElementPair,
    mesh: &Mesh,
    op: &ReconstructionOp,
    rhs_degree: usize,
) -> Result<StokesSystem> {
    if op.pair() != pair {
        return Err(Error::MismatchedReconstruction { op: op.kind().name(), pair });
    }
    let nu = problem.nu();
    let layout = DofLayout::new(pair, mesh);
    let ns = layout.scalar_dofs();
    let nv = layout.velocity_dofs();
    let np = layout.pressure_dofs();
    let vspace = pair.velocity_space();
    let pspace = pair.pressure_space().scalar_space();

    let mrule = triangle_rule(pair.assembly_degree())?;
    let frule = triangle_rule(rhs_degree)?;
    let vtab = tabulate(vspace, &mrule);
    let ptab = tabulate(pspace, &mrule);
    let vf = tabulate(vspace, &frule);

    let nl = vspace.local_dim();
    let npl = pspace.local_dim();
    let mut at = Triplets::with_capacity(nv, nv, 2 * nl * nl * mesh.num_cells());
    let mut bt = Triplets::with_capacity(np, nv, 2 * nl * npl * mesh.num_cells());
    let mut rhs = vec![0.0; nv];
    let mut mean = vec![0.0; np];

    let mut ka = vec![0.0; nl * nl];
    let mut kb = vec![0.0; npl * 2 * nl];
    let mut grads = vec![[0.0; 2]; nl];
    for t in 0..mesh.num_cells() {
        let geo = mesh.geometry(t);
        let (vd, _) = layout.cell_velocity(t, mesh);
        let (pd, _) = layout.cell_pressure(t, mesh);
        ka.iter_mut().for_each(|v| *v = 0.0);
        kb.iter_mut().for_each(|v| *v = 0.0);
        let mut km = [0.0; 3];
        for (q, w) in (0..mrule.len()).map(|q| (q, mrule.weight(q) * geo.det)) {
            let sv = &vtab[q];
            for i in 0..nl {
                grads[i] = physical(&geo.inv_jac, sv.grads[i]);
            }
            for i in 0..nl {
                for j in i..nl {
                    let v = w * nu * (grads[i][0] * grads[j][0] + grads[i][1] * grads[j][1]);
                    ka[i * nl + j] += v;
                }
            }
            let sp = &ptab[q];
            for k in 0..npl {
                km[k] += w * sp.values[k];
                for c in 0..2 {
                    for i in 0..nl {
                        kb[k * 2 * nl + c * nl + i] -= w * sp.values[k] * grads[i][c];
                    }
                }
            }
        }
        for i in 0..nl {
            for j in i..nl {
                let v = ka[i * nl + j];
                for c in 0..2 {
                    let (gi, gj) = (c * ns + vd[i], c * ns + vd[j]);
                    at.push(gi, gj, v);
                    if i != j {
                        at.push(gj, gi, v);
                    }
                }
            }
        }
        for k in 0..npl {
            mean[pd[k]] += km[k];
            for c in 0..2 {
                for i in 0..nl {
                    bt.push(pd[k], c * ns + vd[i], kb[k * 2 * nl + c * nl + i]);
                }
            }
        }

        // right-hand side
        let local = op.local(mesh, t);
        let mut moments = [0.0; crate::hdiv::MAX_LOCAL];
        for (q, ([xi, eta], w)) in frule.iter().enumerate() {
            let w = w * geo.det;
            let f = problem.force(geo.to_physical(xi, eta));
            match &local {
                None => {
                    for i in 0..nl {
                        let phi = vf[q].values[i];
                        rhs[vd[i]] += w * f[0] * phi;
                        rhs[ns + vd[i]] += w * f[1] * phi;
                    }
                }
                Some(loc) => {
                    for (l, psi) in loc.basis.basis.iter().enumerate() {
                        moments[l] += w * (f[0] * psi[0].eval(xi, eta) + f[1] * psi[1].eval(xi, eta));
                    }
                }
            }
        }
        if let Some(loc) = &local {
            for j in 0..loc.cols {
                let mut acc = 0.0;
                for l in 0..loc.rows {
                    acc += loc.matrix[l * loc.cols + j] * moments[l];
                }
                let (c, i) = (j / nl, j % nl);
                rhs[c * ns + vd[i]] += acc;
            }
        }
    }

    let mut dirichlet = vec![None; nv];
    for s in 0..ns {
        if layout.is_dirichlet(s) {
            let g = problem.dirichlet(layout.point(s));
            dirichlet[s] = Some(g[0]);
            dirichlet[ns + s] = Some(g[1]);
        }
    }

    Ok(StokesSystem { layout, nu, a: at.into_csr(), b: bt.into_csr(), rhs, mean, dirichlet })
}

/// `max_j |(q_j, div u_h)|` over the pressure basis.
pub fn discrete_divergence_residual(mesh: &Mesh, layout: &DofLayout, u: &DiscreteField) -> Result<f64> {
    let pair = layout.pair();
    let rule = triangle_rule(pair.assembly_degree())?;
    let pspace = pair.pressure_space().scalar_space();
    let ptab = tabulate(pspace, &rule);
    let mut acc = vec![0.0; layout.pressure_dofs()];
    for t in 0..mesh.num_cells() {
        let geo = mesh.geometry(t);
        let chain = geo.chain();
        let v = u.velocity_on_cell(mesh, layout, t);
        let div = chain.div(&v);
        let (pd, npl) = layout.cell_pressure(t, mesh);
        for (q, ([xi, eta], w)) in rule.iter().enumerate() {
            let d = div.eval(xi, eta) * w * geo.det;
            for k in 0..npl {
                acc[pd[k]] += ptab[q].values[k] * d;
            }
        }
    }
    Ok(acc.iter().fold(0.0f64, |m, v| m.max(v.abs())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::build_unit_square;
    use crate::problems::Potential;

    #[test]
    fn zero_data_gives_zero_rhs() {
        let mesh = build_unit_square(2).unwrap();
        let p = ProblemSpec::hydrostatic(1.0, Potential::CONSTANT);
        for pair in ElementPair::ALL {
            let sys = assemble(&p, pair, &mesh, &ReconstructionOp::identity(pair)).unwrap();
            assert!(sys.rhs.iter().all(|&v| v == 0.0));
            assert!(sys.dirichlet.iter().flatten().all(|&v| v == 0.0));
        }
        for pair in [ElementPair::P2P0, ElementPair::P2B] {
            let op = ReconstructionOp::pressure_robust(pair).unwrap();
            let sys = assemble(&p, pair, &mesh, &op).unwrap();
            assert!(sys.rhs.iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn constants_are_in_the_kernel_and_a_is_symmetric() {
        let mesh = build_unit_square(3).unwrap();
        for pair in ElementPair::ALL {
            let sys = assemble(&ProblemSpec::smooth(0.7), pair, &mesh, &ReconstructionOp::identity(pair)).unwrap();
            let ns = sys.layout.scalar_dofs();
            // constant (1, 2): every Lagrange coefficient equal, bubbles zero
            let mut c = vec![0.0; 2 * ns];
            for s in 0..ns {
                if !sys.layout.is_bubble(s) {
                    c[s] = 1.0;
                    c[ns + s] = 2.0;
                }
            }
            let ac = sys.a.mul_vec(&c);
            assert!(ac.iter().all(|v| v.abs() < 1e-12), "{pair}");
            assert!(sys.a.asymmetry() < 1e-13);
            // mean vector integrates constants
            let area: f64 = sys.mean.iter().sum();
            assert!((area - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn mismatched_operator_is_rejected() {
        let mesh = build_unit_square(1).unwrap();
        let op = ReconstructionOp::identity(ElementPair::P2B);
        assert!(assemble(&ProblemSpec::smooth(1.0), ElementPair::Th2, &mesh, &op).is_err());
    }
}
