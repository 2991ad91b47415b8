//! Brezzi-Douglas-Marini spaces `BDM_k = P_k(T)^2 ∩ H(div)` for `k = 1, 2`.
//!
//! Degrees of freedom on a cell, in local order:
//! - for each local edge `E` (edge `k` opposite vertex `k`) the normal
//!   moments `∫_E v·n_E L_m(s) ds`, `m = 0..=k`, where `n_E` is the global
//!   edge normal, `s ∈ [0, 1]` runs from the lower to the higher global node
//!   and `L_m` are the shifted Legendre polynomials;
//! - for `BDM_2` additionally `∫_T v·∇λ_1`, `∫_T v·∇λ_2` and `∫_T v·curl b_T`.
//!
//! Local shape functions are the dual basis, computed per cell in the
//! reference coordinates of that cell.

use alloc::vec::Vec;

use crate::fe::bubble;
use crate::math::dense_solve;
use crate::mesh::Mesh;
use crate::poly::Poly;
use crate::quadrature::{edge_rule, triangle_rule, QuadRule};

/// Largest local dimension (`BDM_2`).
pub const MAX_LOCAL: usize = 12;

const REF_VERTS: [[f64; 2]; 3] = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];

/// Shifted Legendre polynomials on `[0, 1]`.
pub fn legendre(m: usize, s: f64) -> f64 {
    match m {
        0 => 1.0,
        1 => 2.0 * s - 1.0,
        2 => 6.0 * s * s - 6.0 * s + 1.0,
        _ => unreachable!("moment order above 2"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HdivKind {
    Bdm1,
    Bdm2,
}

impl HdivKind {
    pub fn degree(self) -> usize {
        match self {
            HdivKind::Bdm1 => 1,
            HdivKind::Bdm2 => 2,
        }
    }

    pub fn edge_dofs(self) -> usize {
        self.degree() + 1
    }

    pub fn interior_dofs(self) -> usize {
        match self {
            HdivKind::Bdm1 => 0,
            HdivKind::Bdm2 => 3,
        }
    }

    /// `dim P_k^2 = (k + 1)(k + 2)`.
    pub fn local_dim(self) -> usize {
        3 * self.edge_dofs() + self.interior_dofs()
    }

    pub fn name(self) -> &'static str {
        match self {
            HdivKind::Bdm1 => "BDM1",
            HdivKind::Bdm2 => "BDM2",
        }
    }
}

/// Global `BDM_k` space on a mesh.
#[derive(Debug, Clone, Copy)]
pub struct HdivSpace {
    kind: HdivKind,
    n_edges: usize,
    n_cells: usize,
}

/// Local moments of a vector field, in local DOF order.
pub type Moments = [f64; MAX_LOCAL];

impl HdivSpace {
    pub fn new(kind: HdivKind, mesh: &Mesh) -> Self {
        HdivSpace { kind, n_edges: mesh.num_edges(), n_cells: mesh.num_cells() }
    }

    pub fn kind(&self) -> HdivKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.n_edges * self.kind.edge_dofs() + self.n_cells * self.kind.interior_dofs()
    }

    /// Global indices of the local DOFs of cell `t`.
    pub fn cell_dofs(&self, mesh: &Mesh, t: usize) -> ([usize; MAX_LOCAL], usize) {
        let ke = self.kind.edge_dofs();
        let mut out = [0; MAX_LOCAL];
        let mut len = 0;
        for e in mesh.cell_edges(t) {
            for m in 0..ke {
                out[len] = e * ke + m;
                len += 1;
            }
        }
        let off = self.n_edges * ke;
        for j in 0..self.kind.interior_dofs() {
            out[len] = off + self.kind.interior_dofs() * t + j;
            len += 1;
        }
        (out, len)
    }

    /// Applies the local DOF functionals to a vector field given by its
    /// components as polynomials in the reference coordinates of cell `t`.
    pub fn moments(&self, mesh: &Mesh, t: usize, v: &[Poly; 2]) -> Moments {
        moments(self.kind, mesh, t, v)
    }

    /// Dual basis on cell `t`.
    pub fn local_basis(&self, mesh: &Mesh, t: usize) -> LocalHdiv {
        local_basis(self.kind, mesh, t)
    }
}

fn edge_quad() -> QuadRule {
    edge_rule(7).expect("tabulated")
}

fn cell_quad() -> QuadRule {
    triangle_rule(8).expect("tabulated")
}

pub(crate) fn moments(kind: HdivKind, mesh: &Mesh, t: usize, v: &[Poly; 2]) -> Moments {
    let cell = mesh.cell(t);
    let edges = mesh.cell_edges(t);
    let ke = kind.edge_dofs();
    let mut out = [0.0; MAX_LOCAL];
    let eq = edge_quad();
    for k in 0..3 {
        let (mut a, mut b) = ((k + 1) % 3, (k + 2) % 3);
        if cell[a] > cell[b] {
            core::mem::swap(&mut a, &mut b);
        }
        let (pa, pb) = (REF_VERTS[a], REF_VERTS[b]);
        let e = edges[k];
        let n = mesh.normal(e);
        let len = mesh.edge_length(e);
        for ([s, _], w) in eq.iter() {
            let xi = pa[0] + s * (pb[0] - pa[0]);
            let eta = pa[1] + s * (pb[1] - pa[1]);
            let vn = v[0].eval(xi, eta) * n[0] + v[1].eval(xi, eta) * n[1];
            for m in 0..ke {
                out[k * ke + m] += len * w * vn * legendre(m, s);
            }
        }
    }
    if kind == HdivKind::Bdm2 {
        let g = mesh.geometry(t);
        let chain = g.chain();
        let grads = [g.inv_jac[0], g.inv_jac[1]];
        let curl_b = chain.rot(&bubble());
        let base = 3 * ke;
        for ([xi, eta], w) in cell_quad().iter() {
            let vv = [v[0].eval(xi, eta), v[1].eval(xi, eta)];
            let wd = w * g.det;
            for (j, gr) in grads.iter().enumerate() {
                out[base + j] += wd * (vv[0] * gr[0] + vv[1] * gr[1]);
            }
            out[base + 2] += wd * (vv[0] * curl_b[0].eval(xi, eta) + vv[1] * curl_b[1].eval(xi, eta));
        }
    }
    out
}

/// Vector monomials spanning `P_k^2` in reference coordinates.
fn monomials(k: usize) -> Vec<[Poly; 2]> {
    let mut out = Vec::new();
    for c in 0..2 {
        for d in 0..=k {
            for i in 0..=d {
                let mut v = [Poly::ZERO, Poly::ZERO];
                v[c] = Poly::monomial(i, d - i, 1.0);
                out.push(v);
            }
        }
    }
    out
}

/// Dual basis of one cell.
#[derive(Debug, Clone)]
pub struct LocalHdiv {
    pub basis: Vec<[Poly; 2]>,
}

impl LocalHdiv {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// `sum_l c_l psi_l` as polynomials.
    pub fn combine(&self, coeffs: &[f64]) -> [Poly; 2] {
        let mut out = [Poly::ZERO, Poly::ZERO];
        for (psi, &c) in self.basis.iter().zip(coeffs) {
            out[0] = out[0].axpy(c, &psi[0]);
            out[1] = out[1].axpy(c, &psi[1]);
        }
        out
    }
}

pub(crate) fn local_basis(kind: HdivKind, mesh: &Mesh, t: usize) -> LocalHdiv {
    let mono = monomials(kind.degree());
    let n = mono.len();
    debug_assert_eq!(n, kind.local_dim());
    // d[l][j] = dof_l(mono_j)
    let mut d = alloc::vec![0.0; n * n];
    for (j, m) in mono.iter().enumerate() {
        let mo = moments(kind, mesh, t, m);
        for l in 0..n {
            d[l * n + j] = mo[l];
        }
    }
    let mut inv = alloc::vec![0.0; n * n];
    for i in 0..n {
        inv[i * n + i] = 1.0;
    }
    let ok = dense_solve(&mut d, &mut inv, n, n);
    assert!(ok, "BDM degrees of freedom are unisolvent on nondegenerate cells");
    let basis = (0..n)
        .map(|l| {
            let mut v = [Poly::ZERO, Poly::ZERO];
            for (j, m) in mono.iter().enumerate() {
                let c = inv[j * n + l];
                v[0] = v[0].axpy(c, &m[0]);
                v[1] = v[1].axpy(c, &m[1]);
            }
            v
        })
        .collect();
    LocalHdiv { basis }
}
