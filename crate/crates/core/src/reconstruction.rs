//! Reconstruction operators `Pi` that test the body force in the
//! pressure-robust methods.
//!
//! `Pi` is the standard BDM interpolation of the discrete velocity. It maps
//! discretely divergence-free velocities of the matching pair to exactly
//! divergence-free fields, so the right-hand side `(f, Pi v_h)` no longer
//! sees gradient forces.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::fe::{DofLayout, ElementPair};
use crate::field::DiscreteField;
use crate::hdiv::{HdivKind, HdivSpace, LocalHdiv};
use crate::mesh::Mesh;
use crate::poly::Poly;
use crate::quadrature::triangle_rule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReconstructionKind {
    Identity,
    Bdm1,
    Bdm2,
}

impl ReconstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ReconstructionKind::Identity => "identity",
            ReconstructionKind::Bdm1 => "BDM1",
            ReconstructionKind::Bdm2 => "BDM2",
        }
    }

    pub fn hdiv(self) -> Option<HdivKind> {
        match self {
            ReconstructionKind::Identity => None,
            ReconstructionKind::Bdm1 => Some(HdivKind::Bdm1),
            ReconstructionKind::Bdm2 => Some(HdivKind::Bdm2),
        }
    }

    /// Operator that makes `pair` pressure-robust, if one is implemented.
    pub fn divergence_free_for(pair: ElementPair) -> Option<Self> {
        match pair {
            ElementPair::P2P0 => Some(ReconstructionKind::Bdm1),
            ElementPair::P2B => Some(ReconstructionKind::Bdm2),
            // vertex-patch operators are not implemented
            ElementPair::Th2 | ElementPair::Mini => None,
        }
    }

    /// Largest `d` with `∫_T (v - Pi v)·g = 0` for all `g ∈ P_d(T)^2` and all
    /// velocities `v` of `pair`; `None` if not even constants are preserved.
    ///
    /// `BDM_2` preserves constants on `P2 + bubble` because every constant
    /// is the gradient of a linear function. `BDM_1` only fixes edge normal
    /// moments and therefore misses the cell means of quadratic velocities.
    pub fn orthogonality_degree(self) -> Option<usize> {
        match self {
            ReconstructionKind::Bdm2 => Some(0),
            ReconstructionKind::Identity | ReconstructionKind::Bdm1 => None,
        }
    }
}

impl fmt::Display for ReconstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A reconstruction operator bound to an element pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReconstructionOp {
    kind: ReconstructionKind,
    pair: ElementPair,
}

/// Local interpolation of one cell: `matrix[l * cols + j]` is DOF `l` of
/// the `j`-th local vector velocity basis function (x components first).
#[derive(Debug, Clone)]
pub struct LocalReconstruction {
    pub basis: LocalHdiv,
    pub matrix: Vec<f64>,
    pub rows: usize,
    pub cols: usize,
}

impl ReconstructionOp {
    /// `Pi = 1`, the classical method.
    pub fn identity(pair: ElementPair) -> Self {
        ReconstructionOp { kind: ReconstructionKind::Identity, pair }
    }

    pub fn new(kind: ReconstructionKind, pair: ElementPair) -> Result<Self> {
        let ok = match kind {
            ReconstructionKind::Identity => true,
            _ => ReconstructionKind::divergence_free_for(pair) == Some(kind),
        };
        if !ok {
            return Err(Error::MismatchedReconstruction { op: kind.name(), pair });
        }
        Ok(ReconstructionOp { kind, pair })
    }

    /// The divergence-free operator of `pair`.
    pub fn pressure_robust(pair: ElementPair) -> Result<Self> {
        let kind = ReconstructionKind::divergence_free_for(pair).ok_or(Error::UnsupportedReconstruction(pair))?;
        Ok(ReconstructionOp { kind, pair })
    }

    /// Classical or pressure-robust operator.
    pub fn for_mode(pair: ElementPair, robust: bool) -> Result<Self> {
        if robust {
            Self::pressure_robust(pair)
        } else {
            Ok(Self::identity(pair))
        }
    }

    pub fn kind(&self) -> ReconstructionKind {
        self.kind
    }

    pub fn pair(&self) -> ElementPair {
        self.pair
    }

    pub fn is_identity(&self) -> bool {
        self.kind == ReconstructionKind::Identity
    }

    pub fn hdiv_space(&self, mesh: &Mesh) -> Option<HdivSpace> {
        self.kind.hdiv().map(|k| HdivSpace::new(k, mesh))
    }

    /// Local interpolation matrix of cell `t`; `None` for the identity.
    pub fn local(&self, mesh: &Mesh, t: usize) -> Option<LocalReconstruction> {
        let kind = self.kind.hdiv()?;
        let space = HdivSpace::new(kind, mesh);
        let basis = space.local_basis(mesh, t);
        let vbasis = self.pair.velocity_space().basis();
        let nl = vbasis.len();
        let rows = kind.local_dim();
        let cols = 2 * nl;
        let mut matrix = vec![0.0; rows * cols];
        for c in 0..2 {
            for (i, phi) in vbasis.polys().iter().enumerate() {
                let mut v = [Poly::ZERO, Poly::ZERO];
                v[c] = *phi;
                let m = space.moments(mesh, t, &v);
                let j = c * nl + i;
                for l in 0..rows {
                    matrix[l * cols + j] = m[l];
                }
            }
        }
        Some(LocalReconstruction { basis, matrix, rows, cols })
    }

    fn check(&self, layout: &DofLayout) -> Result<()> {
        if layout.pair() != self.pair {
            return Err(Error::MismatchedReconstruction { op: self.kind.name(), pair: layout.pair() });
        }
        Ok(())
    }

    /// `Pi v` restricted to cell `t` as polynomials in reference coordinates.
    pub fn apply_on_cell(&self, mesh: &Mesh, layout: &DofLayout, v: &DiscreteField, t: usize) -> [Poly; 2] {
        let vt = v.velocity_on_cell(mesh, layout, t);
        match self.kind.hdiv() {
            None => vt,
            Some(kind) => {
                let space = HdivSpace::new(kind, mesh);
                let m = space.moments(mesh, t, &vt);
                space.local_basis(mesh, t).combine(&m[..kind.local_dim()])
            }
        }
    }
}

/// Global BDM interpolation of a discrete velocity.
pub fn interpolate_bdm(op: &ReconstructionOp, mesh: &Mesh, layout: &DofLayout, v: &DiscreteField) -> Result<DiscreteField> {
    op.check(layout)?;
    let space = op.hdiv_space(mesh).ok_or(Error::MismatchedReconstruction { op: op.kind.name(), pair: op.pair })?;
    let mut out = vec![0.0; space.dim()];
    for t in 0..mesh.num_cells() {
        let vt = v.velocity_on_cell(mesh, layout, t);
        let m = space.moments(mesh, t, &vt);
        let (dofs, n) = space.cell_dofs(mesh, t);
        // shared edge DOFs get the same value from both sides
        for l in 0..n {
            out[dofs[l]] = m[l];
        }
    }
    DiscreteField::hdiv(&space, out)
}

/// `max_T |∫_T (v - Pi v)·g|` for a cellwise field `g(t, x)`.
pub fn consistency_defect(
    op: &ReconstructionOp,
    mesh: &Mesh,
    layout: &DofLayout,
    v: &DiscreteField,
    g: &dyn Fn(usize, [f64; 2]) -> [f64; 2],
) -> Result<f64> {
    op.check(layout)?;
    let rule = triangle_rule(10)?;
    let mut worst = 0.0f64;
    for t in 0..mesh.num_cells() {
        let geo = mesh.geometry(t);
        let vt = v.velocity_on_cell(mesh, layout, t);
        let pv = op.apply_on_cell(mesh, layout, v, t);
        let mut acc = 0.0;
        for ([xi, eta], w) in rule.iter() {
            let gx = g(t, geo.to_physical(xi, eta));
            let d0 = vt[0].eval(xi, eta) - pv[0].eval(xi, eta);
            let d1 = vt[1].eval(xi, eta) - pv[1].eval(xi, eta);
            acc += w * geo.det * (d0 * gx[0] + d1 * gx[1]);
        }
        worst = worst.max(acc.abs());
    }
    Ok(worst)
}
