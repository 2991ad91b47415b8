//! Coefficient vectors together with the space they live in.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fe::{DofLayout, ElementPair, PressureSpace};
use crate::hdiv::{HdivKind, HdivSpace};
use crate::mesh::Mesh;
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpace {
    Velocity(ElementPair),
    Pressure(ElementPair),
    Hdiv(HdivKind),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteField {
    space: FieldSpace,
    values: Vec<f64>,
}

impl DiscreteField {
    pub fn velocity(layout: &DofLayout, values: Vec<f64>) -> Result<Self> {
        check(layout.velocity_dofs(), &values)?;
        Ok(DiscreteField { space: FieldSpace::Velocity(layout.pair()), values })
    }

    pub fn pressure(layout: &DofLayout, values: Vec<f64>) -> Result<Self> {
        check(layout.pressure_dofs(), &values)?;
        Ok(DiscreteField { space: FieldSpace::Pressure(layout.pair()), values })
    }

    pub fn hdiv(space: &HdivSpace, values: Vec<f64>) -> Result<Self> {
        check(space.dim(), &values)?;
        Ok(DiscreteField { space: FieldSpace::Hdiv(space.kind()), values })
    }

    pub fn zero_velocity(layout: &DofLayout) -> Self {
        DiscreteField { space: FieldSpace::Velocity(layout.pair()), values: alloc::vec![0.0; layout.velocity_dofs()] }
    }

    pub fn zero_pressure(layout: &DofLayout) -> Self {
        DiscreteField { space: FieldSpace::Pressure(layout.pair()), values: alloc::vec![0.0; layout.pressure_dofs()] }
    }

    pub fn space(&self) -> FieldSpace {
        self.space
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Velocity restricted to cell `t` as polynomials in reference
    /// coordinates.
    pub fn velocity_on_cell(&self, mesh: &Mesh, layout: &DofLayout, t: usize) -> [Poly; 2] {
        debug_assert!(matches!(self.space, FieldSpace::Velocity(_)));
        let basis = layout.pair().velocity_space().basis();
        let (dofs, n) = layout.cell_velocity(t, mesh);
        let ns = layout.scalar_dofs();
        let mut out = [Poly::ZERO, Poly::ZERO];
        for (i, phi) in basis.polys().iter().enumerate().take(n) {
            out[0] = out[0].axpy(self.values[dofs[i]], phi);
            out[1] = out[1].axpy(self.values[ns + dofs[i]], phi);
        }
        out
    }

    /// Pressure restricted to cell `t`.
    pub fn pressure_on_cell(&self, mesh: &Mesh, layout: &DofLayout, t: usize) -> Poly {
        debug_assert!(matches!(self.space, FieldSpace::Pressure(_)));
        let basis = layout.pair().pressure_space().scalar_space().basis();
        let (dofs, n) = layout.cell_pressure(t, mesh);
        let mut out = Poly::ZERO;
        for (i, phi) in basis.polys().iter().enumerate().take(n) {
            out = out.axpy(self.values[dofs[i]], phi);
        }
        out
    }

    /// `H(div)` field restricted to cell `t`.
    pub fn hdiv_on_cell(&self, mesh: &Mesh, space: &HdivSpace, t: usize) -> [Poly; 2] {
        debug_assert!(matches!(self.space, FieldSpace::Hdiv(_)));
        let (dofs, n) = space.cell_dofs(mesh, t);
        let coeffs: Vec<f64> = dofs[..n].iter().map(|&d| self.values[d]).collect();
        space.local_basis(mesh, t).combine(&coeffs)
    }

    /// Continuous piecewise linear pressure obtained by averaging the cell
    /// values at every node. Continuous pressures are returned unchanged.
    pub fn nodal_average(&self, mesh: &Mesh, layout: &DofLayout) -> Vec<f64> {
        let pair = layout.pair();
        if pair.pressure_space() == PressureSpace::ContinuousP1 {
            return self.values.clone();
        }
        let mut sum = alloc::vec![0.0; mesh.num_nodes()];
        let mut count = alloc::vec![0usize; mesh.num_nodes()];
        for t in 0..mesh.num_cells() {
            let p = self.pressure_on_cell(mesh, layout, t);
            for (k, v) in mesh.cell(t).into_iter().enumerate() {
                let r = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]][k];
                sum[v] += p.eval(r[0], r[1]);
                count[v] += 1;
            }
        }
        sum.iter().zip(&count).map(|(s, &c)| s / c as f64).collect()
    }
}

fn check(expected: usize, values: &[f64]) -> Result<()> {
    if values.len() != expected {
        return Err(Error::FieldLength { expected, got: values.len() });
    }
    Ok(())
}

/// Continuous P1 function given by nodal values, restricted to cell `t`.
pub fn p1_on_cell(mesh: &Mesh, nodal: &[f64], t: usize) -> Poly {
    let [l0, l1, l2] = Poly::barycentric();
    let [a, b, c] = mesh.cell(t);
    l0.scale(nodal[a]).axpy(nodal[b], &l1).axpy(nodal[c], &l2)
}
