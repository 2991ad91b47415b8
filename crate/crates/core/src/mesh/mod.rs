//! Conforming triangulations with the connectivity the discretization needs.
//!
//! Cells are stored counterclockwise with the refinement edge opposite local
//! vertex 0 (the "newest vertex"). Local edge `k` is the edge opposite local
//! vertex `k`. Edges are stored as sorted node pairs; their unit normal points
//! from the lower-indexed adjacent cell into the higher-indexed one, and
//! outward on the boundary.

mod build;
mod refine;

use alloc::vec;
use alloc::vec::Vec;

use crate::math;

pub use build::{build_lshape, build_unit_square};

/// Marker for the missing second neighbour of a boundary edge.
pub const NO_CELL: usize = usize::MAX;

#[derive(Debug, Clone)]
pub struct Mesh {
    nodes: Vec<[f64; 2]>,
    cells: Vec<[usize; 3]>,
    edges: Vec<[usize; 2]>,
    cell_edges: Vec<[usize; 3]>,
    edge_cells: Vec<[usize; 2]>,
    boundary_node: Vec<bool>,
    normals: Vec<[f64; 2]>,
    edge_len: Vec<f64>,
    diam: Vec<f64>,
    area: Vec<f64>,
}

/// Affine map from the reference triangle onto a cell.
#[derive(Debug, Clone, Copy)]
pub struct CellGeometry {
    pub origin: [f64; 2],
    /// Columns are `x1 - x0` and `x2 - x0`.
    pub jac: [[f64; 2]; 2],
    pub inv_jac: [[f64; 2]; 2],
    pub det: f64,
}

impl CellGeometry {
    pub fn to_physical(&self, xi: f64, eta: f64) -> [f64; 2] {
        [
            self.origin[0] + self.jac[0][0] * xi + self.jac[0][1] * eta,
            self.origin[1] + self.jac[1][0] * xi + self.jac[1][1] * eta,
        ]
    }

    pub fn to_reference(&self, x: [f64; 2]) -> [f64; 2] {
        let dx = x[0] - self.origin[0];
        let dy = x[1] - self.origin[1];
        [
            self.inv_jac[0][0] * dx + self.inv_jac[0][1] * dy,
            self.inv_jac[1][0] * dx + self.inv_jac[1][1] * dy,
        ]
    }

    pub fn chain(&self) -> crate::poly::Chain {
        crate::poly::Chain { inv_jac: self.inv_jac }
    }
}

impl Mesh {
    /// Builds the connectivity for a list of counterclockwise cells whose
    /// refinement edge is opposite local vertex 0.
    ///
    /// Panics if an edge is shared by more than two cells or a cell has
    /// non-positive area.
    pub fn from_cells(nodes: Vec<[f64; 2]>, cells: Vec<[usize; 3]>) -> Self {
        let mut half: Vec<(usize, usize, usize, usize)> = Vec::with_capacity(3 * cells.len());
        for (t, c) in cells.iter().enumerate() {
            for k in 0..3 {
                let a = c[(k + 1) % 3];
                let b = c[(k + 2) % 3];
                half.push((a.min(b), a.max(b), t, k));
            }
        }
        half.sort_unstable();

        let mut edges = Vec::new();
        let mut edge_cells = Vec::new();
        let mut cell_edges = vec![[0usize; 3]; cells.len()];
        let mut i = 0;
        while i < half.len() {
            let (a, b, t, k) = half[i];
            let e = edges.len();
            edges.push([a, b]);
            cell_edges[t][k] = e;
            let mut pair = [t, NO_CELL];
            if i + 1 < half.len() && half[i + 1].0 == a && half[i + 1].1 == b {
                let (_, _, t2, k2) = half[i + 1];
                cell_edges[t2][k2] = e;
                pair = [t.min(t2), t.max(t2)];
                assert!(
                    !(i + 2 < half.len() && half[i + 2].0 == a && half[i + 2].1 == b),
                    "edge ({a}, {b}) is shared by more than two cells"
                );
                i += 2;
            } else {
                i += 1;
            }
            edge_cells.push(pair);
        }

        let mut boundary_node = vec![false; nodes.len()];
        for (e, ec) in edges.iter().zip(&edge_cells) {
            if ec[1] == NO_CELL {
                boundary_node[e[0]] = true;
                boundary_node[e[1]] = true;
            }
        }

        let edge_len: Vec<f64> = edges
            .iter()
            .map(|&[a, b]| math::hypot(nodes[b][0] - nodes[a][0], nodes[b][1] - nodes[a][1]))
            .collect();

        let mut area = Vec::with_capacity(cells.len());
        let mut diam = Vec::with_capacity(cells.len());
        for (t, c) in cells.iter().enumerate() {
            let [p0, p1, p2] = [nodes[c[0]], nodes[c[1]], nodes[c[2]]];
            let a = 0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]));
            assert!(a > 0.0, "cell {t} has non-positive area {a}");
            area.push(a);
            let ce = cell_edges[t];
            diam.push(edge_len[ce[0]].max(edge_len[ce[1]]).max(edge_len[ce[2]]));
        }

        let normals = edges
            .iter()
            .zip(&edge_cells)
            .zip(&edge_len)
            .map(|((&[a, b], ec), &len)| {
                let d = [nodes[b][0] - nodes[a][0], nodes[b][1] - nodes[a][1]];
                let mut n = [d[1] / len, -d[0] / len];
                let c = &cells[ec[0]];
                let centroid = [
                    (nodes[c[0]][0] + nodes[c[1]][0] + nodes[c[2]][0]) / 3.0,
                    (nodes[c[0]][1] + nodes[c[1]][1] + nodes[c[2]][1]) / 3.0,
                ];
                let mid = [0.5 * (nodes[a][0] + nodes[b][0]), 0.5 * (nodes[a][1] + nodes[b][1])];
                if n[0] * (mid[0] - centroid[0]) + n[1] * (mid[1] - centroid[1]) < 0.0 {
                    n = [-n[0], -n[1]];
                }
                n
            })
            .collect();

        Mesh { nodes, cells, edges, cell_edges, edge_cells, boundary_node, normals, edge_len, diam, area }
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> &[[f64; 2]] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> [f64; 2] {
        self.nodes[i]
    }

    pub fn cells(&self) -> &[[usize; 3]] {
        &self.cells
    }

    pub fn cell(&self, t: usize) -> [usize; 3] {
        self.cells[t]
    }

    pub fn edge(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    pub fn cell_edges(&self, t: usize) -> [usize; 3] {
        self.cell_edges[t]
    }

    /// Adjacent cells of edge `e`; the second is `None` on the boundary.
    pub fn edge_cells(&self, e: usize) -> (usize, Option<usize>) {
        let [a, b] = self.edge_cells[e];
        (a, (b != NO_CELL).then_some(b))
    }

    pub fn is_boundary_edge(&self, e: usize) -> bool {
        self.edge_cells[e][1] == NO_CELL
    }

    pub fn is_boundary_node(&self, i: usize) -> bool {
        self.boundary_node[i]
    }

    /// Bit `k` is set when local edge `k` of cell `t` lies on the boundary.
    pub fn boundary_code(&self, t: usize) -> u8 {
        let mut code = 0;
        for (k, &e) in self.cell_edges[t].iter().enumerate() {
            if self.is_boundary_edge(e) {
                code |= 1 << k;
            }
        }
        code
    }

    /// `h_T`: the longest edge of `t`.
    pub fn diameter(&self, t: usize) -> f64 {
        self.diam[t]
    }

    /// `h_E`: the length of `e`.
    pub fn edge_length(&self, e: usize) -> f64 {
        self.edge_len[e]
    }

    pub fn area(&self, t: usize) -> f64 {
        self.area[t]
    }

    pub fn normal(&self, e: usize) -> [f64; 2] {
        self.normals[e]
    }

    /// Unit tangent, the normal rotated counterclockwise by a right angle.
    pub fn tangent(&self, e: usize) -> [f64; 2] {
        let n = self.normals[e];
        [-n[1], n[0]]
    }

    /// Point on edge `e` at parameter `s in [0, 1]`, running from the lower
    /// to the higher node index.
    pub fn edge_point(&self, e: usize, s: f64) -> [f64; 2] {
        let [a, b] = self.edges[e];
        let (pa, pb) = (self.nodes[a], self.nodes[b]);
        [pa[0] + s * (pb[0] - pa[0]), pa[1] + s * (pb[1] - pa[1])]
    }

    pub fn centroid(&self, t: usize) -> [f64; 2] {
        let c = self.cells[t];
        let mut x = [0.0; 2];
        for &v in &c {
            x[0] += self.nodes[v][0] / 3.0;
            x[1] += self.nodes[v][1] / 3.0;
        }
        x
    }

    pub fn geometry(&self, t: usize) -> CellGeometry {
        let [p0, p1, p2] = self.cells[t].map(|v| self.nodes[v]);
        let jac = [[p1[0] - p0[0], p2[0] - p0[0]], [p1[1] - p0[1], p2[1] - p0[1]]];
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        let inv_jac = [[jac[1][1] / det, -jac[0][1] / det], [-jac[1][0] / det, jac[0][0] / det]];
        CellGeometry { origin: p0, jac, inv_jac, det }
    }

    pub fn max_diameter(&self) -> f64 {
        self.diam.iter().copied().fold(0.0, f64::max)
    }

    pub fn total_area(&self) -> f64 {
        self.area.iter().sum()
    }

    /// Smallest interior angle over all cells, in radians.
    pub fn min_angle(&self) -> f64 {
        let mut best = f64::INFINITY;
        for c in &self.cells {
            for k in 0..3 {
                let p = self.nodes[c[k]];
                let q = self.nodes[c[(k + 1) % 3]];
                let r = self.nodes[c[(k + 2) % 3]];
                let u = [q[0] - p[0], q[1] - p[1]];
                let v = [r[0] - p[0], r[1] - p[1]];
                let cross = u[0] * v[1] - u[1] * v[0];
                let dot = u[0] * v[0] + u[1] * v[1];
                best = best.min(math::atan2(cross.abs(), dot));
            }
        }
        best
    }

    /// Checks every structural invariant and returns a description of the
    /// first violation.
    pub fn check(&self) -> Result<(), alloc::string::String> {
        use alloc::format;
        let mut incidence = vec![0u8; self.edges.len()];
        for (t, ce) in self.cell_edges.iter().enumerate() {
            if self.area[t] <= 0.0 {
                return Err(format!("cell {t} has non-positive area"));
            }
            for (k, &e) in ce.iter().enumerate() {
                let c = self.cells[t];
                let (a, b) = (c[(k + 1) % 3], c[(k + 2) % 3]);
                if self.edges[e] != [a.min(b), a.max(b)] {
                    return Err(format!("cell {t} local edge {k} does not match edge {e}"));
                }
                incidence[e] += 1;
            }
        }
        for (e, &count) in incidence.iter().enumerate() {
            let expected = if self.is_boundary_edge(e) { 1 } else { 2 };
            if count != expected {
                return Err(format!("edge {e} has {count} incident cells, expected {expected}"));
            }
        }
        // A hanging node splits a long edge into short ones that all look like
        // boundary edges, so it shows up as a boundary-flagged node lying in
        // the interior of another boundary-flagged edge.
        let bnodes: Vec<usize> = (0..self.nodes.len()).filter(|&i| self.boundary_node[i]).collect();
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if !self.is_boundary_edge(e) {
                continue;
            }
            let (pa, pb) = (self.nodes[a], self.nodes[b]);
            let d = [pb[0] - pa[0], pb[1] - pa[1]];
            let len2 = d[0] * d[0] + d[1] * d[1];
            for &i in &bnodes {
                if i == a || i == b {
                    continue;
                }
                let p = self.nodes[i];
                let w = [p[0] - pa[0], p[1] - pa[1]];
                let s = (w[0] * d[0] + w[1] * d[1]) / len2;
                let cross = w[0] * d[1] - w[1] * d[0];
                if s > 1e-12 && s < 1.0 - 1e-12 && cross.abs() <= 1e-12 * len2 {
                    return Err(format!("node {i} hangs on edge {e}"));
                }
            }
        }
        Ok(())
    }
}
