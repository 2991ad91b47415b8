//! Lagrange shape functions on the reference triangle and global DOF layouts
//! for the velocity/pressure pairs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::mesh::Mesh;
use crate::poly::Poly;

/// Maximal number of local shape functions of any scalar space.
pub const MAX_LOCAL: usize = 7;

/// Scalar finite element spaces on one triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    P0,
    P1,
    P2,
    /// `P1` enriched with the cubic bubble (MINI velocity).
    P1Bubble,
    /// `P2` enriched with the cubic bubble.
    P2Bubble,
}

/// Local basis of a scalar space as exact polynomials in reference
/// coordinates.
///
/// Ordering: vertex functions `0..3`, then (for P2) edge functions where edge
/// `k` is opposite vertex `k`, then the bubble.
#[derive(Debug, Clone, Copy)]
pub struct LocalBasis {
    polys: [Poly; MAX_LOCAL],
    len: usize,
}

impl LocalBasis {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys[..self.len]
    }
}

/// `b_T = 27 l0 l1 l2`, normalized to one at the barycenter.
pub fn bubble() -> Poly {
    let [l0, l1, l2] = Poly::barycentric();
    (l0 * l1 * l2).scale(27.0)
}

impl Space {
    pub const ALL: [Space; 5] = [Space::P0, Space::P1, Space::P2, Space::P1Bubble, Space::P2Bubble];

    pub fn local_dim(self) -> usize {
        match self {
            Space::P0 => 1,
            Space::P1 => 3,
            Space::P2 => 6,
            Space::P1Bubble => 4,
            Space::P2Bubble => 7,
        }
    }

    pub fn has_bubble(self) -> bool {
        matches!(self, Space::P1Bubble | Space::P2Bubble)
    }

    pub fn has_edge_dofs(self) -> bool {
        matches!(self, Space::P2 | Space::P2Bubble)
    }

    /// Highest total degree of the local shape functions.
    pub fn degree(self) -> usize {
        match self {
            Space::P0 => 0,
            Space::P1 => 1,
            Space::P2 => 2,
            Space::P1Bubble | Space::P2Bubble => 3,
        }
    }

    pub fn basis(self) -> LocalBasis {
        let l = Poly::barycentric();
        let mut polys = [Poly::ZERO; MAX_LOCAL];
        let mut len = 0;
        let mut push = |p: Poly| {
            polys[len] = p;
            len += 1;
        };
        match self {
            Space::P0 => push(Poly::constant(1.0)),
            Space::P1 | Space::P1Bubble => {
                for li in l {
                    push(li);
                }
            }
            Space::P2 | Space::P2Bubble => {
                for li in l {
                    push(li * (li.scale(2.0) - Poly::constant(1.0)));
                }
                for k in 0..3 {
                    push((l[(k + 1) % 3] * l[(k + 2) % 3]).scale(4.0));
                }
            }
        }
        if self.has_bubble() {
            push(bubble());
        }
        LocalBasis { polys, len }
    }

    /// Values and reference gradients of all local shape functions at a
    /// reference point.
    pub fn eval(self, xi: f64, eta: f64) -> ShapeValues {
        let basis = self.basis();
        let mut out = ShapeValues { values: [0.0; MAX_LOCAL], grads: [[0.0; 2]; MAX_LOCAL], len: basis.len };
        for (i, p) in basis.polys().iter().enumerate() {
            out.values[i] = p.eval(xi, eta);
            out.grads[i] = [p.d_xi().eval(xi, eta), p.d_eta().eval(xi, eta)];
        }
        out
    }
}

/// Output of [`Space::eval`]; gradients are with respect to `(xi, eta)`.
#[derive(Debug, Clone, Copy)]
pub struct ShapeValues {
    pub values: [f64; MAX_LOCAL],
    pub grads: [[f64; 2]; MAX_LOCAL],
    pub len: usize,
}

/// The inf-sup stable velocity/pressure pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementPair {
    /// Taylor-Hood: continuous P2 velocity, continuous P1 pressure.
    Th2,
    /// MINI: continuous P1 + bubble velocity, continuous P1 pressure.
    Mini,
    /// Continuous P2 velocity, piecewise constant pressure.
    P2P0,
    /// Continuous P2 + bubble velocity, discontinuous P1 pressure.
    P2B,
}

/// Pressure spaces of the implemented pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PressureSpace {
    ContinuousP1,
    P0,
    DiscontinuousP1,
}

impl PressureSpace {
    pub fn scalar_space(self) -> Space {
        match self {
            PressureSpace::P0 => Space::P0,
            PressureSpace::ContinuousP1 | PressureSpace::DiscontinuousP1 => Space::P1,
        }
    }

    pub fn is_continuous(self) -> bool {
        self == PressureSpace::ContinuousP1
    }
}

impl ElementPair {
    pub const ALL: [ElementPair; 4] = [ElementPair::Th2, ElementPair::Mini, ElementPair::P2P0, ElementPair::P2B];

    pub fn velocity_space(self) -> Space {
        match self {
            ElementPair::Th2 | ElementPair::P2P0 => Space::P2,
            ElementPair::Mini => Space::P1Bubble,
            ElementPair::P2B => Space::P2Bubble,
        }
    }

    pub fn pressure_space(self) -> PressureSpace {
        match self {
            ElementPair::Th2 | ElementPair::Mini => PressureSpace::ContinuousP1,
            ElementPair::P2P0 => PressureSpace::P0,
            ElementPair::P2B => PressureSpace::DiscontinuousP1,
        }
    }

    /// Expected order `k` of the velocity gradient error.
    pub fn velocity_order(self) -> usize {
        match self {
            ElementPair::Th2 | ElementPair::P2B => 2,
            ElementPair::Mini | ElementPair::P2P0 => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ElementPair::Th2 => "TH2",
            ElementPair::Mini => "MINI",
            ElementPair::P2P0 => "P2P0",
            ElementPair::P2B => "P2B",
        }
    }

    /// Default quadrature degree for assembly: `2 (velocity degree) + 2`.
    pub fn assembly_degree(self) -> usize {
        2 * self.velocity_space().degree() + 2
    }
}

impl fmt::Display for ElementPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ElementPair {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s.to_ascii_lowercase().as_str() {
            "th2" => Ok(ElementPair::Th2),
            "mini" => Ok(ElementPair::Mini),
            "p2p0" => Ok(ElementPair::P2P0),
            "p2b" => Ok(ElementPair::P2B),
            _ => Err(()),
        }
    }
}

/// Global numbering of the velocity and pressure unknowns of a pair on a
/// mesh.
///
/// Scalar velocity DOFs are numbered nodes first, then edges, then cells;
/// the vector velocity stores the x components before the y components.
/// Pressure DOFs follow the pressure space: nodes, cells, or three per cell.
#[derive(Debug, Clone)]
pub struct DofLayout {
    pair: ElementPair,
    node_dofs: bool,
    edge_offset: Option<usize>,
    cell_offset: Option<usize>,
    n_scalar: usize,
    n_pressure: usize,
    dirichlet: Vec<bool>,
    points: Vec<[f64; 2]>,
}

impl DofLayout {
    pub fn new(pair: ElementPair, mesh: &Mesh) -> Self {
        let space = pair.velocity_space();
        let mut n = mesh.num_nodes();
        let edge_offset = space.has_edge_dofs().then(|| {
            let off = n;
            n += mesh.num_edges();
            off
        });
        let cell_offset = space.has_bubble().then(|| {
            let off = n;
            n += mesh.num_cells();
            off
        });
        let mut dirichlet = vec![false; n];
        let mut points = Vec::with_capacity(n);
        for i in 0..mesh.num_nodes() {
            dirichlet[i] = mesh.is_boundary_node(i);
            points.push(mesh.node(i));
        }
        if let Some(off) = edge_offset {
            for e in 0..mesh.num_edges() {
                dirichlet[off + e] = mesh.is_boundary_edge(e);
                points.push(mesh.edge_point(e, 0.5));
            }
        }
        if cell_offset.is_some() {
            for t in 0..mesh.num_cells() {
                points.push(mesh.centroid(t));
            }
        }
        let n_pressure = match pair.pressure_space() {
            PressureSpace::ContinuousP1 => mesh.num_nodes(),
            PressureSpace::P0 => mesh.num_cells(),
            PressureSpace::DiscontinuousP1 => 3 * mesh.num_cells(),
        };
        DofLayout { pair, node_dofs: true, edge_offset, cell_offset, n_scalar: n, n_pressure, dirichlet, points }
    }

    pub fn pair(&self) -> ElementPair {
        self.pair
    }

    /// Scalar velocity DOFs per component.
    pub fn scalar_dofs(&self) -> usize {
        self.n_scalar
    }

    pub fn velocity_dofs(&self) -> usize {
        2 * self.n_scalar
    }

    pub fn pressure_dofs(&self) -> usize {
        self.n_pressure
    }

    /// Velocity plus pressure DOFs, constrained ones included.
    pub fn ndof(&self) -> usize {
        self.velocity_dofs() + self.n_pressure
    }

    /// Whether scalar velocity DOF `s` carries Dirichlet data.
    pub fn is_dirichlet(&self, s: usize) -> bool {
        self.dirichlet[s]
    }

    /// Interpolation point of scalar velocity DOF `s` (bubbles: centroid).
    pub fn point(&self, s: usize) -> [f64; 2] {
        self.points[s]
    }

    /// Whether scalar velocity DOF `s` is nodal (Lagrange point value).
    pub fn is_bubble(&self, s: usize) -> bool {
        self.cell_offset.is_some_and(|off| s >= off)
    }

    /// Scalar velocity DOFs of cell `t` in local basis order.
    pub fn cell_velocity(&self, t: usize, mesh: &Mesh) -> ([usize; MAX_LOCAL], usize) {
        let mut out = [0; MAX_LOCAL];
        let mut len = 0;
        if self.node_dofs {
            for v in mesh.cell(t) {
                out[len] = v;
                len += 1;
            }
        }
        if let Some(off) = self.edge_offset {
            for e in mesh.cell_edges(t) {
                out[len] = off + e;
                len += 1;
            }
        }
        if let Some(off) = self.cell_offset {
            out[len] = off + t;
            len += 1;
        }
        (out, len)
    }

    /// Pressure DOFs of cell `t` in local basis order.
    pub fn cell_pressure(&self, t: usize, mesh: &Mesh) -> ([usize; 3], usize) {
        match self.pair.pressure_space() {
            PressureSpace::ContinuousP1 => (mesh.cell(t), 3),
            PressureSpace::P0 => ([t, 0, 0], 1),
            PressureSpace::DiscontinuousP1 => ([3 * t, 3 * t + 1, 3 * t + 2], 3),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::build_unit_square;

    fn sample_points() -> [[f64; 2]; 10] {
        [
            [0.1, 0.2],
            [0.3, 0.3],
            [0.05, 0.9],
            [0.7, 0.1],
            [0.25, 0.6],
            [0.45, 0.45],
            [0.01, 0.01],
            [0.6, 0.3],
            [0.33, 0.12],
            [0.15, 0.75],
        ]
    }

    #[test]
    fn lagrange_nodal_property() {
        let verts = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        let s = Space::P1.eval(0.0, 0.0);
        assert_eq!(&s.values[..3], &[1.0, 0.0, 0.0]);
        for (i, v) in verts.iter().enumerate() {
            let s = Space::P2.eval(v[0], v[1]);
            for j in 0..6 {
                assert!((s.values[j] - if i == j { 1.0 } else { 0.0 }).abs() < 1e-15);
            }
        }
        let mids = [[0.5, 0.5], [0.0, 0.5], [0.5, 0.0]];
        for (k, m) in mids.iter().enumerate() {
            let s = Space::P2.eval(m[0], m[1]);
            for j in 0..6 {
                assert!((s.values[j] - if j == 3 + k { 1.0 } else { 0.0 }).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn bubble_is_one_at_barycenter_and_vanishes_on_boundary() {
        let b = bubble();
        assert!((b.eval(1.0 / 3.0, 1.0 / 3.0) - 1.0).abs() < 1e-15);
        for t in [0.0, 0.3, 0.8, 1.0] {
            assert!(b.eval(t, 0.0).abs() < 1e-16);
            assert!(b.eval(0.0, t).abs() < 1e-16);
            assert!(b.eval(t, 1.0 - t).abs() < 1e-14);
        }
    }

    #[test]
    fn partition_of_unity() {
        for space in [Space::P0, Space::P1, Space::P2] {
            for [x, y] in sample_points() {
                let s = space.eval(x, y);
                let sum: f64 = s.values[..s.len].iter().sum();
                assert!((sum - 1.0).abs() < 1e-14, "{space:?}");
            }
        }
    }

    #[test]
    fn gradients_match_central_differences() {
        let h = 1e-6;
        for space in Space::ALL {
            for [x, y] in sample_points() {
                let s = space.eval(x, y);
                let px = space.eval(x + h, y);
                let mx = space.eval(x - h, y);
                let py = space.eval(x, y + h);
                let my = space.eval(x, y - h);
                for i in 0..s.len {
                    let gx = (px.values[i] - mx.values[i]) / (2.0 * h);
                    let gy = (py.values[i] - my.values[i]) / (2.0 * h);
                    assert!((gx - s.grads[i][0]).abs() < 1e-6, "{space:?} {i}");
                    assert!((gy - s.grads[i][1]).abs() < 1e-6, "{space:?} {i}");
                }
            }
        }
    }

    #[test]
    fn dof_counts_on_two_cell_square() {
        let mesh = build_unit_square(1).unwrap();
        let th2 = DofLayout::new(ElementPair::Th2, &mesh);
        assert_eq!(th2.velocity_dofs(), 2 * (4 + 5));
        assert_eq!(th2.velocity_dofs(), 18);
        assert_eq!(th2.pressure_dofs(), 4);
        assert_eq!(th2.ndof(), 22);
        let p2p0 = DofLayout::new(ElementPair::P2P0, &mesh);
        assert_eq!(p2p0.pressure_dofs(), 2);
        let mini = DofLayout::new(ElementPair::Mini, &mesh);
        assert_eq!(mini.velocity_dofs(), 12);
        let p2b = DofLayout::new(ElementPair::P2B, &mesh);
        assert_eq!(p2b.velocity_dofs(), 2 * (4 + 5 + 2));
        assert_eq!(p2b.pressure_dofs(), 6);
        // every vertex and edge of the two-cell square is on the boundary
        // except the diagonal
        let constrained = (0..th2.scalar_dofs()).filter(|&s| th2.is_dirichlet(s)).count();
        assert_eq!(constrained, 4 + 4);
    }

    #[test]
    fn cell_dofs_cover_layout() {
        let mesh = build_unit_square(3).unwrap();
        for pair in ElementPair::ALL {
            let layout = DofLayout::new(pair, &mesh);
            let mut seen = vec![false; layout.scalar_dofs()];
            let mut pseen = vec![false; layout.pressure_dofs()];
            for t in 0..mesh.num_cells() {
                let (dofs, n) = layout.cell_velocity(t, &mesh);
                assert_eq!(n, pair.velocity_space().local_dim());
                for &d in &dofs[..n] {
                    seen[d] = true;
                }
                let (p, np) = layout.cell_pressure(t, &mesh);
                for &d in &p[..np] {
                    pseen[d] = true;
                }
            }
            assert!(seen.iter().all(|&s| s), "{pair}");
            assert!(pseen.iter().all(|&s| s), "{pair}");
        }
    }

    #[test]
    fn pair_parsing() {
        for pair in ElementPair::ALL {
            assert_eq!(pair.name().parse::<ElementPair>(), Ok(pair));
        }
        assert!("p3".parse::<ElementPair>().is_err());
    }
}
