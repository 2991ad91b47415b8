//! Benchmark problems with exact solutions.
//!
//! Gradients are stored row-wise: `grad[i][j] = d u_i / d x_j`.

use core::fmt;
use core::str::FromStr;

use crate::error::Result;
use crate::math::{self, PI};
use crate::mesh::{build_lshape, build_unit_square, Mesh};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    UnitSquare,
    LShape,
}

impl Domain {
    /// Structured mesh of the domain with `n` subdivisions per unit length.
    pub fn mesh(self, n: usize) -> Result<Mesh> {
        match self {
            Domain::UnitSquare => build_unit_square(n),
            Domain::LShape => build_lshape(n),
        }
    }

    /// Coarse starting mesh for refinement studies.
    pub fn initial_mesh(self) -> Mesh {
        match self {
            Domain::UnitSquare => build_unit_square(4),
            Domain::LShape => build_lshape(2),
        }
        .expect("positive subdivision")
    }

    pub fn area(self) -> f64 {
        match self {
            Domain::UnitSquare => 1.0,
            Domain::LShape => 3.0,
        }
    }
}

/// Identifier of a registered problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemId {
    Smooth,
    LShape,
    Hydrostatic,
}

impl ProblemId {
    pub fn name(self) -> &'static str {
        match self {
            ProblemId::Smooth => "smooth",
            ProblemId::LShape => "lshape",
            ProblemId::Hydrostatic => "hydrostatic",
        }
    }

    pub fn spec(self, nu: f64) -> ProblemSpec {
        match self {
            ProblemId::Smooth => ProblemSpec::smooth(nu),
            ProblemId::LShape => ProblemSpec::lshape(nu),
            ProblemId::Hydrostatic => ProblemSpec::hydrostatic(nu, Potential::QUINTIC),
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemId {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "smooth" => Ok(ProblemId::Smooth),
            "lshape" => Ok(ProblemId::LShape),
            "hydrostatic" => Ok(ProblemId::Hydrostatic),
            _ => Err(()),
        }
    }
}

/// Scalar potential `q` of a hydrostatic force `f = grad q`.
#[derive(Debug, Clone, Copy)]
pub struct Potential {
    pub value: fn([f64; 2]) -> f64,
    pub grad: fn([f64; 2]) -> [f64; 2],
    /// Mean of `q` over the unit square.
    pub mean: f64,
}

impl Potential {
    /// `q = x^5 + y^5`.
    pub const QUINTIC: Potential = Potential {
        value: |[x, y]| math::powi(x, 5) + math::powi(y, 5),
        grad: |[x, y]| [5.0 * math::powi(x, 4), 5.0 * math::powi(y, 4)],
        mean: 1.0 / 3.0,
    };

    pub const CONSTANT: Potential = Potential { value: |_| 1.0, grad: |_| [0.0, 0.0], mean: 1.0 };
}

#[derive(Debug, Clone, Copy)]
enum Kind {
    Smooth,
    LShape,
    Hydrostatic(Potential),
}

/// Viscosity plus data and (optional) exact solution of a Stokes problem.
#[derive(Debug, Clone, Copy)]
pub struct ProblemSpec {
    nu: f64,
    kind: Kind,
}

impl ProblemSpec {
    /// `u = curl psi` with `psi = x^2 (x-1)^2 y^2 (y-1)^2`,
    /// `p = x^5 + y^5 - 1/3` on the unit square.
    pub fn smooth(nu: f64) -> Self {
        ProblemSpec { nu, kind: Kind::Smooth }
    }

    /// Corner singularity on the L-shape with `f = grad sin(pi x y)`.
    pub fn lshape(nu: f64) -> Self {
        ProblemSpec { nu, kind: Kind::LShape }
    }

    /// `f = grad q`, `u = 0`, `p = q - mean(q)` on the unit square.
    pub fn hydrostatic(nu: f64, q: Potential) -> Self {
        ProblemSpec { nu, kind: Kind::Hydrostatic(q) }
    }

    pub fn from_id(id: &str, nu: f64) -> Option<Self> {
        id.parse::<ProblemId>().ok().map(|p| p.spec(nu))
    }

    pub fn id(&self) -> ProblemId {
        match self.kind {
            Kind::Smooth => ProblemId::Smooth,
            Kind::LShape => ProblemId::LShape,
            Kind::Hydrostatic(_) => ProblemId::Hydrostatic,
        }
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn domain(&self) -> Domain {
        match self.kind {
            Kind::LShape => Domain::LShape,
            _ => Domain::UnitSquare,
        }
    }

    /// Point where the exact velocity gradient is unbounded.
    pub fn singular_point(&self) -> Option<[f64; 2]> {
        match self.kind {
            Kind::LShape => Some([0.0, 0.0]),
            _ => None,
        }
    }

    pub fn force(&self, x: [f64; 2]) -> [f64; 2] {
        match self.kind {
            Kind::Smooth => {
                let lap = smooth::laplace_u(x);
                let gp = [5.0 * math::powi(x[0], 4), 5.0 * math::powi(x[1], 4)];
                [-self.nu * lap[0] + gp[0], -self.nu * lap[1] + gp[1]]
            }
            Kind::LShape => {
                let c = math::cos(PI * x[0] * x[1]);
                [PI * x[1] * c, PI * x[0] * c]
            }
            Kind::Hydrostatic(q) => (q.grad)(x),
        }
    }

    /// Scalar curl `d f1/dx - d f0/dy` of the body force.
    pub fn curl_force(&self, x: [f64; 2]) -> f64 {
        match self.kind {
            Kind::Smooth => -self.nu * smooth::bilaplace_psi(x),
            Kind::LShape | Kind::Hydrostatic(_) => 0.0,
        }
    }

    /// Dirichlet data: the trace of the exact velocity.
    pub fn dirichlet(&self, x: [f64; 2]) -> [f64; 2] {
        self.exact_u(x)
    }

    pub fn exact_u(&self, x: [f64; 2]) -> [f64; 2] {
        match self.kind {
            Kind::Smooth => smooth::u(x),
            Kind::LShape => lshape::u(x),
            Kind::Hydrostatic(_) => [0.0; 2],
        }
    }

    pub fn exact_grad_u(&self, x: [f64; 2]) -> [[f64; 2]; 2] {
        match self.kind {
            Kind::Smooth => smooth::grad_u(x),
            Kind::LShape => lshape::grad_u(x),
            Kind::Hydrostatic(_) => [[0.0; 2]; 2],
        }
    }

    /// Exact pressure; normalized to zero mean on the unit square only.
    pub fn exact_p(&self, x: [f64; 2]) -> f64 {
        match self.kind {
            Kind::Smooth => math::powi(x[0], 5) + math::powi(x[1], 5) - 1.0 / 3.0,
            Kind::LShape => self.nu * lshape::p0_unit(x) + math::sin(PI * x[0] * x[1]),
            Kind::Hydrostatic(q) => (q.value)(x) - q.mean,
        }
    }
}

pub(crate) mod smooth {
    //! `psi = g(x) g(y)` with `g(t) = t^2 (t-1)^2`.

    fn g(t: f64) -> [f64; 5] {
        [
            t * t * (t - 1.0) * (t - 1.0),
            4.0 * t * t * t - 6.0 * t * t + 2.0 * t,
            12.0 * t * t - 12.0 * t + 2.0,
            24.0 * t - 12.0,
            24.0,
        ]
    }

    pub fn u([x, y]: [f64; 2]) -> [f64; 2] {
        let (gx, gy) = (g(x), g(y));
        [-gx[0] * gy[1], gx[1] * gy[0]]
    }

    pub fn grad_u([x, y]: [f64; 2]) -> [[f64; 2]; 2] {
        let (gx, gy) = (g(x), g(y));
        [[-gx[1] * gy[1], -gx[0] * gy[2]], [gx[2] * gy[0], gx[1] * gy[1]]]
    }

    pub fn laplace_u([x, y]: [f64; 2]) -> [f64; 2] {
        let (gx, gy) = (g(x), g(y));
        [-(gx[2] * gy[1] + gx[0] * gy[3]), gx[3] * gy[0] + gx[1] * gy[2]]
    }

    pub fn bilaplace_psi([x, y]: [f64; 2]) -> f64 {
        let (gx, gy) = (g(x), g(y));
        gx[4] * gy[0] + 2.0 * gx[2] * gy[2] + gx[0] * gy[4]
    }

    #[cfg(test)]
    pub fn psi([x, y]: [f64; 2]) -> f64 {
        g(x)[0] * g(y)[0]
    }
}

pub(crate) mod lshape {
    //! Corner singularity of the reentrant corner with opening `3 pi / 2`.

    use crate::math::{self, PI};

    pub const ALPHA: f64 = 856399.0 / 1572864.0;
    pub const OMEGA: f64 = 1.5 * PI;

    /// Polar coordinates with the angle in `[0, 2 pi)`, i.e. `[0, 3 pi / 2]`
    /// on the domain.
    pub fn polar([x, y]: [f64; 2]) -> (f64, f64) {
        let r = math::hypot(x, y);
        let mut phi = math::atan2(y, x);
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        (r, phi)
    }

    /// `psi(phi)` and its first three derivatives.
    pub fn psi(phi: f64) -> [f64; 4] {
        let a = ALPHA;
        let c = math::cos(a * OMEGA);
        let (kp, km) = (a + 1.0, a - 1.0);
        let (sp, cp) = (math::sin(kp * phi), math::cos(kp * phi));
        let (sm, cm) = (math::sin(km * phi), math::cos(km * phi));
        [
            sp * c / kp - cp - sm * c / km + cm,
            cp * c + kp * sp - cm * c - km * sm,
            -kp * sp * c + kp * kp * cp + km * sm * c - km * km * cm,
            -kp * kp * cp * c - kp * kp * kp * sp + km * km * cm * c + km * km * km * sm,
        ]
    }

    /// Angular parts `U(phi)` with `u = r^alpha U` and their derivatives.
    fn angular(phi: f64) -> ([f64; 2], [f64; 2]) {
        let a = ALPHA;
        let [p0, p1, p2, _] = psi(phi);
        let (s, c) = (math::sin(phi), math::cos(phi));
        let val = [(a + 1.0) * s * p0 + c * p1, -(a + 1.0) * c * p0 + s * p1];
        let der = [
            (a + 1.0) * c * p0 + a * s * p1 + c * p2,
            (a + 1.0) * s * p0 - a * c * p1 + s * p2,
        ];
        (val, der)
    }

    pub fn u(x: [f64; 2]) -> [f64; 2] {
        let (r, phi) = polar(x);
        if r == 0.0 {
            return [0.0; 2];
        }
        let (v, _) = angular(phi);
        let ra = math::pow(r, ALPHA);
        [ra * v[0], ra * v[1]]
    }

    pub fn grad_u(x: [f64; 2]) -> [[f64; 2]; 2] {
        let (r, phi) = polar(x);
        if r == 0.0 {
            return [[0.0; 2]; 2];
        }
        let (v, d) = angular(phi);
        let (s, c) = (math::sin(phi), math::cos(phi));
        let ra = math::pow(r, ALPHA - 1.0);
        let mut g = [[0.0; 2]; 2];
        for i in 0..2 {
            g[i][0] = ra * (ALPHA * c * v[i] - s * d[i]);
            g[i][1] = ra * (ALPHA * s * v[i] + c * d[i]);
        }
        g
    }

    /// Singular pressure divided by `nu`; `-nu lap u + grad (nu p0_unit) = 0`.
    pub fn p0_unit(x: [f64; 2]) -> f64 {
        let (r, phi) = polar(x);
        if r == 0.0 {
            return 0.0;
        }
        let [_, p1, _, p3] = psi(phi);
        -math::pow(r, ALPHA - 1.0) * ((1.0 + ALPHA) * (1.0 + ALPHA) * p1 + p3) / (1.0 - ALPHA)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{RngExt, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::vec::Vec;

    fn random_points(domain: Domain, n: usize, seed: u64) -> Vec<[f64; 2]> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        while out.len() < n {
            let p = match domain {
                Domain::UnitSquare => [rng.random_range(0.05..0.95), rng.random_range(0.05..0.95)],
                Domain::LShape => [rng.random_range(-0.95..0.95), rng.random_range(-0.95..0.95)],
            };
            let inside = domain == Domain::UnitSquare || !(p[0] > 0.0 && p[1] < 0.0);
            if inside && math::hypot(p[0], p[1]) > 0.1 {
                out.push(p);
            }
        }
        out
    }

    fn fd_grad(f: impl Fn([f64; 2]) -> f64, x: [f64; 2], h: f64) -> [f64; 2] {
        [
            (f([x[0] + h, x[1]]) - f([x[0] - h, x[1]])) / (2.0 * h),
            (f([x[0], x[1] + h]) - f([x[0], x[1] - h])) / (2.0 * h),
        ]
    }

    fn fd_laplace(f: impl Fn([f64; 2]) -> f64, x: [f64; 2], h: f64) -> f64 {
        (f([x[0] + h, x[1]]) + f([x[0] - h, x[1]]) + f([x[0], x[1] + h]) + f([x[0], x[1] - h]) - 4.0 * f(x)) / (h * h)
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * (1.0 + b.abs())
    }

    #[test]
    fn smooth_velocity_is_curl_of_stream_function() {
        for x in random_points(Domain::UnitSquare, 20, 1) {
            let g = fd_grad(smooth::psi, x, 1e-5);
            let u = smooth::u(x);
            assert!(close(u[0], -g[1], 1e-8) && close(u[1], g[0], 1e-8));
        }
    }

    #[test]
    fn smooth_derivatives_match_finite_differences() {
        for x in random_points(Domain::UnitSquare, 20, 2) {
            let grad = smooth::grad_u(x);
            let lap = smooth::laplace_u(x);
            for i in 0..2 {
                let gi = fd_grad(|p| smooth::u(p)[i], x, 1e-5);
                assert!(close(grad[i][0], gi[0], 1e-6) && close(grad[i][1], gi[1], 1e-6));
                let li = fd_laplace(|p| smooth::u(p)[i], x, 1e-4);
                assert!(close(lap[i], li, 1e-6), "{} vs {}", lap[i], li);
            }
            let bl = fd_laplace(|p| fd_laplace(smooth::psi, p, 1e-3), x, 1e-3);
            assert!(close(smooth::bilaplace_psi(x), bl, 1e-4));
            let div = grad[0][0] + grad[1][1];
            assert!(div.abs() < 1e-14);
        }
    }

    #[test]
    fn smooth_problem_is_consistent() {
        let nu = 0.37;
        let p = ProblemSpec::smooth(nu);
        for x in random_points(Domain::UnitSquare, 20, 3) {
            let f = p.force(x);
            let gp = fd_grad(|y| p.exact_p(y), x, 1e-5);
            for i in 0..2 {
                let lap = fd_laplace(|y| p.exact_u(y)[i], x, 1e-4);
                assert!(close(-nu * lap + gp[i], f[i], 1e-6));
            }
            let cf = fd_grad(|y| p.force(y)[1], x, 1e-5)[0] - fd_grad(|y| p.force(y)[0], x, 1e-5)[1];
            assert!(close(p.curl_force(x), cf, 1e-6));
        }
        // boundary values and zero mean pressure
        for t in [0.0, 0.25, 0.5, 0.9, 1.0] {
            for x in [[t, 0.0], [t, 1.0], [0.0, t], [1.0, t]] {
                assert_eq!(p.exact_u(x), [0.0, 0.0]);
            }
        }
        let rule = crate::quadrature::triangle_rule(10).unwrap();
        let mesh = build_unit_square(2).unwrap();
        let mut mean = 0.0;
        for t in 0..mesh.num_cells() {
            let g = mesh.geometry(t);
            for (r, w) in rule.iter() {
                mean += w * g.det * p.exact_p(g.to_physical(r[0], r[1]));
            }
        }
        assert!(mean.abs() < 1e-15);
    }

    #[test]
    fn lshape_psi_derivatives() {
        for k in 1..20 {
            let phi = k as f64 * lshape::OMEGA / 20.0;
            let h = 1e-5;
            let (p, pp, pm) = (lshape::psi(phi), lshape::psi(phi + h), lshape::psi(phi - h));
            for d in 0..3 {
                assert!(close(p[d + 1], (pp[d] - pm[d]) / (2.0 * h), 1e-7));
            }
        }
        let at = |phi| lshape::psi(phi);
        assert!(at(0.0)[0].abs() < 1e-14 && at(0.0)[1].abs() < 1e-14);
        assert!(at(lshape::OMEGA)[0].abs() < 1e-5 && at(lshape::OMEGA)[1].abs() < 1e-5);
    }

    #[test]
    fn lshape_velocity_is_divergence_free_and_stokes() {
        let nu = 1e-3;
        let p = ProblemSpec::lshape(nu);
        for x in random_points(Domain::LShape, 20, 4) {
            let g = lshape::grad_u(x);
            assert!((g[0][0] + g[1][1]).abs() < 1e-9);
            let h = 1e-5;
            for i in 0..2 {
                let fd = fd_grad(|y| lshape::u(y)[i], x, h);
                assert!(close(g[i][0], fd[0], 1e-6) && close(g[i][1], fd[1], 1e-6));
                let lap = fd_laplace(|y| lshape::u(y)[i], x, 1e-4);
                let gp0 = fd_grad(|y| nu * lshape::p0_unit(y), x, h);
                assert!((-nu * lap + gp0[i]).abs() <= 1e-6 * (1.0 + gp0[i].abs()), "{x:?}");
            }
            // f = grad p_+, and p = p0 + p_+ closes the momentum equation
            let gp = fd_grad(|y| p.exact_p(y), x, h);
            let f = p.force(x);
            for i in 0..2 {
                let lap = fd_laplace(|y| p.exact_u(y)[i], x, 1e-4);
                assert!((-nu * lap + gp[i] - f[i]).abs() <= 1e-6 * (1.0 + f[i].abs()));
            }
            assert_eq!(p.curl_force(x), 0.0);
        }
    }

    #[test]
    fn lshape_boundary_and_branch_cut() {
        let p = ProblemSpec::lshape(1.0);
        // legs of the reentrant corner
        for t in [0.1, 0.5, 1.0] {
            let a = p.exact_u([t, 0.0]);
            let b = p.exact_u([0.0, -t]);
            assert!(math::hypot(a[0], a[1]) < 1e-5 && math::hypot(b[0], b[1]) < 1e-5);
        }
        assert_eq!(p.exact_u([0.0, 0.0]), [0.0, 0.0]);
        // continuity across the negative x-axis, where atan2 jumps
        let above = p.exact_u([-0.5, 1e-12]);
        let below = p.exact_u([-0.5, -1e-12]);
        assert!((above[0] - below[0]).abs() < 1e-9 && (above[1] - below[1]).abs() < 1e-9);
    }

    #[test]
    fn hydrostatic_data() {
        let p = ProblemSpec::hydrostatic(1e-3, Potential::QUINTIC);
        let x = [0.3, 0.7];
        assert_eq!(p.force(x), [5.0 * 0.3f64.powi(4), 5.0 * 0.7f64.powi(4)]);
        assert_eq!(p.exact_u(x), [0.0; 2]);
        assert_eq!(p.curl_force(x), 0.0);
        let c = ProblemSpec::hydrostatic(1.0, Potential::CONSTANT);
        assert_eq!(c.force(x), [0.0; 2]);
        assert_eq!(c.exact_p(x), 0.0);
    }

    #[test]
    fn registry() {
        for id in ["smooth", "lshape", "hydrostatic"] {
            let p = ProblemSpec::from_id(id, 0.5).unwrap();
            assert_eq!(p.id().name(), id);
            assert_eq!(p.nu(), 0.5);
        }
        assert!(ProblemSpec::from_id("cavity", 1.0).is_none());
        assert_eq!(ProblemSpec::lshape(1.0).domain(), Domain::LShape);
    }
}
