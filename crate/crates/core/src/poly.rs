//! Small dense bivariate polynomials in reference coordinates `(xi, eta)`.
//!
//! Every shape function used here is a polynomial of degree at most 3 on the
//! reference triangle, and cells are affine images of it, so physical
//! derivatives of any order are again polynomials in `(xi, eta)`. Working with
//! exact polynomial objects lets the estimators evaluate `laplace u_h` and
//! `curl laplace u_h` without finite differences.

use core::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Maximal total degree representable.
pub const MAX_DEG: usize = 4;
const N: usize = MAX_DEG + 1;

/// `sum c[i][j] xi^i eta^j` with `i + j <= MAX_DEG`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Poly {
    c: [[f64; N]; N],
}

impl Poly {
    pub const ZERO: Poly = Poly { c: [[0.0; N]; N] };

    pub fn constant(v: f64) -> Self {
        let mut p = Self::ZERO;
        p.c[0][0] = v;
        p
    }

    /// `coeff * xi^i * eta^j`.
    pub fn monomial(i: usize, j: usize, coeff: f64) -> Self {
        assert!(i + j <= MAX_DEG, "monomial degree {} exceeds {}", i + j, MAX_DEG);
        let mut p = Self::ZERO;
        p.c[i][j] = coeff;
        p
    }

    pub fn xi() -> Self {
        Self::monomial(1, 0, 1.0)
    }

    pub fn eta() -> Self {
        Self::monomial(0, 1, 1.0)
    }

    /// Barycentric coordinates `[1 - xi - eta, xi, eta]`.
    pub fn barycentric() -> [Self; 3] {
        let mut l0 = Self::constant(1.0);
        l0.c[1][0] = -1.0;
        l0.c[0][1] = -1.0;
        [l0, Self::xi(), Self::eta()]
    }

    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        self.c[i][j]
    }

    pub fn degree(&self) -> Option<usize> {
        let mut deg = None;
        for i in 0..N {
            for j in 0..N - i {
                if self.c[i][j] != 0.0 {
                    deg = Some(deg.map_or(i + j, |d: usize| d.max(i + j)));
                }
            }
        }
        deg
    }

    pub fn eval(&self, xi: f64, eta: f64) -> f64 {
        // Horner in xi of Horner-in-eta inner polynomials.
        let mut acc = 0.0;
        for i in (0..N).rev() {
            let mut inner = 0.0;
            for j in (0..N - i).rev() {
                inner = inner * eta + self.c[i][j];
            }
            acc = acc * xi + inner;
        }
        acc
    }

    pub fn d_xi(&self) -> Self {
        let mut p = Self::ZERO;
        for i in 1..N {
            for j in 0..N - i {
                p.c[i - 1][j] = self.c[i][j] * i as f64;
            }
        }
        p
    }

    pub fn d_eta(&self) -> Self {
        let mut p = Self::ZERO;
        for i in 0..N {
            for j in 1..N - i {
                p.c[i][j - 1] = self.c[i][j] * j as f64;
            }
        }
        p
    }

    pub fn scale(mut self, s: f64) -> Self {
        for row in self.c.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        self
    }

    /// `self + s * other`.
    pub fn axpy(mut self, s: f64, other: &Self) -> Self {
        for i in 0..N {
            for j in 0..N - i {
                self.c[i][j] += s * other.c[i][j];
            }
        }
        self
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        self.axpy(1.0, &rhs)
    }
}

impl AddAssign for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        *self = self.axpy(1.0, &rhs);
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self.axpy(-1.0, &rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1.0)
    }
}

impl Mul for Poly {
    type Output = Poly;
    /// Panics if the product degree exceeds [`MAX_DEG`].
    fn mul(self, rhs: Poly) -> Poly {
        let mut p = Poly::ZERO;
        for i in 0..N {
            for j in 0..N - i {
                let a = self.c[i][j];
                if a == 0.0 {
                    continue;
                }
                for k in 0..N {
                    for l in 0..N - k {
                        let b = rhs.c[k][l];
                        if b == 0.0 {
                            continue;
                        }
                        assert!(i + j + k + l <= MAX_DEG, "polynomial product degree overflow");
                        p.c[i + k][j + l] += a * b;
                    }
                }
            }
        }
        p
    }
}

/// Physical derivative operators of an affine cell: with `xi = G (x - x0)`,
/// `d/dx = G[0][0] d/dxi + G[1][0] d/deta` and
/// `d/dy = G[0][1] d/dxi + G[1][1] d/deta`.
#[derive(Debug, Clone, Copy)]
pub struct Chain {
    pub inv_jac: [[f64; 2]; 2],
}

impl Chain {
    pub fn dx(&self, p: &Poly) -> Poly {
        p.d_xi().scale(self.inv_jac[0][0]).axpy(self.inv_jac[1][0], &p.d_eta())
    }

    pub fn dy(&self, p: &Poly) -> Poly {
        p.d_xi().scale(self.inv_jac[0][1]).axpy(self.inv_jac[1][1], &p.d_eta())
    }

    pub fn grad(&self, p: &Poly) -> [Poly; 2] {
        [self.dx(p), self.dy(p)]
    }

    pub fn laplace(&self, p: &Poly) -> Poly {
        let dx = self.dx(p);
        let dy = self.dy(p);
        self.dx(&dx) + self.dy(&dy)
    }

    /// Scalar curl of a vector field, `d w1/dx - d w0/dy`.
    pub fn curl(&self, w: &[Poly; 2]) -> Poly {
        self.dx(&w[1]) - self.dy(&w[0])
    }

    /// Vector curl of a scalar field, `(-d p/dy, d p/dx)`.
    pub fn rot(&self, p: &Poly) -> [Poly; 2] {
        [-self.dy(p), self.dx(p)]
    }

    pub fn div(&self, w: &[Poly; 2]) -> Poly {
        self.dx(&w[0]) + self.dy(&w[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_derivatives() {
        // p = 1 + 2 xi - eta + 3 xi^2 eta
        let p = Poly::constant(1.0)
            + Poly::monomial(1, 0, 2.0)
            + Poly::monomial(0, 1, -1.0)
            + Poly::monomial(2, 1, 3.0);
        let (x, y) = (0.3, 0.45);
        assert!((p.eval(x, y) - (1.0 + 0.6 - 0.45 + 3.0 * 0.09 * 0.45)).abs() < 1e-15);
        assert!((p.d_xi().eval(x, y) - (2.0 + 6.0 * x * y)).abs() < 1e-15);
        assert!((p.d_eta().eval(x, y) - (-1.0 + 3.0 * x * x)).abs() < 1e-15);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(Poly::ZERO.degree(), None);
    }

    #[test]
    fn product_matches_pointwise_product() {
        let [l0, l1, l2] = Poly::barycentric();
        let b = l0 * l1 * l2;
        let (x, y) = (0.2, 0.7);
        assert!((b.eval(x, y) - (1.0 - x - y) * x * y).abs() < 1e-16);
        assert_eq!(b.degree(), Some(3));
    }

    #[test]
    fn chain_rule_on_sheared_cell() {
        // Cell with vertices (0,0), (2,0), (1,1): x = 2 xi + eta, y = eta.
        // inverse: xi = (x - y) / 2, eta = y.
        let chain = Chain { inv_jac: [[0.5, -0.5], [0.0, 1.0]] };
        // p(xi, eta) = xi^2 corresponds to ((x - y)/2)^2
        let p = Poly::monomial(2, 0, 1.0);
        let (xi, eta) = (0.25, 0.5);
        let (x, y) = (2.0 * xi + eta, eta);
        assert!((chain.dx(&p).eval(xi, eta) - (x - y) / 2.0).abs() < 1e-15);
        assert!((chain.dy(&p).eval(xi, eta) + (x - y) / 2.0).abs() < 1e-15);
        assert!((chain.laplace(&p).eval(xi, eta) - 1.0).abs() < 1e-15);
    }
}
