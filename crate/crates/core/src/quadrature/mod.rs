//! Tabulated quadrature on the reference triangle and the unit interval.
//!
//! Triangle rules are fully symmetric with positive weights and interior
//! points; edge rules are Gauss-Legendre mapped to `[0, 1]`.

mod tables;

use crate::error::{Error, Result};

/// Highest polynomial degree with a shipped rule.
pub const MAX_DEGREE: usize = 12;

#[derive(Debug, Clone, Copy)]
enum Kind {
    Triangle(&'static [[f64; 3]]),
    Edge(&'static [[f64; 2]]),
}

/// A quadrature rule on the reference triangle `{(xi, eta): xi, eta >= 0,
/// xi + eta <= 1}` (weights sum to 1/2) or on `[0, 1]` (weights sum to 1).
#[derive(Debug, Clone, Copy)]
pub struct QuadRule {
    kind: Kind,
    degree: usize,
}

impl QuadRule {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        match self.kind {
            Kind::Triangle(t) => t.len(),
            Kind::Edge(t) => t.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_triangle(&self) -> bool {
        matches!(self.kind, Kind::Triangle(_))
    }

    /// Reference point `i`: `[xi, eta]` for triangles, `[t, 0]` for edges.
    #[inline]
    pub fn point(&self, i: usize) -> [f64; 2] {
        match self.kind {
            Kind::Triangle(t) => [t[i][0], t[i][1]],
            Kind::Edge(t) => [t[i][0], 0.0],
        }
    }

    /// Barycentric coordinates of triangle point `i`, ordered so that the
    /// first coordinate belongs to the vertex at the origin.
    pub fn barycentric(&self, i: usize) -> [f64; 3] {
        let [xi, eta] = self.point(i);
        [1.0 - xi - eta, xi, eta]
    }

    #[inline]
    pub fn weight(&self, i: usize) -> f64 {
        match self.kind {
            Kind::Triangle(t) => t[i][2],
            Kind::Edge(t) => t[i][1],
        }
    }

    /// `(point, weight)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = ([f64; 2], f64)> + '_ {
        (0..self.len()).map(move |i| (self.point(i), self.weight(i)))
    }
}

/// Rule on the reference triangle exact for all polynomials of total degree
/// `degree`.
pub fn triangle_rule(degree: usize) -> Result<QuadRule> {
    if !(1..=MAX_DEGREE).contains(&degree) {
        return Err(Error::UnsupportedQuadrature { kind: "triangle", degree });
    }
    Ok(QuadRule { kind: Kind::Triangle(tables::TRIANGLE[degree - 1]), degree })
}

/// Gauss rule on `[0, 1]` exact for polynomials of degree `degree`.
pub fn edge_rule(degree: usize) -> Result<QuadRule> {
    if !(1..=MAX_DEGREE).contains(&degree) {
        return Err(Error::UnsupportedQuadrature { kind: "edge", degree });
    }
    let points = degree / 2 + 1;
    Ok(QuadRule { kind: Kind::Edge(tables::GAUSS[points - 1]), degree })
}
