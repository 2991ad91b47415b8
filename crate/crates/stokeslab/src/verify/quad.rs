//! Independent quadrature for the oracles: Gauss-Legendre nodes
//! from Newton iteration and a collapsed (Duffy) rule on triangles.

use std::f64::consts::PI;

/// `n`-point Gauss-Legendre rule on `[0, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // three-term recurrence for P_n and its derivative
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pm) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((0.5 * (1.0 + x), 0.5 * w));
    }
    out
}

/// Collapsed tensor rule with `n * n` points on the triangle `v`.
pub fn triangle_points(v: [[f64; 2]; 3], n: usize) -> Vec<([f64; 2], f64)> {
    let gl = gauss_legendre(n);
    let e1 = [v[1][0] - v[0][0], v[1][1] - v[0][1]];
    let e2 = [v[2][0] - v[0][0], v[2][1] - v[0][1]];
    let det = (e1[0] * e2[1] - e1[1] * e2[0]).abs();
    let mut out = Vec::with_capacity(n * n);
    for &(a, wa) in &gl {
        for &(b, wb) in &gl {
            // (a, b) in the unit square -> (s, t) = (a, (1 - a) b)
            let (s, t) = (a, (1.0 - a) * b);
            let x = [v[0][0] + s * e1[0] + t * e2[0], v[0][1] + s * e1[1] + t * e2[1]];
            out.push((x, wa * wb * (1.0 - a) * det));
        }
    }
    out
}

/// `n`-point rule on the segment `a -> b`; the second entry is the
/// parameter `s` in `[0, 1]`.
pub fn segment_points(a: [f64; 2], b: [f64; 2], n: usize) -> Vec<([f64; 2], f64, f64)> {
    let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
    gauss_legendre(n)
        .into_iter()
        .map(|(s, w)| ([a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])], s, w * len))
        .collect()
}
