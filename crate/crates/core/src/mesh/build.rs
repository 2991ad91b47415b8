use alloc::vec::Vec;

use super::Mesh;
use crate::error::{Error, Result};

/// Splits the axis-aligned square with lower-left corner index `a` into two
/// right isosceles triangles. `main` selects the diagonal through `a`,
/// otherwise the other one is used. The hypotenuse becomes the refinement edge.
fn split_square(cells: &mut Vec<[usize; 3]>, a: usize, b: usize, c: usize, d: usize, main: bool) {
    // a b c d run counterclockwise from the lower-left corner.
    if main {
        cells.push([b, c, a]);
        cells.push([d, a, c]);
    } else {
        cells.push([a, b, d]);
        cells.push([c, d, b]);
    }
}

/// Structured triangulation of `(0,1)^2` with `2 n^2` cells.
pub fn build_unit_square(n: usize) -> Result<Mesh> {
    if n == 0 {
        return Err(Error::EmptySubdivision);
    }
    let nf = n as f64;
    let id = |i: usize, j: usize| j * (n + 1) + i;
    let mut nodes = Vec::with_capacity((n + 1) * (n + 1));
    for j in 0..=n {
        for i in 0..=n {
            nodes.push([i as f64 / nf, j as f64 / nf]);
        }
    }
    let mut cells = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for i in 0..n {
            split_square(&mut cells, id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1), (i + j) % 2 == 0);
        }
    }
    Ok(Mesh::from_cells(nodes, cells))
}

/// Triangulation of `(-1,1)^2 \ ((0,1) x (-1,0))` made of three unit macro
/// squares, each cut by `n` in both directions and split along the diagonal
/// pointing at the reentrant corner, which is therefore a node at every level.
pub fn build_lshape(n: usize) -> Result<Mesh> {
    if n == 0 {
        return Err(Error::EmptySubdivision);
    }
    let m = 2 * n;
    let nf = n as f64;
    // Grid over [-1,1]^2 with the open lower-right quadrant removed.
    let inside = |i: usize, j: usize| !(i > n && j < n);
    let mut index = alloc::vec![usize::MAX; (m + 1) * (m + 1)];
    let mut nodes = Vec::new();
    for j in 0..=m {
        for i in 0..=m {
            if inside(i, j) {
                index[j * (m + 1) + i] = nodes.len();
                nodes.push([i as f64 / nf - 1.0, j as f64 / nf - 1.0]);
            }
        }
    }
    let id = |i: usize, j: usize| index[j * (m + 1) + i];
    let mut cells = Vec::with_capacity(6 * n * n);
    for j in 0..m {
        for i in 0..m {
            if i >= n && j < n {
                continue;
            }
            // Upper-left macro square uses the anti-diagonal.
            let main = !(i < n && j >= n);
            split_square(&mut cells, id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1), main);
        }
    }
    Ok(Mesh::from_cells(nodes, cells))
}
