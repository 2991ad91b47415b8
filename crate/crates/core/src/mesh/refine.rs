use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::Mesh;
use crate::error::{Error, Result};

fn midpoint(p: [f64; 2], q: [f64; 2]) -> [f64; 2] {
    [0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1])]
}

impl Mesh {
    /// Red refinement: every cell is split into four similar children by
    /// joining its edge midpoints. Children keep the refinement edge parallel
    /// to the parent's, so a mesh that was compatibly bisectable stays so.
    pub fn refine_uniform(&self) -> Mesh {
        let nn = self.num_nodes();
        let mut nodes = Vec::with_capacity(nn + self.num_edges());
        nodes.extend_from_slice(self.nodes());
        for e in 0..self.num_edges() {
            let [a, b] = self.edge(e);
            nodes.push(midpoint(self.node(a), self.node(b)));
        }
        let mut cells = Vec::with_capacity(4 * self.num_cells());
        for t in 0..self.num_cells() {
            let [a, b, c] = self.cell(t);
            let [ebc, eca, eab] = self.cell_edges(t);
            let (mbc, mca, mab) = (nn + ebc, nn + eca, nn + eab);
            cells.push([a, mab, mca]);
            cells.push([mab, b, mbc]);
            cells.push([mca, mbc, c]);
            cells.push([mbc, mca, mab]);
        }
        Mesh::from_cells(nodes, cells)
    }

    /// Newest-vertex bisection of the marked cells plus the closure needed to
    /// keep the mesh conforming.
    ///
    /// Each marked cell has its refinement edge bisected. The closure then
    /// marks the refinement edge of every cell that has any marked edge, until
    /// nothing changes; bisecting along marked edges recursively produces a
    /// conforming mesh in which every cell is refined at most three times.
    pub fn refine_adaptive(&self, marked: &[usize]) -> Result<Mesh> {
        let ne = self.num_edges();
        let mut edge_marked = vec![false; ne];
        let mut queue = Vec::new();
        for &t in marked {
            if t >= self.num_cells() {
                return Err(Error::CellOutOfRange(t));
            }
            let e = self.cell_edges(t)[0];
            if !edge_marked[e] {
                edge_marked[e] = true;
                queue.push(e);
            }
        }
        if queue.is_empty() {
            return Ok(self.clone());
        }
        while let Some(e) = queue.pop() {
            let (c0, c1) = self.edge_cells(e);
            for t in core::iter::once(c0).chain(c1) {
                let r = self.cell_edges(t)[0];
                if !edge_marked[r] {
                    edge_marked[r] = true;
                    queue.push(r);
                }
            }
        }

        let mut nodes = self.nodes().to_vec();
        let mut mid: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for e in (0..ne).filter(|&e| edge_marked[e]) {
            let [a, b] = self.edge(e);
            mid.insert((a, b), nodes.len());
            nodes.push(midpoint(self.node(a), self.node(b)));
        }

        let mut cells = Vec::with_capacity(self.num_cells() + 2 * mid.len());
        let mut stack = Vec::new();
        for t in 0..self.num_cells() {
            stack.push(self.cell(t));
            while let Some([a, b, c]) = stack.pop() {
                match mid.get(&(b.min(c), b.max(c))) {
                    Some(&m) => {
                        // Pushed in reverse so the first child is emitted first.
                        stack.push([m, c, a]);
                        stack.push([m, a, b]);
                    }
                    None => cells.push([a, b, c]),
                }
            }
        }
        Ok(Mesh::from_cells(nodes, cells))
    }
}
