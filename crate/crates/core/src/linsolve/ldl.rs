//! Sparse `L D L^T` factorization without pivoting, backed by faer's
//! supernodal Cholesky with an approximate minimum degree ordering.
//!
//! Safe for quasi-definite matrices, where every symmetric ordering admits
//! the factorization.

use alloc::vec;
use alloc::vec::Vec;

use faer::dyn_stack::{MemBuffer, MemStack};
use faer::linalg::cholesky::ldlt::factor::{LdltError, LdltRegularization};
use faer::sparse::linalg::cholesky::{factorize_symbolic_cholesky, simplicial, supernodal, LdltRef, SymbolicCholesky, SymbolicCholeskyRaw, SymmetricOrdering};
use faer::sparse::{SparseColMat, SymbolicSparseColMat};
use faer::{Conj, MatMut, Par, Side};

use crate::error::{Error, Result};
use crate::sparse::CsrMatrix;

pub struct Ldl {
    symbolic: SymbolicCholesky<usize>,
    values: Vec<f64>,
    d: Vec<f64>,
}

impl core::fmt::Debug for Ldl {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Ldl").field("n", &self.d.len()).field("nnz_l", &self.values.len()).finish()
    }
}

impl Ldl {
    /// Factors `A`, given with both triangles and sorted column indices.
    pub fn factor(a: &CsrMatrix) -> Result<Ldl> {
        let n = a.nrows();
        assert_eq!(n, a.ncols());

        // The lower triangle in compressed columns is the upper triangle of
        // the (symmetric) rows.
        let mut col_ptr = Vec::with_capacity(n + 1);
        let mut row_idx = Vec::with_capacity(a.nnz() / 2 + n);
        let mut vals = Vec::with_capacity(a.nnz() / 2 + n);
        col_ptr.push(0);
        for j in 0..n {
            let (cols, v) = a.row(j);
            for (&i, &x) in cols.iter().zip(v) {
                if i >= j {
                    row_idx.push(i);
                    vals.push(x);
                }
            }
            col_ptr.push(row_idx.len());
        }
        let lower = SparseColMat::new(SymbolicSparseColMat::new_checked(n, n, col_ptr, None, row_idx), vals);

        let symbolic = factorize_symbolic_cholesky(lower.symbolic(), Side::Lower, SymmetricOrdering::Amd, Default::default())
            .map_err(|_| Error::OutOfMemory)?;
        let mut values = vec![0.0; symbolic.len_val()];
        let mut mem = MemBuffer::new(symbolic.factorize_numeric_ldlt_scratch::<f64>(Par::Seq, Default::default()));
        symbolic
            .factorize_numeric_ldlt(
                &mut values,
                lower.as_ref(),
                Side::Lower,
                LdltRegularization::default(),
                Par::Seq,
                MemStack::new(&mut mem),
                Default::default(),
            )
            .map_err(|e| match e {
                LdltError::ZeroPivot { index } => Error::ZeroPivot { step: index },
            })?;

        let d = diagonal(&symbolic, &values);
        if let Some(step) = d.iter().position(|v| *v == 0.0 || !v.is_finite()) {
            return Err(Error::ZeroPivot { step });
        }
        Ok(Ldl { symbolic, values, d })
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn nnz_l(&self) -> usize {
        self.values.len()
    }

    /// `max |d_k| / min |d_k|`.
    pub fn pivot_ratio(&self) -> f64 {
        let (lo, hi) = self.d.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), v| (lo.min(v.abs()), hi.max(v.abs())));
        hi / lo
    }

    /// Number of negative pivots (the inertia's negative count).
    pub fn negative_pivots(&self) -> usize {
        self.d.iter().filter(|&&v| v < 0.0).count()
    }

    /// Solves `A x = b` in place.
    pub fn solve(&self, b: &mut [f64]) {
        let n = self.len();
        assert_eq!(b.len(), n);
        let mut mem = MemBuffer::new(self.symbolic.solve_in_place_scratch::<f64>(1, Par::Seq));
        let rhs = MatMut::from_column_major_slice_mut(b, n, 1);
        LdltRef::new(&self.symbolic, &self.values).solve_in_place_with_conj(Conj::No, rhs, Par::Seq, MemStack::new(&mut mem));
    }
}

/// Pivots of the factor in elimination order.
fn diagonal(symbolic: &SymbolicCholesky<usize>, values: &[f64]) -> Vec<f64> {
    let mut d = Vec::with_capacity(symbolic.nrows());
    match symbolic.raw() {
        SymbolicCholeskyRaw::Simplicial(s) => {
            let ldl = simplicial::SimplicialLdltRef::new(s, values);
            let (ptr, rows) = (s.col_ptr(), s.row_idx());
            for j in 0..s.nrows() {
                let k = (ptr[j]..ptr[j + 1]).find(|&k| rows[k] == j).expect("diagonal entry");
                d.push(ldl.values()[k]);
            }
        }
        SymbolicCholeskyRaw::Supernodal(s) => {
            let ldl = supernodal::SupernodalLdltRef::new(s, values);
            for k in 0..s.n_supernodes() {
                let block = ldl.supernode(k).val();
                for c in 0..block.ncols() {
                    d.push(block[(c, c)]);
                }
            }
        }
    }
    d
}
