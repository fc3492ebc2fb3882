//! Exact linear algebra over the two-element field.
//!
//! Dense matrices pack each row into machine words and eliminate with XOR.
//! Subspaces keep a reduced row-echelon basis, which makes equality a bit
//! comparison. Tensor-product indices are lexicographic, left factor major.

mod matrix;
pub mod sparse;
mod subspace;

pub use matrix::Gf2Matrix;
pub use sparse::{Echelon, SparseMat, SparseSubspace};
pub use subspace::{quotient_map, Subspace};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("ambient dimension mismatch in {op}: {left} vs {right}")]
    Ambient { op: &'static str, left: usize, right: usize },
    #[error("vector does not lie in the subspace")]
    NotContained,
}

/// Free helper mirroring [`Gf2Matrix::rref`].
pub fn rref(m: &Gf2Matrix) -> (Gf2Matrix, usize) {
    m.rref()
}

pub fn kernel(m: &Gf2Matrix) -> Subspace {
    m.kernel()
}

pub fn image(m: &Gf2Matrix) -> Subspace {
    m.image()
}

pub fn meet_join(a: &Subspace, b: &Subspace) -> Result<(Subspace, Subspace), LinalgError> {
    a.meet_join(b)
}

pub fn kronecker(a: &Gf2Matrix, b: &Gf2Matrix) -> Gf2Matrix {
    a.kronecker(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_sub(dim: usize, rows: &[&[u8]]) -> Subspace {
        Subspace::from_rows(dim, Gf2Matrix::from_rows(rows))
    }

    #[test]
    fn rref_identity_and_zero() {
        let (r, k) = Gf2Matrix::identity(3).rref();
        assert_eq!(k, 3);
        assert!(r.is_identity());
        let (r, k) = Gf2Matrix::zeros(2, 4).rref();
        assert_eq!(k, 0);
        assert!(r.is_zero());
    }

    #[test]
    fn rref_detects_dependent_row() {
        let m = Gf2Matrix::from_rows(&[[1, 0, 1], [0, 1, 1], [1, 1, 0]]);
        let (r, k) = m.rref();
        assert_eq!(k, 2);
        assert_eq!(r, Gf2Matrix::from_rows(&[[1, 0, 1], [0, 1, 1], [0, 0, 0]]));
        assert_eq!(r.rref().0, r);
    }

    #[test]
    fn kernel_examples() {
        let m = Gf2Matrix::from_rows(&[[1, 0, 1], [0, 1, 1]]);
        assert_eq!(m.kernel(), vec_sub(3, &[&[1, 1, 1]]));
        assert_eq!(Gf2Matrix::identity(4).kernel().dim(), 0);
        assert_eq!(Gf2Matrix::zeros(1, 5).kernel(), Subspace::full(5));
    }

    #[test]
    fn image_of_outer_product() {
        let u = [1u8, 0, 1];
        let v = [0u8, 1, 1, 1];
        let m = Gf2Matrix::from_fn(3, 4, |i, j| u[i] & v[j] == 1);
        assert_eq!(m.image(), vec_sub(3, &[&u]));
        assert_eq!(Gf2Matrix::identity(3).image(), Subspace::full(3));
    }

    #[test]
    fn meet_join_examples() {
        let a = vec_sub(4, &[&[1, 1, 0, 0], &[0, 1, 0, 1]]);
        assert_eq!(a.meet_join(&a).unwrap(), (a.clone(), a.clone()));
        let l = Subspace::coordinate(4, &[0, 1]);
        let r = Subspace::coordinate(4, &[2, 3]);
        assert_eq!(l.meet_join(&r).unwrap(), (Subspace::zero(4), Subspace::full(4)));
        // span{e1, e1+e2} ∩ span{e2, e3} = span{e2}
        let a = vec_sub(3, &[&[1, 0, 0], &[1, 1, 0]]);
        let b = vec_sub(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersection(&b).unwrap(), vec_sub(3, &[&[0, 1, 0]]));
        assert!(matches!(a.intersection(&Subspace::zero(4)), Err(LinalgError::Ambient { .. })));
    }

    #[test]
    fn kronecker_examples() {
        assert!(Gf2Matrix::identity(2).kronecker(&Gf2Matrix::identity(3)).is_identity());
        let a = Gf2Matrix::from_rows(&[[1, 1], [0, 1]]);
        assert!(a.kronecker(&Gf2Matrix::zeros(2, 2)).is_zero());
        // swap ⊗ swap sends e1⊗e2 (index 1) to e2⊗e1 (index 2)
        let swap = Gf2Matrix::from_rows(&[[0, 1], [1, 0]]);
        let s = swap.kronecker(&swap);
        assert_eq!(s.apply_support(&[1]), vec![false, false, true, false]);
    }

    #[test]
    fn quotient_examples() {
        let (p, s) = quotient_map(3, &Subspace::zero(3)).unwrap();
        assert!(p.is_identity() && s.is_identity());
        let (p, _) = quotient_map(3, &Subspace::full(3)).unwrap();
        assert_eq!((p.rows(), p.cols()), (0, 3));
        let sub = vec_sub(3, &[&[1, 1, 0]]);
        let (p, s) = quotient_map(3, &sub).unwrap();
        assert_eq!(p.rows(), 2);
        assert_eq!(p.apply_support(&[0, 1]), vec![false, false]);
        assert!(p.mul(&s).unwrap().is_identity());
        assert!(quotient_map(4, &sub).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Gf2Matrix::from_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(Gf2Matrix::from_rows(&[[1, 1], [1, 1]]).inverse().is_none());
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let m = Gf2Matrix::from_rows(&[[1, 1, 0, 0, 0], [0, 0, 1, 1, 0], [0, 0, 1, 1, 0]]);
        let s = SparseMat::from_dense(&m);
        assert_eq!(s.rank(), 2);
        let k = s.kernel();
        assert_eq!(Subspace::from_rows(5, k.to_dense().transpose()), m.kernel());
        assert_eq!(s.column_basis().cols(), 2);
    }
}
