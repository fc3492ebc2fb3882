use crate::{Gf2Matrix, LinalgError};

/// A linear subspace of F₂ⁿ held in reduced row-echelon form.
///
/// The echelon basis is canonical, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Gf2Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the rows of `rows` (any matrix with `ambient_dim` columns).
    pub fn from_rows(ambient_dim: usize, rows: Gf2Matrix) -> Self {
        assert_eq!(rows.cols(), ambient_dim, "row length must equal ambient dimension");
        let mut m = rows;
        let pivots = m.rref_in_place();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        let basis = m.select_rows(&keep);
        Subspace { ambient_dim, basis, pivots }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Gf2Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Gf2Matrix::identity(ambient_dim), pivots: (0..ambient_dim).collect() }
    }

    /// Span of coordinate vectors `e_i` for the listed indices.
    pub fn coordinate(ambient_dim: usize, idx: &[usize]) -> Self {
        let mut m = Gf2Matrix::zeros(idx.len(), ambient_dim);
        for (r, &i) in idx.iter().enumerate() {
            m.set(r, i, true);
        }
        Self::from_rows(ambient_dim, m)
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Echelon basis, one vector per row.
    #[inline]
    pub fn basis(&self) -> &Gf2Matrix {
        &self.basis
    }

    #[inline]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace, op: &'static str) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::Ambient { op, left: self.ambient_dim, right: other.ambient_dim });
        }
        Ok(())
    }

    /// Reduces `v` (a row of words) modulo the subspace, in place.
    pub fn reduce(&self, v: &mut [u64]) {
        for (r, &p) in self.pivots.iter().enumerate() {
            if (v[p / 64] >> (p % 64)) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(self.basis.row_words(r)) {
                    *x ^= *y;
                }
            }
        }
    }

    pub fn contains_words(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Whether every row of `vectors` lies in the subspace.
    pub fn contains_rows(&self, vectors: &Gf2Matrix) -> bool {
        assert_eq!(vectors.cols(), self.ambient_dim);
        (0..vectors.rows()).all(|i| self.contains_words(vectors.row_words(i)))
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.contains_rows(&other.basis)
    }

    /// Coordinates of the rows of `vectors` in the echelon basis.
    /// Each row must lie in the subspace; the result has `dim` columns.
    pub fn coordinates(&self, vectors: &Gf2Matrix) -> Result<Gf2Matrix, LinalgError> {
        let mut out = Gf2Matrix::zeros(vectors.rows(), self.dim());
        for i in 0..vectors.rows() {
            let v = vectors.row_words(i);
            if !self.contains_words(v) {
                return Err(LinalgError::NotContained);
            }
            for (c, &p) in self.pivots.iter().enumerate() {
                if (v[p / 64] >> (p % 64)) & 1 == 1 {
                    out.set(i, c, true);
                }
            }
        }
        Ok(out)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other, "sum")?;
        Ok(Subspace::from_rows(self.ambient_dim, self.basis.vstack(&other.basis)?))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other, "intersection")?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // x = c·A lies in B iff the reduction of c·A modulo B vanishes
        let mut reduced = self.basis.clone();
        for i in 0..reduced.rows() {
            other.reduce(reduced.row_words_mut(i));
        }
        let coeffs = reduced.transpose().kernel();
        let inter = coeffs.basis().mul(&self.basis)?;
        Ok(Subspace::from_rows(self.ambient_dim, inter))
    }

    /// `(a ∩ b, a + b)`.
    pub fn meet_join(&self, other: &Subspace) -> Result<(Subspace, Subspace), LinalgError> {
        Ok((self.intersection(other)?, self.sum(other)?))
    }

    /// Coordinate orthogonal `{x : ⟨x, v⟩ = 0 ∀ v}` for the standard bilinear form.
    pub fn orthogonal(&self) -> Subspace {
        self.basis.kernel()
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn map(&self, m: &Gf2Matrix) -> Result<Subspace, LinalgError> {
        if m.cols() != self.ambient_dim {
            return Err(LinalgError::Shape {
                op: "map",
                left: (m.rows(), m.cols()),
                right: (self.ambient_dim, self.dim()),
            });
        }
        let img = self.basis.mul(&m.transpose())?;
        Ok(Subspace::from_rows(m.rows(), img))
    }

    /// Preimage `{x : m·x ∈ self}`.
    pub fn preimage(&self, m: &Gf2Matrix) -> Result<Subspace, LinalgError> {
        if m.rows() != self.ambient_dim {
            return Err(LinalgError::Shape {
                op: "preimage",
                left: (m.rows(), m.cols()),
                right: (self.ambient_dim, self.dim()),
            });
        }
        let (proj, _) = quotient_map(self.ambient_dim, self)?;
        Ok(proj.mul(m)?.kernel())
    }

    /// Basis vectors as matrix columns (an inclusion map into the ambient space).
    pub fn inclusion(&self) -> Gf2Matrix {
        self.basis.transpose()
    }
}

/// Projection onto `F₂ⁿ / sub` together with coset representatives.
///
/// The quotient is coordinatised by the non-pivot columns of the echelon
/// basis; the section sends the `c`-th quotient basis vector to `e_c`.
/// For `m` with `m(sub_src) ⊆ sub_dst` the induced map on quotients is
/// `proj_dst · m · section_src`.
pub fn quotient_map(ambient_dim: usize, sub: &Subspace) -> Result<(Gf2Matrix, Gf2Matrix), LinalgError> {
    if sub.ambient_dim() != ambient_dim {
        return Err(LinalgError::Ambient { op: "quotient_map", left: ambient_dim, right: sub.ambient_dim() });
    }
    let mut is_pivot = vec![false; ambient_dim];
    for &p in sub.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    let mut proj = Gf2Matrix::zeros(free.len(), ambient_dim);
    let mut section = Gf2Matrix::zeros(ambient_dim, free.len());
    for (q, &c) in free.iter().enumerate() {
        proj.set(q, c, true);
        section.set(c, q, true);
        for (r, &p) in sub.pivots().iter().enumerate() {
            if sub.basis().get(r, c) {
                proj.set(q, p, true);
            }
        }
    }
    Ok((proj, section))
}
