use std::sync::Arc;

use functors::gl::gl_generators_dense;
use functors::{apply_map, evaluate, FunctorExpr};
use gf2_linalg::{quotient_map, Gf2Matrix, Subspace};

use crate::MeatAxeError;

/// A module for `GL_k(F₂)` given by the actions of the standard generators,
/// acting on column vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GModule {
    k: usize,
    dim: usize,
    gens: Arc<Vec<Gf2Matrix>>,
    // transposes, so that `g·v` is a XOR of rows over the support of `v`
    gens_t: Arc<Vec<Gf2Matrix>>,
}

impl GModule {
    pub fn new(k: usize, dim: usize, gens: Vec<Gf2Matrix>) -> Result<Self, MeatAxeError> {
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(MeatAxeError::Shape(format!("generator {i} is {}x{}, module has dimension {dim}", g.rows(), g.cols())));
            }
            if dim > 0 && g.inverse().is_none() {
                return Err(MeatAxeError::NotInvertible(i));
            }
        }
        Ok(Self::new_unchecked(k, dim, gens))
    }

    /// Skips the invertibility check; used for sub- and quotient modules,
    /// which inherit it.
    pub(crate) fn new_unchecked(k: usize, dim: usize, gens: Vec<Gf2Matrix>) -> Self {
        let gens_t = gens.iter().map(Gf2Matrix::transpose).collect();
        GModule { k, dim, gens: Arc::new(gens), gens_t: Arc::new(gens_t) }
    }

    /// `F(F₂ᵏ)` with the induced generator actions.
    pub fn from_functor(e: &FunctorExpr, k: usize) -> Result<Self, MeatAxeError> {
        let gl = gl_generators_dense(k)?;
        let dim = evaluate(e, k)?.dim();
        let gens = gl.iter().map(|g| apply_map(e, g)).collect::<Result<Vec<_>, _>>()?;
        // spot check of functoriality on one product
        if gl.len() >= 2 {
            let prod = apply_map(e, &gl[0].mul(&gl[1])?)?;
            if prod != gens[0].mul(&gens[1])? {
                return Err(MeatAxeError::Shape(format!("{e} does not respect composition at k = {k}")));
            }
        }
        Self::new(k, dim, gens)
    }

    pub fn natural(k: usize) -> Result<Self, MeatAxeError> {
        Self::new(k, k, gl_generators_dense(k)?)
    }

    pub fn trivial(k: usize, dim: usize) -> Result<Self, MeatAxeError> {
        let n = gl_generators_dense(k)?.len();
        Ok(Self::new_unchecked(k, dim, vec![Gf2Matrix::identity(dim); n]))
    }

    /// The contragredient module, `g ↦ (g⁻¹)ᵀ`.
    pub fn dual(&self) -> Self {
        let gens = self.gens_t.iter().map(|t| t.inverse().expect("generators are invertible")).collect();
        Self::new_unchecked(self.k, self.dim, gens)
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn gens(&self) -> &[Gf2Matrix] {
        &self.gens
    }

    pub(crate) fn gens_t(&self) -> &[Gf2Matrix] {
        &self.gens_t
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.gens.iter().all(|g| s.map(g).is_ok_and(|img| s.contains(&img)))
    }

    /// The submodule on an invariant subspace, in the echelon basis of `s`.
    pub fn submodule(&self, s: &Subspace) -> Result<Self, MeatAxeError> {
        self.check_invariant(s)?;
        let mut gens = Vec::with_capacity(self.gens.len());
        for t in self.gens_t.iter() {
            // row r of basis·gᵀ is g·b_r
            gens.push(s.coordinates(&s.basis().mul(t)?)?.transpose());
        }
        Ok(Self::new_unchecked(self.k, s.dim(), gens))
    }

    /// The quotient by an invariant subspace, coordinatised by the
    /// non-pivot columns of its echelon basis.
    pub fn quotient(&self, s: &Subspace) -> Result<Self, MeatAxeError> {
        self.check_invariant(s)?;
        let (proj, section) = quotient_map(self.dim, s)?;
        let gens = self.gens.iter().map(|g| proj.mul(g)?.mul(&section)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new_unchecked(self.k, self.dim - s.dim(), gens))
    }

    /// `upper / lower` for invariant subspaces `lower ⊆ upper`.
    pub fn subquotient(&self, upper: &Subspace, lower: &Subspace) -> Result<Self, MeatAxeError> {
        if !upper.contains(lower) {
            return Err(MeatAxeError::Shape("lower subspace is not contained in the upper one".into()));
        }
        let sub = self.submodule(upper)?;
        let lower_coords = Subspace::from_rows(upper.dim(), upper.coordinates(lower.basis())?);
        sub.quotient(&lower_coords)
    }

    fn check_invariant(&self, s: &Subspace) -> Result<(), MeatAxeError> {
        if !self.is_invariant(s) {
            return Err(MeatAxeError::NotInvariant);
        }
        Ok(())
    }
}

/// Incremental semi-echelon basis: each stored row is zero at the pivots
/// of the rows inserted before it.
pub(crate) struct SemiEchelon {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl SemiEchelon {
    pub(crate) fn new() -> Self {
        SemiEchelon { rows: Vec::new(), pivots: Vec::new() }
    }

    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v` unless it is already in the span; returns whether it grew.
    pub(crate) fn insert(&mut self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p / 64] >> (p % 64) & 1 == 1 {
                w.iter_mut().zip(r).for_each(|(x, y)| *x ^= y);
            }
        }
        match w.iter().position(|&x| x != 0) {
            None => false,
            Some(i) => {
                self.pivots.push(i * 64 + w[i].trailing_zeros() as usize);
                self.rows.push(w);
                true
            }
        }
    }
}

/// `m·v` for `v` packed into words, given the rows of `mᵀ`.
pub(crate) fn apply_words(m_t: &Gf2Matrix, v: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; m_t.cols().div_ceil(64)];
    for (w, &word) in v.iter().enumerate() {
        let mut x = word;
        while x != 0 {
            let j = w * 64 + x.trailing_zeros() as usize;
            out.iter_mut().zip(m_t.row_words(j)).for_each(|(o, r)| *o ^= r);
            x &= x - 1;
        }
    }
    out
}

pub(crate) type Script = Vec<Option<(usize, usize)>>;

/// Spin-up under a list of actions (given by their transposes), recording
/// how each new vector was produced: `(parent, generator)` with `None` for
/// seeds.
pub(crate) fn spin_script(acts_t: &[Gf2Matrix], dim: usize, seeds: &[Vec<u64>]) -> (Vec<Vec<u64>>, Script) {
    let mut ech = SemiEchelon::new();
    let mut vecs = Vec::new();
    let mut script = Vec::new();
    for s in seeds {
        if ech.insert(s) {
            vecs.push(s.clone());
            script.push(None);
        }
    }
    let mut next = 0;
    while next < vecs.len() && ech.len() < dim {
        for (gi, t) in acts_t.iter().enumerate() {
            let w = apply_words(t, &vecs[next]);
            if ech.insert(&w) {
                vecs.push(w);
                script.push(Some((next, gi)));
            }
        }
        next += 1;
    }
    (vecs, script)
}

pub(crate) fn rows_to_matrix(dim: usize, rows: &[Vec<u64>]) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(rows.len(), dim);
    for (i, r) in rows.iter().enumerate() {
        m.row_words_mut(i).copy_from_slice(r);
    }
    m
}

/// The smallest invariant subspace containing every row of `seeds`.
pub fn spin(m: &GModule, seeds: &Gf2Matrix) -> Result<Subspace, MeatAxeError> {
    if seeds.cols() != m.dim() {
        return Err(MeatAxeError::Shape(format!("seed of length {} in a module of dimension {}", seeds.cols(), m.dim())));
    }
    if seeds.is_zero() {
        return Err(MeatAxeError::ZeroSeed);
    }
    let rows: Vec<Vec<u64>> = (0..seeds.rows()).map(|i| seeds.row_words(i).to_vec()).collect();
    let (vecs, _) = spin_script(m.gens_t(), m.dim(), &rows);
    let s = Subspace::from_rows(m.dim(), rows_to_matrix(m.dim(), &vecs));
    if !m.is_invariant(&s) {
        return Err(MeatAxeError::NotInvariant);
    }
    Ok(s)
}
