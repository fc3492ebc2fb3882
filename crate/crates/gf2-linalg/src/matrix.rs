use std::fmt;

use crate::{LinalgError, Subspace};

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// Dense matrix over F₂, row-major, each row packed into `u64` words.
///
/// A matrix with `rows × cols` entries acts on column vectors of length
/// `cols`, so `a.mul(&b)` is the composite "first `b`, then `a`".
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Gf2Matrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from nested 0/1 rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged row {i}");
            for (j, &b) in r.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Matrix whose columns are the given sparse supports.
    pub fn from_columns(rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for &i in col {
                m.flip(i as usize, j);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i * self.stride + j / WORD] ^= 1u64 << (j % WORD);
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Indices of the nonzero entries of row `i`.
    pub fn row_support(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.row_words(i).iter().enumerate() {
            let mut x = word;
            while x != 0 {
                let b = x.trailing_zeros() as usize;
                out.push(w * WORD + b);
                x &= x - 1;
            }
        }
        out
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row_words(i).iter().all(|&w| w == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `row(dst) ^= row(src)`.
    #[inline]
    pub fn xor_row(&mut self, dst: usize, src: usize) {
        if dst == src {
            self.row_words_mut(dst).fill(0);
            return;
        }
        let s = self.stride;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..dst * s + s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..src * s + s])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= *y;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for w in 0..s {
            self.data.swap(a * s + w, b * s + w);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_support(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        let s = out.stride;
        for i in 0..self.rows {
            let dst = &mut out.data[i * s..(i + 1) * s];
            for (w, &word) in self.row_words(i).iter().enumerate() {
                let mut x = word;
                while x != 0 {
                    let j = w * WORD + x.trailing_zeros() as usize;
                    for (d, o) in dst.iter_mut().zip(other.row_words(j)) {
                        *d ^= *o;
                    }
                    x &= x - 1;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Shape {
                op: "add",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= *b;
        }
        Ok(out)
    }

    /// Image of a single column vector given by its support.
    pub fn apply_support(&self, support: &[usize]) -> Vec<bool> {
        let mut out = vec![false; self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = false;
            for &j in support {
                acc ^= self.get(i, j);
            }
            *o = acc;
        }
        out
    }

    /// `(a ⊗ b)` with row and column indices `(i, j) ↦ i·dim_b + j`.
    pub fn kronecker(&self, other: &Gf2Matrix) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in self.row_support(i) {
                for k in 0..other.rows {
                    for l in other.row_support(k) {
                        out.set(i * other.rows + k, j * other.cols + l, true);
                    }
                }
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(idx.len(), self.cols);
        for (r, &i) in idx.iter().enumerate() {
            out.row_words_mut(r).copy_from_slice(self.row_words(i));
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (c, &j) in idx.iter().enumerate() {
                if self.get(i, j) {
                    out.set(i, c, true);
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::Shape {
                op: "vstack",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Gf2Matrix { rows: self.rows + other.rows, cols: self.cols, stride: self.stride, data })
    }

    pub fn hstack(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::Shape {
                op: "hstack",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Gf2Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in self.row_support(i) {
                out.set(i, j, true);
            }
            for j in other.row_support(i) {
                out.set(i, self.cols + j, true);
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let w = c / WORD;
            let bit = 1u64 << (c % WORD);
            let Some(p) = (r..self.rows).find(|&i| self.data[i * self.stride + w] & bit != 0) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.data[i * self.stride + w] & bit != 0 {
                    // columns left of `w` are already zero in the pivot row
                    let s = self.stride;
                    let (pr, tr) = if i < r {
                        let (lo, hi) = self.data.split_at_mut(r * s);
                        (&hi[w..s], &mut lo[i * s + w..i * s + s])
                    } else {
                        let (lo, hi) = self.data.split_at_mut(i * s);
                        (&lo[r * s + w..r * s + s], &mut hi[w..s])
                    };
                    for (t, p) in tr.iter_mut().zip(pr) {
                        *t ^= *p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row-echelon form and rank. The zero rows are kept at the bottom.
    #[must_use]
    pub fn rref(&self) -> (Gf2Matrix, usize) {
        let mut m = self.clone();
        let piv = m.rref_in_place();
        (m, piv.len())
    }

    pub fn rank(&self) -> usize {
        // eliminate on the thinner orientation
        if self.rows > self.cols {
            self.transpose().rref().1
        } else {
            self.rref().1
        }
    }

    /// Null space `{x : self·x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Gf2Matrix::zeros(free.len(), self.cols);
        for (b, &f) in free.iter().enumerate() {
            basis.set(b, f, true);
            for (r, &p) in pivots.iter().enumerate() {
                if m.get(r, f) {
                    basis.set(b, p, true);
                }
            }
        }
        Subspace::from_rows(self.cols, basis)
    }

    /// Column span.
    pub fn image(&self) -> Subspace {
        Subspace::from_rows(self.rows, self.transpose())
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Gf2Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Gf2Matrix::identity(n)).ok()?;
        let mut aug = aug;
        let piv = aug.rref_in_place();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Some(aug.select_cols(&idx))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Gf2Matrix::identity(self.rows)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows.min(64) {
            let s: String = (0..self.cols.min(128)).map(|j| if self.get(i, j) { '1' } else { '.' }).collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}
