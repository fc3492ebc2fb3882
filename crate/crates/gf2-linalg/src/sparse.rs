//! Column-sparse matrices with block-wise elimination.
//!
//! The maps induced by coordinate-preserving linear maps on tensor-type
//! functors split into many small blocks once rows and columns are grouped
//! into connected components of the nonzero pattern. Elimination then runs
//! densely inside each block.

use crate::{Gf2Matrix, LinalgError};

/// Column-major sparse matrix; each column is a sorted list of row indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMat {
    rows: usize,
    cols: Vec<Vec<u32>>,
}

/// Sorts and cancels repeated indices mod 2.
pub fn normalize(v: &mut Vec<u32>) {
    v.sort_unstable();
    let mut out = 0;
    let mut i = 0;
    while i < v.len() {
        let x = v[i];
        let mut j = i;
        while j < v.len() && v[j] == x {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            v[out] = x;
            out += 1;
        }
        i = j;
    }
    v.truncate(out);
}

impl SparseMat {
    /// Columns need not be sorted; duplicates cancel.
    pub fn new(rows: usize, mut cols: Vec<Vec<u32>>) -> Self {
        for c in &mut cols {
            normalize(c);
            debug_assert!(c.last().is_none_or(|&r| (r as usize) < rows));
        }
        SparseMat { rows, cols }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat { rows: n, cols: (0..n as u32).map(|i| vec![i]).collect() }
    }

    pub fn from_dense(m: &Gf2Matrix) -> Self {
        let t = m.transpose();
        let cols = (0..t.rows()).map(|j| t.row_support(j).into_iter().map(|i| i as u32).collect()).collect();
        SparseMat { rows: m.rows(), cols }
    }

    pub fn to_dense(&self) -> Gf2Matrix {
        Gf2Matrix::from_columns(self.rows, &self.cols)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    #[inline]
    pub fn col(&self, j: usize) -> &[u32] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Vec<u32>> {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Image of a sparse column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let mut acc = Vec::new();
        for &j in v {
            acc.extend_from_slice(&self.cols[j as usize]);
        }
        normalize(&mut acc);
        acc
    }

    pub fn mul(&self, other: &SparseMat) -> Result<SparseMat, LinalgError> {
        if self.cols() != other.rows {
            return Err(LinalgError::Shape {
                op: "sparse mul",
                left: (self.rows, self.cols()),
                right: (other.rows, other.cols()),
            });
        }
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        Ok(SparseMat { rows: self.rows, cols })
    }

    pub fn add(&self, other: &SparseMat) -> Result<SparseMat, LinalgError> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Err(LinalgError::Shape {
                op: "sparse add",
                left: (self.rows, self.cols()),
                right: (other.rows, other.cols()),
            });
        }
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut v = a.clone();
                v.extend_from_slice(b);
                normalize(&mut v);
                v
            })
            .collect();
        Ok(SparseMat { rows: self.rows, cols })
    }

    pub fn transpose(&self) -> SparseMat {
        let mut t = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for &i in c {
                t[i as usize].push(j as u32);
            }
        }
        SparseMat { rows: self.cols(), cols: t }
    }

    /// Kronecker product with index `(i, j) ↦ i·dim_b + j`.
    pub fn kronecker(&self, other: &SparseMat) -> SparseMat {
        let br = other.rows as u32;
        let mut cols = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.cols {
            for b in &other.cols {
                let mut c = Vec::with_capacity(a.len() * b.len());
                for &i in a {
                    for &k in b {
                        c.push(i * br + k);
                    }
                }
                cols.push(c);
            }
        }
        SparseMat { rows: self.rows * other.rows, cols }
    }

    pub fn hstack(&self, other: &SparseMat) -> Result<SparseMat, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::Shape {
                op: "sparse hstack",
                left: (self.rows, self.cols()),
                right: (other.rows, other.cols()),
            });
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(SparseMat { rows: self.rows, cols })
    }

    pub fn vstack(&self, other: &SparseMat) -> Result<SparseMat, LinalgError> {
        if self.cols() != other.cols() {
            return Err(LinalgError::Shape {
                op: "sparse vstack",
                left: (self.rows, self.cols()),
                right: (other.rows, other.cols()),
            });
        }
        let off = self.rows as u32;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&i| i + off)).collect())
            .collect();
        Ok(SparseMat { rows: self.rows + other.rows, cols })
    }

    pub fn select_cols(&self, idx: &[usize]) -> SparseMat {
        SparseMat { rows: self.rows, cols: idx.iter().map(|&j| self.cols[j].clone()).collect() }
    }

    /// Keeps the listed rows, renumbered in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> SparseMat {
        let mut map = vec![u32::MAX; self.rows];
        for (n, &i) in idx.iter().enumerate() {
            map[i] = n as u32;
        }
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let mut v: Vec<u32> = c.iter().filter_map(|&i| Some(map[i as usize]).filter(|&x| x != u32::MAX)).collect();
                v.sort_unstable();
                v
            })
            .collect();
        SparseMat { rows: idx.len(), cols }
    }

    /// Groups columns into connected components of the row/column incidence graph.
    fn blocks(&self) -> Vec<Block> {
        let n = self.rows + self.cols();
        let mut uf = UnionFind::new(n);
        for (j, c) in self.cols.iter().enumerate() {
            let cj = self.rows + j;
            for &i in c {
                uf.union(cj, i as usize);
            }
        }
        let mut index = vec![usize::MAX; n];
        let mut blocks: Vec<Block> = Vec::new();
        for j in 0..self.cols() {
            let root = uf.find(self.rows + j);
            if index[root] == usize::MAX {
                index[root] = blocks.len();
                blocks.push(Block::default());
            }
            blocks[index[root]].cols.push(j);
        }
        for b in &mut blocks {
            let mut rows: Vec<u32> = b.cols.iter().flat_map(|&j| self.cols[j].iter().copied()).collect();
            rows.sort_unstable();
            rows.dedup();
            b.rows = rows;
        }
        blocks
    }

    fn local_dense(&self, b: &Block, row_pos: &mut [u32]) -> Gf2Matrix {
        for (n, &r) in b.rows.iter().enumerate() {
            row_pos[r as usize] = n as u32;
        }
        let mut m = Gf2Matrix::zeros(b.rows.len(), b.cols.len());
        for (lc, &j) in b.cols.iter().enumerate() {
            for &i in &self.cols[j] {
                m.set(row_pos[i as usize] as usize, lc, true);
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        let mut row_pos = vec![0u32; self.rows];
        self.blocks()
            .iter()
            .filter(|b| !b.rows.is_empty())
            .map(|b| self.local_dense(b, &mut row_pos).rank())
            .sum()
    }

    /// Null space, one basis vector per column of the result.
    pub fn kernel(&self) -> SparseMat {
        let mut row_pos = vec![0u32; self.rows];
        let mut out = Vec::new();
        for b in self.blocks() {
            if b.rows.is_empty() {
                out.extend(b.cols.iter().map(|&j| vec![j as u32]));
                continue;
            }
            let local = self.local_dense(&b, &mut row_pos);
            let ker = local.kernel();
            for r in 0..ker.dim() {
                let mut v: Vec<u32> = ker.basis().row_support(r).into_iter().map(|lc| b.cols[lc] as u32).collect();
                v.sort_unstable();
                out.push(v);
            }
        }
        SparseMat { rows: self.cols(), cols: out }
    }

    /// A basis of the column span, as columns.
    pub fn column_basis(&self) -> SparseMat {
        let mut row_pos = vec![0u32; self.rows];
        let mut out = Vec::new();
        for b in self.blocks() {
            if b.rows.is_empty() {
                continue;
            }
            let local = self.local_dense(&b, &mut row_pos).transpose();
            let (r, rank) = local.rref();
            for i in 0..rank {
                out.push(r.row_support(i).into_iter().map(|lr| b.rows[lr]).collect());
            }
        }
        SparseMat { rows: self.rows, cols: out }
    }
}

#[derive(Default)]
struct Block {
    cols: Vec<usize>,
    rows: Vec<u32>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// XOR of two sorted index lists.
pub fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Subspace of F₂ⁿ held as a fully reduced echelon basis of sparse vectors.
///
/// Each basis vector has a pivot (its smallest index) at which every other
/// basis vector vanishes; vectors are sorted by pivot, so the form is
/// canonical and `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SparseSubspace {
    ambient: usize,
    vectors: Vec<Vec<u32>>,
}

impl SparseSubspace {
    /// Span of the columns of `m`.
    pub fn span(m: &SparseMat) -> Self {
        let mut vectors = m.column_basis().into_columns();
        vectors.sort_unstable_by_key(|v| v[0]);
        SparseSubspace { ambient: m.rows(), vectors }
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<u32>>) -> Self {
        Self::span(&SparseMat::new(ambient, vectors))
    }

    pub fn zero(ambient: usize) -> Self {
        SparseSubspace { ambient, vectors: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, &(0..ambient).collect::<Vec<_>>())
    }

    pub fn coordinate(ambient: usize, idx: &[usize]) -> Self {
        let mut v: Vec<Vec<u32>> = idx.iter().map(|&i| vec![i as u32]).collect();
        v.sort_unstable();
        v.dedup();
        SparseSubspace { ambient, vectors: v }
    }

    pub fn from_dense(s: &crate::Subspace) -> Self {
        let vectors = (0..s.dim()).map(|r| s.basis().row_support(r).into_iter().map(|i| i as u32).collect()).collect();
        SparseSubspace { ambient: s.ambient_dim(), vectors }
    }

    pub fn to_dense(&self) -> crate::Subspace {
        crate::Subspace::from_rows(self.ambient, self.as_matrix().to_dense().transpose())
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.vectors
    }

    pub fn pivot(&self, i: usize) -> u32 {
        self.vectors[i][0]
    }

    /// Basis vectors as the columns of an inclusion map.
    pub fn as_matrix(&self) -> SparseMat {
        SparseMat { rows: self.ambient, cols: self.vectors.clone() }
    }

    fn pivot_index(&self, p: u32) -> Option<usize> {
        self.vectors.binary_search_by_key(&p, |v| v[0]).ok()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let mut coords = Vec::new();
        let mut acc = Vec::new();
        for &p in v {
            if let Some(i) = self.pivot_index(p) {
                coords.push(i as u32);
                acc.extend_from_slice(&self.vectors[i]);
            }
        }
        normalize(&mut acc);
        (acc == v).then_some(coords)
    }

    pub fn contains_vec(&self, v: &[u32]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &SparseSubspace) -> bool {
        self.ambient == other.ambient && other.vectors.iter().all(|v| self.contains_vec(v))
    }

    /// Coordinates of every column of `m`; errors if some column lies outside.
    pub fn coordinates_of(&self, m: &SparseMat) -> Result<SparseMat, LinalgError> {
        let mut cols = Vec::with_capacity(m.cols());
        for c in &m.cols {
            cols.push(self.coordinates(c).ok_or(LinalgError::NotContained)?);
        }
        Ok(SparseMat { rows: self.dim(), cols })
    }

    pub fn sum(&self, other: &SparseSubspace) -> Result<SparseSubspace, LinalgError> {
        self.check(other, "sparse sum")?;
        Ok(Self::span(&self.as_matrix().hstack(&other.as_matrix())?))
    }

    pub fn intersection(&self, other: &SparseSubspace) -> Result<SparseSubspace, LinalgError> {
        self.check(other, "sparse intersection")?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Self::zero(self.ambient));
        }
        let both = self.as_matrix().hstack(&other.as_matrix())?;
        let ker = both.kernel();
        let d = self.dim() as u32;
        let a = self.as_matrix();
        let cols: Vec<Vec<u32>> = ker
            .columns()
            .iter()
            .map(|c| {
                let left: Vec<u32> = c.iter().copied().filter(|&i| i < d).collect();
                a.apply(&left)
            })
            .collect();
        Ok(Self::span(&SparseMat::new(self.ambient, cols)))
    }

    /// Coordinate orthogonal `{x : ⟨x, v⟩ = 0 ∀ v}`.
    pub fn orthogonal(&self) -> SparseSubspace {
        let ker = self.as_matrix().transpose().kernel();
        Self::span(&ker)
    }

    /// Image under `m`.
    pub fn map(&self, m: &SparseMat) -> Result<SparseSubspace, LinalgError> {
        Ok(Self::span(&m.mul(&self.as_matrix())?))
    }

    fn check(&self, other: &SparseSubspace, op: &'static str) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::Ambient { op, left: self.ambient, right: other.ambient });
        }
        Ok(())
    }
}

/// Incremental triangular basis for spin-up style span growth.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivot_of: std::collections::HashMap<u32, usize>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon { ambient, rows: Vec::new(), pivot_of: Default::default() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut v = v.to_vec();
        while let Some(&p) = v.first() {
            match self.pivot_of.get(&p) {
                Some(&r) => v = xor_sorted(&v, &self.rows[r]),
                None => break,
            }
        }
        v
    }

    /// Adds `v` (sorted, reduced mod 2) to the span; returns whether it was new.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        self.pivot_of.insert(r[0], self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_subspace(self) -> SparseSubspace {
        SparseSubspace::from_vectors(self.ambient, self.rows)
    }
}
