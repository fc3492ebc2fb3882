//! Evaluation of expressions at `F₂ᵏ` and induced maps.
//!
//! Coordinate functors keep their combinatorial basis; subfunctors carry a
//! canonical echelon basis inside an ambient evaluation. Labels are produced
//! on demand so large tensor spaces never materialize strings.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use gf2_linalg::{Gf2Matrix, SparseMat, SparseSubspace};

use crate::combin::{
    binom, bits, boolean_product, colex_rank, colex_rank_mask, column_masks, multiply_linear_forms, multisets, subsets,
    subsets_vec, wedge_masks, wedge_sets,
};
use crate::expr::{FunctorExpr, NatTransId};
use crate::{nat, FunctorError};

/// Largest ambient dimension handled by the bitmask encodings.
pub const MAX_K: usize = 20;

#[derive(Debug)]
pub struct Evaluation {
    pub expr: FunctorExpr,
    pub k: usize,
    dim: usize,
    node: Node,
}

#[derive(Debug)]
struct SymData {
    monos: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, u32>,
}

#[derive(Debug)]
enum Node {
    Exterior { masks: Vec<u64> },
    Sym(SymData),
    Divided(SymData),
    TensorPower { n: usize },
    Const,
    PBar,
    IBar { masks: Vec<u64>, rank: Vec<u32> },
    Tensor(Arc<Evaluation>, Arc<Evaluation>),
    Compose { inner: Arc<Evaluation>, sets: Vec<Vec<u32>> },
    Dual(Arc<Evaluation>),
    /// Coordinate sub-block (a truncation or a graded layer).
    Slice { inner: Arc<Evaluation>, keep: Vec<usize> },
    Multi { factors: Vec<Arc<Evaluation>> },
    Sum { blocks: Vec<Arc<Evaluation>> },
    Sub { ambient: Arc<Evaluation>, space: SparseSubspace },
}

/// Monomial masks of `Ī(F₂ᵏ)` ordered by degree, then numerically.
pub fn ibar_masks(k: usize) -> Vec<u64> {
    let mut v: Vec<u64> = (1..(1u64 << k)).collect();
    v.sort_by_key(|&m| (m.count_ones(), m));
    v
}

type EvalCache = Mutex<HashMap<(FunctorExpr, usize), Arc<Evaluation>>>;

fn cache() -> &'static EvalCache {
    static C: OnceLock<EvalCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Memoized evaluation; concurrent callers may race to compute the same key,
/// and the first stored result wins.
pub fn evaluate(e: &FunctorExpr, k: usize) -> Result<Arc<Evaluation>, FunctorError> {
    if k > MAX_K {
        return Err(FunctorError::Unsupported(format!("ambient dimension {k} exceeds {MAX_K}")));
    }
    let key = (e.clone(), k);
    if let Some(v) = cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let ev = Arc::new(build(e, k)?);
    let mut c = cache().lock().unwrap();
    Ok(c.entry(key).or_insert(ev).clone())
}

fn sym_data(k: usize, n: usize) -> SymData {
    let monos = multisets(k, n);
    let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
    SymData { monos, index }
}

fn build(e: &FunctorExpr, k: usize) -> Result<Evaluation, FunctorError> {
    use FunctorExpr as E;
    let (dim, node) = match e {
        E::Exterior(n) => {
            let masks = subsets(k, *n);
            (masks.len(), Node::Exterior { masks })
        }
        E::Sym(n) => {
            let d = sym_data(k, *n);
            (d.monos.len(), Node::Sym(d))
        }
        E::Divided(n) => {
            let d = sym_data(k, *n);
            (d.monos.len(), Node::Divided(d))
        }
        E::TensorPower(n) => (k.pow(*n as u32), Node::TensorPower { n: *n }),
        E::Const(d) => (*d, Node::Const),
        E::PBar => ((1usize << k) - 1, Node::PBar),
        E::IBar => {
            let masks = ibar_masks(k);
            let mut rank = vec![u32::MAX; 1 << k];
            for (i, &m) in masks.iter().enumerate() {
                rank[m as usize] = i as u32;
            }
            (masks.len(), Node::IBar { masks, rank })
        }
        E::Tensor(a, b) => {
            let a = evaluate(a, k)?;
            let b = evaluate(b, k)?;
            (a.dim * b.dim, Node::Tensor(a, b))
        }
        E::Compose(n, g) => {
            let inner = evaluate(g, k)?;
            if binom(inner.dim, *n) > 50_000_000 {
                return Err(FunctorError::Unsupported(format!("{e} at k={k} is too large")));
            }
            let sets = subsets_vec(inner.dim, *n);
            (sets.len(), Node::Compose { inner, sets })
        }
        E::Dual(inner) => return build_dual(e, inner, k),
        E::PolyTrunc(n, inner) => return build_poly(e, *n, inner, k, false),
        E::PolyGraded(n, inner) => return build_poly(e, *n, inner, k, true),
        E::ImageOf(t) => {
            nat::validate(t)?;
            let m = nat::matrix(t, k)?;
            let ambient = evaluate(&nat::target(t), k)?;
            let space = SparseSubspace::span(&m);
            (space.dim(), Node::Sub { ambient, space })
        }
        E::KernelOf(t) => {
            nat::validate(t)?;
            let m = nat::matrix(t, k)?;
            let ambient = evaluate(&nat::source(t), k)?;
            let space = SparseSubspace::span(&m.kernel());
            (space.dim(), Node::Sub { ambient, space })
        }
        E::MultiExterior(parts) => {
            let factors = parts.iter().map(|&p| evaluate(&E::Exterior(p), k)).collect::<Result<Vec<_>, _>>()?;
            (factors.iter().map(|f| f.dim).product(), Node::Multi { factors })
        }
        E::Sum(items) => {
            let blocks = items.iter().map(|x| evaluate(x, k)).collect::<Result<Vec<_>, _>>()?;
            (blocks.iter().map(|b| b.dim).sum(), Node::Sum { blocks })
        }
    };
    Ok(Evaluation { expr: e.clone(), k, dim, node })
}

/// Whether `t` is an idempotent, so that its kernel is also an image.
fn idempotent(t: &NatTransId) -> bool {
    match t {
        NatTransId::Grass | NatTransId::DualGrass => true,
        NatTransId::Pi { i, j } | NatTransId::PiPrime { i, j } => i > j && (i - j) % 2 == 1,
        NatTransId::Dual(t) => idempotent(t),
        _ => false,
    }
}

fn build_dual(e: &FunctorExpr, inner: &FunctorExpr, k: usize) -> Result<Evaluation, FunctorError> {
    use FunctorExpr as E;
    // The dual of im t is im Dt. For an idempotent t, ker t = im(1 - t) and
    // its dual is ker Dt.
    let rewritten = match inner {
        E::ImageOf(t) => Some(E::ImageOf(NatTransId::dual(t.clone()))),
        E::KernelOf(t) if idempotent(t) => Some(E::KernelOf(NatTransId::dual(t.clone()))),
        E::KernelOf(t) => {
            return Err(FunctorError::Unsupported(format!("dual of the kernel of the non-idempotent map {t}")));
        }
        _ => None,
    };
    if let Some(r) = rewritten {
        let ev = evaluate(&r, k)?;
        let Node::Sub { ambient, space } = &ev.node else { unreachable!() };
        return Ok(Evaluation {
            expr: e.clone(),
            k,
            dim: ev.dim,
            node: Node::Sub { ambient: ambient.clone(), space: space.clone() },
        });
    }
    let inner = evaluate(inner, k)?;
    if matches!(inner.node, Node::Sub { .. }) {
        return Err(FunctorError::Unsupported(format!("dual of the subfunctor {}", inner.expr)));
    }
    Ok(Evaluation { expr: e.clone(), k, dim: inner.dim, node: Node::Dual(inner) })
}

fn build_poly(e: &FunctorExpr, n: usize, inner: &FunctorExpr, k: usize, graded: bool) -> Result<Evaluation, FunctorError> {
    let inner = evaluate(inner, k)?;
    let select = |d: u32| if graded { d as usize == n } else { d as usize <= n };
    if let Node::Sub { ambient, space } = &inner.node {
        let degs = ambient.degrees().ok_or_else(|| no_grading(&ambient.expr))?;
        let low: Vec<usize> = (0..ambient.dim).filter(|&i| degs[i] as usize <= n).collect();
        let keep: Vec<usize> = (0..ambient.dim).filter(|&i| select(degs[i])).collect();
        let truncated = space.intersection(&SparseSubspace::coordinate(ambient.dim, &low))?;
        let pos = position_map(ambient.dim, &keep);
        let projected: Vec<Vec<u32>> = truncated
            .vectors()
            .iter()
            .map(|v| v.iter().filter_map(|&r| pos[r as usize]).collect())
            .collect();
        let slice = Arc::new(Evaluation {
            expr: if graded {
                FunctorExpr::PolyGraded(n, Box::new(ambient.expr.clone()))
            } else {
                FunctorExpr::PolyTrunc(n, Box::new(ambient.expr.clone()))
            },
            k,
            dim: keep.len(),
            node: Node::Slice { inner: ambient.clone(), keep: keep.clone() },
        });
        let space = SparseSubspace::from_vectors(keep.len(), projected);
        return Ok(Evaluation { expr: e.clone(), k, dim: space.dim(), node: Node::Sub { ambient: slice, space } });
    }
    let degs = inner.degrees().ok_or_else(|| no_grading(&inner.expr))?;
    let keep: Vec<usize> = (0..inner.dim).filter(|&i| select(degs[i])).collect();
    Ok(Evaluation { expr: e.clone(), k, dim: keep.len(), node: Node::Slice { inner, keep } })
}

fn no_grading(e: &FunctorExpr) -> FunctorError {
    FunctorError::Unsupported(format!("{e} has no coordinate polynomial grading"))
}

fn position_map(n: usize, keep: &[usize]) -> Vec<Option<u32>> {
    let mut pos = vec![None; n];
    for (i, &j) in keep.iter().enumerate() {
        pos[j] = Some(i as u32);
    }
    pos
}

impl Evaluation {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Whether the basis is a coordinate basis rather than an echelon basis
    /// of a subfunctor.
    pub fn is_coordinate(&self) -> bool {
        !matches!(self.node, Node::Sub { .. })
    }

    /// For a subfunctor: the ambient evaluation and the echelon basis.
    pub fn subspace(&self) -> Option<(&Arc<Evaluation>, &SparseSubspace)> {
        match &self.node {
            Node::Sub { ambient, space } => Some((ambient, space)),
            _ => None,
        }
    }

    /// For a truncation or graded layer: the parent evaluation and kept indices.
    pub fn slice(&self) -> Option<(&Arc<Evaluation>, &[usize])> {
        match &self.node {
            Node::Slice { inner, keep } => Some((inner, keep)),
            _ => None,
        }
    }

    /// Exterior-power subset masks, for `Exterior` evaluations.
    pub fn exterior_masks(&self) -> Option<&[u64]> {
        match &self.node {
            Node::Exterior { masks } => Some(masks),
            _ => None,
        }
    }

    /// Sets of inner basis indices, for `Compose` evaluations.
    pub fn compose_sets(&self) -> Option<(&Arc<Evaluation>, &[Vec<u32>])> {
        match &self.node {
            Node::Compose { inner, sets } => Some((inner, sets)),
            _ => None,
        }
    }

    pub fn tensor_factors(&self) -> Option<(&Arc<Evaluation>, &Arc<Evaluation>)> {
        match &self.node {
            Node::Tensor(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Polynomial degree of each basis vector, when the basis is homogeneous.
    pub fn degrees(&self) -> Option<Vec<u32>> {
        match &self.node {
            Node::Exterior { .. } | Node::Sym(_) | Node::Divided(_) => {
                let n = match self.expr {
                    FunctorExpr::Exterior(n) | FunctorExpr::Sym(n) | FunctorExpr::Divided(n) => n,
                    _ => unreachable!(),
                };
                Some(vec![n as u32; self.dim])
            }
            Node::TensorPower { n } => Some(vec![*n as u32; self.dim]),
            Node::Const => Some(vec![0; self.dim]),
            Node::PBar | Node::Sub { .. } => None,
            Node::IBar { masks, .. } => Some(masks.iter().map(|m| m.count_ones()).collect()),
            Node::Tensor(a, b) => {
                let (da, db) = (a.degrees()?, b.degrees()?);
                Some(da.iter().flat_map(|&x| db.iter().map(move |&y| x + y)).collect())
            }
            Node::Compose { inner, sets } => {
                let d = inner.degrees()?;
                Some(sets.iter().map(|s| s.iter().map(|&i| d[i as usize]).sum()).collect())
            }
            Node::Dual(inner) => inner.degrees(),
            Node::Slice { inner, keep } => {
                let d = inner.degrees()?;
                Some(keep.iter().map(|&i| d[i]).collect())
            }
            Node::Multi { .. } => {
                let total: usize = match &self.expr {
                    FunctorExpr::MultiExterior(p) => p.iter().sum(),
                    _ => unreachable!(),
                };
                Some(vec![total as u32; self.dim])
            }
            Node::Sum { blocks } => {
                let mut out = Vec::with_capacity(self.dim);
                for b in blocks {
                    out.extend(b.degrees()?);
                }
                Some(out)
            }
        }
    }

    /// Human-readable label of basis vector `i`.
    pub fn label(&self, i: usize) -> String {
        let set = |m: u64| format!("{{{}}}", bits(m).map(|b| (b + 1).to_string()).collect::<Vec<_>>().join(","));
        match &self.node {
            Node::Exterior { masks } => set(masks[i]),
            Node::Sym(d) | Node::Divided(d) => {
                if d.monos[i].is_empty() {
                    return "1".into();
                }
                d.monos[i].iter().map(|x| format!("x{}", x + 1)).collect::<Vec<_>>().join("")
            }
            Node::TensorPower { n } => {
                let digits = crate::combin::tuple_digits(i, &vec![self.k; *n]);
                format!("({})", digits.iter().map(|d| (d + 1).to_string()).collect::<Vec<_>>().join(","))
            }
            Node::Const => format!("c{}", i + 1),
            Node::PBar => {
                let v = (i + 1) as u64;
                format!("[{}]", (0..self.k).map(|b| if v >> b & 1 == 1 { '1' } else { '0' }).collect::<String>())
            }
            Node::IBar { masks, .. } => bits(masks[i]).map(|b| format!("x{}", b + 1)).collect(),
            Node::Tensor(a, b) => format!("{}|{}", a.label(i / b.dim), b.label(i % b.dim)),
            Node::Compose { inner, sets } => {
                format!("<{}>", sets[i].iter().map(|&j| inner.label(j as usize)).collect::<Vec<_>>().join("^"))
            }
            Node::Dual(inner) => format!("{}*", inner.label(i)),
            Node::Slice { inner, keep } => inner.label(keep[i]),
            Node::Multi { factors } => {
                let radix: Vec<usize> = factors.iter().map(|f| f.dim).collect();
                let digits = crate::combin::tuple_digits(i, &radix);
                factors.iter().zip(digits).map(|(f, d)| f.label(d)).collect::<Vec<_>>().join("|")
            }
            Node::Sum { blocks } => {
                let mut i = i;
                for (n, b) in blocks.iter().enumerate() {
                    if i < b.dim {
                        return format!("{}:{}", n + 1, b.label(i));
                    }
                    i -= b.dim;
                }
                unreachable!()
            }
            Node::Sub { .. } => format!("v{}", i + 1),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim).map(|i| self.label(i)).collect()
    }
}

/// Kronecker power of `f` (`n = 0` gives the 1×1 identity).
fn kron_power(f: &SparseMat, n: usize) -> SparseMat {
    (0..n).fold(SparseMat::identity(1), |acc, _| acc.kronecker(f))
}

/// `Λⁿ(m)` on the colex bases of index subsets.
pub fn wedge_power(n: usize, m: &SparseMat) -> SparseMat {
    let src = subsets_vec(m.cols(), n);
    let rows = binom(m.rows(), n);
    let cols = src
        .iter()
        .map(|s| {
            let mut c: Vec<u32> =
                wedge_sets(s.iter().map(|&j| m.col(j as usize))).iter().map(|t| colex_rank(t) as u32).collect();
            c.sort_unstable();
            c
        })
        .collect();
    SparseMat::new(rows, cols)
}

fn sym_matrix(src: &SymData, dst: &SymData, f: &SparseMat) -> SparseMat {
    let cols = src
        .monos
        .iter()
        .map(|m| {
            multiply_linear_forms(m.iter().map(|&x| f.col(x as usize)))
                .iter()
                .map(|t| dst.index[t])
                .collect::<Vec<u32>>()
        })
        .collect();
    SparseMat::new(dst.monos.len(), cols)
}

fn block_diag(blocks: &[SparseMat]) -> SparseMat {
    let rows: usize = blocks.iter().map(|b| b.rows()).sum();
    let mut cols = Vec::new();
    let mut off = 0u32;
    for b in blocks {
        for c in b.columns() {
            cols.push(c.iter().map(|&r| r + off).collect());
        }
        off += b.rows() as u32;
    }
    SparseMat::new(rows, cols)
}

/// Matrix of `e(f): e(F₂ᵃ) → e(F₂ᵇ)` between two evaluations of the same expression.
pub fn apply_map_evals(src: &Evaluation, dst: &Evaluation, f: &SparseMat) -> Result<SparseMat, FunctorError> {
    if src.expr != dst.expr || f.cols() != src.k || f.rows() != dst.k {
        return Err(FunctorError::Shape(format!(
            "map {}x{} between {} at {} and {} at {}",
            f.rows(),
            f.cols(),
            src.expr,
            src.k,
            dst.expr,
            dst.k
        )));
    }
    induced(src, dst, f)
}

fn induced(src: &Evaluation, dst: &Evaluation, f: &SparseMat) -> Result<SparseMat, FunctorError> {
    let out = match (&src.node, &dst.node) {
        (Node::Exterior { masks }, Node::Exterior { masks: dmasks }) => {
            let n = match src.expr {
                FunctorExpr::Exterior(n) => n,
                _ => unreachable!(),
            };
            let cols = masks
                .iter()
                .map(|&s| {
                    wedge_masks(bits(s).map(|j| f.col(j as usize))).iter().map(|&t| colex_rank_mask(t) as u32).collect()
                })
                .collect();
            debug_assert_eq!(dmasks.len(), binom(dst.k, n));
            SparseMat::new(dmasks.len(), cols)
        }
        (Node::Sym(a), Node::Sym(b)) => sym_matrix(a, b, f),
        (Node::Divided(a), Node::Divided(b)) => sym_matrix(b, a, &f.transpose()).transpose(),
        (Node::TensorPower { n }, _) => kron_power(f, *n),
        (Node::Const, _) => SparseMat::identity(src.dim),
        (Node::PBar, _) => {
            let fm = column_masks(f);
            let cols = (1..=src.dim as u64)
                .map(|v| {
                    let w = crate::combin::apply_mask(&fm, v);
                    if w == 0 {
                        vec![]
                    } else {
                        vec![(w - 1) as u32]
                    }
                })
                .collect();
            SparseMat::new(dst.dim, cols)
        }
        (Node::IBar { masks, .. }, Node::IBar { rank, .. }) => {
            let cols = masks
                .iter()
                .map(|&s| {
                    boolean_product(bits(s).map(|i| f.col(i as usize))).iter().map(|&t| rank[t as usize]).collect()
                })
                .collect();
            SparseMat::new(dst.dim, cols)
        }
        (Node::Tensor(a, b), Node::Tensor(c, d)) => induced(a, c, f)?.kronecker(&induced(b, d, f)?),
        (Node::Compose { inner, sets }, Node::Compose { inner: dinner, .. }) => {
            let g = induced(inner, dinner, f)?;
            let cols = sets
                .iter()
                .map(|s| wedge_sets(s.iter().map(|&j| g.col(j as usize))).iter().map(|t| colex_rank(t) as u32).collect())
                .collect();
            SparseMat::new(dst.dim, cols)
        }
        (Node::Dual(a), Node::Dual(b)) => induced(b, a, &f.transpose())?.transpose(),
        (Node::Slice { inner, keep }, Node::Slice { inner: dinner, keep: dkeep }) => {
            let g = induced(inner, dinner, f)?;
            g.select_cols(keep).select_rows(dkeep)
        }
        (Node::Multi { factors }, Node::Multi { factors: dfactors }) => {
            let mut m = SparseMat::identity(1);
            for (a, b) in factors.iter().zip(dfactors) {
                m = m.kronecker(&induced(a, b, f)?);
            }
            m
        }
        (Node::Sum { blocks }, Node::Sum { blocks: dblocks }) => {
            let parts = blocks.iter().zip(dblocks).map(|(a, b)| induced(a, b, f)).collect::<Result<Vec<_>, _>>()?;
            block_diag(&parts)
        }
        (Node::Sub { ambient, space }, Node::Sub { ambient: damb, space: dspace }) => {
            let g = induced(ambient, damb, f)?;
            let images = g.mul(&space.as_matrix())?;
            dspace
                .coordinates_of(&images)
                .map_err(|_| FunctorError::NotNatural(format!("{} is not stable under the induced map", src.expr)))?
        }
        _ => unreachable!("evaluations of one expression share their shape"),
    };
    Ok(out)
}

/// Induced map on evaluations, sparse form.
pub fn apply_map_sparse(e: &FunctorExpr, f: &SparseMat) -> Result<SparseMat, FunctorError> {
    let src = evaluate(e, f.cols())?;
    let dst = evaluate(e, f.rows())?;
    apply_map_evals(&src, &dst, f)
}

/// Induced map `e(f)` for `f: F₂ᵃ → F₂ᵇ` given as a `b × a` matrix.
pub fn apply_map(e: &FunctorExpr, f: &Gf2Matrix) -> Result<Gf2Matrix, FunctorError> {
    Ok(apply_map_sparse(e, &SparseMat::from_dense(f))?.to_dense())
}

/// `D(e)`, evaluated by duality.
pub fn dualize(e: &FunctorExpr) -> FunctorExpr {
    FunctorExpr::dual(e.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pbar_kills_vectors_in_the_kernel() {
        let f = SparseMat::new(2, vec![vec![0], vec![0]]);
        let m = apply_map_sparse(&FunctorExpr::PBar, &f).unwrap();
        // [e1] -> [e1], [e2] -> [e1], [e1+e2] -> 0
        assert_eq!(m.columns(), &[vec![0], vec![0], vec![]]);
    }

    #[test]
    fn ibar_substitutes_linear_forms() {
        // x1 -> y1 + y2 on F₂¹ -> F₂²
        let f = SparseMat::new(2, vec![vec![0, 1]]);
        let m = apply_map_sparse(&FunctorExpr::IBar, &f).unwrap();
        assert_eq!(m.columns(), &[vec![0, 1]]);
        // x1x2 with x1 -> y1, x2 -> y1 becomes y1
        let f = SparseMat::new(1, vec![vec![0], vec![0]]);
        let m = apply_map_sparse(&FunctorExpr::IBar, &f).unwrap();
        assert_eq!(m.col(2), &[0]);
    }

    #[test]
    fn labels_follow_the_ordering_conventions() {
        let e = evaluate(&FunctorExpr::IBar, 3).unwrap();
        assert_eq!(e.labels(), ["x1", "x2", "x3", "x1x2", "x1x3", "x2x3", "x1x2x3"]);
        let e = evaluate(&FunctorExpr::Exterior(2), 3).unwrap();
        assert_eq!(e.labels(), ["{1,2}", "{1,3}", "{2,3}"]);
        let e = evaluate(&FunctorExpr::Sym(2), 2).unwrap();
        assert_eq!(e.labels(), ["x1x1", "x1x2", "x2x2"]);
    }
}
