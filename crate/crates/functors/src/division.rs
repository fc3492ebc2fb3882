//! The difference functor Δ, division by Λ¹, the internal hom out of Λ¹ and
//! the branching filtration of a Weyl functor.
//!
//! Everything is computed inside `F(F₂^{k+1})` and `F(F₂^{k+2})`, where the
//! extra coordinates come first: `F₂ ⊕ F₂ᵏ` has the new basis vector at
//! index 0, and `F₂² ⊕ F₂ᵏ` has `s` at 0 and `t` at 1.

use gf2_linalg::{SparseMat, SparseSubspace};
use partitions::Partition;

use crate::eval::{apply_map_sparse, evaluate};
use crate::expr::FunctorExpr;
use crate::nat::LamIndex;
use crate::weyl::weyl_space;
use crate::FunctorError;

fn map(rows: usize, images: Vec<Vec<u32>>) -> SparseMat {
    SparseMat::new(rows, images)
}

/// `F₂ ⊕ F₂ᵏ → F₂ᵏ`, `(x, v) ↦ v`.
pub fn projection(k: usize) -> SparseMat {
    let mut cols = vec![vec![]];
    cols.extend((0..k as u32).map(|i| vec![i]));
    map(k, cols)
}

/// `F₂² ⊕ F₂ᵏ → F₂ ⊕ F₂ᵏ` killing `s` (`first = true`) or `t`.
pub fn kill_one(k: usize, first: bool) -> SparseMat {
    let mut cols = if first { vec![vec![], vec![0]] } else { vec![vec![0], vec![]] };
    cols.extend((1..=k as u32).map(|i| vec![i]));
    map(k + 1, cols)
}

/// `(s, t, v) ↦ (s + t, v)`.
pub fn addition(k: usize) -> SparseMat {
    let mut cols = vec![vec![0], vec![0]];
    cols.extend((1..=k as u32).map(|i| vec![i]));
    map(k + 1, cols)
}

/// `(x, v) ↦ (x, x, v)`.
pub fn diagonal(k: usize) -> SparseMat {
    let mut cols = vec![vec![0, 1]];
    cols.extend((2..=k as u32 + 1).map(|i| vec![i]));
    map(k + 2, cols)
}

/// `(x, v) ↦ (x, 0, v)` or `(0, x, v)`.
pub fn insertion(k: usize, first: bool) -> SparseMat {
    let mut cols = vec![vec![if first { 0 } else { 1 }]];
    cols.extend((2..=k as u32 + 1).map(|i| vec![i]));
    map(k + 2, cols)
}

/// `ΔF(F₂ᵏ) = ker F(F₂ ⊕ F₂ᵏ → F₂ᵏ)` inside `F(F₂^{k+1})`.
pub fn delta(e: &FunctorExpr, k: usize) -> Result<SparseSubspace, FunctorError> {
    let p = apply_map_sparse(e, &projection(k))?;
    Ok(SparseSubspace::span(&p.kernel()))
}

/// `Δ²F(F₂ᵏ)` inside `F(F₂^{k+2})`: vectors killed by both `s ↦ 0` and `t ↦ 0`.
pub fn delta2(e: &FunctorExpr, k: usize) -> Result<SparseSubspace, FunctorError> {
    let a = apply_map_sparse(e, &kill_one(k, true))?;
    let b = apply_map_sparse(e, &kill_one(k, false))?;
    Ok(SparseSubspace::span(&a.vstack(&b)?.kernel()))
}

/// The pieces of the two exact sequences relating `ΔF` and `Δ²F`.
#[derive(Clone, Debug)]
pub struct Division {
    pub expr: FunctorExpr,
    pub k: usize,
    /// `ΔF(F₂ᵏ) ⊆ F(F₂^{k+1})`.
    pub delta: SparseSubspace,
    /// Image of `Δ²F` under `F(σ ⊕ id)`; `(F:Λ¹) = ΔF / relations`.
    pub relations: SparseSubspace,
    /// `Hom(Λ¹, F)(F₂ᵏ)`: vectors of `ΔF` on which `F(δ) + F(i_s) + F(i_t)` vanishes.
    pub hom: SparseSubspace,
}

impl Division {
    /// `dim (F:Λ¹)(F₂ᵏ)`.
    pub fn quotient_dim(&self) -> usize {
        self.delta.dim() - self.relations.dim()
    }

    pub fn hom_dim(&self) -> usize {
        self.hom.dim()
    }

    /// Rank of `Hom(Λ¹, F) ↪ ΔF ↠ (F:Λ¹)`.
    pub fn v_rank(&self) -> usize {
        let sum = self.hom.sum(&self.relations).expect("same ambient");
        sum.dim() - self.relations.dim()
    }

    pub fn v_bijective(&self) -> bool {
        let r = self.v_rank();
        r == self.hom_dim() && r == self.quotient_dim()
    }
}

pub fn division(e: &FunctorExpr, k: usize) -> Result<Division, FunctorError> {
    let delta = delta(e, k)?;
    let d2 = delta2(e, k)?;
    let relations = d2.map(&apply_map_sparse(e, &addition(k))?)?;
    let diag = apply_map_sparse(e, &diagonal(k))?;
    let cross = diag.add(&apply_map_sparse(e, &insertion(k, true))?)?.add(&apply_map_sparse(e, &insertion(k, false))?)?;
    let restricted = cross.mul(&delta.as_matrix())?;
    let hom = SparseSubspace::span(&delta.as_matrix().mul(&restricted.kernel())?);
    Ok(Division { expr: e.clone(), k, delta, relations, hom })
}

pub fn divide_lambda1_dim(e: &FunctorExpr, k: usize) -> Result<usize, FunctorError> {
    Ok(division(e, k)?.quotient_dim())
}

pub fn hom_lambda1_dim(e: &FunctorExpr, k: usize) -> Result<usize, FunctorError> {
    Ok(division(e, k)?.hom_dim())
}

/// The filtration `F_0 ⊂ … ⊂ F_r` of `(W_λ:Λ¹)(F₂ᵏ)`, reported by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branching {
    pub dims: Vec<usize>,
    /// Whether `(W_λ:Λ¹) → (Λ^λ:Λ¹)` is injective.
    pub injective: bool,
}

impl Branching {
    pub fn quotient_dims(&self) -> Vec<usize> {
        self.dims.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

/// In `Λ^λ(F₂^{k+1})`, `ΔΛ^λ` is spanned by the tensors whose factors contain
/// the new coordinate, `(Λ^λ:Λ¹)` is modelled by those where exactly one
/// factor does (block `i` for factor `i`, a copy of `Λ^{λᵢ⁻}`), and the relations
/// are the tensors where at least two factors do.
pub fn branching_filtration(lambda: &Partition, k: usize) -> Result<Branching, FunctorError> {
    if !lambda.is_regular() {
        return Err(FunctorError::InvalidParameters(format!("branching needs a regular partition, got {lambda}")));
    }
    let parts = lambda.parts();
    let r = parts.len();
    let e = FunctorExpr::lambda(parts);
    let idx = LamIndex::new(parts, k + 1);
    // factor containing the new coordinate, when there is exactly one
    let block: Vec<Option<usize>> = (0..idx.dim())
        .map(|x| {
            let m = idx.masks(x);
            let hits: Vec<usize> = (0..r).filter(|&i| m[i] & 1 == 1).collect();
            (hits.len() == 1).then(|| hits[0])
        })
        .collect();
    let w1 = weyl_space(parts, k + 1)?;
    let w2 = weyl_space(parts, k + 2)?;
    let q = w1.intersection(&delta(&e, k)?)?;
    let r_w = w2.intersection(&delta2(&e, k)?)?.map(&apply_map_sparse(&e, &addition(k))?)?;
    // rank of the projection of Q onto the blocks with index ≥ i
    let rank_beyond = |i: usize| {
        let cols = q
            .vectors()
            .iter()
            .map(|v| v.iter().copied().filter(|&x| block[x as usize].is_some_and(|b| b >= i)).collect())
            .collect();
        SparseMat::new(idx.dim(), cols).rank()
    };
    let mut dims = vec![0];
    for i in 1..=r {
        dims.push(q.dim() - rank_beyond(i) - r_w.dim());
    }
    let injective = q.dim() - rank_beyond(0) == r_w.dim();
    Ok(Branching { dims, injective })
}

/// `dim W_{λᵢ⁻}(F₂ᵏ)` for each `i`.
pub fn branching_prediction(lambda: &Partition, k: usize) -> Result<Vec<usize>, FunctorError> {
    (1..=lambda.length())
        .map(|i| {
            let nb = lambda.minus(i)?;
            match nb.partition() {
                Some(p) => Ok(weyl_space(p.parts(), k)?.dim()),
                None => Err(FunctorError::InvalidParameters(format!("{lambda} lowered at {i} is not a partition"))),
            }
        })
        .collect()
}

/// `dim ΔF(F₂ᵏ)` together with `dim F(F₂^{k+1}) − dim F(F₂ᵏ)`.
pub fn delta_dims(e: &FunctorExpr, k: usize) -> Result<(usize, usize), FunctorError> {
    let d = delta(e, k)?.dim();
    Ok((d, evaluate(e, k + 1)?.dim() - evaluate(e, k)?.dim()))
}
