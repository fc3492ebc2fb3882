//! The maps `j_{λ,r}` and `w_n`, and the subspaces they carry Weyl functors to.

use gf2_linalg::{SparseMat, SparseSubspace};

use crate::combin::{binom, colex_rank, tuple_digits};
use crate::eval::evaluate;
use crate::expr::{FunctorExpr, NatTransId};
use crate::nat::{matrix, theta_on, LamIndex};
use crate::weyl::weyl_space;
use crate::FunctorError;

/// `A ⊗ B` inside the lexicographic product basis.
pub fn tensor_subspace(a: &SparseSubspace, b: &SparseSubspace) -> SparseSubspace {
    let nb = b.ambient_dim();
    let mut vectors = Vec::with_capacity(a.dim() * b.dim());
    for u in a.vectors() {
        for v in b.vectors() {
            let mut w: Vec<u32> = u.iter().flat_map(|&x| v.iter().map(move |&y| (x as usize * nb + y as usize) as u32)).collect();
            w.sort_unstable();
            vectors.push(w);
        }
    }
    SparseSubspace::from_vectors(a.ambient_dim() * nb, vectors)
}

fn padded(lambda: &[usize], r: usize) -> Result<Vec<usize>, FunctorError> {
    if lambda.len() > r {
        return Err(FunctorError::InvalidParameters(format!("{lambda:?} is longer than r = {r}")));
    }
    let mut l = lambda.to_vec();
    l.resize(r, 0);
    Ok(l)
}

/// `λ + n` componentwise.
pub fn shifted(lambda: &[usize], n: usize) -> Vec<usize> {
    lambda.iter().map(|x| x + n).collect()
}

/// `j_{λ,r}(W_λ ⊗ Λ^r)` at `F₂ᵏ`, with λ padded by zeros to length `r`.
pub fn j_image(lambda: &[usize], r: usize, k: usize) -> Result<SparseSubspace, FunctorError> {
    let l = padded(lambda, r)?;
    let j = matrix(&NatTransId::J { lambda: l.clone(), r }, k)?;
    let src = tensor_subspace(&weyl_space(&l, k)?, &SparseSubspace::full(binom(k, r)));
    Ok(src.map(&j)?)
}

/// `w_n(W_λ ⊗ Λⁿ(Λ^r))` at `F₂ᵏ` for `r = len(λ)`.
pub fn w_image(lambda: &[usize], n: usize, k: usize) -> Result<SparseSubspace, FunctorError> {
    let id = NatTransId::W { lambda: lambda.to_vec(), n };
    let w = matrix(&id, k)?;
    let outer = evaluate(&FunctorExpr::compose(n, FunctorExpr::Exterior(lambda.len())), k)?.dim();
    let src = tensor_subspace(&weyl_space(lambda, k)?, &SparseSubspace::full(outer));
    Ok(src.map(&w)?)
}

/// The iterated map `j^n_λ: Λ^λ ⊗ Tⁿ(Λ^r) → Λ^{λ+n}`.
pub fn j_power(lambda: &[usize], n: usize, k: usize) -> Result<SparseMat, FunctorError> {
    let r = lambda.len();
    let d = binom(k, r);
    if n == 0 {
        return Ok(SparseMat::identity(LamIndex::new(lambda, k).dim()));
    }
    let j = matrix(&NatTransId::J { lambda: lambda.to_vec(), r }, k)?;
    let first = j.kronecker(&SparseMat::identity(d.pow(n as u32 - 1)));
    Ok(j_power(&shifted(lambda, 1), n - 1, k)?.mul(&first)?)
}

/// The quotient `X ⊗ Tⁿ(Y) → X ⊗ Λⁿ(Y)` for `dim X = x`, `dim Y = m`:
/// tuples with a repeated entry vanish, the others go to their sorted set.
pub fn alternating_quotient(x: usize, m: usize, n: usize) -> SparseMat {
    let radix = vec![m; n];
    let tn = m.pow(n as u32);
    let ln = binom(m, n);
    let mut cols = Vec::with_capacity(x * tn);
    for a in 0..x {
        for t in 0..tn {
            let mut digits: Vec<u32> = tuple_digits(t, &radix).into_iter().map(|d| d as u32).collect();
            digits.sort_unstable();
            if digits.windows(2).any(|w| w[0] == w[1]) {
                cols.push(vec![]);
            } else {
                cols.push(vec![(a * ln + colex_rank(&digits)) as u32]);
            }
        }
    }
    SparseMat::new(x * ln, cols)
}

/// The square `w^{i+t,j−t,0}_n ∘ (θ_{i,j,t} ⊗ id) = (θ ⊗ id) ∘ w^{i,j,0}_n`
/// on `Λ^i ⊗ Λ^j ⊗ Λⁿ(Λ³)`, for `i > j > t > 0`.
pub fn w_theta_square(i: usize, j: usize, t: usize, n: usize, k: usize) -> Result<bool, FunctorError> {
    if !(i > j && j > t && t > 0) {
        return Err(FunctorError::InvalidParameters(format!("need i > j > t > 0, got ({i},{j},{t})")));
    }
    let outer = evaluate(&FunctorExpr::compose(n, FunctorExpr::Exterior(3)), k)?.dim();
    let id_outer = SparseMat::identity(outer);
    let w_top = matrix(&NatTransId::W { lambda: vec![i, j, 0], n }, k)?;
    let w_bottom = matrix(&NatTransId::W { lambda: vec![i + t, j - t, 0], n }, k)?;
    let left = theta_on(&[i, j, 0], 0, t, k).kronecker(&id_outer);
    let right = theta_on(&[i + n, j + n, n], 0, t, k);
    Ok(w_bottom.mul(&left)? == right.mul(&w_top)?)
}
