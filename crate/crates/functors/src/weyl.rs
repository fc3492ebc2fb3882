//! Weyl functors `W_λ ⊆ Λ^λ`, their generating elements, and the radical of
//! the auto-duality pairing.

use gf2_linalg::{Echelon, SparseMat, SparseSubspace};
use partitions::Partition;

use crate::combin::{cancel_pairs, subsets};
use crate::eval::{apply_map_sparse, evaluate};
use crate::expr::{FunctorExpr, NatTransId};
use crate::gl::{gl_generators, singular_map};
use crate::nat::{matrix, psi_blocks, theta_on, LamIndex};
use crate::FunctorError;

fn check_sequence(lambda: &[usize]) -> Result<(), FunctorError> {
    if partitions::is_weakly_decreasing(lambda) {
        Ok(())
    } else {
        Err(FunctorError::InvalidParameters(format!("{lambda:?} is not weakly decreasing")))
    }
}

/// `W_λ(F₂ᵏ) = ker ψ_λ`. Trailing zeros are allowed and contribute `Λ⁰`.
pub fn weyl_space(lambda: &[usize], k: usize) -> Result<SparseSubspace, FunctorError> {
    check_sequence(lambda)?;
    let ev = evaluate(&FunctorExpr::weyl(lambda), k)?;
    Ok(ev.subspace().expect("kernel evaluation").1.clone())
}

/// `Λ^{λ_1..λ_{p-1}} ⊗ S ⊗ Λ^{λ_{p+2}..}` for `S ⊆ Λ^{λ_p, λ_{p+1}}`.
pub fn lift_pair(lambda: &[usize], p: usize, sub: &SparseSubspace, k: usize) -> SparseSubspace {
    let pre = LamIndex::new(&lambda[..p], k).dim();
    let mid = LamIndex::new(&lambda[p..p + 2], k).dim();
    let post = LamIndex::new(&lambda[p + 2..], k).dim();
    debug_assert_eq!(sub.ambient_dim(), mid);
    let mut vectors = Vec::with_capacity(pre * post * sub.dim());
    for x in 0..pre {
        for s in sub.vectors() {
            for y in 0..post {
                vectors.push(s.iter().map(|&m| ((x * mid + m as usize) * post + y) as u32).collect());
            }
        }
    }
    SparseSubspace::from_vectors(pre * mid * post, vectors)
}

/// `W_λ` as the intersection over adjacent pairs of `… ⊗ W_{(λ_i, λ_{i+1})} ⊗ …`,
/// each two-row Weyl space being the intersection of the kernels of its θ maps.
pub fn weyl_by_intersection(lambda: &[usize], k: usize) -> Result<SparseSubspace, FunctorError> {
    check_sequence(lambda)?;
    let mut acc = SparseSubspace::full(LamIndex::new(lambda, k).dim());
    for p in 0..lambda.len().saturating_sub(1) {
        let pair = &lambda[p..p + 2];
        let mut two = SparseSubspace::full(LamIndex::new(pair, k).dim());
        for (_, t) in psi_blocks(pair) {
            let ker = SparseSubspace::span(&theta_on(pair, 0, t, k).kernel());
            two = two.intersection(&ker)?;
        }
        acc = acc.intersection(&lift_pair(lambda, p, &two, k))?;
    }
    Ok(acc)
}

/// `s^st_λ(e_{v_1}, …, e_{v_{λ_1}})` for basis vectors given by index.
pub fn semi_standard_element(lambda: &[usize], v: &[u32], k: usize) -> Result<Vec<u32>, FunctorError> {
    check_sequence(lambda)?;
    if v.len() != lambda.first().copied().unwrap_or(0) || v.iter().any(|&x| x as usize >= k) {
        return Err(FunctorError::InvalidParameters(format!("need {} basis indices below {k}", lambda.first().unwrap_or(&0))));
    }
    let idx = LamIndex::new(lambda, k);
    let mut masks = Vec::with_capacity(lambda.len());
    for &l in lambda {
        let mut m = 0u64;
        for &x in &v[..l] {
            if m >> x & 1 == 1 {
                return Ok(Vec::new());
            }
            m |= 1 << x;
        }
        masks.push(m);
    }
    Ok(vec![idx.index(&masks) as u32])
}

/// Span of `s^st_λ(v_1, …, v_{λ_1})` over all tuples of vectors.
///
/// Every such element is the image of `s^st_λ(e_1, …, e_{λ_1})` under some
/// endomorphism of `F₂ᵏ`, and the endomorphism monoid is generated by GL_k
/// together with one singular map, so spinning the single seed under those
/// generators yields the full span.
pub fn semi_standard_span(lambda: &[usize], k: usize) -> Result<SparseSubspace, FunctorError> {
    check_sequence(lambda)?;
    let e = FunctorExpr::lambda(lambda);
    let dim = evaluate(&e, k)?.dim();
    let l1 = lambda.first().copied().unwrap_or(0);
    if l1 > k {
        return Ok(SparseSubspace::zero(dim));
    }
    let seed = semi_standard_element(lambda, &(0..l1 as u32).collect::<Vec<_>>(), k)?;
    let mut gens = if k > 0 { gl_generators(k)? } else { Vec::new() };
    if k > 0 {
        gens.push(singular_map(k));
    }
    let actions = gens.iter().map(|g| apply_map_sparse(&e, g)).collect::<Result<Vec<_>, _>>()?;
    Ok(spin(dim, &[seed], &actions))
}

/// Span of `F(f)(seed)` over all linear maps `f: F₂ᵐ → F₂ᵏ`, for `seed ∈ F(F₂ᵐ)`.
///
/// When `k ≥ m` every such `f` extends an endomorphism of `F₂ᵏ` along the
/// inclusion; otherwise it factors through the coordinate projection.
pub fn span_over_maps(e: &FunctorExpr, m: usize, seed: &[u32], k: usize) -> Result<SparseSubspace, FunctorError> {
    let close = |d: usize, seed: Vec<u32>| -> Result<SparseSubspace, FunctorError> {
        let dim = evaluate(e, d)?.dim();
        if d == 0 {
            return Ok(SparseSubspace::from_vectors(dim, vec![seed]));
        }
        let mut gens = gl_generators(d)?;
        gens.push(singular_map(d));
        let actions = gens.iter().map(|g| apply_map_sparse(e, g)).collect::<Result<Vec<_>, _>>()?;
        Ok(spin(dim, &[seed], &actions))
    };
    if k >= m {
        let inc = SparseMat::new(k, (0..m as u32).map(|i| vec![i]).collect());
        close(k, apply_map_sparse(e, &inc)?.apply(seed))
    } else {
        let proj = SparseMat::new(k, (0..m as u32).map(|i| if (i as usize) < k { vec![i] } else { vec![] }).collect());
        Ok(close(m, seed.to_vec())?.map(&apply_map_sparse(e, &proj)?)?)
    }
}

/// Smallest subspace containing `seeds` and stable under `actions`.
pub fn spin(dim: usize, seeds: &[Vec<u32>], actions: &[SparseMat]) -> SparseSubspace {
    let mut ech = Echelon::new(dim);
    let mut queue: Vec<Vec<u32>> = Vec::new();
    for s in seeds {
        if ech.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for a in actions {
            let w = a.apply(&v);
            if ech.insert(&w) {
                queue.push(w);
            }
        }
    }
    ech.into_subspace()
}

/// Row permutations inside each column of the diagram of λ.
fn column_groups(lambda: &[usize]) -> Vec<Vec<usize>> {
    let l1 = lambda.first().copied().unwrap_or(0);
    (0..l1).map(|j| (0..lambda.len()).filter(|&i| lambda[i] > j).collect()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `g^st((a_{i,j}))` for a filling by basis vector indices, given row by row.
pub fn standard_element(lambda: &[usize], filling: &[Vec<u32>], k: usize) -> Result<Vec<u32>, FunctorError> {
    check_sequence(lambda)?;
    if filling.len() != lambda.len() || filling.iter().zip(lambda).any(|(row, &l)| row.len() != l) {
        return Err(FunctorError::Shape(format!("filling does not have shape {lambda:?}")));
    }
    let idx = LamIndex::new(lambda, k);
    let perms: Vec<Vec<Vec<usize>>> = column_groups(lambda).iter().map(|c| permutations(c.len())).collect();
    let mut terms = Vec::new();
    let mut choice = vec![0usize; perms.len()];
    loop {
        // row i, column j receives a_{σ_j(i), j}
        let mut masks = vec![0u64; lambda.len()];
        let mut zero = false;
        'fill: for (j, p) in choice.iter().enumerate() {
            let perm = &perms[j][*p];
            for i in 0..perm.len() {
                let x = filling[perm[i]][j];
                if masks[i] >> x & 1 == 1 {
                    zero = true;
                    break 'fill;
                }
                masks[i] |= 1 << x;
            }
        }
        if !zero {
            terms.push(idx.index(&masks) as u32);
        }
        let mut j = 0;
        while j < choice.len() {
            choice[j] += 1;
            if choice[j] < perms[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
        if j == choice.len() {
            break;
        }
    }
    terms.sort_unstable();
    cancel_pairs(&mut terms);
    Ok(terms)
}

/// Span of the standard elements over all fillings by basis vectors, which
/// suffices since `g^st` is multilinear in the entries.
pub fn standard_span(lambda: &Partition, k: usize) -> Result<SparseSubspace, FunctorError> {
    if !lambda.is_regular() {
        return Err(FunctorError::InvalidParameters(format!("standard elements need a regular partition, got {lambda}")));
    }
    let parts = lambda.parts();
    let dim = LamIndex::new(parts, k).dim();
    let n = lambda.degree();
    let mut ech = Echelon::new(dim);
    if k == 0 {
        if n == 0 {
            ech.insert(&[0]);
        }
        return Ok(ech.into_subspace());
    }
    let mut digits = vec![0u32; n];
    loop {
        let mut filling = Vec::with_capacity(parts.len());
        let mut pos = 0;
        for &l in parts {
            filling.push(digits[pos..pos + l].to_vec());
            pos += l;
        }
        // rows with a repeated entry vanish in every term
        if filling.iter().all(|r| distinct(r)) {
            ech.insert(&standard_element(parts, &filling, k)?);
        }
        let mut i = 0;
        while i < n {
            digits[i] += 1;
            if (digits[i] as usize) < k {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(ech.into_subspace())
}

fn distinct(r: &[u32]) -> bool {
    r.iter().enumerate().all(|(i, x)| !r[..i].contains(x))
}

/// `W_λ(F₂ᵏ)`, its radical `W_λ ∩ W_λ^⊥`, and the ambient `Λ^λ`.
#[derive(Clone, Debug)]
pub struct SchurData {
    pub lambda: Partition,
    pub k: usize,
    pub ambient: FunctorExpr,
    pub weyl: SparseSubspace,
    pub rad: SparseSubspace,
}

impl SchurData {
    pub fn schur_dim(&self) -> usize {
        self.weyl.dim() - self.rad.dim()
    }
}

/// The orthogonal is taken for the pairing whose Gram matrix in the
/// subset-tensor basis is the identity.
pub fn rad_and_schur(lambda: &Partition, k: usize) -> Result<SchurData, FunctorError> {
    if !lambda.is_regular() {
        return Err(FunctorError::InvalidParameters(format!("the Schur quotient needs a regular partition, got {lambda}")));
    }
    let weyl = weyl_space(lambda.parts(), k)?;
    let rad = weyl.intersection(&weyl.orthogonal())?;
    Ok(SchurData { lambda: lambda.clone(), k, ambient: FunctorExpr::lambda(lambda.parts()), weyl, rad })
}

/// Whether `θ_{j,i,i−j} ∘ τ` fixes every vector of `W_{(i,j)}(F₂ᵏ)`.
pub fn tau_theta_weyl_check(i: usize, j: usize, k: usize) -> Result<bool, FunctorError> {
    if i < j {
        return Err(FunctorError::InvalidParameters(format!("need i >= j, got ({i},{j})")));
    }
    let w = weyl_space(&[i, j], k)?;
    let m = theta_on(&[j, i], 0, i - j, k).mul(&*matrix(&NatTransId::Tau { i, j }, k)?)?;
    Ok(w.vectors().iter().all(|v| &m.apply(v) == v))
}

/// The determinant pairing `⟨v_1∧…∧v_n, φ_1∧…∧φ_n⟩ = det(φ_b(v_a))` between
/// `Λⁿ(F₂ᵏ)` and `Λⁿ` of the dual, on subset bases.
pub fn determinant_pairing(n: usize, k: usize) -> gf2_linalg::Gf2Matrix {
    let sets = subsets(k, n);
    gf2_linalg::Gf2Matrix::from_fn(sets.len(), sets.len(), |a, b| {
        let s: Vec<u32> = crate::combin::bits(sets[a]).collect();
        let t: Vec<u32> = crate::combin::bits(sets[b]).collect();
        let m = gf2_linalg::Gf2Matrix::from_fn(n, n, |x, y| s[x] == t[y]);
        m.rank() == n
    })
}

