//! Matrices of the named natural transformations, memoized per dimension.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use gf2_linalg::{Gf2Matrix, SparseMat};

use crate::combin::{binom, bits, colex_rank, colex_rank_mask, subsets, tuple_digits, tuple_index, wedge_masks, wedge_sets};
use crate::eval::{apply_map_evals, evaluate, ibar_masks, wedge_power, Evaluation};
use crate::expr::{FunctorExpr, NatTransId};
use crate::FunctorError;

/// Basis bookkeeping for `Λ^μ(F₂ᵏ)`: tuples of colex-ranked subsets.
pub struct LamIndex {
    lists: Vec<Vec<u64>>,
    radix: Vec<usize>,
}

impl LamIndex {
    pub fn new(parts: &[usize], k: usize) -> Self {
        let lists: Vec<Vec<u64>> = parts.iter().map(|&p| subsets(k, p)).collect();
        let radix = lists.iter().map(Vec::len).collect();
        LamIndex { lists, radix }
    }

    pub fn dim(&self) -> usize {
        self.radix.iter().product()
    }

    pub fn masks(&self, idx: usize) -> Vec<u64> {
        tuple_digits(idx, &self.radix).iter().zip(&self.lists).map(|(&d, l)| l[d]).collect()
    }

    pub fn index(&self, masks: &[u64]) -> usize {
        let digits: Vec<usize> = masks.iter().map(|&m| colex_rank_mask(m)).collect();
        tuple_index(&digits, &self.radix)
    }
}

/// Submasks of `m` with exactly `t` bits.
pub fn submasks(m: u64, t: usize) -> Vec<u64> {
    let b: Vec<u32> = bits(m).collect();
    if t > b.len() {
        return Vec::new();
    }
    subsets(b.len(), t).into_iter().map(|s| bits(s).fold(0u64, |acc, i| acc | 1 << b[i as usize])).collect()
}

/// Map on `Λ^μ` given by a rule on subset tuples.
fn lam_map(src: &[usize], dst: &[usize], k: usize, rule: impl Fn(&[u64], &mut Vec<Vec<u64>>)) -> SparseMat {
    let s = LamIndex::new(src, k);
    let d = LamIndex::new(dst, k);
    let mut out = Vec::new();
    let cols = (0..s.dim())
        .map(|idx| {
            out.clear();
            rule(&s.masks(idx), &mut out);
            out.iter().map(|m| d.index(m) as u32).collect()
        })
        .collect();
    SparseMat::new(d.dim(), cols)
}

fn moved(mu: &[usize], p: usize, t: isize) -> Vec<usize> {
    let mut v = mu.to_vec();
    v[p] = (v[p] as isize + t) as usize;
    v[p + 1] = (v[p + 1] as isize - t) as usize;
    v
}

/// θ with parameter `t` on factors `p, p+1` of `Λ^μ`.
pub fn theta_on(mu: &[usize], p: usize, t: usize, k: usize) -> SparseMat {
    lam_map(mu, &moved(mu, p, t as isize), k, |m, out| {
        for c in submasks(m[p + 1] & !m[p], t) {
            let mut x = m.to_vec();
            x[p] |= c;
            x[p + 1] ^= c;
            out.push(x);
        }
    })
}

/// Dθ with parameter `t` on factors `p, p+1` of `Λ^μ`: moves `t` elements
/// from the first factor to the second.
pub fn d_theta_on(mu: &[usize], p: usize, t: usize, k: usize) -> SparseMat {
    lam_map(mu, &moved(mu, p, -(t as isize)), k, |m, out| {
        for c in submasks(m[p] & !m[p + 1], t) {
            let mut x = m.to_vec();
            x[p] ^= c;
            x[p + 1] |= c;
            out.push(x);
        }
    })
}

pub fn validate(id: &NatTransId) -> Result<(), FunctorError> {
    use NatTransId::*;
    let bad = |msg: String| Err(FunctorError::InvalidParameters(msg));
    let strictly_decreasing = |l: &[usize]| l.windows(2).all(|w| w[0] > w[1]);
    match id {
        Theta { j, t, .. } | DTheta { j, t, .. } if t > j => bad(format!("{id}: t exceeds j")),
        Pi { i, j } | PiPrime { i, j } if i < j || *j == 0 => bad(format!("{id}: need i >= j >= 1")),
        J { lambda, r } if lambda.len() != *r || !strictly_decreasing(lambda) => {
            bad(format!("{id}: need a strictly decreasing sequence of length r"))
        }
        W { lambda, .. } if lambda.is_empty() || !strictly_decreasing(lambda) => {
            bad(format!("{id}: need a nonempty strictly decreasing sequence"))
        }
        Gn(0) | Hn(0) | DGn(0) | DHn(0) => bad(format!("{id}: n must be positive")),
        FLayer(0) | GLayer(0) => bad(format!("{id}: i must be positive")),
        GradedDualGrass { i, j, k, l } if !(i > j && j > &0 && k >= l && l > &0 && i + j == k + l) => {
            bad(format!("{id}: need i > j > 0, k >= l > 0, i + j = k + l"))
        }
        Dual(t) => validate(t),
        Comp(ts) => {
            if ts.is_empty() {
                return bad("empty composite".into());
            }
            for t in ts {
                validate(t)?;
            }
            for w in ts.windows(2) {
                if source(&w[0]) != target(&w[1]) {
                    return bad(format!("{} cannot follow {}", w[0], w[1]));
                }
            }
            Ok(())
        }
        TensorId(t, _) | IdTensor(_, t) => validate(t),
        _ => Ok(()),
    }
}

fn lam(v: &[usize]) -> FunctorExpr {
    FunctorExpr::MultiExterior(v.to_vec())
}

fn plus(v: &[usize], n: usize) -> Vec<usize> {
    v.iter().map(|x| x + n).collect()
}

fn lambda2(g: FunctorExpr) -> FunctorExpr {
    FunctorExpr::compose(2, g)
}

/// Target summands of ψ_λ in block order.
pub fn psi_blocks(lambda: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..lambda.len().saturating_sub(1) {
        for t in 1..=lambda[i + 1] {
            out.push((i, t));
        }
    }
    out
}

pub fn source(id: &NatTransId) -> FunctorExpr {
    use FunctorExpr as E;
    use NatTransId::*;
    match id {
        Theta { i, j, .. } | Pi { i, j } | PiPrime { i, j } | Tau { i, j } | Product { i, j } => lam(&[*i, *j]),
        DTheta { i, j, t } => lam(&[i + t, j - t]),
        Coproduct { i, j } => E::Exterior(i + j),
        Psi(l) => lam(l),
        J { lambda, r } => E::tensor(lam(lambda), E::Exterior(*r)),
        W { lambda, n } => E::tensor(lam(lambda), E::compose(*n, E::Exterior(lambda.len()))),
        Grass => lambda2(E::PBar),
        DualGrass => lambda2(E::IBar),
        Gn(n) => E::tensor(lambda2(E::PBar), E::Exterior(*n)),
        Hn(n) => E::tensor(E::tensor(E::PBar, E::PBar), E::Exterior(n - 1)),
        DGn(n) => E::tensor(lambda2(E::IBar), E::compose(*n, E::Exterior(3))),
        DHn(n) => E::tensor(lambda2(E::IBar), E::Exterior(*n)),
        FLayer(i) => E::PolyGraded(2 * i + 1, Box::new(E::l2())),
        GLayer(i) => E::PolyGraded(2 * i + 3, Box::new(E::dbar2())),
        GradedDualGrass { i, j, .. } => lam(&[*i, *j]),
        Dual(t) => E::dual(target(t)),
        Comp(ts) => source(ts.last().unwrap()),
        TensorId(t, e) => E::tensor(source(t), (**e).clone()),
        IdTensor(e, t) => E::tensor((**e).clone(), source(t)),
    }
}

pub fn target(id: &NatTransId) -> FunctorExpr {
    use FunctorExpr as E;
    use NatTransId::*;
    match id {
        Theta { i, j, t } => lam(&[i + t, j - t]),
        DTheta { i, j, .. } | Pi { i, j } | PiPrime { i, j } | Coproduct { i, j } => lam(&[*i, *j]),
        Tau { i, j } => lam(&[*j, *i]),
        Product { i, j } => E::Exterior(i + j),
        Psi(l) => E::Sum(psi_blocks(l).into_iter().map(|(p, t)| lam(&moved(l, p, t as isize))).collect()),
        J { lambda, .. } => lam(&plus(lambda, 1)),
        W { lambda, n } => lam(&plus(lambda, *n)),
        Grass => lambda2(E::PBar),
        DualGrass => lambda2(E::IBar),
        Gn(n) => E::tensor(lambda2(E::PBar), E::compose(*n, E::Exterior(3))),
        Hn(n) => E::tensor(lambda2(E::PBar), E::Exterior(*n)),
        DGn(n) => E::tensor(lambda2(E::IBar), E::Exterior(*n)),
        DHn(n) => E::tensor(E::tensor(E::IBar, E::IBar), E::Exterior(n - 1)),
        FLayer(i) => lam(&[i + 1, *i]),
        GLayer(i) => lam(&[i + 3, *i]),
        GradedDualGrass { k, l, .. } => lam(&[*k, *l]),
        Dual(t) => E::dual(source(t)),
        Comp(ts) => target(&ts[0]),
        TensorId(t, e) => E::tensor(target(t), (**e).clone()),
        IdTensor(e, t) => E::tensor((**e).clone(), target(t)),
    }
}

type MatCache = Mutex<HashMap<(NatTransId, usize), Arc<SparseMat>>>;

fn cache() -> &'static MatCache {
    static C: OnceLock<MatCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Matrix of `id` at `F₂ᵏ`, from the source basis to the target basis.
pub fn matrix(id: &NatTransId, k: usize) -> Result<Arc<SparseMat>, FunctorError> {
    let key = (id.clone(), k);
    if let Some(m) = cache().lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    validate(id)?;
    let m = Arc::new(build(id, k)?);
    Ok(cache().lock().unwrap().entry(key).or_insert(m).clone())
}

fn build(id: &NatTransId, k: usize) -> Result<SparseMat, FunctorError> {
    use NatTransId::*;
    let m = match id {
        Theta { i, j, t } => theta_on(&[*i, *j], 0, *t, k),
        DTheta { i, j, t } => d_theta_on(&[i + t, j - t], 0, *t, k),
        Tau { i, j } => lam_map(&[*i, *j], &[*j, *i], k, |m, out| out.push(vec![m[1], m[0]])),
        Psi(l) => {
            let dim = LamIndex::new(l, k).dim();
            let mut acc = SparseMat::zeros(0, dim);
            for (p, t) in psi_blocks(l) {
                acc = acc.vstack(&theta_on(l, p, t, k))?;
            }
            acc
        }
        Pi { i, j } => {
            let dt = d_theta_on(&[*i, *j], 0, 1, k);
            theta_on(&[i - 1, j + 1], 0, 1, k).mul(&dt)?
        }
        PiPrime { i, j } => {
            let th = theta_on(&[*i, *j], 0, 1, k);
            d_theta_on(&[i + 1, j - 1], 0, 1, k).mul(&th)?
        }
        Product { i, j } => {
            let cols = LamIndex::new(&[*i, *j], k);
            let c = (0..cols.dim())
                .map(|x| {
                    let m = cols.masks(x);
                    if m[0] & m[1] == 0 {
                        vec![colex_rank_mask(m[0] | m[1]) as u32]
                    } else {
                        vec![]
                    }
                })
                .collect();
            SparseMat::new(binom(k, i + j), c)
        }
        Coproduct { i, j } => {
            let d = LamIndex::new(&[*i, *j], k);
            let c = subsets(k, i + j)
                .into_iter()
                .map(|s| submasks(s, *i).into_iter().map(|a| d.index(&[a, s ^ a]) as u32).collect())
                .collect();
            SparseMat::new(d.dim(), c)
        }
        J { lambda, r } => j_matrix(lambda, *r, k),
        W { lambda, n } => w_matrix(lambda, *n, k)?,
        Grass => grass_matrix(k)?,
        DualGrass => {
            let c2 = wedge_power(2, &delta_coordinates(k));
            let ci2 = wedge_power(2, &monomial_coordinates(k));
            ci2.mul(&grass_matrix(k)?.transpose())?.mul(&c2)?
        }
        Gn(n) => g_matrix(*n, k)?,
        Hn(n) => h_matrix(*n, k)?,
        DGn(n) => {
            let inner = evaluate(&FunctorExpr::compose(*n, FunctorExpr::Exterior(3)), k)?.dim();
            let to_delta = wedge_power(2, &delta_coordinates(k)).kronecker(&SparseMat::identity(inner));
            let to_mono = wedge_power(2, &monomial_coordinates(k)).kronecker(&SparseMat::identity(binom(k, *n)));
            to_mono.mul(&g_matrix(*n, k)?.transpose())?.mul(&to_delta)?
        }
        DHn(n) => {
            let to_delta = wedge_power(2, &delta_coordinates(k)).kronecker(&SparseMat::identity(binom(k, *n)));
            let ci = monomial_coordinates(k);
            let to_mono = ci.kronecker(&ci).kronecker(&SparseMat::identity(binom(k, n - 1)));
            to_mono.mul(&h_matrix(*n, k)?.transpose())?.mul(&to_delta)?
        }
        FLayer(i) => {
            let src = evaluate(&source(id), k)?;
            let (slice, space) = src.subspace().expect("layer of a subfunctor");
            graded_projection(slice, i + 1, *i)?.mul(&space.as_matrix())?
        }
        GLayer(i) => {
            let src = evaluate(&source(id), k)?;
            let (slice, space) = src.subspace().expect("layer of a subfunctor");
            let p = graded_projection(slice, i + 2, i + 1)?.mul(&space.as_matrix())?;
            theta_on(&[i + 2, i + 1], 0, 1, k).mul(&p)?
        }
        GradedDualGrass { i, j, k: a, l: b } => {
            let n = i + j;
            let slice = evaluate(&FunctorExpr::PolyGraded(n, Box::new(lambda2(FunctorExpr::IBar))), k)?;
            let (_, keep) = slice.slice().expect("graded layer");
            let dp = matrix(&DualGrass, k)?.select_cols(keep).select_rows(keep);
            graded_projection(&slice, *a, *b)?.mul(&dp)?.mul(&graded_embedding(&slice, *i, *j)?)?
        }
        Dual(t) => matrix(t, k)?.transpose(),
        Comp(ts) => {
            let mut acc = (*matrix(ts.last().unwrap(), k)?).clone();
            for t in ts.iter().rev().skip(1) {
                acc = matrix(t, k)?.mul(&acc)?;
            }
            acc
        }
        TensorId(t, e) => matrix(t, k)?.kronecker(&SparseMat::identity(evaluate(e, k)?.dim())),
        IdTensor(e, t) => SparseMat::identity(evaluate(e, k)?.dim()).kronecker(&*matrix(t, k)?),
    };
    Ok(m)
}

/// Antisymmetrize `Λ^r` into `T^r`, then wedge the `i`-th tensor factor onto
/// the `i`-th exterior factor.
fn j_terms(x: &[u64], b: u64, out: &mut Vec<Vec<u64>>) {
    let elems: Vec<u32> = bits(b).collect();
    let r = elems.len();
    let mut perm: Vec<usize> = (0..r).collect();
    loop {
        if perm.iter().enumerate().all(|(i, &p)| x[i] >> elems[p] & 1 == 0) {
            out.push(x.iter().enumerate().map(|(i, &m)| m | 1 << elems[perm[i]]).collect());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn cancel(v: &mut Vec<Vec<u64>>) {
    crate::combin::cancel_pairs(v);
}

fn j_matrix(lambda: &[usize], r: usize, k: usize) -> SparseMat {
    let s = LamIndex::new(lambda, k);
    let d = LamIndex::new(&plus(lambda, 1), k);
    let bs = subsets(k, r);
    let mut cols = Vec::with_capacity(s.dim() * bs.len());
    let mut out = Vec::new();
    for x in 0..s.dim() {
        let m = s.masks(x);
        for &b in &bs {
            out.clear();
            j_terms(&m, b, &mut out);
            cols.push(out.iter().map(|t| d.index(t) as u32).collect());
        }
    }
    SparseMat::new(d.dim(), cols)
}

fn w_matrix(lambda: &[usize], n: usize, k: usize) -> Result<SparseMat, FunctorError> {
    let r = lambda.len();
    let s = LamIndex::new(lambda, k);
    let d = LamIndex::new(&plus(lambda, n), k);
    let outer = evaluate(&FunctorExpr::compose(n, FunctorExpr::Exterior(r)), k)?;
    let (inner, sets) = outer.compose_sets().expect("composite evaluation");
    let rmasks = inner.exterior_masks().expect("exterior evaluation");
    let mut cols = Vec::with_capacity(s.dim() * sets.len());
    for x in 0..s.dim() {
        let m = s.masks(x);
        for set in sets {
            let mut terms = vec![m.clone()];
            for &b in set {
                let mut next = Vec::new();
                for t in &terms {
                    j_terms(t, rmasks[b as usize], &mut next);
                }
                cancel(&mut next);
                terms = next;
            }
            cols.push(terms.iter().map(|t| d.index(t) as u32).collect());
        }
    }
    Ok(SparseMat::new(d.dim(), cols))
}

/// Index of the unordered pair `{a, b}` of distinct basis vectors in `Λ²`.
fn pair_index(a: u32, b: u32) -> u32 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    colex_rank(&[lo, hi]) as u32
}

/// The projector `[u]∧[v] ↦ [u]∧[u+v] + [v]∧[u+v]` on `Λ²(P̄)`.
fn grass_matrix(k: usize) -> Result<SparseMat, FunctorError> {
    let ev = evaluate(&lambda2(FunctorExpr::PBar), k)?;
    let (_, sets) = ev.compose_sets().expect("composite evaluation");
    let cols = sets
        .iter()
        .map(|s| {
            let (u, v) = (s[0] as u64 + 1, s[1] as u64 + 1);
            let w = (u ^ v) as u32 - 1;
            vec![pair_index(s[0], w), pair_index(s[1], w)]
        })
        .collect();
    Ok(SparseMat::new(ev.dim(), cols))
}

/// Monomials of `Ī` written as functions on nonzero vectors: `x_S ↦ Σ_{w ⊇ S} δ_w`.
pub fn delta_coordinates(k: usize) -> SparseMat {
    let masks = ibar_masks(k);
    let full = (1u64 << k) - 1;
    let cols = masks
        .iter()
        .map(|&s| {
            // supersets of s
            let free = full & !s;
            let mut out = Vec::new();
            let mut sub = free;
            loop {
                out.push((s | sub) as u32 - 1);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
            out
        })
        .collect();
    SparseMat::new(masks.len(), cols)
}

/// Inverse of [`delta_coordinates`]: `δ_w = Σ_{S ⊇ w} x_S`.
pub fn monomial_coordinates(k: usize) -> SparseMat {
    let masks = ibar_masks(k);
    let mut rank = vec![0u32; 1 << k];
    for (i, &m) in masks.iter().enumerate() {
        rank[m as usize] = i as u32;
    }
    let full = (1u64 << k) - 1;
    let cols = (1..=full)
        .map(|w| {
            let free = full & !w;
            let mut out = Vec::new();
            let mut sub = free;
            loop {
                out.push(rank[(w | sub) as usize]);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
            out
        })
        .collect();
    SparseMat::new(masks.len(), cols)
}

fn g_matrix(n: usize, k: usize) -> Result<SparseMat, FunctorError> {
    let src = evaluate(&source(&NatTransId::Gn(n)), k)?;
    let tgt = evaluate(&target(&NatTransId::Gn(n)), k)?;
    let (pairs, ext) = src.tensor_factors().expect("tensor");
    let (_, sets) = pairs.compose_sets().expect("composite");
    let amasks = ext.exterior_masks().expect("exterior");
    let inner_dim = tgt.tensor_factors().expect("tensor").1.dim();
    let mut cols = Vec::with_capacity(src.dim());
    for s in sets {
        let (u, v) = (s[0] as u64 + 1, s[1] as u64 + 1);
        let pi = pair_index(s[0], s[1]) as usize;
        let ub: Vec<u32> = bits(u).collect();
        let vb: Vec<u32> = bits(v).collect();
        for &a in amasks {
            // u∧v∧a_i in Λ³ coordinates
            let vecs: Vec<Vec<u32>> = bits(a)
                .map(|ai| {
                    let mut c: Vec<u32> = wedge_masks([&ub[..], &vb[..], &[ai][..]])
                        .into_iter()
                        .map(|m| colex_rank_mask(m) as u32)
                        .collect();
                    c.sort_unstable();
                    c
                })
                .collect();
            let col: Vec<u32> = wedge_sets(vecs.iter().map(Vec::as_slice))
                .iter()
                .map(|t| (pi * inner_dim + colex_rank(t)) as u32)
                .collect();
            cols.push(col);
        }
    }
    Ok(SparseMat::new(tgt.dim(), cols))
}

fn h_matrix(n: usize, k: usize) -> Result<SparseMat, FunctorError> {
    let p = (1usize << k) - 1;
    let src_ext = subsets(k, n - 1);
    let tgt_ext = binom(k, n);
    let mut cols = Vec::with_capacity(p * p * src_ext.len());
    for u in 1..=p as u64 {
        let ub: Vec<u32> = bits(u).collect();
        for v in 1..=p as u64 {
            for &a in &src_ext {
                if u == v {
                    cols.push(vec![]);
                    continue;
                }
                let pi = pair_index(u as u32 - 1, v as u32 - 1) as usize;
                let singles: Vec<[u32; 1]> = bits(a).map(|x| [x]).collect();
                let terms = wedge_masks(std::iter::once(&ub[..]).chain(singles.iter().map(|s| &s[..])));
                cols.push(terms.iter().map(|&m| (pi * tgt_ext + colex_rank_mask(m)) as u32).collect());
            }
        }
    }
    Ok(SparseMat::new(p * p.saturating_sub(1) / 2 * tgt_ext, cols))
}

/// Pair `{x_S, x_T}` of monomials in a graded layer of `Λ²(Ī)`.
fn layer_pairs(slice: &Evaluation) -> Result<Vec<(u64, u64)>, FunctorError> {
    let (amb, keep) = slice.slice().ok_or_else(|| FunctorError::Unsupported("expected a graded layer".into()))?;
    let (inner, sets) = amb.compose_sets().ok_or_else(|| FunctorError::Unsupported("expected Λ²(Ī)".into()))?;
    if inner.expr != FunctorExpr::IBar || sets.first().is_some_and(|s| s.len() != 2) {
        return Err(FunctorError::Unsupported("expected Λ²(Ī)".into()));
    }
    let masks = ibar_masks(slice.k);
    let _ = inner;
    Ok(keep.iter().map(|&i| (masks[sets[i][0] as usize], masks[sets[i][1] as usize])).collect())
}

/// Projection of a graded layer of `Λ²(Ī)` onto its `Λ^a ⊗ Λ^b` summand;
/// for `a = b` this is the inclusion `Λ²(Λ^a) ⊂ Λ^a ⊗ Λ^a`.
pub fn graded_projection(slice: &Evaluation, a: usize, b: usize) -> Result<SparseMat, FunctorError> {
    let d = LamIndex::new(&[a, b], slice.k);
    let cols = layer_pairs(slice)?
        .into_iter()
        .map(|(s, t)| {
            let (s, t) = if s.count_ones() >= t.count_ones() { (s, t) } else { (t, s) };
            let (cs, ct) = (s.count_ones() as usize, t.count_ones() as usize);
            if (cs, ct) != (a, b) {
                vec![]
            } else if a == b {
                vec![d.index(&[s, t]) as u32, d.index(&[t, s]) as u32]
            } else {
                vec![d.index(&[s, t]) as u32]
            }
        })
        .collect();
    Ok(SparseMat::new(d.dim(), cols))
}

/// Inclusion of `Λ^a ⊗ Λ^b` (`a > b`) into a graded layer of `Λ²(Ī)`.
pub fn graded_embedding(slice: &Evaluation, a: usize, b: usize) -> Result<SparseMat, FunctorError> {
    if a <= b {
        return Err(FunctorError::InvalidParameters(format!("embedding needs a > b, got ({a},{b})")));
    }
    let pairs = layer_pairs(slice)?;
    let pos: HashMap<(u64, u64), u32> = pairs
        .iter()
        .enumerate()
        .map(|(i, &(s, t))| (if s.count_ones() >= t.count_ones() { (s, t) } else { (t, s) }, i as u32))
        .collect();
    let src = LamIndex::new(&[a, b], slice.k);
    let cols = (0..src.dim())
        .map(|x| {
            let m = src.masks(x);
            vec![pos[&(m[0], m[1])]]
        })
        .collect();
    Ok(SparseMat::new(pairs.len(), cols))
}

/// The sum of θ, Dθ and τ-composites predicted for the `Λ^k ⊗ Λ^l`
/// component of the graded dual projector restricted to `Λ^i ⊗ Λ^j`.
pub fn graded_projector_formula(i: usize, j: usize, k: usize, l: usize, dim: usize) -> Result<SparseMat, FunctorError> {
    let mut acc = SparseMat::zeros(LamIndex::new(&[k, l], dim).dim(), LamIndex::new(&[i, j], dim).dim());
    let tau = matrix(&NatTransId::Tau { i, j }, dim)?;
    if k >= i && k - i <= j {
        acc = acc.add(&theta_on(&[i, j], 0, k - i, dim))?;
    }
    if k <= i && i - k <= l {
        acc = acc.add(&d_theta_on(&[i, j], 0, i - k, dim))?;
    }
    if k >= j && k - j <= i {
        acc = acc.add(&theta_on(&[j, i], 0, k - j, dim).mul(&tau)?)?;
    }
    if k <= j && j - k <= l {
        acc = acc.add(&d_theta_on(&[j, i], 0, j - k, dim).mul(&tau)?)?;
    }
    Ok(acc)
}

/// A natural transformation with per-dimension matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NatTrans {
    pub id: NatTransId,
}

impl NatTrans {
    pub fn new(id: NatTransId) -> Result<Self, FunctorError> {
        validate(&id)?;
        Ok(NatTrans { id })
    }

    pub fn source(&self) -> FunctorExpr {
        source(&self.id)
    }

    pub fn target(&self) -> FunctorExpr {
        target(&self.id)
    }

    pub fn matrix(&self, k: usize) -> Result<Arc<SparseMat>, FunctorError> {
        matrix(&self.id, k)
    }

    pub fn dense(&self, k: usize) -> Result<Gf2Matrix, FunctorError> {
        Ok(self.matrix(k)?.to_dense())
    }

    /// `target(f) · t_a = t_b · source(f)` for `f: F₂ᵃ → F₂ᵇ`.
    pub fn check_naturality(&self, f: &SparseMat) -> Result<bool, FunctorError> {
        let (a, b) = (f.cols(), f.rows());
        let (s, t) = (self.source(), self.target());
        let sf = apply_map_evals(&*evaluate(&s, a)?, &*evaluate(&s, b)?, f)?;
        let tf = apply_map_evals(&*evaluate(&t, a)?, &*evaluate(&t, b)?, f)?;
        Ok(tf.mul(&*self.matrix(a)?)? == self.matrix(b)?.mul(&sf)?)
    }
}

pub fn theta(i: usize, j: usize, t: usize) -> Result<NatTrans, FunctorError> {
    NatTrans::new(NatTransId::Theta { i, j, t })
}

pub fn d_theta(i: usize, j: usize, t: usize) -> Result<NatTrans, FunctorError> {
    NatTrans::new(NatTransId::DTheta { i, j, t })
}

pub fn psi(lambda: &partitions::Partition) -> Result<NatTrans, FunctorError> {
    NatTrans::new(NatTransId::Psi(lambda.parts().to_vec()))
}

/// `(Π_{i,j}, Π′_{i,j})`.
pub fn pi_projectors(i: usize, j: usize) -> Result<(NatTrans, NatTrans), FunctorError> {
    Ok((NatTrans::new(NatTransId::Pi { i, j })?, NatTrans::new(NatTransId::PiPrime { i, j })?))
}

/// `j_{λ,r}`, padding λ with zeros up to length `r`.
pub fn j_map(lambda: &[usize], r: usize) -> Result<NatTrans, FunctorError> {
    let mut l = lambda.to_vec();
    if l.len() > r {
        return Err(FunctorError::InvalidParameters(format!("sequence longer than r = {r}")));
    }
    l.resize(r, 0);
    NatTrans::new(NatTransId::J { lambda: l, r })
}

pub fn w_map(lambda: &[usize], n: usize) -> Result<NatTrans, FunctorError> {
    NatTrans::new(NatTransId::W { lambda: lambda.to_vec(), n })
}

pub fn grassmann_projector() -> NatTrans {
    NatTrans { id: NatTransId::Grass }
}

/// `(f_i, g_i)` on the graded layers of `L(2)` and `D̄(2)`.
pub fn fg_composites(i: usize) -> Result<(NatTrans, NatTrans), FunctorError> {
    Ok((NatTrans::new(NatTransId::FLayer(i))?, NatTrans::new(NatTransId::GLayer(i))?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_small_cases() {
        // Λ¹⊗Λ¹ at k = 2: basis e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2
        let m = matrix(&NatTransId::theta(1, 1, 1), 2).unwrap();
        assert_eq!(m.columns(), &[vec![], vec![0], vec![0], vec![]]);
        let d = matrix(&NatTransId::d_theta(1, 1, 1), 2).unwrap();
        assert_eq!(d.columns(), &[vec![1, 2]]);
    }

    #[test]
    fn delta_and_monomial_coordinates_are_inverse() {
        for k in 1..5 {
            let p = delta_coordinates(k).mul(&monomial_coordinates(k)).unwrap();
            assert_eq!(p, SparseMat::identity((1 << k) - 1));
        }
    }

    #[test]
    fn permutations_are_enumerated_once() {
        let mut p = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 6);
    }
}
