//! The Grassmann projector on `Λ²(P̄)`, the graded pieces of `Λ²(Ī)`, and the
//! maps `g_n`, `h_n` between `Λ²(P̄) ⊗ Λⁿ` and its neighbours.
//!
//! Coordinates on `Λ²(Ī)` are the monomial ones, so the polynomial filtration
//! is a coordinate filtration: `p_m` is spanned by the pairs `x_S ∧ x_T` with
//! `|S| + |T| ≤ m`, and its graded piece by those of degree exactly `m`.

use std::collections::HashMap;

use gf2_linalg::{SparseMat, SparseSubspace};

use crate::combin::{binom, colex_rank};
use crate::eval::evaluate;
use crate::expr::{FunctorExpr as E, NatTransId};
use crate::gl::test_maps;
use crate::jw::tensor_subspace;
use crate::nat::{graded_embedding, graded_projection, graded_projector_formula, matrix, theta_on, LamIndex, NatTrans};
use crate::weyl::{span_over_maps, weyl_space};
use crate::FunctorError;

fn lambda2(g: E) -> E {
    E::compose(2, g)
}

fn invalid(msg: String) -> FunctorError {
    FunctorError::InvalidParameters(msg)
}

/// Number of 2-dimensional subspaces of `F₂ᵏ`.
pub fn plane_count(k: usize) -> usize {
    if k < 2 {
        return 0;
    }
    ((1 << k) - 1) * ((1 << (k - 1)) - 1) / 3
}

fn pair(u: u64, v: u64) -> u32 {
    let (a, b) = ((u - 1) as u32, (v - 1) as u32);
    colex_rank(&[a.min(b), a.max(b)]) as u32
}

/// Planes of `F₂ᵏ` as sorted triples of their nonzero vectors.
pub fn planes(k: usize) -> Vec<[u64; 3]> {
    let p = (1u64 << k) - 1;
    let mut out = Vec::new();
    for u in 1..=p {
        for v in u + 1..=p {
            let w = u ^ v;
            if w > v {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// `[u] ∧ [v] ↦ ⟨u, v⟩` from `Λ²(P̄)` to the span of the planes.
pub fn plane_map(k: usize) -> SparseMat {
    let ps = planes(k);
    let pos: HashMap<[u64; 3], u32> = ps.iter().enumerate().map(|(i, &t)| (t, i as u32)).collect();
    let p = (1u64 << k) - 1;
    let mut cols = vec![Vec::new(); (p * p.saturating_sub(1) / 2) as usize];
    for u in 1..=p {
        for v in u + 1..=p {
            let mut t = [u, v, u ^ v];
            t.sort_unstable();
            cols[pair(u, v) as usize] = vec![pos[&t]];
        }
    }
    SparseMat::new(ps.len(), cols)
}

/// The elements `[u]∧[v] + [u]∧[w] + [v]∧[w]`, one per plane `{u, v, w}`.
pub fn plane_elements(k: usize) -> SparseSubspace {
    let p = (1usize << k) - 1;
    let vectors = planes(k).into_iter().map(|[u, v, w]| vec![pair(u, v), pair(u, w), pair(v, w)]).collect();
    SparseSubspace::from_vectors(p * p.saturating_sub(1) / 2, vectors)
}

/// The projector as the composite `Λ²(P̄) ↪ P̄^{⊗2} → P̄^{⊗2} ↠ Λ²(P̄)`, where the
/// middle map is `[u] ⊗ [v] ↦ [u] ⊗ [u+v]`.
pub fn grassmann_via_tensor_square(k: usize) -> SparseMat {
    let p = (1u64 << k) - 1;
    let n2 = (p * p.saturating_sub(1) / 2) as usize;
    let t = |u: u64, v: u64| ((u - 1) * p + (v - 1)) as u32;
    let mut incl = vec![Vec::new(); n2];
    for u in 1..=p {
        for v in u + 1..=p {
            incl[pair(u, v) as usize] = vec![t(u, v), t(v, u)];
        }
    }
    let incl = SparseMat::new((p * p) as usize, incl);
    let mut mid = Vec::with_capacity((p * p) as usize);
    let mut proj = Vec::with_capacity((p * p) as usize);
    for u in 1..=p {
        for v in 1..=p {
            mid.push(if u == v { vec![] } else { vec![t(u, u ^ v)] });
            proj.push(if u == v { vec![] } else { vec![pair(u, v)] });
        }
    }
    let mid = SparseMat::new((p * p) as usize, mid);
    let proj = SparseMat::new(n2, proj);
    proj.mul(&mid.mul(&incl).expect("shapes")).expect("shapes")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannReport {
    pub k: usize,
    pub idempotent: bool,
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub planes: usize,
    /// The kernel is spanned by the plane elements.
    pub kernel_is_plane_span: bool,
    /// `[u]∧[v] ↦ ⟨u,v⟩` restricts to an isomorphism on the kernel.
    pub kernel_maps_onto_planes: bool,
    pub matches_tensor_square_model: bool,
    pub natural: bool,
}

impl GrassmannReport {
    pub fn passes(&self) -> bool {
        self.idempotent
            && self.kernel_dim == self.planes
            && self.kernel_is_plane_span
            && self.kernel_maps_onto_planes
            && self.matches_tensor_square_model
            && self.natural
    }
}

pub fn grassmann_report(k: usize) -> Result<GrassmannReport, FunctorError> {
    let pi = matrix(&NatTransId::Grass, k)?;
    let idempotent = pi.mul(&pi)? == *pi;
    let ker = SparseSubspace::span(&pi.kernel());
    let image_dim = pi.rank();
    let on_planes = plane_map(k).mul(&ker.as_matrix())?;
    let natural = test_maps(k)
        .iter()
        .map(|f| NatTrans { id: NatTransId::Grass }.check_naturality(f))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .all(|b| b);
    Ok(GrassmannReport {
        k,
        idempotent,
        kernel_dim: ker.dim(),
        image_dim,
        planes: plane_count(k),
        kernel_is_plane_span: ker == plane_elements(k),
        kernel_maps_onto_planes: on_planes.rank() == ker.dim() && ker.dim() == plane_count(k),
        matches_tensor_square_model: grassmann_via_tensor_square(k) == *pi,
        natural,
    })
}

/// Summands `(a, b)` of the degree-`m` piece of `Λ²(Ī)`: `a > b > 0` for
/// `Λᵃ ⊗ Λᵇ`, and `(m/2, m/2)` for `Λ²(Λ^{m/2})` when `m` is even.
pub fn lambda2_components(m: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (1..m).rev().map(|a| (a, m - a)).filter(|&(a, b)| a > b).collect();
    if m.is_multiple_of(2) && m > 0 {
        out.push((m / 2, m / 2));
    }
    out
}

/// Summands `Λᵃ ⊗ Λᵇ` of the degree-`m` piece of `Ī^{⊗r}`, `r ∈ {1, 2}`
/// (`b = 0` for `r = 1`).
pub fn poly_graded_components(r: usize, m: usize) -> Result<Vec<(usize, usize)>, FunctorError> {
    if m == 0 {
        return Err(invalid("graded pieces start in degree 1".into()));
    }
    match r {
        1 => Ok(vec![(m, 0)]),
        2 => Ok((1..m).rev().map(|a| (a, m - a)).collect()),
        _ => Err(FunctorError::Unsupported(format!("graded pieces of Ī^⊗{r}"))),
    }
}

/// `dim p_m^hom(Λ²(Ī))(F₂ᵏ)` read off from its summands.
pub fn lambda2_graded_dim(m: usize, k: usize) -> usize {
    lambda2_components(m)
        .into_iter()
        .map(|(a, b)| if a == b { binom(binom(k, a), 2) } else { binom(k, a) * binom(k, b) })
        .sum()
}

/// Comparison of the graded dual projector against its predicted components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedProjectorCheck {
    pub i: usize,
    pub j: usize,
    pub dim: usize,
    /// `((k, l), agrees)` for every summand `Λᵏ ⊗ Λˡ` of the same degree.
    pub components: Vec<((usize, usize), bool)>,
    pub identity_on_weyl: bool,
}

impl GradedProjectorCheck {
    pub fn passes(&self) -> bool {
        self.identity_on_weyl && self.components.iter().all(|c| c.1)
    }
}

/// `Λⁱ ⊗ Λʲ ↪ p^hom(Λ²(Ī)) → p^hom(Λ²(Ī)) ↠ Λᵏ ⊗ Λˡ` through the dual projector,
/// against the sum of θ, Dθ and their τ-twists; and the `(i, j)` component
/// restricted to `W_{(i,j)}`.
pub fn graded_grassmann_checks(i: usize, j: usize, dim: usize) -> Result<GradedProjectorCheck, FunctorError> {
    if !(i > j && j > 0) {
        return Err(invalid(format!("need i > j > 0, got ({i},{j})")));
    }
    let n = i + j;
    let mut components = Vec::new();
    for (k, l) in lambda2_components(n) {
        let got = matrix(&NatTransId::GradedDualGrass { i, j, k, l }, dim)?;
        let want = graded_projector_formula(i, j, k, l, dim)?;
        components.push(((k, l), *got == want));
    }
    let diag = matrix(&NatTransId::GradedDualGrass { i, j, k: i, l: j }, dim)?;
    let w = weyl_space(&[i, j], dim)?.as_matrix();
    let identity_on_weyl = diag.mul(&w)? == w;
    Ok(GradedProjectorCheck { i, j, dim, components, identity_on_weyl })
}

/// Image of `f_i` (resp. `g_i`) in `Λ^{i+1} ⊗ Λⁱ` (resp. `Λ^{i+3} ⊗ Λⁱ`).
pub fn layer_image(i: usize, d_side: bool, dim: usize) -> Result<SparseSubspace, FunctorError> {
    let id = if d_side { NatTransId::GLayer(i) } else { NatTransId::FLayer(i) };
    Ok(SparseSubspace::span(&*matrix(&id, dim)?))
}

/// `W_{(i+1,i)} ⊆ im f_i` and `W_{(i+3,i)} ⊆ im g_i`.
pub fn weyl_in_layer_images(i: usize, dim: usize) -> Result<(bool, bool), FunctorError> {
    let f = layer_image(i, false, dim)?.contains(&weyl_space(&[i + 1, i], dim)?);
    let g = layer_image(i, true, dim)?.contains(&weyl_space(&[i + 3, i], dim)?);
    Ok((f, g))
}

/// The two halves of the degree-3 piece of `Λ²(Ī)`, which is `Λ² ⊗ Λ¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeThree {
    pub l_dim: usize,
    pub d_dim: usize,
    /// `f_1` is injective with image `W_{(2,1)}`.
    pub l_is_weyl: bool,
    /// The product `Λ² ⊗ Λ¹ → Λ³` is injective on the `D̄(2)` half and onto.
    pub d_is_lambda3: bool,
}

pub fn degree_three_pieces(dim: usize) -> Result<DegreeThree, FunctorError> {
    let l = evaluate(&E::PolyGraded(3, Box::new(E::l2())), dim)?;
    let d = evaluate(&E::PolyGraded(3, Box::new(E::dbar2())), dim)?;
    let f1 = matrix(&NatTransId::FLayer(1), dim)?;
    let l_is_weyl = f1.rank() == l.dim() && SparseSubspace::span(&f1) == weyl_space(&[2, 1], dim)?;
    let (slice, space) = d.subspace().expect("layer of a subfunctor");
    let prod = matrix(&NatTransId::Product { i: 2, j: 1 }, dim)?;
    let onto = prod.mul(&graded_projection(slice, 2, 1)?)?.mul(&space.as_matrix())?;
    let d_is_lambda3 = onto.rank() == d.dim() && d.dim() == binom(dim, 3);
    Ok(DegreeThree { l_dim: l.dim(), d_dim: d.dim(), l_is_weyl, d_is_lambda3 })
}

/// `im g_1 = im Π_{4,1}` inside `Λ⁴ ⊗ Λ¹`.
pub fn g1_matches_projector(dim: usize) -> Result<bool, FunctorError> {
    let pi = matrix(&NatTransId::Pi { i: 4, j: 1 }, dim)?;
    Ok(layer_image(1, true, dim)? == SparseSubspace::span(&pi))
}

/// The subspace of `Λ^{k+2,k+1}(F₂^dim)` spanned by
/// `(a∧b∧c)⊗(a∧d) + (a∧b∧d)⊗(a∧c) + (a∧c∧d)⊗(a∧b)` with `a = a_1∧…∧a_k`,
/// over all vectors `a_1, …, a_k, b, c, d`.
pub fn cyclic_span(k: usize, dim: usize) -> Result<SparseSubspace, FunctorError> {
    let m = k + 3;
    let idx = LamIndex::new(&[k + 2, k + 1], m);
    let a = (1u64 << k) - 1;
    let (b, c, d) = (1u64 << k, 1u64 << (k + 1), 1u64 << (k + 2));
    let mut seed: Vec<u32> =
        [[b | c, d], [b | d, c], [c | d, b]].iter().map(|&[x, y]| idx.index(&[a | x, a | y]) as u32).collect();
    seed.sort_unstable();
    span_over_maps(&E::lambda(&[k + 2, k + 1]), m, &seed, dim)
}

/// Checks on the cyclic span `X ⊆ Λ^{k+2,k+1}` and its transport by `w_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSpanCheck {
    pub dim: usize,
    /// `θ_{k+2,k+1,1}(X) = W_{(k+3,k)}`.
    pub theta_onto_weyl: bool,
    /// `X` sits in the degree-`2k+3` piece of `D̄(2)`.
    pub inside_d2: bool,
    /// `(θ ⊗ id)(w_n(X ⊗ Λⁿ(Λ³))) = W_{(k+n+3,k+n,n)}`.
    pub transported_onto_weyl: bool,
    pub image_dim: usize,
}

impl CyclicSpanCheck {
    pub fn passes(&self) -> bool {
        self.theta_onto_weyl && self.inside_d2 && self.transported_onto_weyl
    }
}

pub fn cyclic_span_check(k: usize, n: usize, dim: usize) -> Result<CyclicSpanCheck, FunctorError> {
    if k == 0 || n == 0 {
        return Err(invalid(format!("need k, n > 0, got ({k},{n})")));
    }
    let x = cyclic_span(k, dim)?;
    let theta = theta_on(&[k + 2, k + 1], 0, 1, dim);
    let theta_onto_weyl = x.map(&theta)? == weyl_space(&[k + 3, k], dim)?;
    let d2 = evaluate(&E::PolyGraded(2 * k + 3, Box::new(E::dbar2())), dim)?;
    let (slice, space) = d2.subspace().expect("layer of a subfunctor");
    let inside_d2 = space.contains(&x.map(&graded_embedding(slice, k + 2, k + 1)?)?);
    let outer = evaluate(&E::compose(n, E::Exterior(3)), dim)?.dim();
    let w = matrix(&NatTransId::W { lambda: vec![k + 2, k + 1, 0], n }, dim)?;
    let img = tensor_subspace(&x, &SparseSubspace::full(outer)).map(&w)?;
    let top = theta_on(&[k + n + 2, k + n + 1, n], 0, 1, dim);
    let transported_onto_weyl = img.map(&top)? == weyl_space(&[k + n + 3, k + n, n], dim)?;
    Ok(CyclicSpanCheck { dim, theta_onto_weyl, inside_d2, transported_onto_weyl, image_dim: img.dim() })
}

/// `g_n`, `h_n` and their duals, for `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceMaps {
    pub n: usize,
    pub g: NatTrans,
    pub h: NatTrans,
    pub dg: NatTrans,
    pub dh: NatTrans,
}

pub fn sequence_maps(n: usize) -> Result<SequenceMaps, FunctorError> {
    if n == 0 {
        return Err(invalid("n must be positive; for n = 0 use L(2) and D̄(2) directly".into()));
    }
    Ok(SequenceMaps {
        n,
        g: NatTrans::new(NatTransId::Gn(n))?,
        h: NatTrans::new(NatTransId::Hn(n))?,
        dg: NatTrans::new(NatTransId::DGn(n))?,
        dh: NatTrans::new(NatTransId::DHn(n))?,
    })
}

/// Indices of the coordinates of `Λ²(Ī) ⊗ X` whose `Λ²(Ī)` factor has degree
/// `m`, in order, for `dim X = x`.
fn degree_rows(m: usize, x: usize, dim: usize) -> Result<Vec<usize>, FunctorError> {
    let slice = evaluate(&E::PolyGraded(m, Box::new(lambda2(E::IBar))), dim)?;
    let (_, keep) = slice.slice().expect("graded layer");
    Ok(keep.iter().flat_map(|&q| (0..x).map(move |a| q * x + a)).collect())
}

/// The part of `X ∩ p_m` lying in degree exactly `m`, written in the
/// coordinates of the degree-`m` piece (`Λ²(Ī)`-degree, tensored with `X`'s
/// second factor of dimension `x`).
fn graded_piece(sub: &SparseSubspace, m: usize, x: usize, dim: usize) -> Result<SparseSubspace, FunctorError> {
    let ev = evaluate(&lambda2(E::IBar), dim)?;
    let degs = ev.degrees().expect("graded");
    let above: Vec<usize> = (0..ev.dim()).filter(|&q| degs[q] as usize > m).flat_map(|q| (0..x).map(move |a| q * x + a)).collect();
    let basis = sub.as_matrix();
    let low = basis.mul(&basis.select_rows(&above).kernel())?;
    Ok(SparseSubspace::span(&low.select_rows(&degree_rows(m, x, dim)?)))
}

impl SequenceMaps {
    fn outer_dim(&self, dim: usize) -> Result<usize, FunctorError> {
        Ok(evaluate(&E::compose(self.n, E::Exterior(3)), dim)?.dim())
    }

    /// `rank h_n`, `rank g_n` and `dim Λ²(P̄) ⊗ Λⁿ`.
    pub fn ranks(&self, dim: usize) -> Result<(usize, usize, usize), FunctorError> {
        let g = self.g.matrix(dim)?;
        Ok((self.h.matrix(dim)?.rank(), g.rank(), g.cols()))
    }

    /// `im h_n = ker g_n`.
    pub fn exact_at_middle(&self, dim: usize) -> Result<bool, FunctorError> {
        let im = SparseSubspace::span(&*self.h.matrix(dim)?);
        Ok(im == SparseSubspace::span(&self.g.matrix(dim)?.kernel()))
    }

    /// `g_n ∘ (Π ⊗ id) = (Π ⊗ id) ∘ g_n`.
    pub fn commutes_with_projector(&self, dim: usize) -> Result<bool, FunctorError> {
        let g = self.g.matrix(dim)?;
        let pi = matrix(&NatTransId::Grass, dim)?;
        let left = g.mul(&pi.kronecker(&SparseMat::identity(binom(dim, self.n))))?;
        let right = pi.kronecker(&SparseMat::identity(self.outer_dim(dim)?)).mul(&g)?;
        Ok(left == right)
    }

    /// `g_n` on `P_{2,1} ⊗ Λⁿ` and on `Ḡ(2) ⊗ Λⁿ`, as maps from bases of those
    /// subspaces, together with whether each lands in the matching summand.
    pub fn split_components(&self, dim: usize) -> Result<(SparseMat, SparseMat, bool), FunctorError> {
        let g = self.g.matrix(dim)?;
        let pi = matrix(&NatTransId::Grass, dim)?;
        let im = SparseSubspace::span(&pi);
        let ker = SparseSubspace::span(&pi.kernel());
        let (ext, outer) = (SparseSubspace::full(binom(dim, self.n)), SparseSubspace::full(self.outer_dim(dim)?));
        let gl = g.mul(&tensor_subspace(&im, &ext).as_matrix())?;
        let gd = g.mul(&tensor_subspace(&ker, &ext).as_matrix())?;
        let ok = tensor_subspace(&im, &outer).contains(&SparseSubspace::span(&gl))
            && tensor_subspace(&ker, &outer).contains(&SparseSubspace::span(&gd));
        Ok((gl, gd, ok))
    }

    /// `L_n² = Dg_n(L(2) ⊗ Λⁿ(Λ³))` (`d_side = false`) or `D_n²` from `D̄(2)`.
    pub fn image_of_dual(&self, d_side: bool, dim: usize) -> Result<SparseSubspace, FunctorError> {
        let e = if d_side { E::dbar2() } else { E::l2() };
        let ev = evaluate(&e, dim)?;
        let (_, sub) = ev.subspace().expect("subfunctor");
        let src = tensor_subspace(sub, &SparseSubspace::full(self.outer_dim(dim)?));
        Ok(src.map(&*self.dg.matrix(dim)?)?)
    }

    /// The restriction of the graded `Dg_n` to `Λⁱ ⊗ Λʲ ⊗ Λⁿ(Λ³)`, and
    /// `w_n^{i,j,0}` followed by the inclusion of `Λ^{i+n} ⊗ Λ^{j+n} ⊗ Λⁿ`.
    pub fn graded_restriction(&self, i: usize, j: usize, dim: usize) -> Result<(SparseMat, SparseMat), FunctorError> {
        if !(i > j && j > 0) {
            return Err(invalid(format!("need i > j > 0, got ({i},{j})")));
        }
        let n = self.n;
        let outer = self.outer_dim(dim)?;
        let ext = binom(dim, n);
        let src_slice = evaluate(&E::PolyGraded(i + j, Box::new(lambda2(E::IBar))), dim)?;
        let (_, keep) = src_slice.slice().expect("graded layer");
        let emb = graded_embedding(&src_slice, i, j)?;
        // positions in the layer back to coordinates of Λ²(Ī)
        let cols = emb.columns().iter().map(|c| c.iter().map(|&p| keep[p as usize] as u32).collect()).collect();
        let lifted = SparseMat::new(evaluate(&lambda2(E::IBar), dim)?.dim(), cols);
        let got = self
            .dg
            .matrix(dim)?
            .mul(&lifted.kronecker(&SparseMat::identity(outer)))?
            .select_rows(&degree_rows(i + j + 2 * n, ext, dim)?);
        let dst_slice = evaluate(&E::PolyGraded(i + j + 2 * n, Box::new(lambda2(E::IBar))), dim)?;
        let w = matrix(&NatTransId::W { lambda: vec![i, j, 0], n }, dim)?;
        let want = graded_embedding(&dst_slice, i + n, j + n)?.kronecker(&SparseMat::identity(ext)).mul(&w)?;
        Ok((got, want))
    }

    /// The graded `Dg_n`-image of `W_{(i,j)} ⊗ Λⁿ(Λ³)`, projected to
    /// `Λ^{i+n} ⊗ Λ^{j+n} ⊗ Λⁿ`, next to `W_{(i+n,j+n,n)}`.
    pub fn graded_weyl_image(&self, i: usize, j: usize, dim: usize) -> Result<(SparseSubspace, SparseSubspace), FunctorError> {
        let n = self.n;
        let (got, _) = self.graded_restriction(i, j, dim)?;
        let dst_slice = evaluate(&E::PolyGraded(i + j + 2 * n, Box::new(lambda2(E::IBar))), dim)?;
        let proj = graded_projection(&dst_slice, i + n, j + n)?.kronecker(&SparseMat::identity(binom(dim, n)));
        let src = tensor_subspace(&weyl_space(&[i, j], dim)?, &SparseSubspace::full(self.outer_dim(dim)?));
        let img = src.map(&proj.mul(&got)?)?;
        Ok((img, weyl_space(&[i + n, j + n, n], dim)?))
    }

    /// The square relating `h_n` and `h_{n−1} ⊗ Λ¹` through the product
    /// `Λ^{n−1} ⊗ Λ¹ → Λⁿ`, and its dual through the coproduct. Returns
    /// `(primal, dual)`; for `n = 1` the lower row is zero and both hold.
    pub fn h_squares(&self, dim: usize) -> Result<(bool, bool), FunctorError> {
        let n = self.n;
        if n == 1 {
            return Ok((true, true));
        }
        let p = (1usize << dim) - 1;
        let pairs = p * p.saturating_sub(1) / 2;
        let id = SparseMat::identity;
        let prod_top = matrix(&NatTransId::Product { i: n - 1, j: 1 }, dim)?;
        let prod_low = matrix(&NatTransId::Product { i: n - 2, j: 1 }, dim)?;
        let h = self.h.matrix(dim)?;
        let h_low = matrix(&NatTransId::Hn(n - 1), dim)?;
        let primal = h.mul(&id(p * p).kronecker(&prod_low))? == id(pairs).kronecker(&prod_top).mul(&h_low.kronecker(&id(dim)))?;
        let co_top = matrix(&NatTransId::Coproduct { i: n - 1, j: 1 }, dim)?;
        let co_low = matrix(&NatTransId::Coproduct { i: n - 2, j: 1 }, dim)?;
        let dh = self.dh.matrix(dim)?;
        let dh_low = matrix(&NatTransId::DHn(n - 1), dim)?;
        let dual = id(p * p).kronecker(&co_low).mul(&dh)? == dh_low.kronecker(&id(dim)).mul(&id(pairs).kronecker(&co_top))?;
        Ok((primal, dual))
    }
}

/// `W_{(k+1,k,n)} ⊆ A_{k,n}` and `W_{(k+3,k,n)} ⊆ B_{k,n}`, where `A` (resp.
/// `B`) is the image of the graded piece of `L_n²` (resp. `D_n²`) under
/// `f_k ⊗ Λⁿ` (resp. `g_k ⊗ Λⁿ`). Needs `k > n > 0`.
pub fn weyl_in_layered_images(k: usize, n: usize, dim: usize) -> Result<(bool, bool), FunctorError> {
    if !(k > n && n > 0) {
        return Err(invalid(format!("need k > n > 0, got ({k},{n})")));
    }
    let maps = sequence_maps(n)?;
    let ext = binom(dim, n);
    let id = SparseMat::identity(ext);

    let m = 2 * k + 1;
    let piece = graded_piece(&maps.image_of_dual(false, dim)?, m, ext, dim)?;
    let slice = evaluate(&E::PolyGraded(m, Box::new(lambda2(E::IBar))), dim)?;
    let a = piece.map(&graded_projection(&slice, k + 1, k)?.kronecker(&id))?;
    let in_a = a.contains(&weyl_space(&[k + 1, k, n], dim)?);

    let m = 2 * k + 3;
    let piece = graded_piece(&maps.image_of_dual(true, dim)?, m, ext, dim)?;
    let slice = evaluate(&E::PolyGraded(m, Box::new(lambda2(E::IBar))), dim)?;
    let g = theta_on(&[k + 2, k + 1], 0, 1, dim).mul(&graded_projection(&slice, k + 2, k + 1)?)?;
    let b = piece.map(&g.kronecker(&id))?;
    let in_b = b.contains(&weyl_space(&[k + 3, k, n], dim)?);
    Ok((in_a, in_b))
}
