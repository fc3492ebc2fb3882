use std::time::Instant;

use functors::division::{branching_filtration, branching_prediction, division};
use functors::gl::{closure_size, gl_generators_dense, gl_order};
use functors::grass::*;
use functors::jw::{j_image, shifted, w_image, w_theta_square};
use functors::nat::{d_theta_on, matrix, theta_on};
use functors::weyl::{rad_and_schur, semi_standard_span, standard_span, tau_theta_weyl_check, weyl_space};
use functors::{binom, evaluate, FunctorError, FunctorExpr as E, NatTransId as T};
use gf2_linalg::{SparseMat, SparseSubspace};
use meataxe::{cached_catalog, constituents, iso_simple, label_module, GModule, Label};
use partitions::{enumerate, enumerate_up_to, Partition};
use rayon::prelude::*;

use crate::config::{ConfigError, SuiteConfig};
use crate::report::{Case, SuiteReport};

pub struct Suite {
    pub id: &'static str,
    pub statement: &'static str,
    run: fn(&SuiteConfig) -> Vec<Case>,
}

type Res<T> = Result<T, FunctorError>;

pub const SUITES: &[Suite] = &[
    Suite { id: "L3.2a", statement: "θ_{i+t,j−t,u} ∘ θ_{i,j,t} = C(t+u,t)·θ_{i,j,t+u}", run: theta_composition },
    Suite { id: "L3.2b", statement: "Π_{i,j} + Π′_{i,j} = (i+j)·id on Λ^i⊗Λ^j", run: projector_sum },
    Suite { id: "L3.2c", statement: "θ on the first pair commutes with Dθ on the second pair of Λ^i⊗Λ^j⊗Λ^l", run: theta_dtheta_square },
    Suite { id: "P3.3", statement: "for i−j odd, Π and Π′ are complementary idempotents and im Π = ker Π′ = im θ_{i−1,j+1,1} = ker θ_{i,j,1} ⊇ W_(i,j)", run: projector_chain },
    Suite { id: "L3.6", statement: "θ_{j,i,i−j} ∘ τ is the identity on W_(i,j)", run: tau_theta },
    Suite { id: "P3.5", statement: "semi-standard elements span W_λ; standard elements span W_λ for regular λ", run: semi_standard },
    Suite { id: "P3.7", statement: "j(W_λ ⊗ Λ^r) = W_{λ+1} and w_n(W_λ ⊗ Λⁿ(Λ^r)) = W_{λ+n}", run: j_and_w_images },
    Suite { id: "C3.9", statement: "w_n commutes with θ on the first two factors", run: w_theta },
    Suite { id: "C2.14", statement: "dim (Λ^λ:Λ¹) = dim Hom(Λ¹,Λ^λ) = Σ_i dim Λ^{λ_i^−}", run: exterior_division },
    Suite { id: "E2.15", statement: "dim (p_n Ī:Λ¹) = C(k,n−1) and dim Hom(Λ¹, p_n Ī) = Σ_{i<n} C(k,i)", run: truncated_ideal },
    Suite { id: "E2.19", statement: "(Sⁿ:Λ¹) ≅ S^{n−1} and (Γⁿ:Λ¹) ≅ ⊕_i Γ^{n−2^i} as dimensions", run: sym_divided },
    Suite { id: "R3.23", statement: "dim (Γ²:Λ¹)(F₂ᵏ) = 1 + k", run: gamma_two },
    Suite { id: "P3.18", statement: "v: Hom(Λ¹,W_λ) → (W_λ:Λ¹) is bijective for regular λ, and not for W_(1,1)", run: v_bijective },
    Suite { id: "P3.22", statement: "the branching filtration of (W_λ:Λ¹) has quotients of the dimensions of W_{λ_i^−}", run: branching },
    Suite { id: "T1.33", statement: "Λ^λ has S_λ once, its other same-degree factors S_μ have μ ≥ λ, and lower-degree factors obey the length and part bounds", run: exterior_constituents },
    Suite { id: "P3.17", statement: "for alternating λ no regular μ ≤ λ^{+,−}_{1,r} is a factor of rad W_λ", run: weyl_separation },
    Suite { id: "L5.2", statement: "the Grassmann projector on Λ²(P̄) is idempotent and natural, with kernel spanned by planes", run: grassmann_projector },
    Suite { id: "R5.5", statement: "dim Ḡ(2)(F₂ᵏ) is the number of planes in F₂ᵏ", run: plane_counts },
    Suite { id: "L5.11", statement: "graded components of the dual projector are the stated θ/Dθ/τ sums", run: graded_components },
    Suite { id: "L5.12", statement: "the graded dual projector restricts to the identity on W_(i,j)", run: graded_identity },
    Suite { id: "P5.14", statement: "degree-three layers: p₃L(2)(F₂³) = S_(2,1), p₃D̄(2)(F₂³) ≅ Λ³, and W_(i+1,i) ⊆ im f_i, W_(i+3,i) ⊆ im g_i", run: degree_three },
    Suite { id: "L5.22", statement: "g_n commutes with the Grassmann projector and splits over L(2) ⊕ D̄(2)", run: projector_square },
    Suite { id: "P5.23", statement: "h_n then g_n is exact at the middle, and Dg_n carries W_(i,j)⊗Λⁿ(Λ³) onto W_(i+n,j+n,n)", run: exact_sequence },
    Suite { id: "L5.26", statement: "the cyclic spanning set maps onto W_(k+3,k), lies in p^hom D̄(2), and transports onto W_(k+n+3,k+n,n)", run: cyclic_span },
    Suite { id: "P5.28", statement: "graded Dg_n restricts to w_n, and the layered images contain the Weyl functors", run: layered_images },
    Suite { id: "P5.29sq", statement: "the dualized h-compatibility squares commute", run: h_compat },
    Suite { id: "D2.6", statement: "(F⊗G:Λ¹) = (F:Λ¹)⊗G ⊕ F⊗(G:Λ¹) in dimension on the Λ/S/Γ grid", run: derivation_law },
    Suite { id: "GLGEN", statement: "the two generators of GL_k(F₂) generate a group of order ∏(2ᵏ − 2ⁱ)", run: generator_closure },
];

pub fn suite_ids() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|s| s.id)
}

pub fn run_suite(id: &str, cfg: &SuiteConfig) -> Result<SuiteReport, ConfigError> {
    let suite = SUITES
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| ConfigError::UnknownSuite { id: id.into(), valid: suite_ids().map(String::from).collect() })?;
    if cfg.max_dim == 0 {
        return Err(ConfigError::MaxDim);
    }
    let start = Instant::now();
    let cases = (suite.run)(cfg);
    Ok(SuiteReport::from_cases(suite.id, suite.statement, cases, start.elapsed()))
}

/// Runs the selected suites concurrently; the output order is the registry
/// order whatever the scheduling.
pub fn run_selected(cfg: &SuiteConfig) -> Result<Vec<SuiteReport>, ConfigError> {
    cfg.validate()?;
    cfg.selected().par_iter().map(|id| run_suite(id, cfg)).collect()
}

fn par<P: Sync, F: Fn(&P) -> Case + Sync + Send>(params: Vec<P>, f: F) -> Vec<Case> {
    params.par_iter().map(f).collect()
}

fn seq(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn scaled(c: usize, m: &SparseMat) -> SparseMat {
    if c % 2 == 1 {
        m.clone()
    } else {
        SparseMat::zeros(m.rows(), m.cols())
    }
}

fn bool_case(key: String, got: Res<bool>) -> Case {
    Case::from_result(key, true, got)
}

/// Pairs `(i, j)` with `1 ≤ j ≤ i` and `i + j ≤ n`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|i| (1..=i.min(n - i)).map(move |j| (i, j))).collect()
}

fn dims(cfg: &SuiteConfig, cap: usize) -> std::ops::RangeInclusive<usize> {
    1..=cfg.max_dim.min(cap)
}

fn theta_composition(cfg: &SuiteConfig) -> Vec<Case> {
    let mut p = Vec::new();
    for n in 1..=cfg.bidegree() {
        for i in 0..=n {
            let j = n - i;
            for t in 0..=j {
                for u in 0..=j - t {
                    for k in dims(cfg, 5) {
                        p.push((i, j, t, u, k));
                    }
                }
            }
        }
    }
    par(p, |&(i, j, t, u, k)| {
        let lhs = theta_on(&[i + t, j - t], 0, u, k).mul(&theta_on(&[i, j], 0, t, k));
        let rhs = scaled(binom(t + u, t), &theta_on(&[i, j], 0, t + u, k));
        Case::from_result(format!("i={i} j={j} t={t} u={u} k={k}"), true, lhs.map(|l| l == rhs))
    })
}

fn projector_sum(cfg: &SuiteConfig) -> Vec<Case> {
    let p: Vec<_> = pairs(cfg.bidegree()).into_iter().flat_map(|(i, j)| dims(cfg, 5).map(move |k| (i, j, k))).collect();
    par(p, |&(i, j, k)| {
        let got = (|| -> Res<bool> {
            let (a, b) = (matrix(&T::Pi { i, j }, k)?, matrix(&T::PiPrime { i, j }, k)?);
            Ok(a.add(&b)? == scaled(i + j, &SparseMat::identity(a.rows())))
        })();
        bool_case(format!("i={i} j={j} k={k}"), got)
    })
}

fn theta_dtheta_square(cfg: &SuiteConfig) -> Vec<Case> {
    let mut p = Vec::new();
    let n = cfg.bidegree().min(7);
    for i in 0..=n {
        for j in 2..=n - i {
            for l in 0..=n - i - j {
                for t in 1..j {
                    for u in 1..=j - t {
                        for k in dims(cfg, 4) {
                            p.push((i, j, l, t, u, k));
                        }
                    }
                }
            }
        }
    }
    par(p, |&(i, j, l, t, u, k)| {
        let got = (|| -> Res<bool> {
            let a = d_theta_on(&[i + t, j - t, l], 1, u, k).mul(&theta_on(&[i, j, l], 0, t, k))?;
            let b = theta_on(&[i, j - u, l + u], 0, t, k).mul(&d_theta_on(&[i, j, l], 1, u, k))?;
            Ok(a == b)
        })();
        bool_case(format!("({i},{j},{l}) t={t} u={u} k={k}"), got)
    })
}

fn projector_chain(cfg: &SuiteConfig) -> Vec<Case> {
    let p: Vec<_> = pairs(cfg.bidegree())
        .into_iter()
        .filter(|(i, j)| (i - j) % 2 == 1)
        .flat_map(|(i, j)| dims(cfg, 5).map(move |k| (i, j, k)))
        .collect();
    par(p, |&(i, j, k)| {
        let got = (|| -> Res<String> {
            let (a, b) = (matrix(&T::Pi { i, j }, k)?, matrix(&T::PiPrime { i, j }, k)?);
            let mut bad = Vec::new();
            if a.mul(&a)? != *a || b.mul(&b)? != *b {
                bad.push("idempotent");
            }
            if !a.mul(&b)?.is_zero() || !b.mul(&a)?.is_zero() {
                bad.push("orthogonal");
            }
            let im = SparseSubspace::span(&a);
            if im != SparseSubspace::span(&b.kernel()) {
                bad.push("im Π = ker Π′");
            }
            if im != SparseSubspace::span(&theta_on(&[i - 1, j + 1], 0, 1, k)) {
                bad.push("im Π = im θ");
            }
            if im != SparseSubspace::span(&theta_on(&[i, j], 0, 1, k).kernel()) {
                bad.push("im Π = ker θ");
            }
            if !im.contains(&weyl_space(&[i, j], k)?) {
                bad.push("W ⊆ im Π");
            }
            Ok(if bad.is_empty() { "ok".into() } else { bad.join("; ") })
        })();
        Case::from_result(format!("i={i} j={j} k={k}"), "ok", got)
    })
}

fn tau_theta(cfg: &SuiteConfig) -> Vec<Case> {
    let p: Vec<_> = pairs(cfg.bidegree()).into_iter().flat_map(|(i, j)| dims(cfg, 5).map(move |k| (i, j, k))).collect();
    par(p, |&(i, j, k)| bool_case(format!("i={i} j={j} k={k}"), tau_theta_weyl_check(i, j, k)))
}

fn semi_standard(cfg: &SuiteConfig) -> Vec<Case> {
    let p: Vec<_> = enumerate_up_to(cfg.max_degree, false)
        .into_iter()
        .filter(|l| l.degree() > 0)
        .flat_map(|l| dims(cfg, 5).map(move |k| (l.clone(), k)))
        .collect();
    par(p, |(lambda, k)| {
        let got = (|| -> Res<String> {
            let w = weyl_space(lambda.parts(), *k)?;
            let s = semi_standard_span(lambda.parts(), *k)?;
            let mut out = format!("semi-standard {}/{}", s.dim(), w.dim());
            if lambda.is_regular() {
                out += &format!(", standard {}/{}", standard_span(lambda, *k)?.dim(), w.dim());
            }
            Ok(out)
        })();
        let w = weyl_space(lambda.parts(), *k).map(|w| w.dim()).unwrap_or(0);
        let mut expected = format!("semi-standard {w}/{w}");
        if lambda.is_regular() {
            expected += &format!(", standard {w}/{w}");
        }
        Case::from_result(format!("λ={lambda} k={k}"), expected, got)
    })
}

/// Strictly decreasing sequences of length `r` (last entry may be 0) with sum ≤ `max`.
fn decreasing(r: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, r: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == r {
            out.push(prefix.clone());
            return;
        }
        if prefix.last() == Some(&0) {
            return;
        }
        let cap = prefix.last().map_or(left, |&p| (p - 1).min(left));
        for x in 0..=cap {
            prefix.push(x);
            rec(prefix, r, left - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), r, max, &mut out);
    out
}

fn j_and_w_images(cfg: &SuiteConfig) -> Vec<Case> {
    let mut p = Vec::new();
    for r in 1..=3 {
        for lambda in decreasing(r, cfg.max_degree.saturating_sub(1).min(5)) {
            for n in 1..=2 {
                for k in dims(cfg, 5) {
                    // the top exterior power of a sequence must fit in F₂ᵏ
                    if shifted(&lambda, n)[0] <= k {
                        p.push((lambda.clone(), n, k));
                    }
                }
            }
        }
    }
    par(p, |(lambda, n, k)| {
        let (n, k) = (*n, *k);
        let got = (|| -> Res<bool> {
            let target = weyl_space(&shifted(lambda, n), k)?;
            let img = if n == 1 { j_image(lambda, lambda.len(), k)? } else { w_image(lambda, n, k)? };
            Ok(img == target)
        })();
        bool_case(format!("λ=({}) n={n} k={k}", seq(lambda)), got)
    })
}

fn w_theta(cfg: &SuiteConfig) -> Vec<Case> {
    let mut p = Vec::new();
    for (i, j) in pairs(cfg.max_degree).into_iter().filter(|(i, j)| i > j) {
        for t in 1..j {
            for n in 0..=2 {
                for k in dims(cfg, 4) {
                    p.push((i, j, t, n, k));
                }
            }
        }
    }
    par(p, |&(i, j, t, n, k)| bool_case(format!("i={i} j={j} t={t} n={n} k={k}"), w_theta_square(i, j, t, n, k)))
}

fn lowered_sum(lambda: &Partition, k: usize) -> Res<usize> {
    let mut total = 0;
    for i in 0..lambda.length() {
        let mut l = lambda.parts().to_vec();
        l[i] -= 1;
        total += evaluate(&E::lambda(&l), k)?.dim();
    }
    Ok(total)
}

fn exterior_division(cfg: &SuiteConfig) -> Vec<Case> {
    let p: Vec<_> = enumerate_up_to(cfg.max_degree, false)
        .into_iter()
        .filter(|l| l.degree() > 0)
        .flat_map(|l| dims(cfg, 5).map(move |k| (l.clone(), k)))
        .collect();
    par(p, |(lambda, k)| {
        let expected = lowered_sum(lambda, *k).unwrap_or(usize::MAX);
        let got = division(&E::lambda(lambda.parts()), *k).map(|d| format!("{} {}", d.quotient_dim(), d.hom_dim()));
        Case::from_result(format!("λ={lambda} k={k}"), format!("{expected} {expected}"), got)
    })
}

fn truncated_ideal(cfg: &SuiteConfig) -> Vec<Case> {
    let p: Vec<_> = (1..=5.min(cfg.max_degree)).flat_map(|n| dims(cfg, 5).map(move |k| (n, k))).collect();
    par(p, |&(n, k)| {
        let expected = format!("{} {}", binom(k, n - 1), (0..n).map(|i| binom(k, i)).sum::<usize>());
        let got = division(&E::PolyTrunc(n, Box::new(E::IBar)), k).map(|d| format!("{} {}", d.quotient_dim(), d.hom_dim()));
        Case::from_result(format!("n={n} k={k}"), expected, got)
    })
}

/// `dim Sⁿ(F₂ᵏ)`, counted as multisets.
fn sym_dim(n: usize, k: usize) -> usize {
    if k == 0 {
        usize::from(n == 0)
    } else {
        binom(n + k - 1, n)
    }
}

fn sym_divided(cfg: &SuiteConfig) -> Vec<Case> {
    let p: Vec<_> = (1..=5.min(cfg.max_degree)).flat_map(|n| dims(cfg, 4).map(move |k| (n, k))).collect();
    par(p, |&(n, k)| {
        let gamma: usize = std::iter::successors(Some(1usize), |p| Some(p * 2)).take_while(|&p| p <= n).map(|p| sym_dim(n - p, k)).sum();
        let expected = format!("S {} Γ {gamma}", sym_dim(n - 1, k));
        let got = (|| -> Res<String> {
            Ok(format!("S {} Γ {}", division(&E::Sym(n), k)?.quotient_dim(), division(&E::Divided(n), k)?.quotient_dim()))
        })();
        Case::from_result(format!("n={n} k={k}"), expected, got)
    })
}

fn gamma_two(cfg: &SuiteConfig) -> Vec<Case> {
    par(dims(cfg, 5).collect(), |&k| Case::from_result(format!("k={k}"), 1 + k, division(&E::Divided(2), k).map(|d| d.quotient_dim())))
}

fn v_bijective(cfg: &SuiteConfig) -> Vec<Case> {
    let p: Vec<_> = enumerate_up_to(cfg.max_degree, true)
        .into_iter()
        .filter(|l| l.degree() > 0)
        .flat_map(|l| dims(cfg, 5).map(move |k| (l.clone(), k)))
        .collect();
    let mut cases = par(p, |(lambda, k)| bool_case(format!("λ={lambda} k={k}"), division(&E::weyl(lambda.parts()), *k).map(|d| d.v_bijective())));
    let deficient = dims(cfg, 4).find(|&k| division(&E::weyl(&[1, 1]), k).is_ok_and(|d| d.v_rank() < d.quotient_dim()));
    cases.push(Case::new("W[1,1] rank-deficient for some k ≤ 4", true, deficient.is_some()));
    cases
}

fn branching(cfg: &SuiteConfig) -> Vec<Case> {
    let p: Vec<_> = enumerate_up_to(cfg.max_degree, true)
        .into_iter()
        .filter(|l| l.degree() > 0)
        .flat_map(|l| dims(cfg, 5).map(move |k| (l.clone(), k)))
        .collect();
    par(p, |(lambda, k)| {
        let expected = branching_prediction(lambda, *k).map(|d| format!("{d:?} injective")).unwrap_or_default();
        let got = branching_filtration(lambda, *k).map(|b| format!("{:?} {}", b.quotient_dims(), if b.injective { "injective" } else { "not injective" }));
        Case::from_result(format!("λ={lambda} k={k}"), expected, got)
    })
}

/// Violations of the constituent constraints for `Λ^λ`, empty when all hold.
fn constituent_violations(lambda: &Partition, labels: &[(Label, usize)]) -> Vec<String> {
    let (n, r) = (lambda.degree(), lambda.length());
    let mut bad = Vec::new();
    let own = labels.iter().find(|(l, _)| *l == Label::Simple(lambda.clone())).map_or(0, |(_, m)| *m);
    if own != 1 {
        bad.push(format!("S_({lambda}) has multiplicity {own}"));
    }
    for (label, _) in labels {
        match label {
            Label::Simple(mu) if mu.degree() == n => {
                if !lambda.le(mu) {
                    bad.push(format!("({mu}) does not dominate ({lambda})"));
                }
            }
            Label::Simple(mu) => {
                let ok = mu.degree() < n
                    && mu.length() < r
                    && mu.part(1) >= lambda.part(1)
                    && (r < 2 || mu.part(r - 1) <= lambda.part(r));
                if !ok {
                    bad.push(format!("lower-degree factor ({mu}) violates the bounds"));
                }
            }
            Label::Unidentified { dim, .. } => bad.push(format!("unidentified factor of dimension {dim}")),
        }
    }
    bad
}

fn exterior_constituents(cfg: &SuiteConfig) -> Vec<Case> {
    let top = if cfg.extended { 6 } else { 5 }.min(cfg.max_degree);
    let p: Vec<_> = (1..=top).flat_map(|n| enumerate(n, true)).collect();
    par(p, |lambda| {
        let k = lambda.degree();
        let got = (|| -> Result<String, meataxe::MeatAxeError> {
            let t = constituents(&E::lambda(lambda.parts()), k, k, cfg.rng_seed)?;
            let labels: Vec<(Label, usize)> = t.factors.iter().map(|f| (f.label.clone(), f.mult)).collect();
            let bad = constituent_violations(lambda, &labels);
            Ok(if bad.is_empty() { "ok".into() } else { bad.join("; ") })
        })();
        Case::from_result(format!("λ={lambda} k={k}"), "ok", got)
    })
}

fn weyl_separation(cfg: &SuiteConfig) -> Vec<Case> {
    // one dimension past |λ| as well, where rad W_(3,2) is no longer just the trivial factor
    let top = if cfg.extended { 7 } else { cfg.max_degree };
    let p: Vec<_> = enumerate_up_to(top, true)
        .into_iter()
        .filter(|l| l.degree() > 0 && l.is_alternating())
        .flat_map(|l| {
            let d = l.degree();
            let ks = if d > cfg.max_degree { d..=d } else { d..=d + 1 };
            ks.map(move |k| (l.clone(), k))
        })
        .collect();
    par(p, |(lambda, k)| {
        let k = *k;
        let got = (|| -> Result<String, meataxe::MeatAxeError> {
            let data = rad_and_schur(lambda, k)?;
            if data.rad.dim() == 0 {
                return Ok("ok".into());
            }
            let bound = lambda.plus_minus_first_last().map_err(|e| meataxe::MeatAxeError::InvalidParameters(e.to_string()))?.partition();
            let ambient = GModule::from_functor(&data.ambient, k)?;
            let rad = ambient.submodule(&data.rad.to_dense())?;
            let catalog = cached_catalog(k, lambda.degree())?;
            let t = label_module(format!("rad W[{lambda}]"), &rad, &catalog, cfg.rng_seed)?;
            let mut bad = Vec::new();
            for f in &t.factors {
                match (&f.label, &bound) {
                    (Label::Simple(mu), Some(b)) if mu.le(b) => bad.push(format!("({mu}) ≤ ({b})")),
                    (Label::Unidentified { dim, .. }, _) => bad.push(format!("unidentified factor of dimension {dim}")),
                    _ => {}
                }
            }
            Ok(if bad.is_empty() { "ok".into() } else { bad.join("; ") })
        })();
        Case::from_result(format!("λ={lambda} k={k}"), "ok", got)
    })
}

fn grassmann_projector(cfg: &SuiteConfig) -> Vec<Case> {
    par(dims(cfg, 4).collect(), |&k| {
        let got = grassmann_report(k).map(|r| if r.passes() { "ok".to_string() } else { format!("{r:?}") });
        Case::from_result(format!("k={k}"), "ok", got)
    })
}

fn plane_counts(cfg: &SuiteConfig) -> Vec<Case> {
    par(dims(cfg, 4).collect(), |&k| Case::from_result(format!("k={k}"), plane_count(k), evaluate(&E::gbar2(), k).map(|e| e.dim())))
}

fn graded_pairs(cfg: &SuiteConfig, cap: usize) -> Vec<(usize, usize, usize)> {
    let mut p = Vec::new();
    for (i, j) in pairs(cap.min(cfg.bidegree())) {
        if i > j {
            for k in dims(cfg, 5) {
                p.push((i, j, k));
            }
        }
    }
    p
}

fn graded_components(cfg: &SuiteConfig) -> Vec<Case> {
    par(graded_pairs(cfg, 7), |&(i, j, k)| {
        let got = graded_grassmann_checks(i, j, k).map(|c| {
            let bad: Vec<String> = c.components.iter().filter(|(_, ok)| !ok).map(|((a, b), _)| format!("({a},{b})")).collect();
            if bad.is_empty() { "ok".to_string() } else { format!("components {}", bad.join(" ")) }
        });
        Case::from_result(format!("i={i} j={j} k={k}"), "ok", got)
    })
}

fn graded_identity(cfg: &SuiteConfig) -> Vec<Case> {
    par(graded_pairs(cfg, 7), |&(i, j, k)| bool_case(format!("i={i} j={j} k={k}"), graded_grassmann_checks(i, j, k).map(|c| c.identity_on_weyl)))
}

fn degree_three(cfg: &SuiteConfig) -> Vec<Case> {
    let mut cases = Vec::new();
    let piece = E::PolyGraded(3, Box::new(E::l2()));
    let got = constituents(&piece, 3, 3, cfg.rng_seed).map(|t| {
        t.factors.iter().map(|f| format!("{}:{}x{}", f.label, f.dim, f.mult)).collect::<Vec<_>>().join(" ")
    });
    cases.push(Case::from_result("p3 L(2) at k=3", "2,1:8x1", got));
    let dual_piece = E::PolyGraded(3, Box::new(E::dbar2()));
    let iso = (|| -> Result<bool, meataxe::MeatAxeError> {
        let a = GModule::from_functor(&dual_piece, 3)?;
        let b = GModule::from_functor(&E::Exterior(3), 3)?;
        iso_simple(&a, &b, cfg.rng_seed)
    })();
    cases.push(Case::from_result("p3 Dbar(2) ≅ Λ³ at k=3", true, iso));
    let p: Vec<_> = (1..=2).flat_map(|i| dims(cfg, 5).map(move |k| (i, k))).collect();
    cases.extend(par(p, |&(i, k)| {
        let got = weyl_in_layer_images(i, k).map(|(f, g)| format!("{f} {g}"));
        Case::from_result(format!("layers i={i} k={k}"), "true true", got)
    }));
    cases.extend(par(dims(cfg, 5).collect(), |&k| {
        let got = degree_three_pieces(k).map(|d| d.l_is_weyl && d.d_is_lambda3);
        Case::from_result(format!("degree-three pieces k={k}"), true, got)
    }));
    cases
}

fn sequence_cases(cfg: &SuiteConfig) -> Vec<(usize, usize)> {
    (1..=2).flat_map(|n| dims(cfg, 3).map(move |k| (n, k))).collect()
}

fn projector_square(cfg: &SuiteConfig) -> Vec<Case> {
    par(sequence_cases(cfg), |&(n, k)| {
        let got = (|| -> Res<String> {
            let m = sequence_maps(n)?;
            Ok(format!("{} {}", m.commutes_with_projector(k)?, m.split_components(k)?.2))
        })();
        Case::from_result(format!("n={n} k={k}"), "true true", got)
    })
}

fn exact_sequence(cfg: &SuiteConfig) -> Vec<Case> {
    let mut cases = par(sequence_cases(cfg), |&(n, k)| bool_case(format!("exact n={n} k={k}"), sequence_maps(n).and_then(|m| m.exact_at_middle(k))));
    let mut p = Vec::new();
    for (n, k) in sequence_cases(cfg) {
        for (i, j) in pairs(5) {
            if i > j {
                p.push((n, i, j, k));
            }
        }
    }
    cases.extend(par(p, |&(n, i, j, k)| {
        let got = sequence_maps(n).and_then(|m| m.graded_weyl_image(i, j, k)).map(|(img, w)| img == w);
        bool_case(format!("image n={n} i={i} j={j} k={k}"), got)
    }));
    cases
}

fn cyclic_span(cfg: &SuiteConfig) -> Vec<Case> {
    let p: Vec<(usize, usize, usize)> = vec![(1, 1, 3), (1, 1, 4), (1, 1, 5), (2, 1, 6), (1, 2, 6)]
        .into_iter()
        .filter(|&(k, n, d)| d <= cfg.max_dim.max(k + n + 3) && k + 3 <= cfg.max_degree + 2)
        .collect();
    par(p, |&(k, n, d)| {
        let got = cyclic_span_check(k, n, d).map(|c| format!("{} {}", c.passes(), c.image_dim > 0));
        Case::from_result(format!("k={k} n={n} dim={d}"), format!("true {}", d >= k + n + 3), got)
    })
}

fn layered_images(cfg: &SuiteConfig) -> Vec<Case> {
    let mut p = Vec::new();
    for (n, k) in sequence_cases(cfg) {
        for (i, j) in [(2, 1), (3, 1), (3, 2), (4, 1)] {
            p.push((n, i, j, k));
        }
    }
    let mut cases = par(p, |&(n, i, j, k)| {
        let got = sequence_maps(n).and_then(|m| m.graded_restriction(i, j, k)).map(|(a, b)| a == b);
        bool_case(format!("restriction n={n} i={i} j={j} k={k}"), got)
    });
    let q: Vec<(usize, usize, usize)> = vec![(2, 1, 4), (2, 1, 5), (3, 1, 5), (3, 2, 5)].into_iter().filter(|&(_, _, d)| d <= cfg.max_dim).collect();
    cases.extend(par(q, |&(k, n, d)| {
        let got = weyl_in_layered_images(k, n, d).map(|(a, b)| format!("{a} {b}"));
        Case::from_result(format!("layered k={k} n={n} dim={d}"), "true true", got)
    }));
    cases
}

fn h_compat(cfg: &SuiteConfig) -> Vec<Case> {
    par(sequence_cases(cfg), |&(n, k)| {
        let got = sequence_maps(n).and_then(|m| m.h_squares(k)).map(|(a, b)| format!("{a} {b}"));
        Case::from_result(format!("n={n} k={k}"), "true true", got)
    })
}

fn derivation_law(cfg: &SuiteConfig) -> Vec<Case> {
    let grid: Vec<E> = (1..=3.min(cfg.max_degree)).flat_map(|a| [E::Exterior(a), E::Sym(a), E::Divided(a)]).collect();
    let mut p = Vec::new();
    for f in &grid {
        for g in &grid {
            for k in dims(cfg, 4) {
                p.push((f.clone(), g.clone(), k));
            }
        }
    }
    par(p, |(f, g, k)| {
        let k = *k;
        let expected = (|| -> Res<usize> {
            Ok(division(f, k)?.quotient_dim() * evaluate(g, k)?.dim() + evaluate(f, k)?.dim() * division(g, k)?.quotient_dim())
        })();
        let got = division(&E::tensor(f.clone(), g.clone()), k).map(|d| d.quotient_dim());
        Case::from_result(format!("{f}*{g} k={k}"), expected.map_or_else(|e| format!("error: {e}"), |v| v.to_string()), got)
    })
}

fn generator_closure(cfg: &SuiteConfig) -> Vec<Case> {
    par((2..=cfg.max_dim.min(4)).collect(), |&k| {
        let got = gl_generators_dense(k).map(|g| closure_size(k, &g));
        Case::from_result(format!("k={k}"), gl_order(k), got)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pairs_and_sequences() {
        assert_eq!(pairs(3), vec![(1, 1), (2, 1)]);
        assert_eq!(decreasing(2, 2), vec![vec![1, 0], vec![2, 0]]);
        assert!(decreasing(1, 3).contains(&vec![0]));
    }

    #[test]
    fn violations_are_reported() {
        let l = part(&[2, 1]);
        assert!(constituent_violations(&l, &[(Label::Simple(l.clone()), 1), (Label::Simple(part(&[3])), 1)]).is_empty());
        assert_eq!(constituent_violations(&l, &[]).len(), 1);
        let lower = constituent_violations(&l, &[(Label::Simple(l.clone()), 1), (Label::Simple(part(&[1, 1])), 1)]);
        assert_eq!(lower.len(), 1);
    }
}
