//! Generators of GL_k(F₂) and a few test maps between coordinate spaces.

use gf2_linalg::{Gf2Matrix, SparseMat};

use crate::FunctorError;

/// The cyclic shift `e_i ↦ e_{i+1}` and the transvection `e_1 ↦ e_1 + e_2`.
/// Empty for `k = 1`, since GL_1(F₂) is trivial.
pub fn gl_generators(k: usize) -> Result<Vec<SparseMat>, FunctorError> {
    match k {
        0 => Err(FunctorError::InvalidParameters("GL_0 has no generators".into())),
        1 => Ok(Vec::new()),
        _ => {
            let cycle = SparseMat::new(k, (0..k as u32).map(|i| vec![(i + 1) % k as u32]).collect());
            let mut cols: Vec<Vec<u32>> = (0..k as u32).map(|i| vec![i]).collect();
            cols[0] = vec![0, 1];
            Ok(vec![cycle, SparseMat::new(k, cols)])
        }
    }
}

pub fn gl_generators_dense(k: usize) -> Result<Vec<Gf2Matrix>, FunctorError> {
    Ok(gl_generators(k)?.iter().map(SparseMat::to_dense).collect())
}

/// A rank-deficient endomorphism: `e_1 ↦ 0`, others fixed.
pub fn singular_map(k: usize) -> SparseMat {
    SparseMat::new(k, (0..k as u32).map(|i| if i == 0 { vec![] } else { vec![i] }).collect())
}

/// `F₂ᵏ → F₂^{k+1}`, `e_i ↦ e_i`.
pub fn inclusion(k: usize) -> SparseMat {
    SparseMat::new(k + 1, (0..k as u32).map(|i| vec![i]).collect())
}

/// `F₂^{k+1} → F₂ᵏ`, killing the last coordinate after folding it onto the first.
pub fn fold(k: usize) -> SparseMat {
    let mut cols: Vec<Vec<u32>> = (0..k as u32).map(|i| vec![i]).collect();
    cols.push(if k == 0 { vec![] } else { vec![0] });
    SparseMat::new(k, cols)
}

/// Maps used to test naturality at dimension `k`: the generators, a
/// singular endomorphism and maps to and from neighbouring dimensions.
pub fn test_maps(k: usize) -> Vec<SparseMat> {
    let mut v = gl_generators(k).unwrap_or_default();
    if k > 0 {
        v.push(singular_map(k));
        v.push(fold(k - 1));
    }
    v.push(inclusion(k));
    v
}

/// Order of the group generated by `gens`, by closure (small `k` only).
pub fn closure_size(k: usize, gens: &[Gf2Matrix]) -> usize {
    use std::collections::HashSet;
    let key = |m: &Gf2Matrix| (0..k).map(|i| m.row_words(i).to_vec()).collect::<Vec<_>>();
    let id = Gf2Matrix::identity(k);
    let mut seen = HashSet::from([key(&id)]);
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for g in gens {
            let p = g.mul(&m).expect("square matrices");
            if seen.insert(key(&p)) {
                frontier.push(p);
            }
        }
    }
    seen.len()
}

/// `∏_{0≤i<k} (2ᵏ − 2ⁱ)`.
pub fn gl_order(k: usize) -> u128 {
    (0..k).map(|i| (1u128 << k) - (1u128 << i)).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_generate() {
        for k in 1..=4 {
            let g = gl_generators_dense(k).unwrap();
            assert_eq!(closure_size(k, &g) as u128, gl_order(k));
        }
        assert!(gl_generators(0).is_err());
    }
}
