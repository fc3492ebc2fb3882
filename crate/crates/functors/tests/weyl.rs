use functors::nat::{pi_projectors, theta, LamIndex};
use functors::weyl::*;
use functors::{binom, FunctorError};
use gf2_linalg::{Gf2Matrix, SparseMat, SparseSubspace};
use partitions::{enumerate_up_to, Partition};

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

/// Kernel of the wedge map `Λ¹⊗Λ¹ → Λ²`, i.e. the symmetric tensors.
fn symmetric_tensors(k: usize) -> SparseSubspace {
    let mut v = Vec::new();
    for a in 0..k {
        v.push(vec![(a * k + a) as u32]);
        for b in a + 1..k {
            v.push(vec![(a * k + b) as u32, (b * k + a) as u32]);
        }
    }
    SparseSubspace::from_vectors(k * k, v)
}

#[test]
fn weyl_dimensions() {
    let dims: Vec<usize> = (1..=4).map(|k| weyl_space(&[2, 1], k).unwrap().dim()).collect();
    // Λ^{2,1} has dim k·C(k,2) and θ_{2,1,1} onto Λ³ is onto
    let expected: Vec<usize> = (1..=4).map(|k| k * binom(k, 2) - binom(k, 3)).collect();
    assert_eq!(dims, expected);
    assert_eq!(dims, vec![0, 2, 8, 20]);
    assert_eq!(weyl_space(&[1, 1], 2).unwrap(), symmetric_tensors(2));
    assert!(matches!(weyl_space(&[1, 2], 3), Err(FunctorError::InvalidParameters(_))));
}

#[test]
fn kernel_and_intersection_forms_agree() {
    for lambda in enumerate_up_to(5, false) {
        for k in 0..=4 {
            let a = weyl_space(lambda.parts(), k).unwrap();
            let b = weyl_by_intersection(lambda.parts(), k).unwrap();
            assert_eq!(a, b, "{lambda} at k={k}");
        }
    }
}

#[test]
fn semi_standard_elements_span_the_weyl_functor() {
    for lambda in enumerate_up_to(5, false) {
        for k in 0..=4 {
            let w = weyl_space(lambda.parts(), k).unwrap();
            let s = semi_standard_span(lambda.parts(), k).unwrap();
            assert!(w.contains(&s), "{lambda} at k={k}");
            if lambda.is_regular() || lambda.length() <= 2 {
                assert_eq!(s, w, "{lambda} at k={k}");
            }
            if lambda.is_regular() {
                assert_eq!(standard_span(&lambda, k).unwrap(), w, "{lambda} at k={k}");
            }
        }
    }
}

#[test]
fn cubes_do_not_span_the_third_divided_power() {
    // v⊗v⊗v over the three nonzero v ∈ F₂² spans 3 dimensions, while
    // Γ³(F₂²) = W_{(1,1,1)}(F₂²) has dimension 4.
    assert_eq!(weyl_space(&[1, 1, 1], 2).unwrap().dim(), 4);
    assert_eq!(semi_standard_span(&[1, 1, 1], 2).unwrap().dim(), 3);
    assert_eq!(semi_standard_span(&[2, 1, 1], 3).unwrap().dim(), 14);
    assert_eq!(weyl_space(&[2, 1, 1], 3).unwrap().dim(), 15);
}

#[test]
fn semi_standard_span_of_one_one_is_frobenius_image() {
    // v⊗v over all v ∈ F₂³, by brute force
    let k = 3;
    let mut vs = Vec::new();
    for v in 1u32..8 {
        let c: Vec<usize> = (0..k).filter(|&i| v >> i & 1 == 1).collect();
        let mut t: Vec<u32> = c.iter().flat_map(|&a| c.iter().map(move |&b| (a * k + b) as u32)).collect();
        t.sort_unstable();
        vs.push(t);
    }
    let direct = SparseSubspace::from_vectors(k * k, vs);
    assert_eq!(semi_standard_span(&[1, 1], k).unwrap(), direct);
    assert_eq!(direct, symmetric_tensors(k));
}

#[test]
fn semi_standard_element_example() {
    // (e1∧e2)⊗e1 at k = 2
    let v = semi_standard_element(&[2, 1], &[0, 1], 2).unwrap();
    let idx = LamIndex::new(&[2, 1], 2);
    assert_eq!(v, vec![idx.index(&[0b11, 0b01]) as u32]);
    assert!(weyl_space(&[2, 1], 2).unwrap().contains_vec(&v));
}

#[test]
fn standard_span_rejects_non_regular() {
    assert!(standard_span(&part(&[2, 2]), 3).is_err());
    assert!(rad_and_schur(&part(&[1, 1]), 3).is_err());
}

#[test]
fn determinant_pairing_is_the_identity() {
    for k in 0..=3 {
        for n in 0..=k {
            assert!(determinant_pairing(n, k).is_identity(), "n={n} k={k}");
        }
    }
}

#[test]
fn radicals() {
    let d = rad_and_schur(&part(&[2, 1]), 3).unwrap();
    assert_eq!((d.rad.dim(), d.schur_dim()), (0, 8));
    for n in 1..=4 {
        for k in 0..=5 {
            let d = rad_and_schur(&part(&[n]), k).unwrap();
            assert_eq!((d.rad.dim(), d.schur_dim()), (0, binom(k, n)));
        }
    }
    assert!(rad_and_schur(&part(&[3, 1]), 4).unwrap().rad.dim() > 0);
}

#[test]
fn tau_theta_fixes_weyl() {
    for i in 0..=5 {
        for j in 0..=i.min(8 - i) {
            for k in 0..=5 {
                assert!(tau_theta_weyl_check(i, j, k).unwrap(), "({i},{j}) k={k}");
            }
        }
    }
}

#[test]
fn projector_examples() {
    let (p, q) = pi_projectors(2, 1).unwrap();
    let (p, q) = (p.matrix(3).unwrap(), q.matrix(3).unwrap());
    assert_eq!(p.add(&q).unwrap(), SparseMat::identity(p.rows()));
    let w = weyl_space(&[2, 1], 3).unwrap();
    assert!(w.vectors().iter().all(|v| &p.apply(v) == v));
    let (p, q) = pi_projectors(3, 1).unwrap();
    assert_eq!(p.matrix(4).unwrap(), q.matrix(4).unwrap());
    assert!(pi_projectors(1, 2).is_err());
}

#[test]
fn theta_composition_rule_instance() {
    // θ_{3,1,1}∘θ_{2,2,1} = binom(2,1)·θ_{2,2,2} = 0
    for k in 0..=5 {
        let a = theta(2, 2, 1).unwrap().matrix(k).unwrap();
        let b = theta(3, 1, 1).unwrap().matrix(k).unwrap();
        assert!(b.mul(&a).unwrap().is_zero());
    }
    assert!(theta(1, 1, 2).is_err());
}

#[test]
fn non_square_dense_pairing_shape() {
    let g: Gf2Matrix = determinant_pairing(2, 4);
    assert_eq!((g.rows(), g.cols()), (6, 6));
    assert_eq!(LamIndex::new(&[2, 2], 4).dim(), 36);
}
