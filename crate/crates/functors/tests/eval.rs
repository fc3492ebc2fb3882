use functors::{apply_map, apply_map_sparse, binom, dualize, evaluate, FunctorExpr as E};
use gf2_linalg::{Gf2Matrix, SparseMat};
use proptest::prelude::*;

#[test]
fn dimensions_of_basic_functors() {
    assert_eq!(evaluate(&E::Exterior(2), 3).unwrap().dim(), 3);
    assert_eq!(evaluate(&E::IBar, 3).unwrap().dim(), 7);
    assert_eq!(evaluate(&E::PolyTrunc(2, Box::new(E::IBar)), 4).unwrap().dim(), binom(4, 1) + binom(4, 2));
    for k in 0..=4 {
        assert_eq!(evaluate(&E::PBar, k).unwrap().dim(), (1 << k) - 1);
        assert_eq!(evaluate(&E::TensorPower(2), k).unwrap().dim(), k * k);
        assert_eq!(evaluate(&E::Const(2), k).unwrap().dim(), 2);
        for n in 0..=3 {
            let sym = evaluate(&E::Sym(n), k).unwrap().dim();
            assert_eq!(evaluate(&E::Divided(n), k).unwrap().dim(), sym);
            assert_eq!(evaluate(&E::dual(E::Sym(n)), k).unwrap().dim(), sym);
        }
        assert_eq!(evaluate(&E::lambda(&[]), k).unwrap().dim(), 1);
    }
    // the empty functor evaluates to zero at k = 0
    assert_eq!(evaluate(&E::IBar, 0).unwrap().dim(), 0);
    assert_eq!(evaluate(&E::Exterior(1), 0).unwrap().dim(), 0);
}

#[test]
fn multi_exterior_is_a_tensor_chain() {
    for k in 0..=3 {
        let a = evaluate(&E::lambda(&[2, 1, 1]), k).unwrap().dim();
        let t = E::tensor(E::tensor(E::Exterior(2), E::Exterior(1)), E::Exterior(1));
        assert_eq!(a, evaluate(&t, k).unwrap().dim());
        let f = SparseMat::new(k, (0..k as u32).map(|i| vec![i, (i + 1) % k as u32]).collect());
        if k > 0 {
            assert_eq!(apply_map_sparse(&E::lambda(&[2, 1, 1]), &f).unwrap(), apply_map_sparse(&t, &f).unwrap());
        }
    }
}

#[test]
fn identity_maps_to_identity() {
    let id = SparseMat::identity(3);
    assert_eq!(apply_map_sparse(&E::Exterior(2), &id).unwrap(), SparseMat::identity(3));
    let swap = Gf2Matrix::from_rows(&[[0u8, 1], [1, 0]]);
    let e = E::tensor(E::Exterior(1), E::Exterior(1));
    let m = apply_map(&e, &swap).unwrap();
    assert_eq!(m, swap.kronecker(&swap));
    assert!(m.mul(&m).unwrap().is_identity());
}

#[test]
fn exterior_duality_is_the_identity_pairing() {
    // the dual of an exterior power induces the transpose of the transpose
    let f = SparseMat::new(3, vec![vec![0, 1], vec![2], vec![0, 2]]);
    for n in 0..=3 {
        let d = apply_map_sparse(&dualize(&E::Exterior(n)), &f).unwrap();
        let t = apply_map_sparse(&E::Exterior(n), &f.transpose()).unwrap().transpose();
        assert_eq!(d, t);
    }
}

fn grammar_sample() -> Vec<E> {
    vec![
        E::Exterior(2),
        E::Sym(2),
        E::Divided(3),
        E::TensorPower(2),
        E::PBar,
        E::IBar,
        E::tensor(E::Exterior(1), E::Sym(2)),
        E::compose(2, E::Exterior(2)),
        E::compose(2, E::PBar),
        E::dual(E::Sym(2)),
        E::dual(E::dual(E::Divided(2))),
        E::PolyTrunc(2, E::IBar.into()),
        E::PolyGraded(2, E::compose(2, E::IBar).into()),
        E::lambda(&[2, 1]),
        E::weyl(&[2, 1]),
        E::p21(),
        E::l2(),
    ]
}

fn random_map(rows: usize, cols: usize, bits: u64) -> SparseMat {
    let cols = (0..cols)
        .map(|j| (0..rows).filter(|&i| bits >> ((j * rows + i) % 64) & 1 == 1).map(|i| i as u32).collect())
        .collect();
    SparseMat::new(rows, cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn functoriality(idx in 0..17usize, a in 1..=3usize, b in 1..=3usize, c in 1..=3usize, x: u64, y: u64) {
        let e = &grammar_sample()[idx];
        let f = random_map(b, a, x);
        let g = random_map(c, b, y);
        let gf = g.mul(&f).unwrap();
        let lhs = apply_map_sparse(e, &gf).unwrap();
        let rhs = apply_map_sparse(e, &g).unwrap().mul(&apply_map_sparse(e, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs, "{}", e);
        let id = apply_map_sparse(e, &SparseMat::identity(a)).unwrap();
        prop_assert_eq!(id, SparseMat::identity(evaluate(e, a).unwrap().dim()));
    }

    #[test]
    fn double_dual_maps_agree(n in 0..=3usize, a in 1..=3usize, b in 1..=3usize, x: u64) {
        let f = random_map(b, a, x);
        for e in [E::Sym(n), E::Exterior(n), E::compose(2, E::Exterior(n.max(1)))] {
            let dd = apply_map_sparse(&E::dual(E::dual(e.clone())), &f).unwrap();
            prop_assert_eq!(dd, apply_map_sparse(&e, &f).unwrap());
        }
    }
}

#[test]
fn shape_mismatch_is_an_error() {
    let f = SparseMat::new(2, vec![vec![0], vec![1]]);
    let e = evaluate(&E::Exterior(1), 3).unwrap();
    let d = evaluate(&E::Exterior(1), 2).unwrap();
    assert!(functors::apply_map_evals(&e, &d, &f).is_err());
}
