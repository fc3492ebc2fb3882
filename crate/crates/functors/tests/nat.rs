use functors::gl::test_maps;
use functors::nat::*;
use functors::weyl::weyl_space;
use functors::{binom, FunctorExpr as E, NatTransId as T};
use gf2_linalg::{SparseMat, SparseSubspace};
use partitions::Partition;

fn m(id: T, k: usize) -> SparseMat {
    (*matrix(&id, k).unwrap()).clone()
}

fn scaled(c: usize, s: &SparseMat) -> SparseMat {
    if c % 2 == 1 {
        s.clone()
    } else {
        SparseMat::zeros(s.rows(), s.cols())
    }
}

#[test]
fn theta_examples() {
    // Λ¹⊗Λ¹ at k = 2, basis e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2
    let t = m(T::theta(1, 1, 1), 2);
    assert_eq!(t.columns(), &[vec![], vec![0], vec![0], vec![]]);
    let d = m(T::d_theta(1, 1, 1), 2);
    assert_eq!(d.columns(), &[vec![1, 2]]);
    assert!(theta(1, 1, 2).is_err());
}

#[test]
fn theta_composition_rule() {
    for (i, j) in [(1, 2), (2, 2), (2, 3), (1, 4), (3, 3)] {
        for k in 0..=j {
            for l in 0..=j - k {
                for dim in 0..=4 {
                    let lhs = theta_on(&[i + k, j - k], 0, l, dim).mul(&theta_on(&[i, j], 0, k, dim)).unwrap();
                    let rhs = scaled(binom(k + l, k), &theta_on(&[i, j], 0, k + l, dim));
                    assert_eq!(lhs, rhs, "({i},{j},{k},{l}) dim={dim}");
                }
            }
        }
    }
    assert!(theta_on(&[3, 1], 0, 1, 4).mul(&theta_on(&[2, 2], 0, 1, 4)).unwrap().is_zero());
}

#[test]
fn d_theta_direct_formula_equals_the_dual() {
    for i in 0..=8 {
        for j in 0..=8 - i {
            for t in 0..=j {
                for k in 0..=4 {
                    let direct = m(T::d_theta(i, j, t), k);
                    assert_eq!(direct, m(T::dual(T::theta(i, j, t)), k), "({i},{j},{t}) k={k}");
                    assert_eq!(direct, theta_on(&[i, j], 0, t, k).transpose());
                }
            }
        }
    }
}

#[test]
fn projectors_sum_to_parity() {
    for i in 1..=7 {
        for j in 1..=i.min(8 - i) {
            for k in 0..=4 {
                let (p, q) = (m(T::Pi { i, j }, k), m(T::PiPrime { i, j }, k));
                let id = SparseMat::identity(p.rows());
                assert_eq!(p.add(&q).unwrap(), scaled(i + j, &id), "({i},{j}) k={k}");
            }
        }
    }
    assert!(pi_projectors(1, 2).is_err());
}

#[test]
fn projector_chain_for_odd_difference() {
    for i in 2..=7 {
        for j in 1..=i.min(8 - i) {
            if (i - j) % 2 == 0 {
                continue;
            }
            for k in 0..=4 {
                let (p, q) = (m(T::Pi { i, j }, k), m(T::PiPrime { i, j }, k));
                assert_eq!(p.mul(&p).unwrap(), p);
                assert_eq!(q.mul(&q).unwrap(), q);
                assert!(p.mul(&q).unwrap().is_zero() && q.mul(&p).unwrap().is_zero());
                let im = SparseSubspace::span(&p);
                assert_eq!(im, SparseSubspace::span(&q.kernel()));
                assert_eq!(im, SparseSubspace::span(&theta_on(&[i - 1, j + 1], 0, 1, k)), "({i},{j}) k={k}");
                assert_eq!(im, SparseSubspace::span(&theta_on(&[i, j], 0, 1, k).kernel()));
                assert!(im.contains(&weyl_space(&[i, j], k).unwrap()));
            }
        }
    }
    // even difference: the two projectors coincide
    assert_eq!(m(T::Pi { i: 3, j: 1 }, 4), m(T::PiPrime { i: 3, j: 1 }, 4));
}

#[test]
fn theta_commutes_with_d_theta_on_other_factors() {
    for (i, j, k) in [(1, 2, 1), (2, 2, 0), (1, 3, 2), (2, 3, 1), (3, 3, 2), (1, 4, 1)] {
        for t in 1..=j {
            for u in 1..=j - t {
                for dim in 1..=4 {
                    let a = d_theta_on(&[i + t, j - t, k], 1, u, dim).mul(&theta_on(&[i, j, k], 0, t, dim)).unwrap();
                    let b = theta_on(&[i, j - u, k + u], 0, t, dim).mul(&d_theta_on(&[i, j, k], 1, u, dim)).unwrap();
                    assert_eq!(a, b, "({i},{j},{k}) t={t} u={u} dim={dim}");
                }
            }
        }
    }
}

#[test]
fn psi_blocks_follow_the_partition() {
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let t = psi(&p(&[3])).unwrap();
    assert_eq!(t.matrix(3).unwrap().rows(), 0);
    assert_eq!(psi_blocks(&[2, 1]), vec![(0, 1)]);
    assert_eq!(psi_blocks(&[2, 2]), vec![(0, 1), (0, 2)]);
    assert_eq!(t.target(), E::Sum(vec![]));
    let m21 = psi(&p(&[2, 1])).unwrap().matrix(3).unwrap();
    assert_eq!(*m21, theta_on(&[2, 1], 0, 1, 3));
}

#[test]
fn natural_transformations_commute_with_test_maps() {
    let ids = vec![
        (T::theta(2, 1, 1), 5),
        (T::d_theta(2, 2, 1), 5),
        (T::Tau { i: 2, j: 1 }, 5),
        (T::Psi(vec![2, 1, 1]), 4),
        (T::Pi { i: 2, j: 1 }, 5),
        (T::PiPrime { i: 3, j: 2 }, 5),
        (T::Product { i: 2, j: 1 }, 5),
        (T::Coproduct { i: 2, j: 1 }, 5),
        (T::J { lambda: vec![2, 0], r: 2 }, 4),
        (T::W { lambda: vec![2, 1], n: 1 }, 4),
        (T::Grass, 4),
        (T::DualGrass, 4),
        (T::Gn(1), 3),
        (T::Hn(2), 3),
        (T::DGn(1), 3),
        (T::DHn(1), 3),
        (T::GradedDualGrass { i: 3, j: 1, k: 2, l: 2 }, 4),
        (T::FLayer(1), 4),
        (T::GLayer(1), 4),
    ];
    for (id, kmax) in ids {
        let t = NatTrans::new(id.clone()).unwrap();
        for k in 1..=kmax {
            for f in test_maps(k) {
                if f.rows() > kmax {
                    continue;
                }
                assert!(t.check_naturality(&f).unwrap(), "{id} at k={k}");
            }
        }
    }
}

#[test]
fn identities_and_tensors_compose() {
    let t = T::after(T::theta(3, 0, 0), T::theta(2, 1, 1));
    assert_eq!(m(t, 3), theta_on(&[2, 1], 0, 1, 3));
    let bad = T::after(T::theta(2, 1, 1), T::theta(2, 1, 1));
    assert!(validate(&bad).is_err());
    let tid = T::TensorId(Box::new(T::theta(1, 1, 1)), Box::new(E::Exterior(1)));
    assert_eq!(m(tid, 3), theta_on(&[1, 1, 1], 0, 1, 3));
    let idt = T::IdTensor(Box::new(E::Exterior(1)), Box::new(T::theta(1, 1, 1)));
    assert_eq!(m(idt, 3), theta_on(&[1, 1, 1], 1, 1, 3));
}
