use functors::grass::*;
use functors::{binom, evaluate, FunctorExpr as E};

#[test]
fn grassmann_projector_small_dimensions() {
    for (k, planes) in [(2, 1), (3, 7), (4, 35)] {
        let r = grassmann_report(k).unwrap();
        assert!(r.passes(), "{r:?}");
        assert_eq!(r.kernel_dim, planes);
        assert_eq!(r.kernel_dim + r.image_dim, binom((1 << k) - 1, 2));
    }
    assert_eq!(evaluate(&E::compose(2, E::PBar), 2).unwrap().dim(), 3);
    assert_eq!(evaluate(&E::gbar2(), 2).unwrap().dim(), 1);
    assert_eq!(evaluate(&E::p21(), 2).unwrap().dim(), 2);
    assert_eq!(evaluate(&E::gbar2(), 3).unwrap().dim(), 7);
}

/// Planes counted by brute force: unordered pairs of distinct nonzero
/// vectors, three per plane.
#[test]
fn plane_count_matches_pair_count() {
    for k in 0..=5 {
        let p = (1usize << k) - 1;
        assert_eq!(plane_count(k), p * p.saturating_sub(1) / 6);
        assert_eq!(planes(k).len(), plane_count(k));
    }
}

#[test]
fn dual_pieces_have_matching_dimensions() {
    for k in 1..=4 {
        let l = evaluate(&E::l2(), k).unwrap().dim();
        let d = evaluate(&E::dbar2(), k).unwrap().dim();
        assert_eq!(l, evaluate(&E::p21(), k).unwrap().dim());
        assert_eq!(d, plane_count(k));
    }
}

#[test]
fn graded_pieces_of_the_exterior_square() {
    for k in 1..=4 {
        for m in 1..=2 * k {
            let e = E::PolyGraded(m, Box::new(E::compose(2, E::IBar)));
            assert_eq!(evaluate(&e, k).unwrap().dim(), lambda2_graded_dim(m, k), "m={m} k={k}");
        }
        for n in 1..=k {
            let e = E::PolyGraded(n, Box::new(E::IBar));
            assert_eq!(evaluate(&e, k).unwrap().dim(), binom(k, n));
        }
    }
    assert_eq!(lambda2_components(3), vec![(2, 1)]);
    assert_eq!(lambda2_components(4), vec![(3, 1), (2, 2)]);
    assert_eq!(poly_graded_components(2, 3).unwrap(), vec![(2, 1), (1, 2)]);
    assert!(poly_graded_components(3, 3).is_err());
}

#[test]
fn graded_dual_projector_components() {
    let c = graded_grassmann_checks(2, 1, 3).unwrap();
    assert!(c.passes(), "{c:?}");
    let c = graded_grassmann_checks(3, 2, 5).unwrap();
    assert!(c.passes(), "{c:?}");
    for n in 3..=6 {
        for j in 1..n {
            let i = n - j;
            if i <= j {
                continue;
            }
            for dim in 1..=4 {
                let c = graded_grassmann_checks(i, j, dim).unwrap();
                assert!(c.passes(), "{c:?}");
            }
        }
    }
    assert!(graded_grassmann_checks(1, 1, 3).is_err());
}

#[test]
fn degree_three_layers() {
    let d = degree_three_pieces(3).unwrap();
    assert_eq!((d.l_dim, d.d_dim), (8, 1));
    assert!(d.l_is_weyl && d.d_is_lambda3);
    for k in 1..=5 {
        let d = degree_three_pieces(k).unwrap();
        assert!(d.l_is_weyl && d.d_is_lambda3, "k={k} {d:?}");
        assert_eq!(d.l_dim + d.d_dim, binom(k, 2) * k);
    }
}

#[test]
fn weyl_functors_lie_in_layer_images() {
    for i in 1..=2 {
        for k in 1..=5 {
            assert_eq!(weyl_in_layer_images(i, k).unwrap(), (true, true), "i={i} k={k}");
        }
    }
    for k in 1..=5 {
        assert!(g1_matches_projector(k).unwrap(), "k={k}");
    }
}

#[test]
fn cyclic_span_and_its_transport() {
    // the transported image is nonzero once dim ≥ k + n + 3
    for (k, n, dim) in [(1, 1, 3), (1, 1, 4), (1, 1, 5), (2, 1, 6), (1, 2, 6)] {
        let c = cyclic_span_check(k, n, dim).unwrap();
        assert!(c.passes(), "({k},{n}) dim={dim} {c:?}");
        assert_eq!(c.image_dim > 0, dim >= k + n + 3);
    }
    assert_eq!(cyclic_span(1, 5).unwrap().dim(), 24);
    assert!(cyclic_span_check(0, 1, 3).is_err());
}

#[test]
fn exactness_and_projector_commutation() {
    assert!(sequence_maps(0).is_err());
    let m = sequence_maps(1).unwrap();
    let (rh, rg, mid) = m.ranks(2).unwrap();
    assert_eq!(rh + rg, mid);
    for n in 1..=2 {
        let m = sequence_maps(n).unwrap();
        for k in 1..=3 {
            assert!(m.exact_at_middle(k).unwrap(), "n={n} k={k}");
            assert!(m.commutes_with_projector(k).unwrap(), "n={n} k={k}");
            assert!(m.split_components(k).unwrap().2, "n={n} k={k}");
        }
    }
}

#[test]
fn graded_dual_g_restricts_to_w() {
    for n in 1..=2 {
        let m = sequence_maps(n).unwrap();
        for (i, j) in [(2, 1), (3, 1), (3, 2), (4, 1)] {
            for k in 1..=3 {
                let (got, want) = m.graded_restriction(i, j, k).unwrap();
                assert_eq!(got, want, "n={n} ({i},{j}) k={k}");
                let (img, w) = m.graded_weyl_image(i, j, k).unwrap();
                assert_eq!(img, w, "n={n} ({i},{j}) k={k}");
            }
        }
    }
}

#[test]
fn h_squares_commute() {
    for n in 1..=3 {
        let m = sequence_maps(n).unwrap();
        for k in 1..=3 {
            assert_eq!(m.h_squares(k).unwrap(), (true, true), "n={n} k={k}");
        }
    }
}

#[test]
fn weyl_functors_in_layered_images() {
    assert!(weyl_in_layered_images(1, 1, 3).is_err());
    for (k, n, dim) in [(2, 1, 4), (2, 1, 5), (3, 1, 5), (3, 2, 5)] {
        assert_eq!(weyl_in_layered_images(k, n, dim).unwrap(), (true, true), "({k},{n}) dim={dim}");
    }
}
