use std::collections::HashSet;

use gf2_linalg::{quotient_map, Echelon, Gf2Matrix, SparseMat, SparseSubspace, Subspace};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Gf2Matrix> {
    proptest::collection::vec(any::<bool>(), rows * cols)
        .prop_map(move |bits| Gf2Matrix::from_fn(rows, cols, |i, j| bits[i * cols + j]))
}

fn sized_matrix() -> impl Strategy<Value = Gf2Matrix> {
    (1usize..9, 1usize..9).prop_flat_map(|(r, c)| matrix(r, c))
}

/// Random invertible matrix as a product of elementary row operations.
fn invertible(n: usize) -> impl Strategy<Value = Gf2Matrix> {
    proptest::collection::vec((0..n, 0..n), 0..3 * n + 1).prop_map(move |ops| {
        let mut p = Gf2Matrix::identity(n);
        for (a, b) in ops {
            if a == b {
                continue;
            }
            p.xor_row(a, b);
        }
        p
    })
}

fn all_subspaces_of_f2_4() -> Vec<Subspace> {
    let mut seen = HashSet::new();
    for bits in 0u32..(1 << 16) {
        let m = Gf2Matrix::from_fn(4, 4, |i, j| (bits >> (4 * i + j)) & 1 == 1);
        seen.insert(Subspace::from_rows(4, m));
    }
    let mut v: Vec<Subspace> = seen.into_iter().collect();
    v.sort_by_key(|s| (s.dim(), format!("{:?}", s.basis())));
    v
}

#[test]
fn subspace_lattice_of_f2_4_is_modular() {
    let subs = all_subspaces_of_f2_4();
    // 1 + 15 + 35 + 15 + 1 subspaces of F₂⁴
    assert_eq!(subs.len(), 67);
    for a in &subs {
        for b in &subs {
            let (meet, join) = a.meet_join(b).unwrap();
            assert_eq!(meet.dim() + join.dim(), a.dim() + b.dim());
            assert!(a.contains(&meet) && b.contains(&meet));
            assert!(join.contains(a) && join.contains(b));
        }
    }
}

proptest! {
    #[test]
    fn rref_is_invariant_under_row_operations((m, p) in (1usize..8, 1usize..8).prop_flat_map(|(r, c)| (matrix(r, c), invertible(r)))) {
        let pm = p.mul(&m).unwrap();
        prop_assert_eq!(pm.rref(), m.rref());
    }

    #[test]
    fn rref_is_idempotent(m in sized_matrix()) {
        let (r, k) = m.rref();
        prop_assert_eq!(r.rref(), (r.clone(), k));
    }

    #[test]
    fn rank_plus_nullity_is_cols(m in sized_matrix()) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        prop_assert_eq!(m.image().dim(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in sized_matrix()) {
        let k = m.kernel();
        prop_assert!(m.mul(&k.inclusion()).unwrap().is_zero());
    }

    #[test]
    fn image_of_product_is_contained((a, b) in (1usize..7, 1usize..7, 1usize..7).prop_flat_map(|(r, s, c)| (matrix(r, s), matrix(s, c)))) {
        let ab = a.mul(&b).unwrap();
        prop_assert!(a.image().contains(&ab.image()));
    }

    #[test]
    fn kronecker_mixed_product(
        (a, b, c, d) in (1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4)
            .prop_flat_map(|(p, q, r, s, t, u)| (matrix(p, q), matrix(s, t), matrix(q, r), matrix(t, u)))
    ) {
        let lhs = a.kronecker(&b).mul(&c.kronecker(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kronecker(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.kronecker(&b).rank(), a.rank() * b.rank());
    }

    #[test]
    fn quotient_kills_sub_and_is_surjective((n, rows) in (1usize..9).prop_flat_map(|n| (Just(n), matrix(4, n)))) {
        let sub = Subspace::from_rows(n, rows);
        let (proj, section) = quotient_map(n, &sub).unwrap();
        prop_assert!(proj.mul(&sub.inclusion()).unwrap().is_zero());
        prop_assert_eq!(proj.rank(), n - sub.dim());
        prop_assert!(proj.mul(&section).unwrap().is_identity());
        prop_assert_eq!(proj.kernel(), sub);
    }

    #[test]
    fn intersection_matches_brute_force((a, b) in (matrix(3, 5), matrix(3, 5))) {
        let sa = Subspace::from_rows(5, a);
        let sb = Subspace::from_rows(5, b);
        let inter = sa.intersection(&sb).unwrap();
        let mut count = 0;
        for x in 0u32..32 {
            let v = Gf2Matrix::from_fn(1, 5, |_, j| (x >> j) & 1 == 1);
            let both = sa.contains_rows(&v) && sb.contains_rows(&v);
            prop_assert_eq!(both, inter.contains_rows(&v));
            count += both as usize;
        }
        prop_assert_eq!(count, 1 << inter.dim());
    }

    #[test]
    fn sparse_blocks_agree_with_dense(m in sized_matrix()) {
        let s = SparseMat::from_dense(&m);
        prop_assert_eq!(s.rank(), m.rank());
        let k = Subspace::from_rows(m.cols(), s.kernel().to_dense().transpose());
        prop_assert_eq!(k, m.kernel());
        let img = Subspace::from_rows(m.rows(), s.column_basis().to_dense().transpose());
        prop_assert_eq!(img, m.image());
        prop_assert_eq!(s.transpose().to_dense(), m.transpose());
    }

    #[test]
    fn sparse_products_agree_with_dense((a, b) in (1usize..7, 1usize..7, 1usize..7).prop_flat_map(|(r, s, c)| (matrix(r, s), matrix(s, c)))) {
        let sa = SparseMat::from_dense(&a);
        let sb = SparseMat::from_dense(&b);
        prop_assert_eq!(sa.mul(&sb).unwrap().to_dense(), a.mul(&b).unwrap());
        prop_assert_eq!(sa.kronecker(&sb).to_dense(), a.kronecker(&b));
    }

    #[test]
    fn sparse_subspaces_agree_with_dense((a, b) in (matrix(4, 7), matrix(3, 7))) {
        let da = Subspace::from_rows(7, a.clone());
        let db = Subspace::from_rows(7, b.clone());
        let sa = SparseSubspace::span(&SparseMat::from_dense(&a.transpose()));
        let sb = SparseSubspace::span(&SparseMat::from_dense(&b.transpose()));
        prop_assert_eq!(&sa, &SparseSubspace::from_dense(&da));
        prop_assert_eq!(sa.to_dense(), da.clone());
        prop_assert_eq!(sa.intersection(&sb).unwrap().to_dense(), da.intersection(&db).unwrap());
        prop_assert_eq!(sa.sum(&sb).unwrap().to_dense(), da.sum(&db).unwrap());
        prop_assert_eq!(sa.orthogonal().to_dense(), da.orthogonal());
        prop_assert_eq!(sa.contains(&sb), da.contains(&db));
        for v in sa.vectors() {
            let c = sa.coordinates(v).unwrap();
            prop_assert_eq!(c.len(), 1);
        }
        let mut ech = Echelon::new(7);
        for v in sb.vectors().iter().chain(sa.vectors()) {
            ech.insert(v);
        }
        prop_assert_eq!(ech.into_subspace(), sa.sum(&sb).unwrap());
    }
}
