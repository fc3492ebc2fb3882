use functors::jw::*;
use functors::nat::{j_map, w_map, LamIndex};
use functors::weyl::{standard_element, weyl_space};
use functors::{binom, evaluate, FunctorExpr};
use gf2_linalg::SparseMat;

/// Strictly decreasing sequences of length `r` with last entry ≥ 0 and sum ≤ `max`.
fn decreasing(r: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, r: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == r {
            out.push(prefix.clone());
            return;
        }
        let cap = prefix.last().map_or(left, |&p| p.saturating_sub(1).min(left));
        if prefix.last() == Some(&0) {
            return;
        }
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

#[test]
fn j_carries_weyl_onto_weyl() {
    for r in 1..=3 {
        for lambda in decreasing(r, 4) {
            for k in 0..=4 {
                let img = j_image(&lambda, r, k).unwrap();
                assert_eq!(img, weyl_space(&shifted(&lambda, 1), k).unwrap(), "{lambda:?} r={r} k={k}");
            }
        }
    }
}

#[test]
fn j_example_two_by_two() {
    // W_{(1,0)} ⊗ Λ²(F₂²) onto W_{(2,1)}(F₂²), which is all of Λ^{2,1}(F₂²)
    let img = j_image(&[1], 2, 2).unwrap();
    assert_eq!(img.dim(), 2);
    assert_eq!(img, weyl_space(&[2, 1], 2).unwrap());
}

#[test]
fn w_carries_weyl_onto_weyl() {
    for r in 1..=3 {
        for lambda in decreasing(r, 4) {
            for n in 0..=2 {
                for k in 0..=3 {
                    let img = w_image(&lambda, n, k).unwrap();
                    assert_eq!(img, weyl_space(&shifted(&lambda, n), k).unwrap(), "{lambda:?} n={n} k={k}");
                }
            }
        }
    }
}

#[test]
fn w_factors_the_iterated_j() {
    for lambda in [vec![1, 0], vec![2, 0], vec![2, 1], vec![2, 1, 0]] {
        let r = lambda.len();
        for n in 0..=2 {
            for k in 0..=4 {
                let jn = j_power(&lambda, n, k).unwrap();
                let w = w_map(&lambda, n).unwrap().matrix(k).unwrap();
                let q = alternating_quotient(LamIndex::new(&lambda, k).dim(), binom(k, r), n);
                assert_eq!(w.mul(&q).unwrap(), jn, "{lambda:?} n={n} k={k}");
            }
        }
    }
    let w = w_map(&[2, 1], 0).unwrap().matrix(3).unwrap();
    assert_eq!(*w, SparseMat::identity(w.rows()));
}

#[test]
fn w_commutes_with_theta() {
    for (i, j, t) in [(3, 2, 1), (4, 2, 1), (3, 1, 0)] {
        for n in 0..=2 {
            for k in 0..=4 {
                if t == 0 {
                    assert!(w_theta_square(i, j, t, n, k).is_err());
                } else {
                    assert!(w_theta_square(i, j, t, n, k).unwrap(), "({i},{j},{t}) n={n} k={k}");
                }
            }
        }
    }
}

/// `j(g^st(a_{i,j≤λ_i}) ⊗ (a_{1,λ_1+1} ∧ a_{2,λ_2+1}))` and `g^st` of the full
/// filling, for λ = (2,1), r = 2, at k = 3. Rows are given by basis indices.
fn transport(rows: [&[u32]; 2]) -> (Vec<u32>, Vec<u32>) {
    let k = 3;
    let small = standard_element(&[2, 1], &[rows[0][..2].to_vec(), rows[1][..1].to_vec()], k).unwrap();
    let big = standard_element(&[3, 2], &[rows[0].to_vec(), rows[1].to_vec()], k).unwrap();
    let wedge = LamIndex::new(&[2], k).index(&[(1 << rows[0][2]) | (1 << rows[1][1])]) as u32;
    let c2 = binom(k, 2) as u32;
    let input: Vec<u32> = small.iter().map(|&x| x * c2 + wedge).collect();
    let j = j_map(&[2, 1], 2).unwrap().matrix(k).unwrap();
    (j.apply(&input), big)
}

#[test]
fn j_transports_standard_elements() {
    let (lhs, rhs) = transport([&[1, 2, 2], &[0, 0]]);
    assert!(!rhs.is_empty());
    assert_eq!(lhs, rhs);
}

#[test]
fn standard_element_transport_fails_for_some_fillings() {
    // rows (e1,e2,e3 / e3,e1): the image under j cancels to zero while the
    // standard element of the augmented filling has a single surviving term
    let (lhs, rhs) = transport([&[0, 1, 2], &[2, 0]]);
    assert!(lhs.is_empty());
    assert_eq!(rhs.len(), 1);
}

#[test]
fn j_and_w_reject_bad_sequences() {
    assert!(j_map(&[1, 1], 2).is_err());
    assert!(j_map(&[3, 2, 1], 2).is_err());
    assert!(w_map(&[1, 2], 1).is_err());
    assert!(w_map(&[], 1).is_err());
    assert_eq!(evaluate(&FunctorExpr::lambda(&[2, 1, 0]), 3).unwrap().dim(), 9);
}
