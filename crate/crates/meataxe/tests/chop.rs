use functors::FunctorExpr as E;
use gf2_linalg::{Gf2Matrix, Subspace};
use meataxe::*;
use partitions::Partition;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn dims(fs: &[GModule]) -> Vec<usize> {
    fs.iter().map(GModule::dim).collect()
}

fn tensor_square(k: usize) -> GModule {
    GModule::from_functor(&E::TensorPower(2), k).unwrap()
}

#[test]
fn spin_examples() {
    let nat = GModule::natural(2).unwrap();
    for seed in [[1u8, 0], [0, 1], [1, 1]] {
        assert_eq!(spin(&nat, &Gf2Matrix::from_rows(&[seed])).unwrap().dim(), 2);
    }
    let triv = GModule::trivial(3, 4).unwrap();
    let s = spin(&triv, &Gf2Matrix::from_rows(&[[0u8, 1, 1, 0]])).unwrap();
    assert_eq!(s.dim(), 1);
    // e1⊗e2 + e2⊗e1 spans the image of the wedge square
    let t2 = tensor_square(2);
    let s = spin(&t2, &Gf2Matrix::from_rows(&[[0u8, 1, 1, 0]])).unwrap();
    assert_eq!(s.dim(), 1);
    assert!(t2.is_invariant(&s));
    assert!(matches!(spin(&t2, &Gf2Matrix::zeros(1, 4)), Err(MeatAxeError::ZeroSeed)));
    assert!(spin(&t2, &Gf2Matrix::zeros(1, 3)).is_err());
}

#[test]
fn generators_are_validated() {
    let singular = Gf2Matrix::from_rows(&[[1u8, 1], [1, 1]]);
    assert!(matches!(GModule::new(2, 2, vec![singular]), Err(MeatAxeError::NotInvertible(0))));
    assert!(GModule::new(2, 3, vec![Gf2Matrix::identity(2)]).is_err());
    assert!(GModule::natural(0).is_err());
}

#[test]
fn chop_examples() {
    for seed in 0..5 {
        assert_eq!(dims(&chop(&GModule::natural(3).unwrap(), seed).unwrap()), vec![3]);
        let mut d = dims(&chop(&tensor_square(2), seed).unwrap());
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 2]);
        let lam = GModule::from_functor(&E::lambda(&[2, 1]), 3).unwrap();
        assert_eq!(lam.dim(), 9);
        let mut d = dims(&chop(&lam, seed).unwrap());
        d.sort_unstable();
        assert_eq!(d, vec![1, 8]);
    }
    assert!(chop(&GModule::trivial(2, 0).unwrap(), 1).unwrap().is_empty());
    assert_eq!(dims(&chop(&GModule::trivial(1, 3).unwrap(), 1).unwrap()), vec![1, 1, 1]);
}

#[test]
fn chop_is_deterministic_and_sound() {
    let m = GModule::from_functor(&E::TensorPower(3), 3).unwrap();
    let a = chop(&m, 7).unwrap();
    assert_eq!(a, chop(&m, 7).unwrap());
    assert_eq!(dims(&a).iter().sum::<usize>(), 27);
    for f in &a {
        assert!(is_irreducible(f, 3).unwrap());
        assert!(is_irreducible(&f.dual(), 3).unwrap());
    }
}

#[test]
fn isomorphism_of_simples() {
    let nat = GModule::natural(3).unwrap();
    assert!(iso_simple(&nat, &nat, 1).unwrap());
    assert!(!iso_simple(&nat, &GModule::trivial(3, 1).unwrap(), 1).unwrap());
    assert!(!iso_simple(&nat, &nat.dual(), 1).unwrap());
    // Λ² of the natural module is its dual at k = 3
    let l2 = GModule::from_functor(&E::Exterior(2), 3).unwrap();
    assert!(iso_simple(&l2, &nat.dual(), 2).unwrap());
    assert!(iso_simple(&nat.dual(), &l2, 5).unwrap());
    // a change of basis gives an isomorphic module
    let q = Gf2Matrix::from_rows(&[[1u8, 1, 0], [0, 1, 0], [1, 0, 1]]);
    let qi = q.inverse().unwrap();
    let conj = nat.gens().iter().map(|g| qi.mul(&g.mul(&q).unwrap()).unwrap()).collect();
    assert!(iso_simple(&nat, &GModule::new(3, 3, conj).unwrap(), 9).unwrap());
    assert!(matches!(iso_simple(&tensor_square(3), &tensor_square(3), 1), Err(MeatAxeError::Reducible(9))));
    assert!(iso_simple(&nat, &GModule::natural(2).unwrap(), 1).is_err());
}

#[test]
fn submodule_and_quotient_dimensions() {
    let t2 = tensor_square(3);
    let sym = spin(&t2, &Gf2Matrix::from_rows(&[[0u8, 1, 0, 1, 0, 0, 0, 0, 0]])).unwrap();
    assert_eq!(sym.dim(), 3);
    assert_eq!(t2.submodule(&sym).unwrap().dim(), 3);
    assert_eq!(t2.quotient(&sym).unwrap().dim(), 6);
    let not_inv = Subspace::coordinate(9, &[0]);
    assert!(matches!(t2.submodule(&not_inv), Err(MeatAxeError::NotInvariant)));
}

#[test]
fn catalog_at_three() {
    let c = simple_catalog(3, 3).unwrap();
    let got: Vec<(Partition, usize)> = c.entries.iter().map(|(l, m)| (l.clone(), m.dim())).collect();
    assert_eq!(got, vec![(p(&[1]), 3), (p(&[2]), 3), (p(&[3]), 1), (p(&[2, 1]), 8)]);
    for (i, (_, a)) in c.entries.iter().enumerate() {
        for (_, b) in &c.entries[i + 1..] {
            assert!(!iso_simple(a, b, 4).unwrap());
        }
    }
    assert!(iso_simple(c.get(&p(&[1])).unwrap(), &GModule::natural(3).unwrap(), 1).unwrap());
    assert!(simple_catalog(2, 3).is_err());
}

#[test]
fn catalog_dimensions_match_schur_quotients() {
    for k in 2..=4 {
        let c = simple_catalog(k, k).unwrap();
        for (lambda, m) in &c.entries {
            let data = functors::weyl::rad_and_schur(lambda, k).unwrap();
            assert_eq!(m.dim(), data.schur_dim(), "{lambda} k={k}");
            if lambda.length() == 1 {
                assert_eq!(m.dim(), functors::binom(k, lambda.part(1)));
            }
        }
    }
}

#[test]
fn constituent_examples() {
    let t = constituents(&E::lambda(&[2, 1]), 3, 3, 1).unwrap();
    assert_eq!(t.multiplicity(&p(&[2, 1])), 1);
    assert_eq!(t.multiplicity(&p(&[3])), 1);
    assert_eq!(t.factors.len(), 2);
    assert_eq!(t.total_dim(), 9);

    let t = constituents(&E::Exterior(2), 4, 2, 1).unwrap();
    assert_eq!(t.factors.len(), 1);
    assert_eq!(t.multiplicity(&p(&[2])), 1);

    let piece = E::PolyGraded(3, Box::new(E::l2()));
    let t = constituents(&piece, 3, 3, 1).unwrap();
    assert_eq!(t.factors.len(), 1, "{t:?}");
    assert_eq!(t.multiplicity(&p(&[2, 1])), 1);
}

#[test]
fn table_json_round_trip() {
    let t = constituents(&E::lambda(&[2, 1]), 3, 3, 1).unwrap();
    let js = t.to_json();
    assert!(js.starts_with(r#"{"module":"#));
    assert!(js.contains(r#""label":"2,1","dim":8,"mult":1"#), "{js}");
    assert_eq!(ConstituentTable::from_json(&js).unwrap(), t);
    let u = Label::Unidentified { dim: 4, fingerprint: vec![0, 1, 1] };
    assert_eq!(u.to_string().parse::<Label>().unwrap(), u);
    assert!("unidentified(x)".parse::<Label>().is_err());
}

#[test]
fn same_seed_gives_same_table() {
    let e = E::TensorPower(2);
    assert_eq!(constituents(&e, 3, 3, 11).unwrap(), constituents(&e, 3, 3, 11).unwrap());
}
