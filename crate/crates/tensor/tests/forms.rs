use chevalley::{InvariantMetric, ReductiveAlgebra, SVec, Surd, Q};
use proptest::prelude::*;
use tensor::{
    coset_square, jacobi_contraction, real_type_part, reconstruction_error, slot_sum, torsion_form, type_split,
    AltForm, CosetSpace, Endomorphism,
};

// complex structure on R^6 pairing (0,3), (1,5), (2,4) with a surd rescaling
fn structure6() -> Endomorphism {
    let r = Surd::sqrt(Q::from_integer(3));
    let rinv = r.inv().unwrap();
    let mut cols = vec![SVec::new(); 6];
    let pair = |cols: &mut Vec<SVec<Surd>>, a: usize, b: usize, s: &Surd, sinv: &Surd| {
        cols[a] = SVec::single(b, s.clone());
        cols[b] = SVec::single(a, -sinv.clone());
    };
    pair(&mut cols, 0, 3, &Surd::one(), &Surd::one());
    pair(&mut cols, 1, 5, &r, &rinv);
    pair(&mut cols, 2, 4, &Surd::from_int(-2), &Surd::from_q(Q::new(-1, 2)));
    Endomorphism::from_columns(cols)
}

fn form(degree: usize, entries: Vec<(Vec<usize>, i128)>) -> AltForm<Surd> {
    let mut w = AltForm::new(degree);
    for (idx, v) in entries {
        w.add_at(&idx, Surd::from_int(v));
    }
    w
}

fn tuple(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::sample::subsequence((0..6).collect::<Vec<_>>(), degree).prop_shuffle()
}

proptest! {
    #[test]
    fn split_reconstructs(entries in proptest::collection::vec((tuple(3), -4i128..=4), 0..6)) {
        let cx = structure6();
        prop_assert!(cx.is_almost_complex());
        let w = form(3, entries);
        let split = type_split(&w, &cx);
        prop_assert!(reconstruction_error(&w, &split).is_zero());
        let real = real_type_part(&w, &cx, 3).plus(&real_type_part(&w, &cx, 2));
        prop_assert_eq!(real, w);
    }

    #[test]
    fn four_form_parts_sum(entries in proptest::collection::vec((tuple(4), -3i128..=3), 0..5)) {
        let cx = structure6();
        let w = form(4, entries);
        let sum = real_type_part(&w, &cx, 4).plus(&real_type_part(&w, &cx, 3)).plus(&real_type_part(&w, &cx, 2));
        prop_assert_eq!(sum, w.clone());
        // each real part is a fixed point of its own projection
        let p31 = real_type_part(&w, &cx, 3);
        prop_assert_eq!(real_type_part(&p31, &cx, 3), p31.clone());
        prop_assert!(real_type_part(&p31, &cx, 2).is_zero());
    }

    #[test]
    fn slot_sums_commute_with_sign(entries in proptest::collection::vec((tuple(3), -4i128..=4), 0..4)) {
        let cx = structure6();
        let w = form(3, entries);
        // applying I in every slot twice gives (-1)^3
        let twice = slot_sum(&slot_sum(&w, &cx, 3), &cx, 3);
        prop_assert_eq!(twice, w.scaled_q(&Q::from_integer(-1)));
    }
}

#[test]
fn slot_projectors_are_orthogonal_idempotents() {
    // P± = (1 ∓ iI)/2 represented as (real, imaginary) pairs of real endomorphisms
    let cx = structure6();
    let half = Surd::from_q(Q::new(1, 2));
    let id = Endomorphism::identity(6);
    let proj = |s: i128| (id.scaled(&half), cx.scaled(&Surd::from_q(Q::new(-s, 2))));
    let mul = |a: &(Endomorphism, Endomorphism), b: &(Endomorphism, Endomorphism)| {
        (a.0.compose(&b.0).minus(&a.1.compose(&b.1)), a.0.compose(&b.1).plus(&a.1.compose(&b.0)))
    };
    let (p, m) = (proj(1), proj(-1));
    assert_eq!(mul(&p, &p), p);
    assert_eq!(mul(&m, &m), m);
    let pm = mul(&p, &m);
    assert!(pm.0.is_zero() && pm.1.is_zero());
}

#[test]
fn group_torsion_is_antisymmetric() {
    let g = ReductiveAlgebra::new(&["A2".parse().unwrap()], 0);
    let b = InvariantMetric::standard(&g);
    let s = CosetSpace::new(g, b, &[], &[]);
    let h = torsion_form(&s).unwrap();
    assert!(!h.is_zero());
    for (k, v) in h.iter() {
        assert_eq!(h.get(&[k[1], k[0], k[2]]), -*v);
        assert_eq!(h.get(&[k[1], k[2], k[0]]), *v);
    }
    assert!(jacobi_contraction(&s).passed());
    assert!(coset_square(&s).is_zero());
}
