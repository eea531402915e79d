use chevalley::{ReductiveAlgebra, Surd, Q};
use proptest::prelude::*;
use hkt::{
    default_hkt, enumerate_decompositions, hkt_coset, hypercomplex_triple, joyce_decompose, verify_hkt, FSigns,
    HktOptions,
};
use rootsys::AlgebraType;
use tensor::nijenhuis;

#[test]
fn every_decomposition_up_to_rank_five_is_hkt() {
    let mut count = 0;
    for t in AlgebraType::all_up_to(5) {
        let g = ReductiveAlgebra::new(&[t], 0);
        for ld in enumerate_decompositions(&g) {
            for k_u1 in 0..=ld.u_gens().len() {
                let (hs, _, r) = default_hkt(&g, &ld, &HktOptions { k_u1, ..Default::default() }).unwrap();
                assert!(r.passed(), "{t} {:?}: {:?}", ld.frozen_types(), r.first_failure());
                assert_eq!(hs.dim_m() % 4, 0);
                count += 1;
            }
        }
    }
    assert_eq!(count, 84);
}

#[test]
fn products_with_abelian_factors() {
    let cases: [(&[&str], usize, usize); 4] = [(&["A1", "A1"], 2, 0), (&["A2"], 1, 1), (&["A1"], 5, 0), (&[], 8, 0)];
    for (types, a, k_u1) in cases {
        let types: Vec<AlgebraType> = types.iter().map(|s| s.parse().unwrap()).collect();
        let g = ReductiveAlgebra::new(&types, a);
        let ld = joyce_decompose(&g, None);
        let (hs, _, r) = default_hkt(&g, &ld, &HktOptions { k_u1, ..Default::default() }).unwrap();
        assert_eq!(hs.dim_m(), 8);
        assert_eq!(hs.extra_u1, 0);
        assert!(r.passed(), "{types:?}: {:?}", r.first_failure());
    }
}

#[test]
fn swapping_the_u_pairing_is_another_valid_structure() {
    let g = ReductiveAlgebra::new(&["A4".parse().unwrap()], 0);
    let ld = joyce_decompose(&g, None);
    let hs = hkt_coset(&g, &ld, &HktOptions::default()).unwrap();
    let swap = vec![vec![Surd::zero(), Surd::one()], vec![Surd::one(), Surd::zero()]];
    let t = hypercomplex_triple(&hs, FSigns::default(), Some(swap)).unwrap();
    let r = verify_hkt(&hs, &t).unwrap();
    assert!(r.check("quaternion").unwrap().passed());
    assert!(r.passed(), "{:?}", r.first_failure());
}

#[test]
fn wrong_sign_on_f_breaks_integrability() {
    let g = ReductiveAlgebra::new(&["G2".parse().unwrap()], 0);
    let ld = joyce_decompose(&g, None);
    let hs = hkt_coset(&g, &ld, &HktOptions::default()).unwrap();
    let t = hypercomplex_triple(&hs, FSigns(1, -1), None).unwrap();
    assert!(!nijenhuis(&hs.space, &t.i[0]).unwrap().is_empty());
    let r = verify_hkt(&hs, &t).unwrap();
    assert!(r.check("quaternion").unwrap().passed());
    assert!(!r.passed() && r.first_failure().unwrap().witness.is_some());
}

fn positive_q() -> impl Strategy<Value = Q> {
    (1i128..=12, 1i128..=5).prop_map(|(n, d)| Q::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn any_invariant_metric_gives_hkt(
        case in prop::sample::select(vec![(vec!["A2"], 0usize), (vec!["C2"], 1), (vec!["A1", "A1"], 2), (vec!["G2"], 0), (vec!["A3"], 0)]),
        scales in prop::collection::vec(positive_q(), 2),
        abelian in prop::collection::vec(positive_q(), 2),
    ) {
        let (types, a) = case;
        let types: Vec<AlgebraType> = types.iter().map(|s| s.parse().unwrap()).collect();
        let g = ReductiveAlgebra::new(&types, a);
        let ld = joyce_decompose(&g, None);
        let opts = HktOptions { scales: scales[..types.len()].to_vec(), abelian_c: abelian[..a].to_vec(), ..Default::default() };
        let (hs, _, r) = default_hkt(&g, &ld, &opts).unwrap();
        prop_assert_eq!(hs.dim_m() % 4, 0);
        prop_assert!(r.passed(), "{:?}", r.first_failure());
    }
}
