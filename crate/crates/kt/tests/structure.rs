use chevalley::ReductiveAlgebra;
use kt::{
    check_positivity, complex_structure, coset_from_colouring, coweight_lambda, default_lambda, positivity_from_regular,
    solve_cartan_pairing, verify_kt_full, CartanPairing, CosetDecomposition,
};
use proptest::prelude::*;
use rootsys::{AlgebraType, Colouring};
use tensor::{hermitian, nijenhuis};

fn build(t: AlgebraType, mask: u32) -> CosetDecomposition {
    let g = ReductiveAlgebra::new(&[t], 0);
    let c = Colouring::new(t.rank, (0..t.rank).filter(|i| mask & (1 << i) != 0)).unwrap();
    let cartan = t.rank - c.coloured.len();
    coset_from_colouring(&g, &[c], &[], cartan % 2).unwrap()
}

#[test]
fn every_colouring_up_to_rank_five_is_kt() {
    for t in AlgebraType::all_up_to(5) {
        for mask in 0..(1u32 << t.rank) {
            let d = build(t, mask);
            let p = positivity_from_regular(&d, &default_lambda(&d)).unwrap();
            let cx = complex_structure(&d, &p, &solve_cartan_pairing(&d).unwrap()).unwrap();
            let r = verify_kt_full(&d, &p, &cx).unwrap();
            assert!(r.passed(), "{t} mask {mask:b}: {:?}", r.checks.iter().find(|c| !c.passed()));
        }
    }
}

#[test]
fn single_sign_flip_is_detected() {
    for (name, mask) in [("A2", 0u32), ("B3", 0b010), ("G2", 0b01), ("A4", 0b0110)] {
        let t: AlgebraType = name.parse().unwrap();
        let d = build(t, mask);
        let mut p = positivity_from_regular(&d, &default_lambda(&d)).unwrap();
        // flipping a simple root only moves to the neighbouring chamber; the
        // highest root is a sum of two positive roots of m, so flipping it is not
        let k = d.m_roots.len() - 1;
        p.eps[k] = -p.eps[k];
        let cx = complex_structure(&d, &p, &solve_cartan_pairing(&d).unwrap()).unwrap();
        let n = nijenhuis(&d.space, &cx).unwrap();
        assert!(!n.is_empty(), "{name}");
        let pos = check_positivity(&d, &p);
        assert!(!pos.passed() && pos.witness.is_some(), "{name}");
    }
}

#[test]
fn unscaled_cartan_pairing_breaks_hermiticity() {
    // A2 maximal torus: the two orthogonal Cartan vectors have different norms
    let d = build("A2".parse().unwrap(), 0);
    let good = solve_cartan_pairing(&d).unwrap();
    assert_ne!(good.pairs[0].2, num_traits::One::one());
    let bad = CartanPairing { pairs: good.pairs.iter().map(|&(a, b, _)| (a, b, num_traits::One::one())).collect() };
    let p = positivity_from_regular(&d, &default_lambda(&d)).unwrap();
    let cx = complex_structure(&d, &p, &bad).unwrap();
    assert!(!hermitian(&d.space, &cx).unwrap().passed());
    let cx = complex_structure(&d, &p, &good).unwrap();
    assert!(hermitian(&d.space, &cx).unwrap().passed());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn any_chamber_gives_kt(seed in proptest::collection::vec(-5i128..=5, 4), mask in 0u32..16) {
        let t: AlgebraType = "C4".parse().unwrap();
        let d = build(t, mask);
        // random nonzero coweight weights; skip seeds landing on a wall
        let w: Vec<Vec<chevalley::Q>> = vec![seed.iter().map(|s| chevalley::Q::from_integer(*s)).collect()];
        let lambda = coweight_lambda(&d, &w);
        let Ok(p) = positivity_from_regular(&d, &lambda) else { return Ok(()) };
        let cx = complex_structure(&d, &p, &solve_cartan_pairing(&d).unwrap()).unwrap();
        let r = verify_kt_full(&d, &p, &cx).unwrap();
        prop_assert!(r.passed());
    }
}
