use chevalley::{InvariantMetric, ReductiveAlgebra, Q};
use hkt::{default_hkt, joyce_decompose, verify_cond, verify_levels, HktOptions};

fn alg(s: &str) -> ReductiveAlgebra {
    ReductiveAlgebra::new(&[s.parse().unwrap()], 0)
}

fn ints(v: &[i128]) -> Vec<Q> {
    v.iter().map(|x| Q::from_integer(*x)).collect()
}

#[test]
fn a4_two_levels_with_their_u_generators() {
    let g = alg("A4");
    let ld = joyce_decompose(&g, None);
    let rs = &g.ideal(0).roots;
    assert_eq!(ld.levels.len(), 2);
    assert_eq!(rs.root(ld.levels[0].psi).simple_coeffs, vec![1, 1, 1, 1]);
    assert_eq!(rs.root(ld.levels[1].psi).simple_coeffs, vec![0, 1, 1, 0]);
    assert_eq!(ld.levels[0].f.len(), 6);
    assert_eq!(ld.levels[1].f.len(), 2);
    let us = ld.u_gens();
    assert_eq!(us.len(), 2);
    assert_eq!(us[0].1.coeffs, ints(&[3, 1, -1, -3]));
    assert_eq!(us[1].1.coeffs, ints(&[0, 1, -1, 0]));
    assert_eq!(us[0].1.normalization_square, Q::new(1, 15));
    assert_eq!(us[1].1.normalization_square, Q::new(1, 3));
    assert!(verify_cond(&g, &ld).passed());
    assert!(verify_levels(&g, &ld).passed());

    // scale 10 gives B(H_α, H_α) = 20 on every root
    let b = InvariantMetric::new(&g, &[Q::from_integer(10)], &[]).unwrap();
    let e: Vec<_> = us.iter().map(|(_, u)| u.element(&g)).collect();
    for (i, (_, u)) in us.iter().enumerate() {
        for (j, _) in us.iter().enumerate() {
            let v = b.inner(&e[i], &e[j]) * u.normalization_square;
            assert_eq!(v, if i == j { Q::from_integer(20) } else { Q::from_integer(0) });
        }
    }
}

#[test]
fn a4_triple_is_hkt_under_both_scales() {
    let g = alg("A4");
    let ld = joyce_decompose(&g, None);
    for scale in [1, 10] {
        let opts = HktOptions { scales: vec![Q::from_integer(scale)], ..Default::default() };
        let (hs, _, r) = default_hkt(&g, &ld, &opts).unwrap();
        assert_eq!(hs.extra_u1, 0);
        assert_eq!(r.dim_m, 24);
        assert!(r.passed(), "{:?}", r.first_failure());
    }
}

#[test]
fn even_rank_u_coefficients_are_antisymmetric_and_odd() {
    // first U of A_2n: coefficient l is (2(n−l)+1) times the middle one
    for n in 1..=4usize {
        let g = alg(&format!("A{}", 2 * n));
        let ld = joyce_decompose(&g, None);
        assert_eq!(ld.levels.len(), n);
        let c = &ld.u_gens()[0].1.coeffs;
        for l in 1..=2 * n {
            assert_eq!(c[l - 1], -c[2 * n - l]);
        }
        for l in 1..=n {
            assert_eq!(c[l - 1], c[n - 1] * Q::from_integer((2 * (n - l) + 1) as i128));
        }
    }
}

#[test]
fn odd_rank_has_one_fewer_u() {
    for n in 1..=4usize {
        let g = alg(&format!("A{}", 2 * n - 1));
        let ld = joyce_decompose(&g, None);
        assert_eq!(ld.levels.len(), n);
        assert_eq!(ld.u_gens().len(), n - 1);
        let hs = hkt::hkt_coset(&g, &ld, &HktOptions::default()).unwrap();
        assert_eq!(hs.extra_u1, 1);
    }
}

#[test]
fn a1_needs_one_u1_and_e8_needs_eight() {
    let ld = joyce_decompose(&alg("A1"), None);
    assert_eq!(ld.levels.len(), 1);
    assert!(ld.levels[0].f.is_empty() && ld.frozen.is_empty());
    let g = alg("E8");
    let ld = joyce_decompose(&g, None);
    assert_eq!(ld.levels.len(), 8);
    assert!(ld.frozen.is_empty() && ld.u_gens().is_empty());
    assert!(verify_cond(&g, &ld).passed());
    assert!(verify_levels(&g, &ld).passed());
}
