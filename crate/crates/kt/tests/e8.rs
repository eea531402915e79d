use chevalley::{ReductiveAlgebra, SVec, Q};
use kt::{coset_from_colouring, default_structure, in_span, verify_kt, CosetDecomposition};
use rootsys::Colouring;

fn e8(k_u1: usize, extra: usize) -> CosetDecomposition {
    let g = ReductiveAlgebra::new(&["E8".parse().unwrap()], 0);
    let c = Colouring::parse(8, "2,3,4,5,8").unwrap();
    let probe = coset_from_colouring(&g, &[c.clone()], &[], 0).unwrap();
    let ku1: Vec<SVec<Q>> = probe.h1[..k_u1].to_vec();
    coset_from_colouring(&g, &[c], &ku1, extra).unwrap()
}

fn h(coeffs: &[(usize, i128)]) -> SVec<Q> {
    let g = ReductiveAlgebra::new(&["E8".parse().unwrap()], 0);
    SVec::from_pairs(coeffs.iter().map(|&(i, c)| (g.h(0, i - 1), Q::from_integer(c))))
}

#[test]
fn e8_colouring_gives_d4_a1() {
    let d = e8(0, 0);
    let mut names: Vec<String> = d.k_components.iter().map(|(_, t)| t.to_string()).collect();
    names.sort();
    assert_eq!(names, vec!["A1", "D4"]);
    assert_eq!(d.dim_m(), 217);
    assert_eq!(d.h1.len(), 3);
    let expected = [
        h(&[(1, 2), (3, 1), (5, -1), (6, -2)]),
        h(&[(1, -2), (2, 1), (4, 2), (5, 3), (6, 4)]),
        h(&[(7, 2), (8, 1)]),
    ];
    let dim = d.g().dim();
    for v in &expected {
        assert!(in_span(&d.space.metric, dim, &d.h1, v));
    }
    for v in &d.h1 {
        assert!(in_span(&d.space.metric, dim, &expected, v));
    }
}

#[test]
fn e8_complex_variants_are_kt() {
    // U(1)^b appended to g, U(1)^a taken into k
    for (a, b) in [(0, 1), (1, 0), (2, 1), (3, 0)] {
        let d = e8(a, b);
        assert_eq!(d.dim_m(), 217 + b - a);
        let (_, cx) = default_structure(&d).unwrap();
        let r = verify_kt(&d, &cx).unwrap();
        assert!(r.passed(), "a={a} b={b}: {:?}", r.checks.iter().find(|c| !c.passed()));
    }
}
