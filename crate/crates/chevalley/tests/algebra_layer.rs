use chevalley::{
    structure_constants, verify_identities, verify_invariance, verify_jacobi, CompactBasisElement, InvariantMetric,
    ReductiveAlgebra, SVec, StructureConstantsJson, Surd, Q,
};
use num_traits::Zero;
use proptest::prelude::*;
use rootsys::{AlgebraType, RootSystem};

fn q(n: i128) -> Q {
    Q::from_integer(n)
}

#[test]
fn jacobi_and_identities_up_to_rank_six() {
    for t in AlgebraType::all_up_to(6) {
        let rs = RootSystem::new(t);
        let tab = structure_constants(&rs);
        let j = verify_jacobi(&rs, &tab);
        assert!(j.passed(), "{t}: Jacobi fails at {:?}", j.witness);
        let id = verify_identities(&rs, &tab);
        assert!(id.passed(), "{t}: {:?}", id.witness);
    }
}

#[test]
fn identities_for_e7_e8_f4() {
    for s in ["E7", "E8", "F4"] {
        let rs = RootSystem::new(s.parse().unwrap());
        let tab = structure_constants(&rs);
        assert!(verify_identities(&rs, &tab).passed(), "{s}");
    }
}

#[test]
fn invariance_up_to_rank_four() {
    for t in AlgebraType::all_up_to(4) {
        let g = ReductiveAlgebra::new(&[t], 1);
        let b = InvariantMetric::new(&g, &[Q::new(7, 3)], &[q(2)]).unwrap();
        let rep = verify_invariance(&g, &b);
        assert!(rep.passed(), "{t}: {:?}", rep.witness);
    }
}

#[test]
fn ideals_do_not_mix() {
    let g = ReductiveAlgebra::new(&["A2".parse().unwrap(), "G2".parse().unwrap()], 1);
    let off = g.ideal(1).offset;
    for i in 0..off {
        for j in 0..g.dim() {
            let v = g.bracket_basis(i, j);
            if j >= off {
                assert!(v.is_zero());
            } else {
                assert!(v.iter().all(|(k, _)| *k < off));
            }
        }
    }
}

#[test]
fn structure_constant_json_round_trip() {
    let rs = RootSystem::new("B3".parse().unwrap());
    let t = structure_constants(&rs);
    let js = serde_json::to_string(&t.to_json(&rs)).unwrap();
    let back: StructureConstantsJson = serde_json::from_str(&js).unwrap();
    assert_eq!(back, t.to_json(&rs));
    assert!(js.contains("\"N\""));
}

// 3×3 matrices over ℚ(i), entries as (re, im).
type M3 = [[(Q, Q); 3]; 3];

fn zero3() -> M3 {
    [[(Q::zero(), Q::zero()); 3]; 3]
}

fn unit(i: usize, j: usize, c: (Q, Q)) -> M3 {
    let mut m = zero3();
    m[i][j] = c;
    m
}

fn add(a: &M3, b: &M3, s: Q) -> M3 {
    let mut m = *a;
    for i in 0..3 {
        for j in 0..3 {
            m[i][j].0 += s * b[i][j].0;
            m[i][j].1 += s * b[i][j].1;
        }
    }
    m
}

fn mul(a: &M3, b: &M3) -> M3 {
    let mut m = zero3();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let (x, y) = (a[i][k], b[k][j]);
                m[i][j].0 += x.0 * y.0 - x.1 * y.1;
                m[i][j].1 += x.0 * y.1 + x.1 * y.0;
            }
        }
    }
    m
}

fn commutator(a: &M3, b: &M3) -> M3 {
    add(&mul(a, b), &mul(b, a), q(-1))
}

#[test]
fn su3_matrix_oracle() {
    let g = ReductiveAlgebra::new(&["A2".parse().unwrap()], 0);
    let rs = &g.ideal(0).roots;
    let t = &g.ideal(0).table;
    // the root ε_i − ε_j is read off the ambient coordinates
    let ends = |r: usize| {
        let a = &rs.root(r).ambient;
        let i = a.iter().position(|x| *x == q(1)).unwrap();
        let j = a.iter().position(|x| *x == q(-1)).unwrap();
        (i, j)
    };
    let (s1, s2) = (rs.simple_root_index(0), rs.simple_root_index(1));
    let top = rs.add(s1, s2).unwrap();
    let mut sign = vec![q(1); rs.num_roots()];
    // [e_a, e_b] = N(a,b) e_{a+b} fixes the sign of the matrix unit for a + b
    let (i1, j1) = ends(s1);
    let (i2, j2) = ends(s2);
    let prod = commutator(&unit(i1, j1, (q(1), q(0))), &unit(i2, j2, (q(1), q(0))));
    let (it, jt) = ends(top);
    sign[top] = prod[it][jt].0 / q(t.get(s1, s2) as i128);
    let (n1, n2, nt) = (rs.neg(s1), rs.neg(s2), rs.neg(top));
    let prod = commutator(&unit(j1, i1, (q(1), q(0))), &unit(j2, i2, (q(1), q(0))));
    sign[nt] = prod[jt][it].0 / q(t.get(n1, n2) as i128);
    let e = |r: usize| {
        let (i, j) = ends(r);
        unit(i, j, (sign[r], q(0)))
    };
    let matrix = |idx: usize| -> M3 {
        match g.element(idx) {
            CompactBasisElement::Eplus { root, .. } => {
                let mut s = add(&e(root), &e(rs.neg(root)), q(1));
                for row in s.iter_mut() {
                    for c in row.iter_mut() {
                        *c = (-c.1, c.0);
                    }
                }
                s
            }
            CompactBasisElement::Eminus { root, .. } => add(&e(root), &e(rs.neg(root)), q(-1)),
            CompactBasisElement::H { i, .. } => {
                let mut m = zero3();
                m[i][i] = (q(0), q(-1));
                m[i + 1][i + 1] = (q(0), q(1));
                m
            }
            CompactBasisElement::U(_) => unreachable!(),
        }
    };
    for x in 0..g.dim() {
        let mx = matrix(x);
        // anti-hermitian
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(mx[i][j].0, -mx[j][i].0);
                assert_eq!(mx[i][j].1, mx[j][i].1);
            }
        }
        for y in 0..g.dim() {
            let expect = commutator(&mx, &matrix(y));
            let got = g
                .bracket_basis(x, y)
                .iter()
                .fold(zero3(), |acc, (k, c)| add(&acc, &matrix(*k), *c));
            assert_eq!(got, expect, "[{}, {}]", g.label(x), g.label(y));
        }
    }
}

fn small_q() -> impl Strategy<Value = Q> {
    (-6i128..=6, 1i128..=4).prop_map(|(a, b)| Q::new(a, b))
}

fn surd() -> impl Strategy<Value = Surd> {
    proptest::collection::vec((small_q(), prop::sample::select(vec![1u64, 2, 3, 5, 6, 15])), 0..4).prop_map(|ts| {
        ts.into_iter().fold(Surd::zero(), |acc, (c, n)| acc + Surd::term(c, n))
    })
}

proptest! {
    #[test]
    fn surd_field_laws(a in surd(), b in surd(), c in surd()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(&a * &inv, Surd::one());
        }
        let s: Surd = a.to_string().parse().unwrap();
        prop_assert_eq!(s, a);
    }

    #[test]
    fn same_radicand_products_are_rational(x in small_q(), y in small_q(), n in prop::sample::select(vec![2u64, 3, 7, 10])) {
        let p = &Surd::term(x, n) * &Surd::term(y, n);
        prop_assert_eq!(p.to_rational(), Some(x * y * Q::from_integer(n as i128)));
    }

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(
        xs in proptest::collection::vec((0usize..21, small_q()), 0..5),
        ys in proptest::collection::vec((0usize..21, small_q()), 0..5),
        s in small_q(),
    ) {
        let g = ReductiveAlgebra::new(&["B2".parse().unwrap()], 1);
        let x: SVec<Q> = SVec::from_pairs(xs.into_iter().map(|(i, c)| (i % g.dim(), c)));
        let y: SVec<Q> = SVec::from_pairs(ys.into_iter().map(|(i, c)| (i % g.dim(), c)));
        prop_assert_eq!(g.bracket(&x, &y), g.bracket(&y, &x).neg());
        prop_assert_eq!(g.bracket(&x.scaled_q(&s), &y), g.bracket(&x, &y).scaled_q(&s));
        let b = InvariantMetric::standard(&g);
        prop_assert_eq!(b.inner(&x, &y), b.inner(&y, &x));
    }
}
