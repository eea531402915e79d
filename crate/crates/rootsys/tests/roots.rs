use proptest::prelude::*;
use rootsys::{classify_cartan, AlgebraType, RootSystem, RootSystemJson};

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap())
}

fn highest(s: &str) -> Vec<i64> {
    let r = rs(s);
    r.root(r.highest_root()).simple_coeffs.clone()
}

#[test]
fn highest_roots_in_node_order() {
    assert_eq!(highest("A4"), [1, 1, 1, 1]);
    assert_eq!(highest("B4"), [1, 2, 2, 2]);
    assert_eq!(highest("C4"), [2, 2, 2, 1]);
    assert_eq!(highest("D5"), [1, 2, 2, 1, 1]);
    assert_eq!(highest("G2"), [3, 2]);
    assert_eq!(highest("F4"), [2, 3, 4, 2]);
    assert_eq!(highest("E6"), [1, 2, 2, 3, 2, 1]);
    assert_eq!(highest("E7"), [2, 2, 3, 4, 3, 2, 1]);
    assert_eq!(highest("E8"), [2, 3, 4, 6, 5, 4, 3, 2]);
}

#[test]
fn root_counts_and_dimensions() {
    for (s, roots, dim) in [("A3", 12, 15), ("B3", 18, 21), ("C3", 18, 21), ("D4", 24, 28), ("G2", 12, 14), ("F4", 48, 52), ("E6", 72, 78), ("E7", 126, 133), ("E8", 240, 248)] {
        let t: AlgebraType = s.parse().unwrap();
        assert_eq!(rs(s).num_roots(), roots, "{s}");
        assert_eq!(t.dim(), dim, "{s}");
    }
}

#[test]
fn cartan_matrices_classify_back() {
    for t in AlgebraType::all_up_to(8) {
        let r = RootSystem::new(t);
        assert_eq!(classify_cartan(r.cartan_matrix()).unwrap(), t.canonical(), "{t}");
    }
}

#[test]
fn json_round_trip() {
    for s in ["G2", "D4", "E6"] {
        let j = rs(s).to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back: RootSystemJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert!(text.contains(&format!("\"{s}\"")));
    }
}

fn with_roots() -> impl Strategy<Value = (RootSystem, usize, usize)> {
    prop::sample::select(AlgebraType::all_up_to(6)).prop_flat_map(|t| {
        let n = RootSystem::new(t).num_roots();
        (Just(RootSystem::new(t)), 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reflections_are_isometric_involutions((r, a, b) in with_roots()) {
        let s = r.reflect(b, a);
        prop_assert_eq!(r.norm2(s), r.norm2(b));
        prop_assert_eq!(r.reflect(s, a), b);
        prop_assert_eq!(r.reflect(a, a), r.neg(a));
    }

    #[test]
    fn string_length_matches_the_pairing((r, a, b) in with_roots()) {
        prop_assume!(a != b && r.neg(a) != b);
        let (p, q) = r.root_string(a, b).unwrap();
        let k = r.pairing(b, a);
        prop_assert!(k.is_integer());
        prop_assert_eq!(p - q, k.to_integer() as i64);
        prop_assert!(p + q <= 3);
    }

    #[test]
    fn sums_and_differences_are_consistent((r, a, b) in with_roots()) {
        if let Some(s) = r.add(a, b) {
            prop_assert_eq!(r.sub(s, b), Some(a));
            prop_assert_eq!(r.root(s).height(), r.root(a).height() + r.root(b).height());
        }
    }
}
