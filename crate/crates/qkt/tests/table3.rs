use std::collections::BTreeMap;

#[test]
fn six_cosets_of_dimension_eight() {
    let rows = qkt::enumerate_table3().unwrap();
    let got: BTreeMap<&str, Option<&str>> = rows.iter().map(|r| (r.hkt.as_str(), r.qkt.as_deref())).collect();
    let want: BTreeMap<&str, Option<&str>> = [
        ("SU(3)", Some("CP²")),
        ("{SU(3)×U(1)}/U(1)", Some("CP²")),
        ("{Sp(2)/Sp(1)}×U(1)", Some("S⁴")),
        ("U(2)×U(2)", Some("S¹×S³")),
        ("U(2)×⁴U(1)", None),
        ("×⁸U(1)", Some("×⁴U(1)")),
    ]
    .into_iter()
    .collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(got, want);
    for r in &rows {
        assert!(r.verified, "{r:?}");
        match &r.qkt {
            Some(_) => assert_eq!(r.quotient_dim, Some(4)),
            None => assert!(r.reason.is_some()),
        }
    }
}

#[test]
fn comments_follow_the_quotient() {
    let rows = qkt::enumerate_table3().unwrap();
    let comment = |h: &str| rows.iter().find(|r| r.hkt == h).unwrap().comment.clone();
    assert_eq!(comment("SU(3)"), "Wolf space");
    assert_eq!(comment("{Sp(2)/Sp(1)}×U(1)"), "Wolf space");
    assert_eq!(comment("×⁸U(1)"), "flat space");
    assert_eq!(comment("U(2)×U(2)"), "QK space");
    // every quotient in dimension four is torsion free
    assert!(rows.iter().all(|r| r.torsion_vanishes != Some(false)));
}
