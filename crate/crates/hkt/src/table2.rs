//! Hyper-complex cosets (G/K) ×^m u(1) of a simple G: enumeration from the
//! level decomposition, and the closed-form families they fall into.

use serde::{Deserialize, Serialize};

use chevalley::ReductiveAlgebra;
use rootsys::{AlgebraType, Family};

use crate::{enumerate_decompositions, verify_cond, verify_levels, LevelDecomposition};

/// Canonical isotropy descriptor: sorted simple types, then "u1^t".
pub fn descriptor(types: &[AlgebraType], u1: usize) -> String {
    let mut t: Vec<AlgebraType> = types.iter().map(|t| t.canonical()).collect();
    t.sort();
    let mut parts: Vec<String> = t.iter().map(|t| t.to_string()).collect();
    match u1 {
        0 => {}
        1 => parts.push("u1".into()),
        n => parts.push(format!("u1^{n}")),
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// One enumerated coset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub g: AlgebraType,
    pub k: String,
    pub dim_k: usize,
    pub m: usize,
    pub d: usize,
    pub levels: usize,
    /// U directions taken into k.
    pub t: usize,
    /// d = dim g − dim k + m, counted from the constructed partition, and the
    /// level checks pass.
    pub verified: bool,
    /// Closed-form family containing the row, if any.
    pub family: Option<String>,
    /// Number of decompositions giving the same (k, m, d).
    pub multiplicity: usize,
}

/// A closed-form entry for a given g.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormRow {
    pub family: String,
    pub params: String,
    pub k: String,
    pub m: usize,
    pub d: usize,
}

fn part(f: Family, r: usize) -> Vec<AlgebraType> {
    let a1 = AlgebraType::new(Family::A, 1).unwrap();
    match (f, r) {
        (_, 0) | (Family::D, 1) => vec![],
        (Family::B | Family::C, 1) => vec![a1],
        (Family::D, 2) => vec![a1, a1],
        _ => vec![AlgebraType::new(f, r).unwrap().canonical()],
    }
}

fn a1s(n: usize) -> Vec<AlgebraType> {
    vec![AlgebraType::new(Family::A, 1).unwrap(); n]
}

fn row(out: &mut Vec<ClosedFormRow>, family: &str, params: String, k: Vec<AlgebraType>, u1: usize, m: usize, d: usize) {
    out.push(ClosedFormRow { family: family.into(), params, k: descriptor(&k, u1), m, d });
}

/// Every closed-form entry applying to g, with its parameter range.
///
/// In the E7 and E8 rows with k = D4 ⊕^s A1 the level count gives
/// m = 3 − s and m = 4 − s, matching d = dim g − dim k + m. The range of
/// s in those rows is 0 ≤ s ≤ 1.
pub fn closed_forms(g: AlgebraType) -> Vec<ClosedFormRow> {
    let g = g.canonical();
    let r = g.rank;
    let mut out = Vec::new();
    let with = |base: Vec<AlgebraType>, extra: Vec<AlgebraType>| -> Vec<AlgebraType> { base.into_iter().chain(extra).collect() };
    match g.family {
        Family::A => {
            if r >= 3 {
                for s in 1..=(r - 1) / 2 {
                    for t in 0..=s {
                        row(&mut out, "A_r", format!("s={s},t={t}"), part(Family::A, r - 2 * s), t, t, 4 * s * (r - s + 1));
                    }
                }
            }
            if r % 2 == 0 {
                let n = r / 2;
                for s in 0..=n {
                    row(&mut out, "A_2r", format!("s={s}"), vec![], s, s, 4 * n * (n + 1));
                }
            } else {
                let n = (r + 1) / 2;
                for s in 0..n {
                    row(&mut out, "A_2r-1", format!("s={s}"), vec![], s, s + 1, 4 * n * n);
                }
            }
        }
        Family::B if r >= 3 => {
            for s in 1..=(r - 1) / 2 {
                for t in 0..=s {
                    let k = with(part(Family::B, r - 2 * s), a1s(t));
                    row(&mut out, "B_r", format!("s={s},t={t}"), k, 0, 2 * s - t, 4 * (s * (2 * r - 2 * s + 1) - t));
                }
            }
            row(&mut out, "B_r/0", String::new(), vec![], 0, r, 2 * r * (r + 1));
            if r % 2 == 0 {
                let n = r / 2;
                for s in 0..=n {
                    row(&mut out, "B_2r", format!("s={s}"), a1s(s), 0, 2 * n - s, 4 * (n * (2 * n + 1) - s));
                }
            }
        }
        Family::B | Family::C => {
            for s in 1..r {
                row(&mut out, "C_r", format!("s={s}"), part(Family::C, r - s), 0, s, 2 * s * (2 * r - s + 1));
            }
            row(&mut out, "C_r/0", String::new(), vec![], 0, r, 2 * r * (r + 1));
        }
        Family::D => {
            if r >= 5 {
                for s in 1..=(r - 3) / 2 {
                    for t in 0..=s {
                        let k = with(part(Family::D, r - 2 * s), a1s(t));
                        row(&mut out, "D_r", format!("s={s},t={t}"), k, 0, 2 * s - t, 4 * (2 * s * (r - s) - t));
                    }
                }
            }
            if r % 2 == 0 && r >= 4 {
                let n = r / 2;
                for s in 0..=n + 1 {
                    row(&mut out, "D_2r", format!("s={s}"), a1s(s), 0, 2 * n - s, 4 * (2 * n * n - s));
                }
            }
            if r % 2 == 1 && r >= 5 {
                let n = (r - 1) / 2;
                for s in 0..=n {
                    for t in 0..=1 {
                        row(&mut out, "D_2r+1", format!("s={s},t={t}"), a1s(s), t, 2 * n + t - s - 1, 4 * (2 * n * (n + 1) - s));
                    }
                }
            }
        }
        Family::E if r == 6 => {
            for s in 0..=2 {
                for t in 0..=2 - s {
                    row(&mut out, "E6/A", format!("s={s},t={t}"), part(Family::A, 2 * s + 1), t, t + 1, 4 * (19 - s * (s + 2)));
                }
            }
            for s in 0..=2 {
                row(&mut out, "E6/u1", format!("s={s}"), vec![], s, s + 2, 80);
            }
        }
        Family::E if r == 7 => {
            row(&mut out, "E7/D6", String::new(), part(Family::D, 6), 0, 1, 68);
            for s in 0..=1 {
                row(&mut out, "E7/D4", format!("s={s}"), with(part(Family::D, 4), a1s(s)), 0, 3 - s, 4 * (27 - s));
            }
            for s in 0..=4 {
                row(&mut out, "E7/A1", format!("s={s}"), a1s(s), 0, 7 - s, 4 * (35 - s));
            }
        }
        Family::E => {
            row(&mut out, "E8/E7", String::new(), part(Family::E, 7), 0, 1, 116);
            row(&mut out, "E8/D6", String::new(), part(Family::D, 6), 0, 2, 184);
            for s in 0..=1 {
                row(&mut out, "E8/D4", format!("s={s}"), with(part(Family::D, 4), a1s(s)), 0, 4 - s, 4 * (56 - s));
            }
            for s in 0..=4 {
                row(&mut out, "E8/A1", format!("s={s}"), a1s(s), 0, 8 - s, 4 * (64 - s));
            }
        }
        Family::F => {
            for s in 1..=3 {
                row(&mut out, "F4/C", format!("s={s}"), part(Family::C, s), 0, 4 - s, 2 * (28 - s * (s + 1)));
            }
            row(&mut out, "F4/0", String::new(), vec![], 0, 4, 56);
        }
        Family::G => {
            for s in 0..=1 {
                row(&mut out, "G2", format!("s={s}"), a1s(s), 0, 2 - s, 4 * (4 - s));
            }
        }
    }
    out
}

/// Rows for one decomposition: t of its U directions go into k.
pub fn rows_of(g: &ReductiveAlgebra, ld: &LevelDecomposition) -> Vec<Table2Row> {
    let gt = g.ideal(0).roots.algebra;
    let l = ld.levels.len();
    let nu = ld.u_gens().len();
    let checks_pass = verify_cond(g, ld).passed() && verify_levels(g, ld).passed();
    // m counted from the partition: per level U, H, E±_ψ and E±_β for β in f
    let built: usize = ld.levels.iter().map(|lv| 4 + 2 * lv.f.len()).sum();
    (0..=nu)
        .map(|t| {
            let m = l - (nu - t);
            let dim_k = ld.frozen_dim() + t;
            let d = gt.dim() - dim_k + m;
            Table2Row {
                g: gt,
                k: descriptor(&ld.frozen_types(), t),
                dim_k,
                m,
                d,
                levels: l,
                t,
                verified: checks_pass && built == d && d % 4 == 0,
                family: None,
                multiplicity: 1,
            }
        })
        .collect()
}

/// All (k, m, d) from the level decompositions of a simple g, merged, sorted
/// by descending d, and matched against the closed forms.
pub fn enumerate_table2(gt: AlgebraType) -> Vec<Table2Row> {
    let g = ReductiveAlgebra::new(&[gt], 0);
    let closed = closed_forms(gt);
    let mut rows: Vec<Table2Row> = Vec::new();
    for ld in enumerate_decompositions(&g) {
        for r in rows_of(&g, &ld) {
            match rows.iter_mut().find(|x| x.k == r.k && x.m == r.m && x.d == r.d) {
                Some(x) => {
                    x.multiplicity += 1;
                    x.verified &= r.verified;
                }
                None => rows.push(r),
            }
        }
    }
    for r in &mut rows {
        r.family = closed.iter().find(|c| c.k == r.k && c.m == r.m && c.d == r.d).map(|c| format!("{} {}", c.family, c.params).trim().to_string());
    }
    rows.sort_by(|a, b| b.d.cmp(&a.d).then(a.k.cmp(&b.k)).then(a.m.cmp(&b.m)));
    rows
}

/// Closed-form entries with no enumerated row.
pub fn unmatched_closed_forms(gt: AlgebraType, rows: &[Table2Row]) -> Vec<ClosedFormRow> {
    closed_forms(gt)
        .into_iter()
        .filter(|c| !rows.iter().any(|r| r.k == c.k && r.m == c.m && r.d == c.d))
        .collect()
}

/// Each family with its smallest admissible rank and the next one.
pub fn family_instances() -> Vec<(&'static str, Vec<AlgebraType>)> {
    let t = |s: &str| -> AlgebraType { s.parse().unwrap() };
    vec![
        ("A_r", vec![t("A3"), t("A4")]),
        ("A_2r", vec![t("A2"), t("A4")]),
        ("A_2r-1", vec![t("A1"), t("A3")]),
        ("B_r", vec![t("B3"), t("B4")]),
        ("B_r/0", vec![t("B3"), t("B4")]),
        ("B_2r", vec![t("B4"), t("B6")]),
        ("C_r", vec![t("C2"), t("C3")]),
        ("C_r/0", vec![t("C2"), t("C3")]),
        ("D_r", vec![t("D5"), t("D6")]),
        ("D_2r", vec![t("D4"), t("D6")]),
        ("D_2r+1", vec![t("D5"), t("D7")]),
        ("E6/A", vec![t("E6")]),
        ("E6/u1", vec![t("E6")]),
        ("E7/D6", vec![t("E7")]),
        ("E7/D4", vec![t("E7")]),
        ("E7/A1", vec![t("E7")]),
        ("E8/E7", vec![t("E8")]),
        ("E8/D6", vec![t("E8")]),
        ("E8/D4", vec![t("E8")]),
        ("E8/A1", vec![t("E8")]),
        ("F4/C", vec![t("F4")]),
        ("F4/0", vec![t("F4")]),
        ("G2", vec![t("G2")]),
    ]
}
