use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use chevalley::ReductiveAlgebra;
use hkt::{default_hkt, descriptor, enumerate_decompositions, HktOptions, LevelDecomposition};
use rootsys::{AlgebraType, Family};
use tensor::CheckReport;

use crate::{default_qkt, dh_type_analysis, QktDecomposition, QktError};

/// One homogeneous hyper-complex coset and its U(2) quotient, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table3Row {
    pub algebra: String,
    pub k: String,
    /// U directions taken into k.
    pub t: usize,
    pub hkt: String,
    /// None when Φ(u(2)) is not a subalgebra centralizing k.
    pub qkt: Option<String>,
    pub comment: String,
    pub quotient_dim: Option<usize>,
    pub torsion_vanishes: Option<bool>,
    /// All hyper-complex and quotient checks passed.
    pub verified: bool,
    /// Why no quotient exists.
    pub reason: Option<String>,
    pub checks: Vec<CheckReport>,
}

fn sup(n: usize) -> String {
    const D: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| D[c.to_digit(10).unwrap() as usize]).collect()
}

pub fn group_name(t: AlgebraType) -> String {
    let r = t.rank;
    match t.family {
        Family::A => format!("SU({})", r + 1),
        Family::B => format!("Spin({})", 2 * r + 1),
        Family::C => format!("Sp({r})"),
        Family::D => format!("Spin({})", 2 * r),
        _ => t.to_string(),
    }
}

/// ×ⁿU(1), or U(1) alone.
fn torus(n: usize) -> String {
    if n == 1 {
        "U(1)".into()
    } else {
        format!("×{}U(1)", sup(n))
    }
}

/// Name of G/K with g = ⊕ simple ⊕ u(1)^a and t u(1) directions in k. A
/// full SU(2) factor absorbs one u(1) into U(2).
pub fn hkt_descriptor(g: &ReductiveAlgebra, ld: &LevelDecomposition, t: usize) -> String {
    let mut a = g.abelian_dim();
    let mut factors: Vec<(String, bool)> = Vec::new();
    for (i, ideal) in g.ideals().iter().enumerate() {
        let ty = ideal.roots.algebra.canonical();
        // a rank-one factor inside Sp(n) is written Sp(1)
        let frozen: Vec<String> = ld
            .frozen
            .iter()
            .filter(|c| c.ideal == i)
            .map(|c| match (ty.family, c.algebra.rank) {
                (Family::C, 1) => "Sp(1)".into(),
                _ => group_name(c.algebra.canonical()),
            })
            .collect();
        if frozen.is_empty() {
            if ty == AlgebraType::new(Family::A, 1).unwrap() && a > 0 {
                a -= 1;
                factors.push(("U(2)".into(), false));
            } else {
                factors.push((group_name(ty), false));
            }
        } else if frozen.len() == 1 {
            factors.push((format!("{}/{}", group_name(ty), frozen[0]), true));
        } else {
            factors.push((format!("{}/({})", group_name(ty), frozen.join("×")), true));
        }
    }
    if a == 1 {
        factors.push(("U(1)".into(), false));
    }
    let several = factors.len() > 1 || a > 1;
    let mut s = factors
        .iter()
        .map(|(f, quotient)| if *quotient && several { format!("{{{f}}}") } else { f.clone() })
        .collect::<Vec<_>>()
        .join("×");
    if a > 1 {
        s.push_str(&torus(a));
    }
    match t {
        0 => s,
        1 => format!("{{{s}}}/U(1)"),
        _ => format!("{{{s}}}/{}", torus(t)),
    }
}

/// The compact quaternionic-Kähler symmetric space of a simple type.
pub fn wolf_space(t: AlgebraType) -> String {
    let r = t.rank;
    match (t.family, r) {
        (Family::A, 2) => "CP²".into(),
        (Family::A, _) => format!("Gr₂(C^{})", r + 1),
        (Family::C, 2) => "S⁴".into(),
        (Family::C, _) => format!("HP{}", sup(r - 1)),
        (Family::B, _) => format!("Gr₄(R^{})", 2 * r + 1),
        (Family::D, _) => format!("Gr₄(R^{})", 2 * r),
        (Family::G, _) => "G2/SO(4)".into(),
        (Family::F, _) => "F4/Sp(3)Sp(1)".into(),
        (Family::E, 6) => "E6/SU(6)Sp(1)".into(),
        (Family::E, 7) => "E7/Spin(12)Sp(1)".into(),
        _ => "E8/E7Sp(1)".into(),
    }
}

/// Name the quotient from where m̃ lives in g and whether it is symmetric.
pub fn qkt_descriptor(q: &QktDecomposition, torsion_vanishes: bool) -> (String, String) {
    let g = &q.space.g;
    let mut simple = BTreeSet::new();
    let mut abelian = false;
    for v in q.space.m.vectors() {
        for (j, _) in v.iter() {
            match g.ideals().iter().position(|id| (id.offset..id.offset + id.dim()).contains(j)) {
                Some(i) => {
                    simple.insert(i);
                }
                None => abelian = true,
            }
        }
    }
    let types: Vec<AlgebraType> = simple.iter().map(|&i| g.ideal(i).roots.algebra.canonical()).collect();
    let a1 = AlgebraType::new(Family::A, 1).unwrap();
    let kind = if torsion_vanishes { "QK space" } else { "QKT space" };
    if types.is_empty() {
        return (torus(q.dim()), "flat space".into());
    }
    if torsion_vanishes && types.len() == 1 && !abelian {
        return (wolf_space(types[0]), "Wolf space".into());
    }
    if q.dim() == 4 && abelian && types == [a1, a1] {
        // (U(2) × U(2))/U(2) is the group U(2)
        return ("S¹×S³".into(), kind.into());
    }
    let base = hkt_descriptor(g, &q.hkt.decomposition, q.hkt.k_u1.len());
    (format!("{base}/U(2)"), kind.into())
}

fn multisets(types: &[AlgebraType], max_rank: usize) -> Vec<Vec<AlgebraType>> {
    fn go(types: &[AlgebraType], from: usize, rank: usize, cur: &mut Vec<AlgebraType>, out: &mut Vec<Vec<AlgebraType>>) {
        out.push(cur.clone());
        for i in from..types.len() {
            if types[i].rank <= rank {
                cur.push(types[i]);
                go(types, i, rank - types[i].rank, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(types, 0, max_rank, &mut Vec::new(), &mut out);
    out
}

/// Build and analyse G/K and its quotient.
pub fn table3_row(g: &ReductiveAlgebra, ld: &LevelDecomposition, t: usize) -> Result<Table3Row, QktError> {
    let (hs, triple, hr) = default_hkt(g, ld, &HktOptions { k_u1: t, ..Default::default() })?;
    let types: Vec<AlgebraType> = g.ideals().iter().map(|i| i.roots.algebra).collect();
    let mut row = Table3Row {
        algebra: descriptor(&types, g.abelian_dim()),
        k: descriptor(&ld.frozen_types(), t),
        t,
        hkt: hkt_descriptor(g, ld, t),
        qkt: None,
        comment: "-".into(),
        quotient_dim: None,
        torsion_vanishes: None,
        verified: hr.passed(),
        reason: None,
        checks: hr.checks,
    };
    match default_qkt(&hs, &triple) {
        Ok((q, qr)) => {
            let dh = dh_type_analysis(&q)?;
            let (name, comment) = qkt_descriptor(&q, dh.torsion_vanishes);
            row.qkt = Some(name);
            row.comment = comment;
            row.quotient_dim = Some(q.dim());
            row.torsion_vanishes = Some(dh.torsion_vanishes);
            let mut four_zero = CheckReport::new("dH[(4,0)+(0,4)]");
            four_zero.checked = 1;
            if !dh.four_zero {
                four_zero.fail(|| "nonzero (4,0) part of dH".into());
            }
            row.verified &= qr.passed() && four_zero.passed();
            row.checks = qr.hkt.checks;
            row.checks.extend(qr.checks);
            row.checks.push(four_zero);
        }
        Err(QktError::NotClosed(why)) => row.reason = Some(why),
        Err(e) => return Err(e),
    }
    Ok(row)
}

/// Every homogeneous hyper-complex G/K of dimension `dim` with no appended
/// u(1), from simple factors of total rank ≤ `max_rank` and an abelian
/// ideal, together with its U(2) quotient. u(1) directions of k come from
/// the U generators only: one taken from the centre just removes a factor.
pub fn enumerate_table3_with(max_rank: usize, dim: usize) -> Result<Vec<Table3Row>, QktError> {
    let simple: Vec<AlgebraType> = AlgebraType::all_up_to(max_rank).into_iter().filter(|t| t.canonical() == *t).collect();
    let mut rows: Vec<Table3Row> = Vec::new();
    for types in multisets(&simple, max_rank) {
        let base = ReductiveAlgebra::new(&types, 0);
        for (idx, ld) in enumerate_decompositions(&base).iter().enumerate() {
            let us = ld.u_gens().len();
            let l = ld.levels.len();
            for t in 0..=us {
                let core = base.dim() - ld.frozen_dim();
                let Some(a) = (dim + t).checked_sub(core) else { continue };
                let free = us + a - t;
                if free < l || (free - l) % 4 != 0 {
                    continue;
                }
                let g = ReductiveAlgebra::new(&types, a);
                let ld = enumerate_decompositions(&g).swap_remove(idx);
                let row = table3_row(&g, &ld, t)?;
                if !rows.iter().any(|r| r.hkt == row.hkt) {
                    rows.push(row);
                }
            }
        }
    }
    Ok(rows)
}

pub fn enumerate_table3() -> Result<Vec<Table3Row>, QktError> {
    enumerate_table3_with(4, 8)
}
