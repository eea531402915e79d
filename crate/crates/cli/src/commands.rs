//! The subcommands. Each builds a serializable summary and its text form.

use serde::{Deserialize, Serialize};

use chevalley::{structure_constants, verify_identities, verify_invariance, verify_jacobi, InvariantMetric, ReductiveAlgebra, Q};
use hkt::{
    default_hkt, descriptor, enumerate_table2, joyce_decompose, unmatched_closed_forms, ClosedFormRow, HktOptions,
    LevelDecomposition, Table2Row,
};
use kt::{
    complex_structure, coset_from_colouring, coweight_lambda, default_lambda, positivity_from_regular,
    solve_cartan_pairing, verify_kt_full, CosetDecomposition,
};
use qkt::{default_qkt, dh_type_analysis, enumerate_table3_with, hkt_descriptor, qkt_descriptor, DhReport, QktError, Table3Row};
use rootsys::{dynkin_diagram, extended_diagram, AlgebraType, Colouring, Edge, RootSystem};
use tensor::CheckReport;

use crate::input::{cartan_coords, parse_algebra, parse_cartan_vectors, parse_colourings, parse_rationals, split_per_ideal};
use crate::text::{checks_table, edge_list, table};
use crate::Flags;

/// Result of a command: data for JSON, its text form, and whether every
/// verification passed.
pub struct Outcome<T> {
    pub data: T,
    pub text: String,
    pub passed: bool,
}

fn all_passed(checks: &[CheckReport]) -> bool {
    checks.iter().all(|c| c.passed())
}

fn algebra_flag(f: &Flags) -> Result<(String, ReductiveAlgebra), String> {
    let s = f.algebra.as_deref().ok_or("--algebra is required")?;
    Ok((s.to_string(), parse_algebra(s)?))
}

fn simple_types(f: &Flags, default_rank: usize) -> Result<Vec<AlgebraType>, String> {
    match &f.algebra {
        Some(s) => Ok(vec![s.parse().map_err(|e| format!("bad algebra '{s}': {e}"))?]),
        None => Ok(AlgebraType::all_up_to(f.max_rank.unwrap_or(default_rank))
            .into_iter()
            .filter(|t| t.canonical() == *t)
            .collect()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub algebra: AlgebraType,
    pub rank: usize,
    pub dim: usize,
    pub positive_roots: usize,
    /// Simple coefficients of the highest root, by node.
    pub highest_root: Vec<i64>,
    pub edges: Vec<Edge>,
    /// Bonds of the extended node 0.
    pub extended_edges: Vec<Edge>,
}

pub fn catalog(f: &Flags) -> Result<Outcome<Vec<CatalogEntry>>, String> {
    let mut rows = Vec::new();
    let mut data = Vec::new();
    for t in simple_types(f, 8)? {
        let rs = RootSystem::new(t);
        let ext: Vec<Edge> = extended_diagram(&rs).edges.into_iter().filter(|e| e.0 == 0 || e.1 == 0).collect();
        let e = CatalogEntry {
            algebra: t,
            rank: t.rank,
            dim: t.dim(),
            positive_roots: rs.num_roots() / 2,
            highest_root: rs.root(rs.highest_root()).simple_coeffs.clone(),
            edges: dynkin_diagram(&rs).edges,
            extended_edges: ext,
        };
        let psi: Vec<String> = e.highest_root.iter().map(|c| c.to_string()).collect();
        rows.push(vec![
            t.to_string(),
            e.dim.to_string(),
            e.positive_roots.to_string(),
            format!("({})", psi.join(",")),
            edge_list(&e.edges),
            edge_list(&e.extended_edges),
        ]);
        data.push(e);
    }
    let text = table(&["algebra", "dim", "|Δ+|", "ψ", "bonds", "extended"], &rows);
    Ok(Outcome { data, text, passed: true })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KtSummary {
    pub algebra: String,
    /// One-based coloured nodes per simple ideal.
    pub colouring: Vec<Vec<usize>>,
    pub k: String,
    pub dim_k: usize,
    pub dim_m: usize,
    pub positive_roots_m: usize,
    pub extra_u1: usize,
    /// Cartan directions commuting with the coloured roots, over the H_i
    /// then the abelian generators.
    pub h1: Vec<Vec<String>>,
    pub k_u1: Vec<Vec<String>>,
    /// λ over the H_i of each ideal.
    pub lambda: Vec<Vec<String>>,
    pub eps: Vec<i8>,
    /// Set when no complex structure is built.
    pub note: Option<String>,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

fn k_name(d: &CosetDecomposition) -> String {
    let mut c: Vec<AlgebraType> = d.k_components.iter().map(|(_, t)| t.canonical()).collect();
    c.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.cmp(b)));
    let mut parts: Vec<String> = c.iter().map(|t| t.to_string()).collect();
    match d.k_u1.len() {
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

pub fn decompose_kt(f: &Flags) -> Result<Outcome<KtSummary>, String> {
    let (name, g) = algebra_flag(f)?;
    let colourings = match &f.colour {
        Some(s) => parse_colourings(&g, s)?,
        None => vec![Colouring::default(); g.ideals().len()],
    };
    let extra = f.extra_u1.unwrap_or(0);
    let full = g.with_extra_abelian(extra);
    let k_u1 = match &f.k_u1 {
        Some(s) => parse_cartan_vectors(&full, s)?,
        None => Vec::new(),
    };
    let d = coset_from_colouring(&g, &colourings, &k_u1, extra).map_err(|e| e.to_string())?;
    let mut s = KtSummary {
        algebra: name,
        colouring: colourings.iter().map(|c| c.coloured.iter().map(|i| i + 1).collect()).collect(),
        k: k_name(&d),
        dim_k: d.dim_k(),
        dim_m: d.dim_m(),
        positive_roots_m: d.m_roots.len(),
        extra_u1: extra,
        h1: d.h1.iter().map(|v| cartan_coords(d.g(), v)).collect(),
        k_u1: d.k_u1.iter().map(|v| cartan_coords(d.g(), v)).collect(),
        lambda: Vec::new(),
        eps: Vec::new(),
        note: None,
        checks: Vec::new(),
        passed: true,
    };
    if d.dim_m() % 2 == 1 {
        s.note = Some("dim m is odd: no complex structure; add --extra-u1 1 or move a u(1) into k with --k-u1".into());
    } else {
        let lambda = match &f.seed_lambda {
            Some(w) => coweight_lambda(&d, &split_per_ideal(&g, parse_rationals(w)?)?),
            None => default_lambda(&d),
        };
        let p = positivity_from_regular(&d, &lambda).map_err(|e| e.to_string())?;
        let pairing = solve_cartan_pairing(&d).map_err(|e| e.to_string())?;
        let cx = complex_structure(&d, &p, &pairing).map_err(|e| e.to_string())?;
        let r = verify_kt_full(&d, &p, &cx).map_err(|e| e.to_string())?;
        s.lambda = p.lambda.iter().map(|l| l.iter().map(Q::to_string).collect()).collect();
        s.eps = p.eps;
        s.passed = r.passed();
        s.checks = r.checks;
    }
    let mut text = format!(
        "G = {}, k = {}, dim k = {}, dim m = {} ({} positive roots in m, {} appended u(1))\n",
        s.algebra, s.k, s.dim_k, s.dim_m, s.positive_roots_m, s.extra_u1
    );
    text.push_str("h1 basis over (H_i, U_a):\n");
    for v in &s.h1 {
        text.push_str(&format!("  ({})\n", v.join(", ")));
    }
    match &s.note {
        Some(n) => text.push_str(&format!("{n}\n")),
        None => text.push_str(&checks_table(&s.checks)),
    }
    Ok(Outcome { passed: s.passed, data: s, text })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct USummary {
    /// Primitive integer coefficients over the H_i of the ideal.
    pub coeffs: Vec<String>,
    pub normalization_square: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub index: usize,
    pub ideal: usize,
    pub algebra: AlgebraType,
    /// Simple coefficients of the level's highest root in its ideal.
    pub psi: Vec<i64>,
    pub f_roots: usize,
    pub b: Vec<AlgebraType>,
    pub u: Option<USummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HktSummary {
    pub algebra: String,
    pub levels: Vec<LevelSummary>,
    pub frozen: Vec<AlgebraType>,
    pub k: String,
    pub k_u1: usize,
    pub extra_u1: usize,
    pub dim_m: usize,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

fn count_flag(f: &Flags) -> Result<usize, String> {
    match &f.k_u1 {
        None => Ok(0),
        Some(s) => s.trim().parse().map_err(|_| format!("--k-u1 takes a count here, got '{s}'")),
    }
}

fn hkt_options(f: &Flags) -> Result<HktOptions, String> {
    Ok(HktOptions { k_u1: count_flag(f)?, extra_u1: f.extra_u1, ..Default::default() })
}

fn level_summaries(g: &ReductiveAlgebra, ld: &LevelDecomposition) -> Vec<LevelSummary> {
    ld.levels
        .iter()
        .map(|l| LevelSummary {
            index: l.index,
            ideal: l.ideal,
            algebra: l.algebra,
            psi: g.ideal(l.ideal).roots.root(l.psi).simple_coeffs.clone(),
            f_roots: l.f.len(),
            b: l.b.clone(),
            u: l.u.as_ref().map(|u| USummary {
                coeffs: u.coeffs.iter().map(Q::to_string).collect(),
                normalization_square: u.normalization_square.to_string(),
            }),
        })
        .collect()
}

fn levels_text(levels: &[LevelSummary]) -> String {
    let rows: Vec<Vec<String>> = levels
        .iter()
        .map(|l| {
            let psi: Vec<String> = l.psi.iter().map(|c| c.to_string()).collect();
            let b: Vec<String> = l.b.iter().map(|t| t.to_string()).collect();
            let (u, n) = match &l.u {
                Some(u) => (format!("({})", u.coeffs.join(",")), u.normalization_square.clone()),
                None => ("-".into(), "-".into()),
            };
            vec![
                l.index.to_string(),
                l.algebra.to_string(),
                format!("({})", psi.join(",")),
                l.f_roots.to_string(),
                if b.is_empty() { "0".into() } else { b.join("+") },
                u,
                n,
            ]
        })
        .collect();
    table(&["level", "component", "ψ", "f roots", "b", "U", "norm²"], &rows)
}

pub fn decompose_hkt(f: &Flags) -> Result<Outcome<HktSummary>, String> {
    let (name, g) = algebra_flag(f)?;
    let ld = joyce_decompose(&g, f.stop_level);
    let opts = hkt_options(f)?;
    let (hs, _, r) = default_hkt(&g, &ld, &opts).map_err(|e| e.to_string())?;
    let s = HktSummary {
        algebra: name,
        levels: level_summaries(&g, &ld),
        frozen: ld.frozen_types(),
        k: descriptor(&ld.frozen_types(), opts.k_u1),
        k_u1: opts.k_u1,
        extra_u1: hs.extra_u1,
        dim_m: hs.dim_m(),
        passed: r.passed(),
        checks: r.checks,
    };
    let mut text = format!(
        "G = {}, {} levels, k = {}, appended u(1) = {}, dim m = {}\n",
        s.algebra,
        s.levels.len(),
        s.k,
        s.extra_u1,
        s.dim_m
    );
    text.push_str(&levels_text(&s.levels));
    text.push_str(&checks_table(&s.checks));
    Ok(Outcome { passed: s.passed, data: s, text })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub algebra: String,
    /// "kt" with a colouring, "hkt" otherwise.
    pub structure: String,
    pub checks: Vec<CheckReport>,
    /// Quotient found on the hyper-complex coset, if any.
    pub quotient: Option<String>,
    pub passed: bool,
}

fn scan_report(name: &str, checked: usize, failures: usize, witness: Option<String>) -> CheckReport {
    CheckReport { name: name.into(), checked, failures, witness }
}

/// Jacobi identity and constant identities per ideal, and ad-invariance.
fn algebra_layer(g: &ReductiveAlgebra) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (i, id) in g.ideals().iter().enumerate() {
        let tag = format!("{}#{i}", id.roots.algebra);
        let tab = structure_constants(&id.roots);
        let j = verify_jacobi(&id.roots, &tab);
        out.push(scan_report(&format!("jacobi[{tag}]"), j.triples_checked, j.failures, j.witness.map(|w| format!("{w:?}"))));
        let r = verify_identities(&id.roots, &tab);
        out.push(scan_report(&format!("identities[{tag}]"), r.pairs_checked, r.failures, r.witness.map(|w| format!("{w:?}"))));
    }
    let inv = verify_invariance(g, &InvariantMetric::standard(g));
    out.push(scan_report("ad-invariance", inv.triples_checked, inv.failures, inv.witness.map(|w| format!("{w:?}"))));
    out
}

pub fn verify(f: &Flags) -> Result<Outcome<VerifySummary>, String> {
    let (name, g) = algebra_flag(f)?;
    let mut checks = algebra_layer(&g);
    let mut quotient = None;
    let structure = if f.colour.is_some() {
        let kt = decompose_kt(f)?;
        checks.extend(kt.data.checks);
        "kt"
    } else {
        let ld = joyce_decompose(&g, f.stop_level);
        let (hs, triple, r) = default_hkt(&g, &ld, &hkt_options(f)?).map_err(|e| e.to_string())?;
        checks.extend(r.checks);
        match default_qkt(&hs, &triple) {
            Ok((q, qr)) => {
                let dh = dh_type_analysis(&q).map_err(|e| e.to_string())?;
                quotient = Some(qkt_descriptor(&q, dh.torsion_vanishes).0);
                checks.extend(qr.checks.into_iter().map(|c| CheckReport { name: format!("quotient:{}", c.name), ..c }));
            }
            Err(QktError::NotClosed(_)) => {}
            Err(e) => return Err(e.to_string()),
        }
        "hkt"
    };
    let s = VerifySummary { algebra: name, structure: structure.into(), passed: all_passed(&checks), checks, quotient };
    let mut text = format!("G = {}, {} structure\n", s.algebra, s.structure);
    if let Some(q) = &s.quotient {
        text.push_str(&format!("quotient: {q}\n"));
    }
    text.push_str(&checks_table(&s.checks));
    Ok(Outcome { passed: s.passed, data: s, text })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Summary {
    pub rows: Vec<Table2Row>,
    /// Closed-form entries with no enumerated row.
    pub unmatched: Vec<ClosedFormRow>,
}

pub fn table2(f: &Flags) -> Result<Outcome<Table2Summary>, String> {
    let mut rows = Vec::new();
    let mut unmatched = Vec::new();
    for t in simple_types(f, 8)? {
        let r = enumerate_table2(t);
        unmatched.extend(unmatched_closed_forms(t, &r));
        rows.extend(r);
    }
    let passed = unmatched.is_empty() && rows.iter().all(|r| r.verified);
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.g.to_string(),
                r.k.clone(),
                r.m.to_string(),
                r.d.to_string(),
                r.levels.to_string(),
                r.t.to_string(),
                r.family.clone().unwrap_or_else(|| "-".into()),
                if r.verified { "yes" } else { "no" }.into(),
            ]
        })
        .collect();
    let mut text = table(&["g", "k", "m", "d", "levels", "t", "family", "verified"], &cells);
    for c in &unmatched {
        text.push_str(&format!("no row for {} {}: k = {}, m = {}, d = {}\n", c.family, c.params, c.k, c.m, c.d));
    }
    Ok(Outcome { data: Table2Summary { rows, unmatched }, text, passed })
}

pub fn table3(f: &Flags) -> Result<Outcome<Vec<Table3Row>>, String> {
    if f.algebra.is_some() {
        return Err("table3 enumerates every algebra; use --max-rank and --dim".into());
    }
    let rows = enumerate_table3_with(f.max_rank.unwrap_or(8), f.dim.unwrap_or(8)).map_err(|e| e.to_string())?;
    let passed = rows.iter().all(|r| r.verified);
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.hkt.clone(),
                r.qkt.clone().unwrap_or_else(|| "-".into()),
                r.comment.clone(),
                r.quotient_dim.map_or("-".into(), |d| d.to_string()),
                r.torsion_vanishes.map_or("-".into(), |t| if t { "0" } else { "≠0" }.into()),
                if r.verified { "yes" } else { "no" }.into(),
            ]
        })
        .collect();
    let text = table(&["HKT", "QKT", "comment", "dim", "torsion", "verified"], &cells);
    Ok(Outcome { data: rows, text, passed })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QktSummary {
    pub algebra: String,
    pub hkt: String,
    pub hkt_dim: usize,
    pub qkt: Option<String>,
    pub comment: String,
    /// Why Φ(u(2)) does not give a quotient.
    pub reason: Option<String>,
    pub dim: Option<usize>,
    pub rotated: bool,
    /// Rational directions of K_0..K_3 in g as "c·label" terms, and their scales.
    pub generators: Vec<Vec<String>>,
    pub scales: Vec<String>,
    pub dh: Option<DhReport>,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

pub fn qkt(f: &Flags) -> Result<Outcome<QktSummary>, String> {
    let (name, g) = algebra_flag(f)?;
    let ld = joyce_decompose(&g, f.stop_level);
    let opts = hkt_options(f)?;
    let (hs, triple, hr) = default_hkt(&g, &ld, &opts).map_err(|e| e.to_string())?;
    let mut s = QktSummary {
        algebra: name,
        hkt: hkt_descriptor(&g, &ld, opts.k_u1),
        hkt_dim: hs.dim_m(),
        qkt: None,
        comment: "-".into(),
        reason: None,
        dim: None,
        rotated: false,
        generators: Vec::new(),
        scales: Vec::new(),
        dh: None,
        passed: hr.passed(),
        checks: hr.checks,
    };
    match default_qkt(&hs, &triple) {
        Ok((q, qr)) => {
            let dh = dh_type_analysis(&q).map_err(|e| e.to_string())?;
            let (n, c) = qkt_descriptor(&q, dh.torsion_vanishes);
            s.qkt = Some(n);
            s.comment = c;
            s.dim = Some(q.dim());
            s.rotated = qr.rotated;
            s.generators = q.embedding.generators.iter().map(|v| terms(&q.space.g, v)).collect();
            s.scales = q.embedding.scales.iter().map(|c| c.to_string()).collect();
            s.passed = qr.passed() && dh.four_zero;
            s.checks = qr.hkt.checks;
            s.checks.extend(qr.checks);
            s.dh = Some(dh);
        }
        Err(QktError::NotClosed(why)) => s.reason = Some(why),
        Err(e) => return Err(e.to_string()),
    }
    let mut text = format!("G/K = {} (dim {})\n", s.hkt, s.hkt_dim);
    match (&s.qkt, &s.reason) {
        (Some(n), _) => {
            text.push_str(&format!("quotient = {n} (dim {}), {}\n", s.dim.unwrap_or(0), s.comment));
            if let Some(dh) = &s.dh {
                text.push_str(&format!(
                    "torsion {}, dH {}\n",
                    if dh.torsion_vanishes { "vanishes" } else { "nonzero" },
                    if dh.dh_vanishes { "= 0" } else { "≠ 0" }
                ));
            }
        }
        (None, Some(why)) => text.push_str(&format!("no U(2) quotient: {why}\n")),
        (None, None) => {}
    }
    text.push_str(&checks_table(&s.checks));
    Ok(Outcome { passed: s.passed, data: s, text })
}

/// Nonzero terms of v as "c·label".
fn terms(g: &ReductiveAlgebra, v: &chevalley::SVec<Q>) -> Vec<String> {
    v.iter().map(|(i, c)| format!("{c}·{}", g.label(*i))).collect()
}
