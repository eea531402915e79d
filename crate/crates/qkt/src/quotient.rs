use num_traits::Zero;
use serde::{Deserialize, Serialize};

use chevalley::{SVec, Surd, Q};
use hkt::{quaternion_report, verify_hkt, HktReport, HktSpace, HyperComplexTriple};
use tensor::{
    dh_form, hermitian, jacobi_contraction, real_type_part, square_report, torsion_form, torsion_type, AltForm,
    CheckReport, CosetSpace, Endomorphism,
};

use crate::{QktError, U2Embedding};

/// g = m̃ ⊕ (k ⊕ Φ(u(2))) with the restricted triple J_r and the action f_r
/// of the sp(1) generators on m̃.
#[derive(Clone, Debug)]
pub struct QktDecomposition {
    pub hkt: HktSpace,
    /// The hyper-complex triple on m (rotated if U needed it).
    pub triple: HyperComplexTriple,
    pub embedding: U2Embedding,
    pub space: CosetSpace,
    pub j: [Endomorphism; 3],
    pub f: [Endomorphism; 3],
}

impl QktDecomposition {
    pub fn dim(&self) -> usize {
        self.space.dim_m()
    }
}

/// ε_{rs}{}^t as (t, sign) for r ≠ s.
fn epsilon(r: usize, s: usize) -> (usize, i128) {
    (3 - r - s, if (s + 3 - r) % 3 == 1 { 1 } else { -1 })
}

pub fn qkt_decompose(hs: &HktSpace, triple: &HyperComplexTriple, emb: &U2Embedding) -> Result<QktDecomposition, QktError> {
    let metric = hs.space.metric.clone();
    let mut k_span: Vec<SVec<Q>> = hs.space.k.vectors().to_vec();
    k_span.extend(emb.generators.iter().cloned());
    let space = CosetSpace::new(hs.g().clone(), metric, &k_span, hs.space.m.vectors());
    if space.dim_m() + 4 != hs.dim_m() {
        return Err(QktError::NotClosed(format!("complement has dimension {}", space.dim_m())));
    }
    let n = space.dim_m();
    let old: Vec<SVec<Surd>> = (0..n).map(|i| hs.space.m.coords(&space.metric, space.m.vector(i)).to_surd()).collect();
    let mut j = Vec::with_capacity(3);
    for (r, cx) in triple.i.iter().enumerate() {
        let mut cols = Vec::with_capacity(n);
        for (i, x) in old.iter().enumerate() {
            let img = hs.space.m.embed(&cx.apply(x));
            if !space.k.coords(&space.metric, &img).is_zero() {
                return Err(QktError::NotInvariant { r: r + 1, index: i });
            }
            cols.push(space.m.coords(&space.metric, &img));
        }
        j.push(Endomorphism::from_columns(cols));
    }
    let f: Vec<Endomorphism> = (1..4)
        .map(|a| {
            let y = &emb.generators[a];
            let cols: Vec<SVec<Q>> =
                (0..n).map(|i| space.m.coords(&space.metric, &space.g.bracket(y, space.m.vector(i)))).collect();
            Endomorphism::from_rational_columns(&cols).scaled(&emb.scales[a])
        })
        .collect();
    Ok(QktDecomposition {
        hkt: hs.clone(),
        triple: triple.clone(),
        embedding: emb.clone(),
        space,
        j: j.try_into().unwrap(),
        f: f.try_into().unwrap(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QktReport {
    pub dim: usize,
    pub levels: usize,
    pub rotated: bool,
    /// Verification of the underlying hyper-complex coset with the triple used.
    pub hkt: HktReport,
    pub checks: Vec<CheckReport>,
}

impl QktReport {
    pub fn passed(&self) -> bool {
        self.hkt.passed() && self.checks.iter().all(|c| c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.hkt.first_failure().or_else(|| self.checks.iter().find(|c| !c.passed()))
    }
}

/// B in m-coordinates of the hyper-complex coset.
fn inner_m(hs: &HktSpace, x: &SVec<Surd>, y: &SVec<Surd>) -> Surd {
    let norms = hs.space.m_norms();
    let mut s = Surd::zero();
    for (i, a) in x.iter() {
        let b = y.get(*i);
        if !b.is_zero() {
            s += &(a * &b).scale(norms[*i]);
        }
    }
    s
}

/// K_a together with M_a^n = Σ_{q≤n} T_a^q − (Σ_{q≤n} b_q / b_{n+1}) T_a^{n+1},
/// b_q = B(T_a^q, T_a^q). With equal b_q this is b·(Σ_{q≤n} T_a^q/b − n T_a^{n+1}/b).
pub fn u2_basis(emb: &U2Embedding, hs: &HktSpace) -> Vec<(String, SVec<Surd>)> {
    let mut out: Vec<(String, SVec<Surd>)> = (0..4).map(|a| (format!("K{a}"), emb.k[a].clone())).collect();
    let p = &emb.parts;
    for a in 0..4 {
        let b: Vec<Surd> = p.iter().map(|t| inner_m(hs, &t[a], &t[a])).collect();
        let mut head = SVec::new();
        let mut weight = Surd::zero();
        for n in 1..p.len() {
            head = head.plus(&p[n - 1][a]);
            weight += &b[n - 1];
            let c = weight.clone() / b[n].clone();
            out.push((format!("M{a}^{n}"), head.minus(&p[n][a].scaled(&c))));
        }
    }
    out
}

fn orthogonal_basis(q: &QktDecomposition) -> CheckReport {
    let basis = u2_basis(&q.embedding, &q.hkt);
    let mut r = CheckReport::new("orthogonal_basis");
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            r.checked += 1;
            let b = inner_m(&q.hkt, &basis[i].1, &basis[j].1);
            if !b.is_zero() {
                r.fail(|| format!("B({}, {}) = {b}", basis[i].0, basis[j].0));
            }
        }
    }
    r
}

fn closure(q: &QktDecomposition) -> CheckReport {
    let mut r = CheckReport::new("closure");
    let g = &q.space.g;
    let gens = &q.embedding.generators;
    for a in 0..4 {
        for b in a + 1..4 {
            r.checked += 1;
            let br = g.bracket(&gens[a], &gens[b]);
            if !q.space.m.coords(&q.space.metric, &br).is_zero() {
                r.fail(|| format!("[K{a}, K{b}] has a complement component"));
            }
        }
    }
    for a in 0..4 {
        for z in 0..q.hkt.space.dim_k() {
            r.checked += 1;
            if !g.bracket(&gens[a], q.hkt.space.k.vector(z)).is_zero() {
                r.fail(|| format!("[K{a}, k{z}] != 0"));
            }
        }
    }
    r
}

/// The torsion three-form of the quotient equals the hyper-complex one on
/// complement vectors.
fn torsion_restriction(q: &QktDecomposition, h: &AltForm<Q>) -> CheckReport {
    let n = q.dim();
    let hs = &q.hkt.space;
    let old: Vec<SVec<Q>> = (0..n).map(|i| hs.m.coords(&hs.metric, q.space.m.vector(i))).collect();
    let norms = hs.m_norms();
    let mut r = CheckReport::new("torsion_restriction");
    for a in 0..n {
        for b in a + 1..n {
            let br = hs.bracket_m_vec(&old[a], &old[b]);
            for (c, z) in old.iter().enumerate().skip(b + 1) {
                r.checked += 1;
                let mut v = Q::zero();
                for (i, x) in br.iter() {
                    v -= *x * z.get(*i) * norms[*i];
                }
                if v != h.get(&[a, b, c]) {
                    r.fail(|| format!("H({a},{b},{c}) = {} on the quotient, {v} upstairs", h.get(&[a, b, c])));
                }
            }
        }
    }
    r
}

/// [f_r, f_s] = 2ε f_t, [f_r, J_s] = 2ε J_t and [f_r, J_r] = 0. When the
/// sp(1) part is abelian (flat quotients) f_r must vanish instead.
fn fj(q: &QktDecomposition) -> CheckReport {
    let two = Surd::from_int(2);
    if q.embedding.abelian {
        let mut r = CheckReport::new("fj[abelian]");
        for (a, f) in q.f.iter().enumerate() {
            r.checked += 1;
            if !f.is_zero() {
                r.fail(|| format!("f{} != 0 with an abelian sp(1) part", a + 1));
            }
        }
        return r;
    }
    let mut rep = CheckReport::new("fj");
    for r in 0..3 {
        for s in 0..3 {
            rep.checked += 2;
            let fjc = q.f[r].commutator(&q.j[s]);
            if r == s {
                if !fjc.is_zero() {
                    rep.fail(|| format!("[f{0}, J{0}] != 0", r + 1));
                }
                continue;
            }
            let (t, e) = epsilon(r, s);
            let want_j = q.j[t].scaled(&two.scale(Q::from_integer(e)));
            if !fjc.minus(&want_j).is_zero() {
                rep.fail(|| format!("[f{}, J{}] != 2ε J{}", r + 1, s + 1, t + 1));
            }
            let want_f = q.f[t].scaled(&two.scale(Q::from_integer(e)));
            if !q.f[r].commutator(&q.f[s]).minus(&want_f).is_zero() {
                rep.fail(|| format!("[f{}, f{}] != 2ε f{}", r + 1, s + 1, t + 1));
            }
        }
    }
    rep
}

/// Underlying hyper-complex checks, closure of Φ(u(2)), the orthogonal
/// basis, then for J_r: quaternion relations, squares, tri-hermiticity and
/// torsion type; the sp(1) relations, torsion restriction and Jacobi.
pub fn verify_qkt(q: &QktDecomposition) -> Result<QktReport, QktError> {
    let hkt = verify_hkt(&q.hkt, &q.triple)?;
    let mut checks = vec![closure(q), orthogonal_basis(q)];
    let mut dim = CheckReport::new("dimension");
    dim.checked = 1;
    if q.dim() + 4 != q.hkt.dim_m() || q.dim() % 4 != 0 {
        dim.fail(|| format!("dim m̃ = {}", q.dim()));
    }
    checks.push(dim);
    checks.push(quaternion_report("quaternion[J]", &q.j));
    let h = torsion_form(&q.space)?;
    let hs = h.to_surd();
    for (r, cx) in q.j.iter().enumerate() {
        let tag = |c: CheckReport| CheckReport { name: format!("{}[J{}]", c.name, r + 1), ..c };
        let sq = square_report(cx);
        let ok = sq.passed();
        checks.push(tag(sq));
        if ok {
            checks.push(tag(hermitian(&q.space, cx)?));
            checks.push(tag(torsion_type(&hs, cx)?));
        }
    }
    checks.push(fj(q));
    checks.push(torsion_restriction(q, &h));
    checks.push(jacobi_contraction(&q.space));
    Ok(QktReport { dim: q.dim(), levels: q.embedding.levels_used, rotated: q.embedding.rotated, hkt, checks })
}

/// Type data of dH on the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DhReport {
    pub dim: usize,
    pub torsion_vanishes: bool,
    pub dh_vanishes: bool,
    /// (4,0)+(0,4) part with respect to J₁ is zero.
    pub four_zero: bool,
    /// (3,1)+(1,3) part with respect to J₁ is zero.
    pub three_one_zero: bool,
    /// (dH)^{(3,1)} equals the (3,1) part of the sp(1) term
    /// −(3/2) Σ_r f_r ∧ f_r / B(K_r, K_r), i.e. dH summed over Φ(sp(1)) only.
    pub three_one_matches: bool,
    /// c_r with f_r = c_r J_r, if every f_r is a multiple of J_r.
    pub f_over_j: Option<[Surd; 3]>,
    /// dH is of type (2,2) with respect to J₁, J₂ and J₃.
    pub two_two_all: bool,
}

impl DhReport {
    /// Above dimension four a (2,2) form dH forces f_r ∝ J_r.
    pub fn dichotomy_holds(&self) -> bool {
        self.dim <= 4 || !self.two_two_all || self.f_over_j.is_some()
    }
}

/// ω(X, Y) = B(f X, Y) in frame coordinates.
fn two_form(space: &CosetSpace, f: &Endomorphism) -> AltForm<Surd> {
    let norms = space.m_norms();
    let mut w = AltForm::new(2);
    for i in 0..f.dim() {
        for (j, c) in f.col(i).iter() {
            if i < *j {
                w.add_at(&[i, *j], c.scale(norms[*j]));
            }
        }
    }
    w
}

/// Σ_x c_x ω_x ∧ ω_x with the normalization of the tensor crate's paired squares.
fn wedge_squares(forms: &[AltForm<Surd>], weights: &[Surd]) -> AltForm<Surd> {
    let mut out = AltForm::new(4);
    for (w, c) in forms.iter().zip(weights) {
        let list: Vec<(Vec<usize>, Surd)> = w.entries();
        for a in 0..list.len() {
            let (p, u) = &list[a];
            for (q, v) in &list[a + 1..] {
                if q.iter().any(|x| p.contains(x)) {
                    continue;
                }
                out.add_at(&[p[0], p[1], q[0], q[1]], (&(u * v) * c).scale(Q::new(1, 3)));
            }
        }
    }
    out
}

fn endo_ratio(f: &Endomorphism, j: &Endomorphism) -> Option<Surd> {
    let (col, row) = (0..j.dim()).find_map(|c| j.col(c).iter().next().map(|(r, _)| (c, *r)))?;
    let c = f.entry(row, col) / j.entry(row, col);
    f.minus(&j.scaled(&c)).is_zero().then_some(c)
}

pub fn dh_type_analysis(q: &QktDecomposition) -> Result<DhReport, QktError> {
    let dh = dh_form(&q.space).to_surd();
    let torsion_vanishes = torsion_form(&q.space)?.is_zero();
    let j1 = &q.j[0];
    let p40 = real_type_part(&dh, j1, 4);
    let p31 = real_type_part(&dh, j1, 3);
    let ff: Vec<AltForm<Surd>> = q.f.iter().map(|f| two_form(&q.space, f)).collect();
    let weights: Vec<Surd> = (1..4)
        .map(|a| {
            let e = &q.embedding;
            let n = (&e.scales[a] * &e.scales[a]).scale(q.space.metric.inner(&e.generators[a], &e.generators[a]));
            Surd::from_q(Q::new(-3, 2)) / n
        })
        .collect();
    let s31 = real_type_part(&wedge_squares(&ff, &weights), j1, 3);
    let two_two_all = q.j.iter().all(|j| real_type_part(&dh, j, 4).is_zero() && real_type_part(&dh, j, 3).is_zero());
    let ratios: Option<Vec<Surd>> = q.f.iter().zip(&q.j).map(|(f, j)| endo_ratio(f, j)).collect();
    Ok(DhReport {
        dim: q.dim(),
        torsion_vanishes,
        dh_vanishes: dh.is_zero(),
        four_zero: p40.is_zero(),
        three_one_zero: p31.is_zero(),
        three_one_matches: p31.minus(&s31).is_zero(),
        f_over_j: ratios.map(|v| v.try_into().unwrap()),
        two_two_all,
    })
}

/// Embed, decompose and verify in one step.
pub fn default_qkt(hs: &HktSpace, triple: &HyperComplexTriple) -> Result<(QktDecomposition, QktReport), QktError> {
    let (t, emb) = crate::embed_u2(hs, triple, crate::DEFAULT_HEIGHT)?;
    let q = qkt_decompose(hs, &t, &emb)?;
    let r = verify_qkt(&q)?;
    Ok((q, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levi_civita_signs() {
        assert_eq!(epsilon(0, 1), (2, 1));
        assert_eq!(epsilon(1, 0), (2, -1));
        assert_eq!(epsilon(1, 2), (0, 1));
        assert_eq!(epsilon(0, 2), (1, -1));
    }
}
