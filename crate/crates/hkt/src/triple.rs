use num_traits::One;
use serde::{Deserialize, Serialize};

use chevalley::{InvariantMetric, ReductiveAlgebra, SVec, Surd, Q};
use tensor::{
    hermitian, invariance, jacobi_contraction, nijenhuis_report, square_report, torsion_form, torsion_type,
    CheckReport, CosetSpace, Endomorphism,
};

use crate::{verify_cond, verify_levels, HktError, LevelDecomposition};

/// Where the u(1) direction paired with a level comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// The U generator produced at the given level.
    Level(usize),
    /// An abelian basis element of g (including appended ones).
    Abelian(usize),
}

/// m-frame indices of one level: U, H_ψ, E⁺_ψ, E⁻_ψ and the pairs E±_β of f.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelBlock {
    pub level: usize,
    pub direction: Direction,
    pub u: usize,
    pub h: usize,
    pub ep: usize,
    pub em: usize,
    pub f: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Default)]
pub struct HktOptions {
    /// Number of pool directions taken into k (U generators first, then the
    /// abelian ideal of g).
    pub k_u1: usize,
    /// Appended u(1) count; computed when None.
    pub extra_u1: Option<usize>,
    /// Metric scale per simple ideal; all ones when empty.
    pub scales: Vec<Q>,
    /// Metric constant per abelian basis element of g; all ones when empty.
    pub abelian_c: Vec<Q>,
}

/// g ×^m u(1) = m ⊕ k for a level decomposition, with the m-frame laid out
/// by level and then by flat blocks of four abelian directions.
#[derive(Clone, Debug)]
pub struct HktSpace {
    pub space: CosetSpace,
    pub decomposition: LevelDecomposition,
    pub extra_u1: usize,
    pub k_u1: Vec<SVec<Q>>,
    pub blocks: Vec<LevelBlock>,
    pub flat: Vec<[usize; 4]>,
}

impl HktSpace {
    pub fn dim_m(&self) -> usize {
        self.space.dim_m()
    }

    pub fn g(&self) -> &ReductiveAlgebra {
        &self.space.g
    }
}

/// Minimal appended count making the free directions cover the levels with a
/// multiple of four left over.
fn minimal_extra(available: usize, levels: usize) -> usize {
    if available < levels {
        levels - available
    } else {
        (4 - (available - levels) % 4) % 4
    }
}

pub fn hkt_coset(g: &ReductiveAlgebra, ld: &LevelDecomposition, opts: &HktOptions) -> Result<HktSpace, HktError> {
    let l = ld.levels.len();
    let a = g.abelian_dim();
    let us = ld.u_gens();
    let pool_base = us.len() + a;
    if opts.k_u1 > pool_base {
        return Err(HktError::IsotropyCount { requested: opts.k_u1, available: pool_base });
    }
    let available = pool_base - opts.k_u1;
    let extra = opts.extra_u1.unwrap_or_else(|| minimal_extra(available, l));
    if available + extra < l || (available + extra - l) % 4 != 0 {
        return Err(HktError::LevelCountMismatch { levels: l, directions: available + extra });
    }
    let full = g.with_extra_abelian(extra);
    let n_ideals = g.ideals().len();
    let scales: Vec<Q> = if opts.scales.is_empty() { vec![Q::one(); n_ideals] } else { opts.scales.clone() };
    let mut c: Vec<Q> = if opts.abelian_c.is_empty() { vec![Q::one(); a] } else { opts.abelian_c.clone() };
    c.resize(a + extra, Q::one());
    let probe = InvariantMetric::new(&full, &scales, &c)?;

    let mut pool: Vec<Direction> = us.iter().map(|(k, _)| Direction::Level(*k)).collect();
    pool.extend((0..a + extra).map(Direction::Abelian));
    let (in_k, free) = pool.split_at(opts.k_u1);
    let mut free: Vec<Direction> = free.to_vec();
    let mut assigned: Vec<Option<Direction>> = vec![None; l];
    for (k, slot) in assigned.iter_mut().enumerate() {
        if let Some(p) = free.iter().position(|d| *d == Direction::Level(k)) {
            *slot = Some(free.remove(p));
        }
    }
    for slot in assigned.iter_mut().filter(|s| s.is_none()) {
        *slot = Some(free.remove(0));
    }
    let assigned: Vec<Direction> = assigned.into_iter().map(|d| d.expect("assigned")).collect();
    // appended directions paired with a level get the norm of its H_ψ
    for (k, d) in assigned.iter().enumerate() {
        if let Direction::Abelian(j) = *d {
            if j >= a {
                let lv = &ld.levels[k];
                let h = full.coroot_element(lv.ideal, lv.psi);
                c[j] = probe.inner(&h, &h);
            }
        }
    }
    let metric = InvariantMetric::new(&full, &scales, &c)?;
    let vector = |d: &Direction| match *d {
        Direction::Level(k) => ld.levels[k].u.as_ref().expect("level has U").element(&full),
        Direction::Abelian(j) => SVec::unit(full.u(j)),
    };

    let mut k_span = Vec::new();
    for fc in &ld.frozen {
        for &r in &fc.positive {
            k_span.push(SVec::unit(full.eplus(fc.ideal, r)));
            k_span.push(SVec::unit(full.eminus(fc.ideal, r)));
        }
        for &s in &fc.simple {
            k_span.push(full.coroot_element(fc.ideal, s));
        }
    }
    let k_u1: Vec<SVec<Q>> = in_k.iter().map(vector).collect();
    k_span.extend(k_u1.iter().cloned());

    let mut m_first = Vec::new();
    let mut blocks = Vec::new();
    for (k, lv) in ld.levels.iter().enumerate() {
        let base = m_first.len();
        m_first.push(vector(&assigned[k]));
        m_first.push(full.coroot_element(lv.ideal, lv.psi));
        m_first.push(SVec::unit(full.eplus(lv.ideal, lv.psi)));
        m_first.push(SVec::unit(full.eminus(lv.ideal, lv.psi)));
        let mut f = Vec::new();
        for &b in &lv.f {
            f.push((m_first.len(), m_first.len() + 1));
            m_first.push(SVec::unit(full.eplus(lv.ideal, b)));
            m_first.push(SVec::unit(full.eminus(lv.ideal, b)));
        }
        blocks.push(LevelBlock {
            level: k,
            direction: assigned[k],
            u: base,
            h: base + 1,
            ep: base + 2,
            em: base + 3,
            f,
        });
    }
    let mut flat = Vec::new();
    for chunk in free.chunks(4) {
        let base = m_first.len();
        m_first.extend(chunk.iter().map(vector));
        flat.push([base, base + 1, base + 2, base + 3]);
    }
    let space = CosetSpace::new(full, metric, &k_span, &m_first);
    if space.dim_m() != m_first.len() {
        return Err(HktError::Partition { expected: m_first.len(), found: space.dim_m() });
    }
    Ok(HktSpace { space, decomposition: ld.clone(), extra_u1: extra, k_u1, blocks, flat })
}

/// Signs σ_r in I_r(X) = σ_r [X, φ(Y_r)] on f, for r = 1, 2.
///
/// With the d-block action fixed as in `hypercomplex_triple`, only σ = (−1, −1),
/// i.e. I_r = ad φ(Y_r) on f, is integrable; the others flip one structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FSigns(pub i8, pub i8);

impl Default for FSigns {
    fn default() -> Self {
        FSigns(-1, -1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperComplexTriple {
    pub i: [Endomorphism; 3],
    pub signs: FSigns,
    /// Orthogonal change of basis Ũ_k = Σ_j O_kj (normalized direction j).
    pub rotation: Option<Vec<Vec<Surd>>>,
}

fn put(cols: &mut [SVec<Surd>], from: usize, to: usize, c: Surd) {
    cols[from].add_at(to, c);
}

/// ±√(n_from/n_to): a unit map between orthonormalized frame vectors.
fn unit(norms: &[Q], from: usize, to: usize, sign: i128) -> Surd {
    Surd::sqrt(norms[from] / norms[to]).scale(Q::from_integer(sign))
}

/// I₁, I₂ on d_k ⊕ u(1)_k and on the flat blocks (the standard quaternion
/// action on orthonormal vectors), on f_k from the brackets with H_ψ and
/// E⁺_ψ, and I₃ = I₁I₂.
pub fn hypercomplex_triple(
    hs: &HktSpace,
    signs: FSigns,
    rotation: Option<Vec<Vec<Surd>>>,
) -> Result<HyperComplexTriple, HktError> {
    let n = hs.dim_m();
    let l = hs.blocks.len();
    let norms = hs.space.m_norms();
    if let Some(o) = &rotation {
        if o.len() != l || o.iter().any(|r| r.len() != l) {
            return Err(HktError::RotationShape(l));
        }
    }
    let o = |k: usize, j: usize| -> Surd {
        match &rotation {
            Some(m) => m[k][j].clone(),
            None if k == j => Surd::one(),
            None => Surd::zero(),
        }
    };
    let mut c1 = vec![SVec::new(); n];
    let mut c2 = vec![SVec::new(); n];
    for bk in &hs.blocks {
        for bj in &hs.blocks {
            let okj = o(bk.level, bj.level);
            if okj.is_zero() {
                continue;
            }
            // Ũ_k = Σ_j √(n_H_k/n_p_j) O_kj p_j, and p_j = Σ_k √(n_p_j/n_H_k) O_kj Ũ_k
            let up = &okj * &Surd::sqrt(norms[bk.h] / norms[bj.u]);
            let down = &okj * &Surd::sqrt(norms[bj.u] / norms[bk.h]);
            put(&mut c1, bj.u, bk.h, down.clone());
            put(&mut c2, bj.u, bk.ep, down);
            put(&mut c1, bk.h, bj.u, -up.clone());
            put(&mut c2, bk.ep, bj.u, -up);
        }
        put(&mut c1, bk.ep, bk.em, unit(norms, bk.ep, bk.em, 1));
        put(&mut c1, bk.em, bk.ep, unit(norms, bk.em, bk.ep, -1));
        put(&mut c2, bk.em, bk.h, unit(norms, bk.em, bk.h, 1));
        put(&mut c2, bk.h, bk.em, unit(norms, bk.h, bk.em, -1));
        for &(p, q) in &bk.f {
            for x in [p, q] {
                c1[x] = hs.space.bracket_m(x, bk.h).scaled_q(&Q::from_integer(signs.0 as i128)).to_surd();
                c2[x] = hs.space.bracket_m(x, bk.ep).scaled_q(&Q::from_integer(signs.1 as i128)).to_surd();
            }
        }
    }
    for &[a, b, c, d] in &hs.flat {
        put(&mut c1, a, b, unit(norms, a, b, 1));
        put(&mut c1, b, a, unit(norms, b, a, -1));
        put(&mut c1, c, d, unit(norms, c, d, 1));
        put(&mut c1, d, c, unit(norms, d, c, -1));
        put(&mut c2, a, c, unit(norms, a, c, 1));
        put(&mut c2, c, a, unit(norms, c, a, -1));
        put(&mut c2, b, d, unit(norms, b, d, -1));
        put(&mut c2, d, b, unit(norms, d, b, 1));
    }
    let i1 = Endomorphism::from_columns(c1);
    let i2 = Endomorphism::from_columns(c2);
    let i3 = i1.compose(&i2);
    Ok(HyperComplexTriple { i: [i1, i2, i3], signs, rotation })
}

/// I_r I_s = −δ_rs + ε_rst I_t as exact matrix identities.
pub fn quaternion_report(name: &str, t: &[Endomorphism; 3]) -> CheckReport {
    let mut rep = CheckReport::new(name);
    let id = Endomorphism::identity(t[0].dim());
    for r in 0..3 {
        for s in 0..3 {
            rep.checked += 1;
            let lhs = t[r].compose(&t[s]);
            let rhs = if r == s {
                id.neg()
            } else {
                let k = 3 - r - s;
                let even = (s + 3 - r) % 3 == 1;
                if even {
                    t[k].clone()
                } else {
                    t[k].neg()
                }
            };
            if !lhs.minus(&rhs).is_zero() {
                rep.fail(|| format!("I{} I{}", r + 1, s + 1));
            }
        }
    }
    rep
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HktReport {
    pub dim_m: usize,
    pub levels: usize,
    pub extra_u1: usize,
    pub checks: Vec<CheckReport>,
}

impl HktReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.checks.iter().find(|c| !c.passed())
    }
}

/// Quaternion relations, then for each I_r: square, invariance, Nijenhuis,
/// hermiticity and torsion type; plus the level data and the Jacobi
/// contraction.
pub fn verify_hkt(hs: &HktSpace, triple: &HyperComplexTriple) -> Result<HktReport, HktError> {
    let mut checks = Vec::new();
    let mut dim = CheckReport::new("dimension");
    dim.checked = 1;
    if hs.dim_m() % 4 != 0 {
        dim.fail(|| format!("dim m = {}", hs.dim_m()));
    }
    checks.push(dim);
    let mut red = CheckReport::new("reductive");
    red.checked = 1;
    if let Some((a, j)) = hs.space.reductive_witness() {
        red.fail(|| format!("[k{a}, m{j}] leaves m"));
    }
    checks.push(red);
    let g_base = base_algebra(hs);
    checks.push(verify_cond(&g_base, &hs.decomposition));
    checks.push(verify_levels(&g_base, &hs.decomposition));
    checks.push(quaternion_report("quaternion", &triple.i));
    let h = torsion_form(&hs.space)?.to_surd();
    for (r, cx) in triple.i.iter().enumerate() {
        let tag = |c: CheckReport| CheckReport { name: format!("{}[I{}]", c.name, r + 1), ..c };
        let sq = square_report(cx);
        let ok = sq.passed();
        checks.push(tag(sq));
        checks.push(tag(invariance(&hs.space, cx)?));
        if ok {
            checks.push(tag(nijenhuis_report(&hs.space, cx)?));
            checks.push(tag(hermitian(&hs.space, cx)?));
            checks.push(tag(torsion_type(&h, cx)?));
        }
    }
    checks.push(jacobi_contraction(&hs.space));
    Ok(HktReport { dim_m: hs.dim_m(), levels: hs.blocks.len(), extra_u1: hs.extra_u1, checks })
}

/// g without the appended abelian directions.
fn base_algebra(hs: &HktSpace) -> ReductiveAlgebra {
    let g = hs.g();
    let a = g.abelian_dim() - hs.extra_u1;
    let types: Vec<_> = g.ideals().iter().map(|id| id.roots.algebra).collect();
    ReductiveAlgebra::new(&types, a)
}

/// Decompose, build the coset and the default triple, verify.
pub fn default_hkt(g: &ReductiveAlgebra, ld: &LevelDecomposition, opts: &HktOptions) -> Result<(HktSpace, HyperComplexTriple, HktReport), HktError> {
    let hs = hkt_coset(g, ld, opts)?;
    let t = hypercomplex_triple(&hs, FSigns::default(), None)?;
    let r = verify_hkt(&hs, &t)?;
    Ok((hs, t, r))
}
