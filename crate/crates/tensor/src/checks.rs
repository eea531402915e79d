//! Structure checks on a coset space: integrability, hermiticity,
//! invariance, torsion and its exterior derivative.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use chevalley::{SVec, Surd, Q};

use crate::{real_type_part, AltForm, CosetSpace, Endomorphism, TensorError};

/// Outcome of an exhaustive scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), checked: 0, failures: 0, witness: None }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn fail(&mut self, witness: impl FnOnce() -> String) {
        if self.witness.is_none() {
            self.witness = Some(witness());
        }
        self.failures += 1;
    }
}

fn require_complex(cx: &Endomorphism) -> Result<(), TensorError> {
    match cx.square_witness() {
        Some(j) => Err(TensorError::NotAlmostComplex(j)),
        None => Ok(()),
    }
}

fn check_dim(space: &CosetSpace, cx: &Endomorphism) -> Result<(), TensorError> {
    if cx.dim() != space.dim_m() {
        return Err(TensorError::DimensionMismatch { expected: space.dim_m(), found: cx.dim() });
    }
    Ok(())
}

/// Nonzero values N(m_i, m_j), i < j, of
/// [IX,IY]_m − [X,Y]_m − I[IX,Y]_m − I[X,IY]_m.
pub fn nijenhuis(space: &CosetSpace, cx: &Endomorphism) -> Result<BTreeMap<(usize, usize), SVec<Surd>>, TensorError> {
    check_dim(space, cx)?;
    require_complex(cx)?;
    let n = space.dim_m();
    let mut out = BTreeMap::new();
    for i in 0..n {
        let x: SVec<Surd> = SVec::unit(i);
        let ix = cx.col(i);
        for j in i + 1..n {
            let y: SVec<Surd> = SVec::unit(j);
            let iy = cx.col(j);
            let mut v = space.bracket_m_vec(ix, iy);
            v = v.minus(&space.bracket_m(i, j).to_surd());
            let inner = space.bracket_m_vec(ix, &y).plus(&space.bracket_m_vec(&x, iy));
            v = v.minus(&cx.apply(&inner));
            if !v.is_zero() {
                out.insert((i, j), v);
            }
        }
    }
    Ok(out)
}

pub fn nijenhuis_report(space: &CosetSpace, cx: &Endomorphism) -> Result<CheckReport, TensorError> {
    let t = nijenhuis(space, cx)?;
    let n = space.dim_m();
    let mut r = CheckReport::new("nijenhuis");
    r.checked = n * n.saturating_sub(1) / 2;
    r.failures = t.len();
    r.witness = t.iter().next().map(|((i, j), v)| format!("N(m{i}, m{j}) = {v:?}"));
    Ok(r)
}

pub fn square_report(cx: &Endomorphism) -> CheckReport {
    let mut r = CheckReport::new("square");
    for j in 0..cx.dim() {
        r.checked += 1;
        let mut v = cx.apply(cx.col(j));
        v.add_at(j, Surd::one());
        if !v.is_zero() {
            r.fail(|| format!("I^2 m{j} != -m{j}"));
        }
    }
    r
}

/// B(I m_i, I m_j) = B(m_i, m_j) over all pairs.
pub fn hermitian(space: &CosetSpace, cx: &Endomorphism) -> Result<CheckReport, TensorError> {
    check_dim(space, cx)?;
    require_complex(cx)?;
    let norms = space.m_norms();
    let n = space.dim_m();
    let mut r = CheckReport::new("hermitian");
    let lowered: Vec<SVec<Surd>> = (0..n)
        .map(|j| SVec::from_pairs(cx.col(j).iter().map(|(a, c)| (*a, c.scale(norms[*a])))))
        .collect();
    for i in 0..n {
        for j in i..n {
            r.checked += 1;
            let lhs = lowered[i].dot(cx.col(j));
            let rhs = if i == j { Surd::from_q(norms[i]) } else { Surd::zero() };
            if lhs != rhs {
                r.fail(|| format!("B(I m{i}, I m{j}) = {lhs}, expected {rhs}"));
            }
        }
    }
    Ok(r)
}

/// [ad z, I] = 0 on m for every z in the isotropy frame.
pub fn invariance(space: &CosetSpace, cx: &Endomorphism) -> Result<CheckReport, TensorError> {
    check_dim(space, cx)?;
    let mut r = CheckReport::new("invariance");
    for a in 0..space.dim_k() {
        r.checked += 1;
        let ad = Endomorphism::from_rational_columns(&space.ad_k_on_m(a));
        let c = ad.commutator(cx);
        if !c.is_zero() {
            let j = (0..c.dim()).find(|&j| !c.col(j).is_zero()).unwrap_or(0);
            r.fail(|| format!("[ad k{a}, I] m{j} != 0"));
        }
    }
    Ok(r)
}

/// H_{lmn} = −B([m_l, m_m], m_n), checked for total antisymmetry.
pub fn torsion_form(space: &CosetSpace) -> Result<AltForm<Q>, TensorError> {
    let n = space.dim_m();
    let norms = space.m_norms();
    let mut h = AltForm::new(3);
    for l in 0..n {
        for m in l + 1..n {
            for (o, c) in space.bracket_m(l, m).iter() {
                if *o > m {
                    h.add_at(&[l, m, *o], -*c * norms[*o]);
                }
            }
        }
    }
    for l in 0..n {
        for m in 0..n {
            for (o, c) in space.bracket_m(l, m).iter() {
                if h.get(&[l, m, *o]) != -*c * norms[*o] {
                    return Err(TensorError::NotAntisymmetric(vec![l, m, *o]));
                }
            }
        }
    }
    Ok(h)
}

/// Unweighted alternation of Σ_x w_x F^x_{[lm} F^x_{no]} with F^x_{lm} from
/// `pairs[x]` (entries (l, m, value) with l < m), divided by 4!.
fn paired_square(pairs: &[Vec<(usize, usize, Q)>], weights: &[Q]) -> AltForm<Q> {
    let mut out = AltForm::new(4);
    for (x, list) in pairs.iter().enumerate() {
        for a in 0..list.len() {
            let (i, j, u) = list[a];
            for &(k, l, v) in &list[a + 1..] {
                if k == i || k == j || l == i || l == j {
                    continue;
                }
                out.add_at(&[i, j, k, l], weights[x] * u * v / Q::from_integer(3));
            }
        }
    }
    out
}

fn k_pairs(space: &CosetSpace) -> Vec<Vec<(usize, usize, Q)>> {
    let mut pairs = vec![Vec::new(); space.dim_k()];
    for l in 0..space.dim_m() {
        for m in l + 1..space.dim_m() {
            for (a, c) in space.bracket_k(l, m).iter() {
                pairs[*a].push((l, m, *c));
            }
        }
    }
    pairs
}

fn m_pairs(space: &CosetSpace) -> Vec<Vec<(usize, usize, Q)>> {
    let mut pairs = vec![Vec::new(); space.dim_m()];
    for l in 0..space.dim_m() {
        for m in l + 1..space.dim_m() {
            for (p, c) in space.bracket_m(l, m).iter() {
                pairs[*p].push((l, m, *c));
            }
        }
    }
    pairs
}

/// f_{[lm}{}^a f_{no]a} over the isotropy indices.
pub fn isotropy_square(space: &CosetSpace) -> AltForm<Q> {
    paired_square(&k_pairs(space), space.k.norms())
}

/// f_{[lm}{}^p f_{no]p} over the m indices.
pub fn coset_square(space: &CosetSpace) -> AltForm<Q> {
    paired_square(&m_pairs(space), space.m_norms())
}

/// dH = −(1/4)·3!·f_{[lm}{}^a f_{no]a}.
pub fn dh_form(space: &CosetSpace) -> AltForm<Q> {
    isotropy_square(space).scaled_q(&Q::new(-3, 2))
}

/// The same, summing only over the isotropy frame vectors selected by `keep`.
pub fn dh_form_over(space: &CosetSpace, keep: &[bool]) -> AltForm<Q> {
    let pairs: Vec<Vec<(usize, usize, Q)>> =
        k_pairs(space).into_iter().enumerate().map(|(a, p)| if keep[a] { p } else { Vec::new() }).collect();
    paired_square(&pairs, space.k.norms()).scaled_q(&Q::new(-3, 2))
}

/// The m- and k-index parts of the Jacobi contraction cancel.
pub fn jacobi_contraction(space: &CosetSpace) -> CheckReport {
    let total = coset_square(space).plus(&isotropy_square(space));
    let mut r = CheckReport::new("jacobi_contraction");
    let n = space.dim_m() as u128;
    r.checked = (n * n.saturating_sub(1) * n.saturating_sub(2) * n.saturating_sub(3) / 24) as usize;
    r.failures = total.len();
    r.witness = total.iter().next().map(|(k, v)| format!("{k:?} -> {v}"));
    r
}

/// The (3,0)+(0,3) part of H vanishes.
pub fn torsion_type(h: &AltForm<Surd>, cx: &Endomorphism) -> Result<CheckReport, TensorError> {
    require_complex(cx)?;
    let bad = real_type_part(h, cx, 3);
    let mut r = CheckReport::new("torsion_type");
    r.checked = h.len();
    r.failures = bad.len();
    r.witness = bad.iter().next().map(|(k, v)| format!("(3,0)+(0,3) component {k:?} = {v}"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use chevalley::{InvariantMetric, ReductiveAlgebra};

    fn group(t: &str) -> CosetSpace {
        let g = ReductiveAlgebra::new(&[t.parse().unwrap()], 0);
        let b = InvariantMetric::standard(&g);
        CosetSpace::new(g, b, &[], &[])
    }

    #[test]
    fn su2_torsion_has_one_component() {
        let s = group("A1");
        let h = torsion_form(&s).unwrap();
        assert_eq!(h.len(), 1);
        assert!(dh_form(&s).is_zero());
    }

    #[test]
    fn group_manifold_jacobi() {
        let s = group("A2");
        assert!(jacobi_contraction(&s).passed());
        assert!(coset_square(&s).is_zero());
    }

    #[test]
    fn abelian_m_has_no_torsion() {
        let g = ReductiveAlgebra::abelian(4);
        let b = InvariantMetric::standard(&g);
        let s = CosetSpace::new(g, b, &[], &[]);
        let one = Surd::one();
        let cx = Endomorphism::from_columns(vec![
            SVec::single(1, one.clone()),
            SVec::single(0, -one.clone()),
            SVec::single(3, one.clone()),
            SVec::single(2, -one),
        ]);
        assert!(nijenhuis(&s, &cx).unwrap().is_empty());
        assert!(torsion_form(&s).unwrap().is_zero());
        assert!(hermitian(&s, &cx).unwrap().passed());
    }

    #[test]
    fn non_complex_is_rejected() {
        let s = group("A1");
        assert!(matches!(nijenhuis(&s, &Endomorphism::identity(3)), Err(TensorError::NotAlmostComplex(0))));
    }
}
