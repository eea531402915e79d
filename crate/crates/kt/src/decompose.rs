use num_traits::Zero;
use serde::{Deserialize, Serialize};

use chevalley::{InvariantMetric, ReductiveAlgebra, SVec, Q};
use rootsys::{coloured_roots, components, AlgebraType, Colouring};
use tensor::{CosetSpace, Frame};

use crate::KtError;

/// A positive root of one simple ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IdealRoot {
    pub ideal: usize,
    pub root: usize,
}

/// g = m ⊕ k with k the regular subalgebra of a colouring plus chosen
/// Cartan directions.
///
/// The m-frame lists E⁺_α, E⁻_α for each α in `m_roots` (indices 2p, 2p+1),
/// followed by the B-orthogonal Cartan part.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    pub space: CosetSpace,
    pub colourings: Vec<Colouring>,
    pub extra_u1: usize,
    pub k_roots: Vec<IdealRoot>,
    pub m_roots: Vec<IdealRoot>,
    pub k_components: Vec<(usize, AlgebraType)>,
    /// Rational basis of the Cartan directions commuting with the coloured roots.
    pub h1: Vec<SVec<Q>>,
    pub k_u1: Vec<SVec<Q>>,
    // per ideal, per root index of the ideal: position in m_roots
    m_position: Vec<Vec<Option<usize>>>,
}

impl CosetDecomposition {
    pub fn dim_m(&self) -> usize {
        self.space.dim_m()
    }

    pub fn dim_k(&self) -> usize {
        self.space.dim_k()
    }

    pub fn g(&self) -> &ReductiveAlgebra {
        &self.space.g
    }

    /// First m-frame index of the Cartan part.
    pub fn cartan_offset(&self) -> usize {
        2 * self.m_roots.len()
    }

    pub fn cartan_dim(&self) -> usize {
        self.dim_m() - self.cartan_offset()
    }

    /// Position in `m_roots` of ±α, for a root index α of an ideal.
    pub fn m_position(&self, ideal: usize, root: usize) -> Option<usize> {
        let rs = &self.g().ideal(ideal).roots;
        let (abs, _) = rs.abs_index(root);
        self.m_position[ideal][abs]
    }

    pub fn is_k_root(&self, ideal: usize, root: usize) -> bool {
        self.m_position(ideal, root).is_none()
    }

    /// e.g. "D4+A1+u1^2".
    pub fn k_descriptor(&self) -> String {
        let mut parts: Vec<String> = self.k_components.iter().map(|(_, t)| t.to_string()).collect();
        if !self.k_u1.is_empty() {
            parts.push(format!("u1^{}", self.k_u1.len()));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

/// Decompose with the standard metric, after appending `extra_u1` abelian
/// factors to g.
pub fn coset_from_colouring(
    g: &ReductiveAlgebra,
    colourings: &[Colouring],
    k_u1: &[SVec<Q>],
    extra_u1: usize,
) -> Result<CosetDecomposition, KtError> {
    let full = g.with_extra_abelian(extra_u1);
    let metric = InvariantMetric::standard(&full);
    coset_with_metric(full, metric, colourings, k_u1, extra_u1)
}

/// Decompose a g that already carries its abelian factors, under `metric`.
pub fn coset_with_metric(
    g: ReductiveAlgebra,
    metric: InvariantMetric,
    colourings: &[Colouring],
    k_u1: &[SVec<Q>],
    extra_u1: usize,
) -> Result<CosetDecomposition, KtError> {
    let n_ideals = g.ideals().len();
    if colourings.len() != n_ideals {
        return Err(KtError::ColouringCount { expected: n_ideals, found: colourings.len() });
    }
    let mut k_span = Vec::new();
    let mut k_roots = Vec::new();
    let mut m_roots = Vec::new();
    let mut k_components = Vec::new();
    let mut m_position = Vec::new();
    let mut coroots = Frame::new(g.dim());
    for (ideal, c) in colourings.iter().enumerate() {
        let rs = &g.ideal(ideal).roots;
        let c = Colouring::new(rs.rank(), c.coloured.iter().copied())?;
        let kr = coloured_roots(rs, &c);
        for comp in components(rs, &kr)? {
            k_components.push((ideal, comp.algebra));
        }
        let mut pos = vec![None; rs.num_positive()];
        for r in 0..rs.num_positive() {
            if kr.contains(&r) {
                k_roots.push(IdealRoot { ideal, root: r });
                k_span.push(SVec::unit(g.eplus(ideal, r)));
                k_span.push(SVec::unit(g.eminus(ideal, r)));
            } else {
                pos[r] = Some(m_roots.len());
                m_roots.push(IdealRoot { ideal, root: r });
            }
        }
        m_position.push(pos);
        for &i in &c.coloured {
            let h = g.coroot_element(ideal, rs.simple_root_index(i));
            coroots.extend(&metric, &h, &[]);
            k_span.push(h);
        }
    }
    // Cartan directions orthogonal to the coloured coroots
    let mut h1_frame = Frame::new(g.dim());
    for (ideal, id) in g.ideals().iter().enumerate() {
        for i in 0..id.roots.rank() {
            h1_frame.extend(&metric, &SVec::unit(g.h(ideal, i)), &[&coroots]);
        }
    }
    let h1: Vec<SVec<Q>> = h1_frame.vectors().to_vec();
    let cartan: Vec<usize> = g.cartan_indices();
    for (n, v) in k_u1.iter().enumerate() {
        let in_cartan = v.iter().all(|(j, _)| cartan.contains(j));
        let commutes = coroots.vectors().iter().all(|h| metric.inner(h, v).is_zero());
        if !in_cartan || !commutes || v.is_zero() {
            return Err(KtError::InvalidIsotropyVector(n));
        }
        k_span.push(v.clone());
    }
    let mut k_frame = Frame::new(g.dim());
    for v in &k_span {
        k_frame.extend(&metric, v, &[]);
    }
    let mut cartan_m = Frame::new(g.dim());
    for v in h1.iter().cloned().chain((g.abelian_offset()..g.dim()).map(SVec::unit)) {
        cartan_m.extend(&metric, &v, &[&k_frame]);
    }
    let mut m_first = Vec::new();
    for r in &m_roots {
        m_first.push(SVec::unit(g.eplus(r.ideal, r.root)));
        m_first.push(SVec::unit(g.eminus(r.ideal, r.root)));
    }
    m_first.extend(cartan_m.vectors().iter().cloned());
    let space = CosetSpace::new(g, metric, &k_span, &m_first);
    debug_assert_eq!(space.dim_m(), m_first.len());
    Ok(CosetDecomposition {
        space,
        colourings: colourings.to_vec(),
        extra_u1,
        k_roots,
        m_roots,
        k_components,
        h1,
        k_u1: k_u1.to_vec(),
        m_position,
    })
}

/// True if `v` lies in the rational span of `basis` (B-orthogonal frame test).
pub fn in_span(metric: &InvariantMetric, dim: usize, basis: &[SVec<Q>], v: &SVec<Q>) -> bool {
    let mut f = Frame::new(dim);
    for b in basis {
        f.extend(metric, b, &[]);
    }
    v.minus(&f.project(metric, v)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> ReductiveAlgebra {
        ReductiveAlgebra::new(&[s.parse().unwrap()], 0)
    }

    #[test]
    fn nothing_coloured_is_group() {
        let g = alg("B2");
        let d = coset_from_colouring(&g, &[Colouring::default()], &[], 0).unwrap();
        assert_eq!(d.dim_m(), 10);
        assert_eq!(d.dim_k(), 0);
        assert_eq!(d.k_descriptor(), "0");
    }

    #[test]
    fn everything_coloured_leaves_nothing() {
        let g = alg("A3");
        let d = coset_from_colouring(&g, &[Colouring::all(3)], &[], 0).unwrap();
        assert!(d.m_roots.is_empty());
        assert_eq!(d.dim_m(), 0);
        assert_eq!(d.k_descriptor(), "A3");
    }

    #[test]
    fn flag_manifold_dimension() {
        let g = alg("A2");
        let d = coset_from_colouring(&g, &[Colouring::default()], &[SVec::unit(g.h(0, 0)), SVec::unit(g.h(0, 1))], 0).unwrap();
        assert_eq!(d.dim_m(), 6);
        assert!(d.space.reductive_witness().is_none());
    }

    #[test]
    fn isotropy_vector_must_commute() {
        let g = alg("A2");
        let c = Colouring::parse(2, "1").unwrap();
        let bad = SVec::unit(g.h(0, 0));
        assert_eq!(coset_from_colouring(&g, &[c], &[bad], 0).unwrap_err(), KtError::InvalidIsotropyVector(0));
    }
}
