//! B-orthogonal rational frames and reductive splittings g = m ⊕ k.

use num_traits::Zero;

use chevalley::{InvariantMetric, ReductiveAlgebra, SVec, Scalar, Q};

/// A B-orthogonal list of rational vectors in g.
///
/// Coordinates of x are B(x, v_a)/B(v_a, v_a); for x in the span this is
/// its exact expansion, otherwise it is the orthogonal projection.
#[derive(Clone, Debug)]
pub struct Frame {
    vectors: Vec<SVec<Q>>,
    norms: Vec<Q>,
    // for each ambient index j, the frame vectors with a j-component
    dual: Vec<Vec<(usize, Q)>>,
}

impl Frame {
    pub fn new(ambient_dim: usize) -> Self {
        Frame { vectors: Vec::new(), norms: Vec::new(), dual: vec![Vec::new(); ambient_dim] }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, a: usize) -> &SVec<Q> {
        &self.vectors[a]
    }

    pub fn vectors(&self) -> &[SVec<Q>] {
        &self.vectors
    }

    /// B(v_a, v_a).
    pub fn norm(&self, a: usize) -> Q {
        self.norms[a]
    }

    pub fn norms(&self) -> &[Q] {
        &self.norms
    }

    fn push(&mut self, v: SVec<Q>, norm: Q) -> usize {
        let a = self.vectors.len();
        for (j, c) in v.iter() {
            self.dual[*j].push((a, *c));
        }
        self.vectors.push(v);
        self.norms.push(norm);
        a
    }

    /// B(x, v_a) for every a, given the lowered form of x.
    pub fn pairings<T: Scalar>(&self, lowered: &SVec<T>) -> SVec<T> {
        let mut out = SVec::new();
        for (j, l) in lowered.iter() {
            for (a, c) in &self.dual[*j] {
                out.add_at(*a, l.mul_q(c));
            }
        }
        out
    }

    pub fn coords<T: Scalar>(&self, b: &InvariantMetric, x: &SVec<T>) -> SVec<T> {
        let p = self.pairings(&b.lower(x));
        SVec::from_pairs(p.iter().map(|(a, c)| (*a, c.mul_q(&(Q::from_integer(1) / self.norms[*a])))))
    }

    /// Σ c_a v_a as a vector of g.
    pub fn embed<T: Scalar>(&self, c: &SVec<T>) -> SVec<T> {
        let mut out = SVec::new();
        for (a, x) in c.iter() {
            for (j, v) in self.vectors[*a].iter() {
                out.add_at(*j, x.mul_q(v));
            }
        }
        out
    }

    /// Orthogonal projection of x onto the span.
    pub fn project(&self, b: &InvariantMetric, x: &SVec<Q>) -> SVec<Q> {
        self.embed(&self.coords(b, x))
    }

    /// Gram–Schmidt step: add the part of x orthogonal to this frame and to
    /// `others`. Returns the new index, or None if nothing is left.
    pub fn extend(&mut self, b: &InvariantMetric, x: &SVec<Q>, others: &[&Frame]) -> Option<usize> {
        let mut r = x.minus(&self.project(b, x));
        for f in others {
            r = r.minus(&f.project(b, &r));
        }
        if r.is_zero() {
            return None;
        }
        let n = b.inner(&r, &r);
        assert!(n > Q::zero(), "metric is not positive definite");
        Some(self.push(r, n))
    }

    /// Index of a frame vector equal to x, if any.
    pub fn find(&self, x: &SVec<Q>) -> Option<usize> {
        self.vectors.iter().position(|v| v == x)
    }
}

/// A splitting g = m ⊕ k with B-orthogonal rational frames of both parts.
///
/// Structure constants are cached over the m-frame: for each ordered pair of
/// m vectors, the m- and k-coordinates of their bracket.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub g: ReductiveAlgebra,
    pub metric: InvariantMetric,
    pub m: Frame,
    pub k: Frame,
    br_m: Vec<SVec<Q>>,
    br_k: Vec<SVec<Q>>,
}

impl CosetSpace {
    /// k is spanned by `k_span`; m is its orthogonal complement, with the
    /// vectors of `m_first` (made orthogonal) listed first.
    pub fn new(g: ReductiveAlgebra, metric: InvariantMetric, k_span: &[SVec<Q>], m_first: &[SVec<Q>]) -> Self {
        let d = g.dim();
        let mut k = Frame::new(d);
        for v in k_span {
            k.extend(&metric, v, &[]);
        }
        let mut m = Frame::new(d);
        for v in m_first {
            m.extend(&metric, v, &[&k]);
        }
        for j in 0..d {
            if m.len() + k.len() == d {
                break;
            }
            m.extend(&metric, &SVec::unit(j), &[&k]);
        }
        let n = m.len();
        let mut br_m = Vec::with_capacity(n * n);
        let mut br_k = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let low = metric.lower(&g.bracket(m.vector(i), m.vector(j)));
                br_m.push(scale_by_norms(&m, m.pairings(&low)));
                br_k.push(scale_by_norms(&k, k.pairings(&low)));
            }
        }
        CosetSpace { g, metric, m, k, br_m, br_k }
    }

    pub fn dim_m(&self) -> usize {
        self.m.len()
    }

    pub fn dim_k(&self) -> usize {
        self.k.len()
    }

    /// m-coordinates of [m_i, m_j].
    pub fn bracket_m(&self, i: usize, j: usize) -> &SVec<Q> {
        &self.br_m[i * self.m.len() + j]
    }

    /// k-coordinates of [m_i, m_j].
    pub fn bracket_k(&self, i: usize, j: usize) -> &SVec<Q> {
        &self.br_k[i * self.m.len() + j]
    }

    /// [x, y]_m for x, y in m-coordinates.
    pub fn bracket_m_vec<T: Scalar>(&self, x: &SVec<T>, y: &SVec<T>) -> SVec<T> {
        let mut out = SVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let br = self.bracket_m(*i, *j);
                if br.is_zero() {
                    continue;
                }
                let c = a.clone() * b.clone();
                for (l, v) in br.iter() {
                    out.add_at(*l, c.mul_q(v));
                }
            }
        }
        out
    }

    /// Matrix of ad(k_a) on m, by columns in m-coordinates.
    pub fn ad_k_on_m(&self, a: usize) -> Vec<SVec<Q>> {
        let z = self.k.vector(a);
        (0..self.m.len())
            .map(|j| self.m.coords(&self.metric, &self.g.bracket(z, self.m.vector(j))))
            .collect()
    }

    /// First (k index, m index) with [k_a, m_j] not inside m.
    pub fn reductive_witness(&self) -> Option<(usize, usize)> {
        for a in 0..self.k.len() {
            for j in 0..self.m.len() {
                let br = self.g.bracket(self.k.vector(a), self.m.vector(j));
                if !self.k.coords(&self.metric, &br).is_zero() {
                    return Some((a, j));
                }
            }
        }
        None
    }

    /// B-norms of the m-frame, i.e. the diagonal metric in m-coordinates.
    pub fn m_norms(&self) -> &[Q] {
        self.m.norms()
    }
}

fn scale_by_norms(f: &Frame, p: SVec<Q>) -> SVec<Q> {
    SVec::from_pairs(p.iter().map(|(a, c)| (*a, *c / f.norm(*a))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_manifold_frame_is_basis() {
        let g = ReductiveAlgebra::new(&["A2".parse().unwrap()], 0);
        let b = InvariantMetric::standard(&g);
        let s = CosetSpace::new(g, b, &[], &[]);
        assert_eq!(s.dim_m(), 8);
        assert_eq!(s.dim_k(), 0);
        assert!(s.reductive_witness().is_none());
    }

    #[test]
    fn cartan_complement_is_orthogonal() {
        let g = ReductiveAlgebra::new(&["G2".parse().unwrap()], 0);
        let b = InvariantMetric::standard(&g);
        let h1 = SVec::unit(g.h(0, 0));
        let s = CosetSpace::new(g, b, &[h1.clone()], &[]);
        assert_eq!(s.dim_m(), 13);
        for a in 0..s.dim_m() {
            assert_eq!(s.metric.inner(s.m.vector(a), &h1), Q::zero());
        }
    }
}
