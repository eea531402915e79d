//! Compact real form of a reductive algebra and its invariant metrics.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use rootsys::{AlgebraType, RootSystem, Q};

use crate::sparse::{SVec, Scalar};
use crate::structure::{chevalley_bracket, structure_constants, StructureConstantTable};
use crate::ChevalleyError;

/// Basis element of the compact real form.
///
/// `root` is a positive-root index of the ideal and `i` a simple-root index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CompactBasisElement {
    Eplus { ideal: usize, root: usize },
    Eminus { ideal: usize, root: usize },
    H { ideal: usize, i: usize },
    U(usize),
}

/// One simple ideal with its root data and structure constants.
#[derive(Clone, Debug)]
pub struct SimpleIdeal {
    pub roots: RootSystem,
    pub table: StructureConstantTable,
    pub offset: usize,
}

impl SimpleIdeal {
    pub fn dim(&self) -> usize {
        self.roots.num_roots() + self.roots.rank()
    }
}

/// Direct sum of compact simple ideals and an abelian ideal u(1)^n.
///
/// Global basis: each ideal in turn lists E⁺ over its positive roots, then
/// E⁻, then H_1..H_r; the abelian generators U_a come last.
#[derive(Clone, Debug)]
pub struct ReductiveAlgebra {
    ideals: Vec<SimpleIdeal>,
    abelian_dim: usize,
    dim: usize,
    brackets: Vec<SVec<Q>>,
}

type ComplexQ = (Q, Q);

fn cmul(a: ComplexQ, b: ComplexQ) -> ComplexQ {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

/// Expansion of a local compact basis element over the complex Chevalley basis.
fn to_chevalley(rs: &RootSystem, local: usize) -> Vec<(usize, ComplexQ)> {
    let npos = rs.num_positive();
    let (z, one) = (Q::zero(), Q::from_integer(1));
    if local < npos {
        vec![(local, (z, one)), (rs.neg(local), (z, one))]
    } else if local < 2 * npos {
        let p = local - npos;
        vec![(p, (one, z)), (rs.neg(p), (-one, z))]
    } else {
        vec![(rs.num_roots() + local - 2 * npos, (z, -one))]
    }
}

/// Compact bracket inside one ideal, by passing through the Chevalley basis.
fn local_bracket(rs: &RootSystem, t: &StructureConstantTable, x: usize, y: usize) -> SVec<Q> {
    let n = rs.num_roots();
    let npos = rs.num_positive();
    let mut acc: Vec<ComplexQ> = vec![(Q::zero(), Q::zero()); n + rs.rank()];
    for (a, ca) in to_chevalley(rs, x) {
        for (b, cb) in to_chevalley(rs, y) {
            let c = cmul(ca, cb);
            for (k, v) in chevalley_bracket(rs, t, a, b) {
                let v = Q::from_integer(v as i128);
                acc[k].0 += c.0 * v;
                acc[k].1 += c.1 * v;
            }
        }
    }
    let mut out = SVec::new();
    let two = Q::from_integer(2);
    for p in 0..npos {
        let (a, b) = (acc[p], acc[rs.neg(p)]);
        // coefficient on E⁺ is (a+b)/(2i), on E⁻ it is (a−b)/2
        let plus = ((a.1 + b.1) / two, -(a.0 + b.0) / two);
        let minus = ((a.0 - b.0) / two, (a.1 - b.1) / two);
        assert!(plus.1.is_zero() && minus.1.is_zero(), "compact bracket left the real form");
        out.add_at(p, plus.0);
        out.add_at(npos + p, minus.0);
    }
    for i in 0..rs.rank() {
        // d h_i = i d H_i
        let d = acc[n + i];
        assert!(d.0.is_zero(), "compact bracket left the real form");
        out.add_at(2 * npos + i, -d.1);
    }
    out
}

impl ReductiveAlgebra {
    pub fn new(types: &[AlgebraType], abelian_dim: usize) -> Self {
        let parts = types
            .iter()
            .map(|&t| {
                let rs = RootSystem::new(t);
                let table = structure_constants(&rs);
                (rs, table)
            })
            .collect();
        Self::from_parts(parts, abelian_dim)
    }

    /// Build from explicit tables; a mutated table gives a mutated algebra.
    pub fn from_parts(parts: Vec<(RootSystem, StructureConstantTable)>, abelian_dim: usize) -> Self {
        let mut ideals = Vec::new();
        let mut offset = 0;
        for (roots, table) in parts {
            let d = roots.num_roots() + roots.rank();
            ideals.push(SimpleIdeal { roots, table, offset });
            offset += d;
        }
        let dim = offset + abelian_dim;
        let mut brackets = vec![SVec::new(); dim * dim];
        for id in &ideals {
            let d = id.dim();
            for x in 0..d {
                for y in 0..d {
                    let local = local_bracket(&id.roots, &id.table, x, y);
                    brackets[(id.offset + x) * dim + id.offset + y] =
                        SVec::from_pairs(local.iter().map(|(k, c)| (id.offset + k, *c)));
                }
            }
        }
        ReductiveAlgebra { ideals, abelian_dim, dim, brackets }
    }

    pub fn abelian(n: usize) -> Self {
        Self::from_parts(Vec::new(), n)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ideals(&self) -> &[SimpleIdeal] {
        &self.ideals
    }

    pub fn ideal(&self, k: usize) -> &SimpleIdeal {
        &self.ideals[k]
    }

    pub fn abelian_dim(&self) -> usize {
        self.abelian_dim
    }

    pub fn abelian_offset(&self) -> usize {
        self.dim - self.abelian_dim
    }

    /// Total rank including the abelian ideal.
    pub fn rank(&self) -> usize {
        self.ideals.iter().map(|i| i.roots.rank()).sum::<usize>() + self.abelian_dim
    }

    /// Same ideals with extra abelian generators appended.
    pub fn with_extra_abelian(&self, extra: usize) -> Self {
        Self::from_parts(
            self.ideals.iter().map(|i| (i.roots.clone(), i.table.clone())).collect(),
            self.abelian_dim + extra,
        )
    }

    pub fn index(&self, e: CompactBasisElement) -> Result<usize, ChevalleyError> {
        let bad = || ChevalleyError::UnknownBasisElement(format!("{e:?}"));
        match e {
            CompactBasisElement::U(a) => (a < self.abelian_dim).then(|| self.abelian_offset() + a).ok_or_else(bad),
            CompactBasisElement::Eplus { ideal, root } | CompactBasisElement::Eminus { ideal, root } => {
                let id = self.ideals.get(ideal).ok_or_else(bad)?;
                let npos = id.roots.num_positive();
                if root >= npos {
                    return Err(bad());
                }
                let shift = if matches!(e, CompactBasisElement::Eplus { .. }) { 0 } else { npos };
                Ok(id.offset + shift + root)
            }
            CompactBasisElement::H { ideal, i } => {
                let id = self.ideals.get(ideal).ok_or_else(bad)?;
                if i >= id.roots.rank() {
                    return Err(bad());
                }
                Ok(id.offset + 2 * id.roots.num_positive() + i)
            }
        }
    }

    pub fn element(&self, idx: usize) -> CompactBasisElement {
        assert!(idx < self.dim);
        if idx >= self.abelian_offset() {
            return CompactBasisElement::U(idx - self.abelian_offset());
        }
        let (ideal, id) = self
            .ideals
            .iter()
            .enumerate()
            .rev()
            .find(|(_, id)| id.offset <= idx)
            .expect("index inside some ideal");
        let local = idx - id.offset;
        let npos = id.roots.num_positive();
        if local < npos {
            CompactBasisElement::Eplus { ideal, root: local }
        } else if local < 2 * npos {
            CompactBasisElement::Eminus { ideal, root: local - npos }
        } else {
            CompactBasisElement::H { ideal, i: local - 2 * npos }
        }
    }

    /// Human-readable basis label such as "E+[1,1,0]@0" or "H2@0" or "U1".
    pub fn label(&self, idx: usize) -> String {
        match self.element(idx) {
            CompactBasisElement::Eplus { ideal, root } => {
                format!("E+{:?}@{ideal}", self.ideals[ideal].roots.root(root).simple_coeffs)
            }
            CompactBasisElement::Eminus { ideal, root } => {
                format!("E-{:?}@{ideal}", self.ideals[ideal].roots.root(root).simple_coeffs)
            }
            CompactBasisElement::H { ideal, i } => format!("H{}@{ideal}", i + 1),
            CompactBasisElement::U(a) => format!("U{}", a + 1),
        }
    }

    /// Bracket of two basis elements by global index.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SVec<Q> {
        &self.brackets[i * self.dim + j]
    }

    pub fn compact_bracket(&self, x: CompactBasisElement, y: CompactBasisElement) -> Result<SVec<Q>, ChevalleyError> {
        Ok(self.bracket_basis(self.index(x)?, self.index(y)?).clone())
    }

    /// Bilinear extension of the bracket.
    pub fn bracket<T: Scalar>(&self, x: &SVec<T>, y: &SVec<T>) -> SVec<T> {
        let mut out = SVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let c = a.clone() * b.clone();
                for (k, v) in self.bracket_basis(*i, *j).iter() {
                    out.add_at(*k, c.mul_q(v));
                }
            }
        }
        out
    }

    /// Index of E⁺ for positive root `root` of ideal `ideal`.
    pub fn eplus(&self, ideal: usize, root: usize) -> usize {
        self.ideals[ideal].offset + root
    }

    pub fn eminus(&self, ideal: usize, root: usize) -> usize {
        self.ideals[ideal].offset + self.ideals[ideal].roots.num_positive() + root
    }

    pub fn h(&self, ideal: usize, i: usize) -> usize {
        self.ideals[ideal].offset + 2 * self.ideals[ideal].roots.num_positive() + i
    }

    pub fn u(&self, a: usize) -> usize {
        self.abelian_offset() + a
    }

    /// Cartan element H_α for a root α of an ideal, over the H_i.
    pub fn coroot_element(&self, ideal: usize, root: usize) -> SVec<Q> {
        let rs = &self.ideals[ideal].roots;
        SVec::from_pairs(rs.coroot_coeffs(root).into_iter().enumerate().map(|(i, c)| (self.h(ideal, i), c)))
    }

    /// Cartan element Σ x_i H_i of an ideal.
    pub fn cartan_element(&self, ideal: usize, coeffs: &[Q]) -> SVec<Q> {
        SVec::from_pairs(coeffs.iter().enumerate().map(|(i, c)| (self.h(ideal, i), *c)))
    }

    /// Indices of all Cartan and abelian basis elements.
    pub fn cartan_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (k, id) in self.ideals.iter().enumerate() {
            out.extend((0..id.roots.rank()).map(|i| self.h(k, i)));
        }
        out.extend(self.abelian_offset()..self.dim);
        out
    }
}

/// Block-diagonal invariant metric: one scale per simple ideal, c_a per U_a.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantMetric {
    pub scales: Vec<Q>,
    pub c: Vec<Q>,
    /// Entries of each basis row, over global indices.
    #[serde(skip)]
    rows: Vec<SVec<Q>>,
}

impl InvariantMetric {
    pub fn new(g: &ReductiveAlgebra, scales: &[Q], c: &[Q]) -> Result<Self, ChevalleyError> {
        if scales.len() != g.ideals.len() || c.len() != g.abelian_dim {
            return Err(ChevalleyError::MetricShape);
        }
        if let Some(bad) = scales.iter().chain(c).find(|s| **s <= Q::zero()) {
            return Err(ChevalleyError::NonPositiveScale(bad.to_string()));
        }
        let mut rows = vec![SVec::new(); g.dim];
        let four = Q::from_integer(4);
        for (k, id) in g.ideals.iter().enumerate() {
            let rs = &id.roots;
            let s = scales[k];
            for p in 0..rs.num_positive() {
                let v = s * four / rs.norm2(p);
                rows[g.eplus(k, p)] = SVec::single(g.eplus(k, p), v);
                rows[g.eminus(k, p)] = SVec::single(g.eminus(k, p), v);
            }
            // B(H_i, H_j) = s ⟨α_i∨, α_j∨⟩ = s (2/α_j·α_j) A_ij
            let gram = rs.gram();
            for i in 0..rs.rank() {
                rows[g.h(k, i)] = SVec::from_pairs((0..rs.rank()).map(|j| {
                    (g.h(k, j), s * four * gram[i][j] / (gram[i][i] * gram[j][j]))
                }));
            }
        }
        for (a, ca) in c.iter().enumerate() {
            rows[g.u(a)] = SVec::single(g.u(a), *ca);
        }
        Ok(InvariantMetric { scales: scales.to_vec(), c: c.to_vec(), rows })
    }

    /// Unit scales and unit c_a.
    pub fn standard(g: &ReductiveAlgebra) -> Self {
        let one = Q::from_integer(1);
        Self::new(g, &vec![one; g.ideals.len()], &vec![one; g.abelian_dim]).expect("positive")
    }

    pub fn entry(&self, i: usize, j: usize) -> Q {
        self.rows[i].get(j)
    }

    pub fn row(&self, i: usize) -> &SVec<Q> {
        &self.rows[i]
    }

    pub fn inner<T: Scalar>(&self, x: &SVec<T>, y: &SVec<T>) -> T {
        let mut s = T::zero();
        for (i, a) in x.iter() {
            for (j, b) in self.rows[*i].iter() {
                let yj = y.get(*j);
                if !yj.is_zero() {
                    s = s + (a.clone() * yj).mul_q(b);
                }
            }
        }
        s
    }

    /// B(x, e_j) for every j, as a sparse vector: the lowered form of x.
    pub fn lower<T: Scalar>(&self, x: &SVec<T>) -> SVec<T> {
        let mut out = SVec::new();
        for (i, a) in x.iter() {
            for (j, b) in self.rows[*i].iter() {
                out.add_at(*j, a.mul_q(b));
            }
        }
        out
    }

    pub fn matrix(&self) -> Vec<Vec<Q>> {
        let n = self.rows.len();
        (0..n).map(|i| self.rows[i].to_dense(n)).collect()
    }
}

/// Result of the ad-invariance scan B([x,y],z) + B(y,[x,z]) = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub triples_checked: usize,
    pub failures: usize,
    pub witness: Option<[usize; 3]>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub fn verify_invariance(g: &ReductiveAlgebra, b: &InvariantMetric) -> InvarianceReport {
    let n = g.dim();
    let mut rep = InvarianceReport { triples_checked: 0, failures: 0, witness: None };
    for x in 0..n {
        for y in 0..n {
            let xy = b.lower(g.bracket_basis(x, y));
            for z in 0..n {
                rep.triples_checked += 1;
                let lhs = xy.get(z);
                let rhs = b.inner(&SVec::unit(y), g.bracket_basis(x, z));
                if lhs + rhs != Q::zero() {
                    rep.failures += 1;
                    rep.witness.get_or_insert([x, y, z]);
                }
            }
        }
    }
    rep
}
