use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{AlgebraType, Family, RootError, Q};

/// A root, keyed by its expansion over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub simple_coeffs: Vec<i64>,
    #[serde(skip)]
    pub ambient: Vec<Q>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.simple_coeffs.iter().all(|&c| c >= 0)
    }
}

/// Full root system of one simple algebra.
///
/// Roots are stored positive first, ordered by height and then
/// lexicographically on the coefficient vector; slot `npos + i` holds the
/// negative of positive root `i`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub algebra: AlgebraType,
    simple_ambient: Vec<Vec<Q>>,
    gram: Vec<Vec<Q>>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    npos: usize,
    index: HashMap<Vec<i64>, usize>,
}

fn q(n: i128) -> Q {
    Q::from_integer(n)
}

fn half(n: i128) -> Q {
    Q::new(n, 2)
}

fn unit(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::one();
    v
}

fn diff(dim: usize, i: usize, j: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::one();
    v[j] = -Q::one();
    v
}

/// Simple roots of the standard epsilon-basis realization.
///
/// E8 follows the Bourbaki numbering: node 1 is the spinor-like root,
/// node 2 hangs off node 4, and 1-3-4-5-6-7-8 is the long chain. E7 and E6
/// use the first seven and six of those roots.
pub fn standard_simple_roots(t: AlgebraType) -> Vec<Vec<Q>> {
    let r = t.rank;
    match t.family {
        Family::A => (0..r).map(|i| diff(r + 1, i, i + 1)).collect(),
        Family::B => {
            let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
            s.push(unit(r, r - 1));
            s
        }
        Family::C => {
            let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
            let mut last = vec![Q::zero(); r];
            last[r - 1] = q(2);
            s.push(last);
            s
        }
        Family::D => {
            let mut s: Vec<_> = (0..r - 1).map(|i| diff(r, i, i + 1)).collect();
            let mut last = vec![Q::zero(); r];
            last[r - 2] = Q::one();
            last[r - 1] = Q::one();
            s.push(last);
            s
        }
        Family::G => vec![
            vec![q(1), q(-1), q(0)],
            vec![q(-2), q(1), q(1)],
        ],
        Family::F => vec![
            vec![q(0), q(1), q(-1), q(0)],
            vec![q(0), q(0), q(1), q(-1)],
            vec![q(0), q(0), q(0), q(1)],
            vec![half(1), half(-1), half(-1), half(-1)],
        ],
        Family::E => {
            let mut s = Vec::with_capacity(8);
            let mut a1 = vec![half(-1); 8];
            a1[0] = half(1);
            a1[7] = half(1);
            s.push(a1);
            let mut a2 = vec![Q::zero(); 8];
            a2[0] = Q::one();
            a2[1] = Q::one();
            s.push(a2);
            for i in 0..6 {
                s.push(diff(8, i + 1, i));
            }
            s.truncate(r);
            s
        }
    }
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| *x * *y).sum()
}

impl RootSystem {
    pub fn new(algebra: AlgebraType) -> Self {
        Self::from_simple_roots(algebra, standard_simple_roots(algebra))
    }

    /// Build from explicit simple roots, generating positive roots by height.
    ///
    /// β + α_i is a root iff the α_i-string through β extends upward, which
    /// is read off from p − q = ⟨β, α_i∨⟩ with p known from lower heights.
    pub fn from_simple_roots(algebra: AlgebraType, simple_ambient: Vec<Vec<Q>>) -> Self {
        let r = simple_ambient.len();
        let gram: Vec<Vec<Q>> = (0..r)
            .map(|i| (0..r).map(|j| dot(&simple_ambient[i], &simple_ambient[j])).collect())
            .collect();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let v = q(2) * gram[i][j] / gram[i][i];
                        assert!(v.is_integer(), "non-integral Cartan entry");
                        v.to_integer() as i64
                    })
                    .collect()
            })
            .collect();

        let mut known: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut layers: Vec<Vec<Vec<i64>>> = Vec::new();
        let first: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                let mut c = vec![0i64; r];
                c[i] = 1;
                c
            })
            .collect();
        for c in &first {
            known.insert(c.clone(), ());
        }
        layers.push(first);
        loop {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in layers.last().unwrap() {
                for i in 0..r {
                    // ⟨β, α_i∨⟩ = Σ_j c_j A_ij
                    let pairing: i64 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
                    let mut p = 0i64;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if known.contains_key(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !known.contains_key(&up) {
                            known.insert(up.clone(), ());
                            next.push(up);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }
        let mut positive: Vec<Vec<i64>> = layers.into_iter().flatten().collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        let npos = positive.len();
        let amb_dim = simple_ambient.first().map_or(0, |v| v.len());
        let make = |coeffs: Vec<i64>| {
            let mut amb = vec![Q::zero(); amb_dim];
            for (i, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    for (k, x) in simple_ambient[i].iter().enumerate() {
                        amb[k] += q(c as i128) * *x;
                    }
                }
            }
            Root { simple_coeffs: coeffs, ambient: amb }
        };
        let mut roots: Vec<Root> = positive.iter().cloned().map(make).collect();
        let negs: Vec<Root> = positive
            .iter()
            .map(|c| make(c.iter().map(|x| -x).collect()))
            .collect();
        roots.extend(negs);
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.simple_coeffs.clone(), i))
            .collect();
        RootSystem { algebra, simple_ambient, gram, cartan, roots, npos, index }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn all_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.npos]
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut c = vec![0i64; self.rank()];
        c[i] = 1;
        self.index[&c]
    }

    pub fn simple_ambient(&self) -> &[Vec<Q>] {
        &self.simple_ambient
    }

    /// Gram matrix α_i·α_j of the simple roots.
    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn highest_root(&self) -> usize {
        self.npos - 1
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn neg(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    /// Positive representative index and sign.
    pub fn abs_index(&self, i: usize) -> (usize, i64) {
        if i < self.npos {
            (i, 1)
        } else {
            (i - self.npos, -1)
        }
    }

    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn inner_coeffs(&self, a: &[i64], b: &[i64]) -> Q {
        let r = self.rank();
        let mut s = Q::zero();
        for i in 0..r {
            if a[i] == 0 {
                continue;
            }
            for j in 0..r {
                if b[j] != 0 {
                    s += q((a[i] * b[j]) as i128) * self.gram[i][j];
                }
            }
        }
        s
    }

    pub fn inner(&self, i: usize, j: usize) -> Q {
        self.inner_coeffs(&self.roots[i].simple_coeffs, &self.roots[j].simple_coeffs)
    }

    pub fn norm2(&self, i: usize) -> Q {
        self.inner(i, i)
    }

    /// Sum of two roots if it is a root.
    pub fn add(&self, i: usize, j: usize) -> Option<usize> {
        let c: Vec<i64> = self.roots[i]
            .simple_coeffs
            .iter()
            .zip(&self.roots[j].simple_coeffs)
            .map(|(a, b)| a + b)
            .collect();
        self.index_of(&c)
    }

    pub fn sub(&self, i: usize, j: usize) -> Option<usize> {
        self.add(i, self.neg(j))
    }

    /// 2 β·α / α·α.
    pub fn pairing(&self, beta: usize, alpha: usize) -> Q {
        q(2) * self.inner(beta, alpha) / self.norm2(alpha)
    }

    /// Coroot of root `i` expanded over the simple coroots.
    ///
    /// α∨ = Σ_i c_i (α_i·α_i / α·α) α_i∨; the coefficients are integers.
    pub fn coroot_coeffs(&self, i: usize) -> Vec<Q> {
        let n = self.norm2(i);
        self.roots[i]
            .simple_coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| q(c as i128) * self.gram[k][k] / n)
            .collect()
    }

    /// Reflection of root `beta` in root `alpha`.
    pub fn reflect(&self, beta: usize, alpha: usize) -> usize {
        let p = self.pairing(beta, alpha);
        assert!(p.is_integer());
        let k = p.to_integer() as i64;
        let c: Vec<i64> = self.roots[beta]
            .simple_coeffs
            .iter()
            .zip(&self.roots[alpha].simple_coeffs)
            .map(|(b, a)| b - k * a)
            .collect();
        self.index_of(&c).expect("root system not closed under reflection")
    }

    /// Maximal α-string through β: β − pα, …, β + qα.
    pub fn root_string(&self, alpha: usize, beta: usize) -> Result<(i64, i64), RootError> {
        if alpha >= self.num_roots() || beta >= self.num_roots() {
            return Err(RootError::NotARoot);
        }
        if alpha == beta || self.neg(alpha) == beta {
            return Err(RootError::DegenerateString);
        }
        let a = &self.roots[alpha].simple_coeffs;
        let b = &self.roots[beta].simple_coeffs;
        let walk = |sign: i64| {
            let mut n = 0i64;
            loop {
                let c: Vec<i64> = b.iter().zip(a).map(|(x, y)| x + sign * (n + 1) * y).collect();
                if self.index_of(&c).is_some() {
                    n += 1;
                } else {
                    return n;
                }
            }
        };
        Ok((walk(-1), walk(1)))
    }

    /// Root given by a coefficient vector, checked.
    pub fn root_by_coeffs(&self, coeffs: &[i64]) -> Result<usize, RootError> {
        self.index_of(coeffs).ok_or(RootError::NotARoot)
    }

    /// Inner product of an arbitrary coefficient vector (rational) with root `i`.
    pub fn weight_pairing(&self, coeffs: &[Q], i: usize) -> Q {
        let r = self.rank();
        let b = &self.roots[i].simple_coeffs;
        let mut s = Q::zero();
        for k in 0..r {
            if coeffs[k].is_zero() {
                continue;
            }
            for j in 0..r {
                if b[j] != 0 {
                    s += coeffs[k] * q(b[j] as i128) * self.gram[k][j];
                }
            }
        }
        s
    }

    /// No root is twice another root.
    pub fn is_reduced(&self) -> bool {
        !self.roots.iter().any(|r| {
            r.simple_coeffs.iter().all(|c| c % 2 == 0) && {
                let halfc: Vec<i64> = r.simple_coeffs.iter().map(|c| c / 2).collect();
                self.index_of(&halfc).is_some()
            }
        })
    }

    pub fn has_abs_integral_pairings(&self) -> bool {
        (0..self.num_roots()).all(|i| {
            (0..self.rank()).all(|k| {
                let a = self.simple_root_index(k);
                self.pairing(i, a).is_integer() && self.pairing(i, a).abs() <= q(3)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn root_counts_match_types() {
        for t in AlgebraType::all_up_to(8) {
            let r = RootSystem::new(t);
            assert_eq!(r.num_roots(), t.root_count(), "{t}");
        }
    }

    #[test]
    fn small_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.num_roots(), 6);
        assert_eq!(a2.root(a2.highest_root()).simple_coeffs, vec![1, 1]);
        let a4 = rs("A4");
        assert_eq!(a4.num_roots(), 20);
        assert_eq!(a4.root(a4.highest_root()).simple_coeffs, vec![1, 1, 1, 1]);
        assert_eq!(rs("A1").num_roots(), 2);
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(rs("A2").cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(rs("A1").cartan_matrix(), &[vec![2]]);
        let g2 = rs("G2");
        let c = g2.cartan_matrix();
        let mut off = [c[0][1], c[1][0]];
        off.sort();
        assert_eq!(off, [-3, -1]);
    }

    #[test]
    fn e8_highest_root_is_bourbaki() {
        let e8 = rs("E8");
        assert_eq!(e8.root(e8.highest_root()).simple_coeffs, vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn strings() {
        let a2 = rs("A2");
        let (a1, a2i) = (a2.simple_root_index(0), a2.simple_root_index(1));
        assert_eq!(a2.root_string(a1, a2i).unwrap(), (0, 1));
        let g2 = rs("G2");
        let (s, l) = (g2.simple_root_index(0), g2.simple_root_index(1));
        assert!(g2.norm2(s) < g2.norm2(l));
        assert_eq!(g2.root_string(s, l).unwrap().1, 3);
        // orthogonal simple roots in B3 that do not add up
        let b3 = rs("B3");
        let (x, y) = (b3.simple_root_index(0), b3.simple_root_index(2));
        assert_eq!(b3.root_string(x, y).unwrap(), (0, 0));
        assert!(b3.root_string(x, x).is_err());
    }

    #[test]
    fn negation_closed_and_reduced() {
        for t in AlgebraType::all_up_to(8) {
            let r = RootSystem::new(t);
            for i in 0..r.num_roots() {
                let n = r.neg(i);
                let c: Vec<i64> = r.root(i).simple_coeffs.iter().map(|x| -x).collect();
                assert_eq!(r.root(n).simple_coeffs, c);
            }
            assert!(r.is_reduced());
            assert!(r.has_abs_integral_pairings());
        }
    }
}
