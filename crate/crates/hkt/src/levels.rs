use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use chevalley::{InvariantMetric, ReductiveAlgebra, SVec, Q};
use rootsys::{components, AlgebraType, Component};
use tensor::{CheckReport, Frame};

/// A u(1) direction left behind when an A_r component (r ≥ 2) is split.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UGenerator {
    pub ideal: usize,
    /// Primitive integer coefficients over the H_i of the ideal.
    pub coeffs: Vec<Q>,
    /// B(H_ψ, H_ψ)/B(U, U): the square of the factor that normalizes U.
    pub normalization_square: Q,
}

impl UGenerator {
    pub fn element(&self, g: &ReductiveAlgebra) -> SVec<Q> {
        g.cartan_element(self.ideal, &self.coeffs)
    }
}

/// One split g_k = b_k ⊕ d_k ⊕ f_k of a simple component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub index: usize,
    pub ideal: usize,
    /// The component being split.
    pub algebra: AlgebraType,
    /// Its highest root, as a root index of the ideal.
    pub psi: usize,
    /// Positive roots β with E±_β in f_k.
    pub f: Vec<usize>,
    /// Simple components of the centralizer of d_k in the component.
    pub b: Vec<AlgebraType>,
    pub u: Option<UGenerator>,
}

/// A component that stays whole inside the isotropy algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrozenComponent {
    pub ideal: usize,
    pub algebra: AlgebraType,
    pub positive: Vec<usize>,
    pub simple: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDecomposition {
    pub levels: Vec<Level>,
    pub frozen: Vec<FrozenComponent>,
    /// Dimension of the abelian ideal of g.
    pub abelian_dim: usize,
}

impl LevelDecomposition {
    pub fn u_gens(&self) -> Vec<(usize, &UGenerator)> {
        self.levels.iter().filter_map(|l| l.u.as_ref().map(|u| (l.index, u))).collect()
    }

    /// Final abelian part: the U directions as elements of g.
    pub fn b(&self, g: &ReductiveAlgebra) -> Vec<SVec<Q>> {
        self.u_gens().iter().map(|(_, u)| u.element(g)).collect()
    }

    pub fn frozen_dim(&self) -> usize {
        self.frozen.iter().map(|c| c.algebra.dim()).sum()
    }

    /// Frozen components in canonical sorted form, e.g. ["A1", "D4"].
    pub fn frozen_types(&self) -> Vec<AlgebraType> {
        let mut t: Vec<AlgebraType> = self.frozen.iter().map(|c| c.algebra.canonical()).collect();
        t.sort();
        t
    }
}

/// Pending component, and whether it may stay whole.
#[derive(Clone)]
struct Pending {
    ideal: usize,
    comp: Component,
    freezable: bool,
}

fn initial(g: &ReductiveAlgebra) -> Vec<Pending> {
    g.ideals()
        .iter()
        .enumerate()
        .map(|(ideal, id)| {
            let all: Vec<usize> = (0..id.roots.num_roots()).collect();
            let comp = components(&id.roots, &all).expect("full root system").remove(0);
            Pending { ideal, comp, freezable: false }
        })
        .collect()
}

fn primitive(v: &[Q]) -> Vec<Q> {
    let l = v.iter().fold(1i128, |a, x| a.lcm(x.denom()));
    let ints: Vec<i128> = v.iter().map(|x| (x * Q::from_integer(l)).to_integer()).collect();
    let g = ints.iter().fold(0i128, |a, x| a.gcd(x));
    let sign = ints.iter().find(|x| **x != 0).map_or(1, |x| x.signum());
    ints.iter().map(|x| Q::from_integer(sign * x / g)).collect()
}

fn split(g: &ReductiveAlgebra, metric: &InvariantMetric, p: &Pending, index: usize) -> (Level, Vec<Component>) {
    let ideal = p.ideal;
    let rs = &g.ideal(ideal).roots;
    let comp = &p.comp;
    let psi = comp.highest;
    let f: Vec<usize> = comp.positive.iter().copied().filter(|&b| b != psi && !rs.inner(b, psi).is_zero()).collect();
    let rest: Vec<usize> = comp.roots.iter().copied().filter(|&b| rs.inner(b, psi).is_zero()).collect();
    let children = components(rs, &rest).expect("centralizer of a root is a closed subsystem");
    // Cartan directions of the component orthogonal to H_ψ and to the children
    let hpsi = g.coroot_element(ideal, psi);
    let mut known = Frame::new(g.dim());
    known.extend(metric, &hpsi, &[]);
    for c in &children {
        for &s in &c.simple {
            known.extend(metric, &g.coroot_element(ideal, s), &[]);
        }
    }
    let mut extra = Frame::new(g.dim());
    for &s in &comp.simple {
        extra.extend(metric, &g.coroot_element(ideal, s), &[&known]);
    }
    assert!(extra.len() <= 1, "more than one abelian direction at one level");
    let u = extra.vectors().first().map(|v| {
        let coeffs = primitive(&(0..rs.rank()).map(|i| v.get(g.h(ideal, i))).collect::<Vec<_>>());
        let e = g.cartan_element(ideal, &coeffs);
        UGenerator { ideal, normalization_square: metric.inner(&hpsi, &hpsi) / metric.inner(&e, &e), coeffs }
    });
    let level = Level {
        index,
        ideal,
        algebra: comp.algebra,
        psi,
        f,
        b: children.iter().map(|c| c.algebra).collect(),
        u,
    };
    (level, children)
}

fn pending_children(ideal: usize, children: Vec<Component>) -> impl Iterator<Item = Pending> {
    children.into_iter().map(move |comp| Pending { ideal, comp, freezable: true })
}

fn freeze(p: Pending) -> FrozenComponent {
    FrozenComponent { ideal: p.ideal, algebra: p.comp.algebra, positive: p.comp.positive, simple: p.comp.simple }
}

/// Order in which pending components are split.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeelOrder {
    /// A1 summands first, then the others in order.
    #[default]
    A1First,
    /// Strictly in order of appearance.
    InOrder,
}

/// Split highest roots level by level until the remainder is abelian or
/// `stop_level` levels are done.
pub fn joyce_decompose(g: &ReductiveAlgebra, stop_level: Option<usize>) -> LevelDecomposition {
    joyce_decompose_with(g, stop_level, PeelOrder::A1First)
}

pub fn joyce_decompose_with(g: &ReductiveAlgebra, stop_level: Option<usize>, order: PeelOrder) -> LevelDecomposition {
    let metric = InvariantMetric::standard(g);
    let mut pending = initial(g);
    let mut levels = Vec::new();
    while !pending.is_empty() && stop_level.map_or(true, |s| levels.len() < s) {
        let pick = match order {
            PeelOrder::A1First => pending.iter().position(|p| p.comp.algebra.rank == 1).unwrap_or(0),
            PeelOrder::InOrder => 0,
        };
        let p = pending.remove(pick);
        let (level, children) = split(g, &metric, &p, levels.len());
        levels.push(level);
        pending.extend(pending_children(p.ideal, children));
    }
    LevelDecomposition { levels, frozen: pending.into_iter().map(freeze).collect(), abelian_dim: g.abelian_dim() }
}

/// Every decomposition in which the split components form a subtree
/// containing each simple ideal: each pending component is either split or
/// kept whole.
pub fn enumerate_decompositions(g: &ReductiveAlgebra) -> Vec<LevelDecomposition> {
    fn go(
        g: &ReductiveAlgebra,
        metric: &InvariantMetric,
        pending: Vec<Pending>,
        levels: Vec<Level>,
        frozen: Vec<FrozenComponent>,
        out: &mut Vec<LevelDecomposition>,
    ) {
        let Some((first, rest)) = pending.split_first() else {
            out.push(LevelDecomposition { levels, frozen, abelian_dim: g.abelian_dim() });
            return;
        };
        if first.freezable {
            let mut fr = frozen.clone();
            fr.push(freeze(first.clone()));
            go(g, metric, rest.to_vec(), levels.clone(), fr, out);
        }
        let (level, children) = split(g, metric, first, levels.len());
        let mut lv = levels;
        lv.push(level);
        let mut pd = rest.to_vec();
        pd.extend(pending_children(first.ideal, children));
        go(g, metric, pd, lv, frozen, out);
    }
    let metric = InvariantMetric::standard(g);
    let mut out = Vec::new();
    go(g, &metric, initial(g), Vec::new(), Vec::new(), &mut out);
    out
}

/// For every level and β ∈ f_k: 2ψ·β/ψ·ψ = 1, ψ − β ∈ f_k and N(ψ, −β)² = 1.
pub fn verify_cond(g: &ReductiveAlgebra, ld: &LevelDecomposition) -> CheckReport {
    let mut rep = CheckReport::new("cond");
    for l in &ld.levels {
        let id = g.ideal(l.ideal);
        let rs = &id.roots;
        for &b in &l.f {
            rep.checked += 1;
            let name = || format!("level {} root {:?}", l.index, rs.root(b).simple_coeffs);
            if rs.pairing(b, l.psi) != Q::one() {
                rep.fail(|| format!("{}: pairing with psi is not 1", name()));
                continue;
            }
            match rs.sub(l.psi, b) {
                Some(c) if l.f.contains(&c) => {
                    if id.table.get(l.psi, rs.neg(b)).abs() != 1 {
                        rep.fail(|| format!("{}: |N(psi,-beta)| != 1", name()));
                    }
                }
                _ => rep.fail(|| format!("{}: psi - beta not in f", name())),
            }
        }
    }
    rep
}

/// Orthogonality of the highest roots, commutation of the U with every d_k,
/// B-orthogonality of U with U and with H_ψ, and the partition of roots and
/// Cartan directions.
pub fn verify_levels(g: &ReductiveAlgebra, ld: &LevelDecomposition) -> CheckReport {
    let metric = InvariantMetric::standard(g);
    let mut rep = CheckReport::new("levels");
    let us: Vec<SVec<Q>> = ld.b(g);
    for (a, la) in ld.levels.iter().enumerate() {
        for lb in &ld.levels[a + 1..] {
            rep.checked += 1;
            if la.ideal == lb.ideal && !g.ideal(la.ideal).roots.inner(la.psi, lb.psi).is_zero() {
                rep.fail(|| format!("psi at levels {} and {} not orthogonal", la.index, lb.index));
            }
        }
        let h = g.coroot_element(la.ideal, la.psi);
        for (j, u) in us.iter().enumerate() {
            rep.checked += 3;
            for e in [g.eplus(la.ideal, la.psi), g.eminus(la.ideal, la.psi)] {
                if !g.bracket(u, &SVec::unit(e)).is_zero() {
                    rep.fail(|| format!("U{j} does not commute with d at level {}", la.index));
                }
            }
            if !metric.inner(u, &h).is_zero() {
                rep.fail(|| format!("U{j} not orthogonal to H_psi at level {}", la.index));
            }
        }
    }
    for (i, u) in us.iter().enumerate() {
        for (j, v) in us.iter().enumerate().skip(i + 1) {
            rep.checked += 1;
            if !metric.inner(u, v).is_zero() {
                rep.fail(|| format!("U{i} and U{j} not orthogonal"));
            }
        }
    }
    for (ideal, id) in g.ideals().iter().enumerate() {
        let rs = &id.roots;
        let mut count = vec![0usize; rs.num_positive()];
        for l in ld.levels.iter().filter(|l| l.ideal == ideal) {
            count[l.psi] += 1;
            for &b in &l.f {
                count[b] += 1;
            }
        }
        for c in ld.frozen.iter().filter(|c| c.ideal == ideal) {
            for &b in &c.positive {
                count[b] += 1;
            }
        }
        for (r, &c) in count.iter().enumerate() {
            rep.checked += 1;
            if c != 1 {
                rep.fail(|| format!("root {:?} of ideal {ideal} covered {c} times", rs.root(r).simple_coeffs));
            }
        }
        let levels = ld.levels.iter().filter(|l| l.ideal == ideal).count();
        let u = ld.levels.iter().filter(|l| l.ideal == ideal && l.u.is_some()).count();
        let frozen: usize = ld.frozen.iter().filter(|c| c.ideal == ideal).map(|c| c.algebra.rank).sum();
        rep.checked += 1;
        if levels + u + frozen != rs.rank() {
            rep.fail(|| format!("Cartan of ideal {ideal}: {levels} + {u} + {frozen} != {}", rs.rank()));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> ReductiveAlgebra {
        ReductiveAlgebra::new(&[s.parse().unwrap()], 0)
    }

    #[test]
    fn primitive_scaling() {
        let q = |a, b| Q::new(a, b);
        assert_eq!(primitive(&[q(-3, 2), q(1, 2), q(0, 1)]), vec![q(3, 1), q(-1, 1), q(0, 1)]);
    }

    #[test]
    fn g2_one_level_then_a1() {
        let ld = joyce_decompose(&alg("G2"), None);
        assert_eq!(ld.levels.len(), 2);
        assert_eq!(ld.levels[0].b, vec!["A1".parse().unwrap()]);
        assert!(ld.frozen.is_empty() && ld.u_gens().is_empty());
        assert!(verify_cond(&alg("G2"), &ld).passed());
    }

    #[test]
    fn stop_level_freezes_the_rest() {
        let g = alg("D6");
        let ld = joyce_decompose(&g, Some(1));
        assert_eq!(ld.levels.len(), 1);
        let t: Vec<String> = ld.frozen_types().iter().map(|t| t.to_string()).collect();
        assert_eq!(t, vec!["A1", "D4"]);
        assert!(verify_levels(&g, &ld).passed());
    }

    #[test]
    fn enumeration_counts_subtrees() {
        // A3 → A1 + u1: root split, child either kept or split
        assert_eq!(enumerate_decompositions(&alg("A3")).len(), 2);
        // D4 → 3 A1: each child independently
        assert_eq!(enumerate_decompositions(&alg("D4")).len(), 8);
    }
}
