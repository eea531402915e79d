use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{AlgebraType, RootError, RootSystem, Q};

/// Bond between two nodes: `[i, j, multiplicity, arrow]` on the wire.
///
/// `arrow` is +1 when the bond points from `i` to the shorter root `j`,
/// −1 for the reverse and 0 for equal lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize, pub i64, pub i64);

/// Dynkin diagram, optionally extended by the lowest root −ψ.
///
/// Nodes are labelled 1..=rank; the extended node, when present, is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinDiagram {
    pub algebra: AlgebraType,
    pub nodes: Vec<usize>,
    pub edges: Vec<Edge>,
    pub extended_node: Option<usize>,
    #[serde(skip)]
    pub cartan: Vec<Vec<i64>>,
}

fn edges_from_cartan(labels: &[usize], a: &[Vec<i64>]) -> Vec<Edge> {
    let mut out = Vec::new();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if a[i][j] == 0 {
                continue;
            }
            let (x, y) = (a[i][j].abs(), a[j][i].abs());
            // A_ij = 2 α_i·α_j / α_i·α_i is larger in size when α_i is short
            let arrow = (y - x).signum();
            out.push(Edge(labels[i], labels[j], x.max(y), arrow));
        }
    }
    out
}

/// Plain Dynkin diagram.
pub fn dynkin_diagram(rs: &RootSystem) -> DynkinDiagram {
    let labels: Vec<usize> = (1..=rs.rank()).collect();
    let cartan = rs.cartan_matrix().to_vec();
    DynkinDiagram {
        algebra: rs.algebra,
        edges: edges_from_cartan(&labels, &cartan),
        nodes: labels,
        extended_node: None,
        cartan,
    }
}

/// Generalized Cartan matrix of the extended diagram, extended node first.
pub fn extended_cartan(rs: &RootSystem) -> Vec<Vec<i64>> {
    let r = rs.rank();
    let low = rs.neg(rs.highest_root());
    let simple: Vec<usize> = (0..r).map(|i| rs.simple_root_index(i)).collect();
    let mut nodes = vec![low];
    nodes.extend(simple);
    let two = Q::from_integer(2);
    nodes
        .iter()
        .map(|&i| {
            nodes
                .iter()
                .map(|&j| {
                    let v = two * rs.inner(i, j) / rs.norm2(i);
                    v.to_integer() as i64
                })
                .collect()
        })
        .collect()
}

/// Extended Dynkin diagram: node 0 is −ψ.
pub fn extended_diagram(rs: &RootSystem) -> DynkinDiagram {
    let labels: Vec<usize> = (0..=rs.rank()).collect();
    let cartan = extended_cartan(rs);
    DynkinDiagram {
        algebra: rs.algebra,
        edges: edges_from_cartan(&labels, &cartan),
        nodes: labels,
        extended_node: Some(0),
        cartan,
    }
}

impl DynkinDiagram {
    /// Nodes adjacent to `node`.
    pub fn neighbours(&self, node: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.0 == node {
                    Some(e.1)
                } else if e.1 == node {
                    Some(e.0)
                } else {
                    None
                }
            })
            .collect();
        out.sort();
        out
    }

    /// Drop the extended node, if any.
    pub fn without_extension(&self) -> DynkinDiagram {
        match self.extended_node {
            None => self.clone(),
            Some(x) => {
                let keep: Vec<usize> = (0..self.nodes.len()).filter(|&p| self.nodes[p] != x).collect();
                let nodes: Vec<usize> = keep.iter().map(|&p| self.nodes[p]).collect();
                let cartan: Vec<Vec<i64>> =
                    keep.iter().map(|&i| keep.iter().map(|&j| self.cartan[i][j]).collect()).collect();
                DynkinDiagram {
                    algebra: self.algebra,
                    edges: edges_from_cartan(&nodes, &cartan),
                    nodes,
                    extended_node: None,
                    cartan,
                }
            }
        }
    }
}

/// All node permutations preserving the (generalized) Cartan matrix.
///
/// Preserving every entry A_ij is the same as preserving bonds, their
/// multiplicities and their arrows. Each permutation is returned as the
/// list of image labels in node order.
pub fn diagram_automorphisms(d: &DynkinDiagram) -> Vec<Vec<usize>> {
    let n = d.nodes.len();
    let a = &d.cartan;
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        n: usize,
        a: &[Vec<i64>],
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == n {
            out.push(img.clone());
            return;
        }
        for c in 0..n {
            if used[c] || a[c][c] != a[k][k] {
                continue;
            }
            if (0..k).all(|j| a[k][j] == a[c][img[j]] && a[j][k] == a[img[j]][c]) {
                used[c] = true;
                img[k] = c;
                go(k + 1, n, a, img, used, out);
                used[c] = false;
            }
        }
    }
    go(0, n, a, &mut img, &mut used, &mut out);
    out.into_iter().map(|p| p.into_iter().map(|i| d.nodes[i]).collect()).collect()
}

/// A colouring marks the simple roots that generate k.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    /// Zero-based simple-root indices.
    pub coloured: BTreeSet<usize>,
}

impl Colouring {
    pub fn new(rank: usize, nodes: impl IntoIterator<Item = usize>) -> Result<Self, RootError> {
        let coloured: BTreeSet<usize> = nodes.into_iter().collect();
        if let Some(&bad) = coloured.iter().find(|&&i| i >= rank) {
            return Err(RootError::InvalidColouring { node: bad + 1, rank });
        }
        Ok(Colouring { coloured })
    }

    /// Parse a comma list of one-based node labels.
    pub fn parse(rank: usize, s: &str) -> Result<Self, RootError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Colouring::default());
        }
        let mut nodes = Vec::new();
        for part in s.split(',') {
            let v: usize = part.trim().parse().map_err(|_| RootError::Parse(s.to_string()))?;
            if v == 0 || v > rank {
                return Err(RootError::InvalidColouring { node: v, rank });
            }
            nodes.push(v - 1);
        }
        Colouring::new(rank, nodes)
    }

    pub fn all(rank: usize) -> Self {
        Colouring { coloured: (0..rank).collect() }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.coloured.contains(&i)
    }
}

/// Roots lying in the span of the coloured simple roots.
pub fn coloured_roots(rs: &RootSystem, c: &Colouring) -> Vec<usize> {
    (0..rs.num_roots())
        .filter(|&i| {
            rs.root(i)
                .simple_coeffs
                .iter()
                .enumerate()
                .all(|(k, &x)| x == 0 || c.contains(k))
        })
        .collect()
}

/// ψ·α_i for each simple root; all nonnegative for the highest root.
pub fn highest_root_pairings(rs: &RootSystem) -> Vec<Q> {
    let psi = rs.highest_root();
    (0..rs.rank())
        .map(|i| {
            let a = rs.simple_root_index(i);
            let v = rs.pairing(psi, a);
            debug_assert!(v >= Q::zero());
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn extended_node_neighbours() {
        let d = extended_diagram(&rs("A4"));
        assert_eq!(d.neighbours(0), vec![1, 4]);
        let d = extended_diagram(&rs("E8"));
        assert_eq!(d.neighbours(0).len(), 1);
        let a1 = extended_diagram(&rs("A1"));
        assert_eq!(a1.edges, vec![Edge(0, 1, 2, 0)]);
        for t in AlgebraType::all_up_to(8) {
            let d = extended_diagram(&RootSystem::new(t));
            let c = t.canonical();
            let expect = if c.family == crate::Family::A && c.rank >= 2 { 2 } else { 1 };
            assert_eq!(d.neighbours(0).len(), expect, "{t}");
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(diagram_automorphisms(&dynkin_diagram(&rs("A3"))).len(), 2);
        assert_eq!(diagram_automorphisms(&extended_diagram(&rs("A2"))).len(), 6);
        assert_eq!(diagram_automorphisms(&dynkin_diagram(&rs("E8"))).len(), 1);
        assert_eq!(diagram_automorphisms(&dynkin_diagram(&rs("D4"))).len(), 6);
        assert_eq!(diagram_automorphisms(&extended_diagram(&rs("D4"))).len(), 24);
        assert_eq!(diagram_automorphisms(&dynkin_diagram(&rs("B3"))).len(), 1);
    }

    #[test]
    fn removing_extension_gives_plain() {
        for t in AlgebraType::all_up_to(8) {
            let r = RootSystem::new(t);
            assert_eq!(extended_diagram(&r).without_extension(), dynkin_diagram(&r), "{t}");
        }
    }

    #[test]
    fn multiplicities_match_cartan_products() {
        for t in AlgebraType::all_up_to(8) {
            let r = RootSystem::new(t);
            let a = r.cartan_matrix();
            for e in dynkin_diagram(&r).edges {
                assert_eq!(e.2, a[e.0 - 1][e.1 - 1] * a[e.1 - 1][e.0 - 1]);
            }
        }
    }

    #[test]
    fn colouring_parse() {
        let c = Colouring::parse(8, "2,3,4,5,8").unwrap();
        assert_eq!(c.coloured.iter().copied().collect::<Vec<_>>(), vec![1, 2, 3, 4, 7]);
        assert!(Colouring::parse(4, "5").is_err());
        assert!(Colouring::parse(4, "x").is_err());
    }
}
