use std::collections::BTreeSet;

use crate::{AlgebraType, Family, RootError, RootSystem};

/// Identify a connected Cartan matrix.
pub fn classify_cartan(a: &[Vec<i64>]) -> Result<AlgebraType, RootError> {
    let n = a.len();
    let bad = || RootError::Unclassifiable(format!("{a:?}"));
    if n == 0 {
        return Err(bad());
    }
    if n == 1 {
        return AlgebraType::new(Family::A, 1);
    }
    let mut deg = vec![0usize; n];
    let mut maxbond = 0;
    let mut heavy = None;
    for i in 0..n {
        for j in 0..n {
            if i != j && a[i][j] != 0 {
                deg[i] += 1;
                let m = a[i][j] * a[j][i];
                if m > maxbond {
                    maxbond = m;
                    heavy = Some((i, j));
                }
            }
        }
    }
    match maxbond {
        3 if n == 2 => AlgebraType::new(Family::G, 2),
        2 => {
            let (i, j) = heavy.unwrap();
            if n == 2 {
                return AlgebraType::new(Family::C, 2);
            }
            if deg[i] == 2 && deg[j] == 2 {
                if n == 4 {
                    return AlgebraType::new(Family::F, 4);
                }
                return Err(bad());
            }
            let (leaf, other) = if deg[i] == 1 { (i, j) } else { (j, i) };
            // the leaf is short exactly when A_leaf,other = −2
            if a[leaf][other] == -2 {
                AlgebraType::new(Family::B, n)
            } else {
                AlgebraType::new(Family::C, n)
            }
        }
        1 => {
            let branch: Vec<usize> = (0..n).filter(|&i| deg[i] == 3).collect();
            match branch.as_slice() {
                [] => AlgebraType::new(Family::A, n),
                [b] => {
                    let mut arms: Vec<usize> = Vec::new();
                    for start in (0..n).filter(|&j| j != *b && a[*b][j] != 0) {
                        let mut len = 1;
                        let (mut prev, mut cur) = (*b, start);
                        loop {
                            let nxt: Vec<usize> =
                                (0..n).filter(|&k| k != cur && k != prev && a[cur][k] != 0).collect();
                            match nxt.as_slice() {
                                [] => break,
                                [k] => {
                                    prev = cur;
                                    cur = *k;
                                    len += 1;
                                }
                                _ => return Err(bad()),
                            }
                        }
                        arms.push(len);
                    }
                    arms.sort();
                    match arms.as_slice() {
                        [1, 1, _] => AlgebraType::new(Family::D, n),
                        [1, 2, 2] => AlgebraType::new(Family::E, 6),
                        [1, 2, 3] => AlgebraType::new(Family::E, 7),
                        [1, 2, 4] => AlgebraType::new(Family::E, 8),
                        _ => Err(bad()),
                    }
                }
                _ => Err(bad()),
            }
        }
        _ => Err(bad()),
    }
}

/// One simple ideal of a closed, negation-symmetric root subsystem.
#[derive(Clone, Debug)]
pub struct Component {
    pub algebra: AlgebraType,
    /// Indices into the ambient system, positive then negative, ambient order.
    pub roots: Vec<usize>,
    pub positive: Vec<usize>,
    pub simple: Vec<usize>,
    pub highest: usize,
}

/// Split a closed root subsystem into simple components.
///
/// Positivity is inherited from the ambient system, the simple roots are the
/// indecomposable positive roots, and the highest root is the positive root
/// of maximal ambient height.
pub fn components(rs: &RootSystem, roots: &[usize]) -> Result<Vec<Component>, RootError> {
    let set: BTreeSet<usize> = roots.iter().copied().collect();
    let pos: Vec<usize> = set.iter().copied().filter(|&i| rs.is_positive(i)).collect();
    let simple: Vec<usize> = pos
        .iter()
        .copied()
        .filter(|&g| {
            !pos.iter().any(|&a| {
                a != g && rs.sub(g, a).map_or(false, |d| rs.is_positive(d) && set.contains(&d))
            })
        })
        .collect();
    let n = simple.len();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if rs.inner(simple[i], simple[j]) != num_traits::Zero::zero() {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut label: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let r = find(&mut comp, i);
        let g = match label[r] {
            Some(g) => g,
            None => {
                groups.push(Vec::new());
                label[r] = Some(groups.len() - 1);
                groups.len() - 1
            }
        };
        groups[g].push(simple[i]);
    }
    let mut out = Vec::new();
    for g in groups {
        let mut cpos: Vec<usize> = pos
            .iter()
            .copied()
            .filter(|&p| g.iter().any(|&s| rs.inner(p, s) != num_traits::Zero::zero()))
            .collect();
        cpos.sort();
        let mut croots = cpos.clone();
        croots.extend(cpos.iter().map(|&p| rs.neg(p)));
        let cartan: Vec<Vec<i64>> = g
            .iter()
            .map(|&i| g.iter().map(|&j| rs.pairing(j, i).to_integer() as i64).collect())
            .collect();
        let algebra = classify_cartan(&cartan)?;
        let highest = *cpos
            .iter()
            .max_by_key(|&&p| (rs.root(p).height(), p))
            .expect("empty component");
        out.push(Component { algebra, roots: croots, positive: cpos, simple: g, highest });
    }
    Ok(out)
}
