use num_traits::Zero;

use chevalley::{InvariantMetric, SVec, Surd, Q};
use hkt::{hypercomplex_triple, HktSpace, HyperComplexTriple};

use crate::QktError;

/// Default bound on numerators and denominators in the rational U search.
pub const DEFAULT_HEIGHT: i128 = 64;

/// The u(2) generators inside m: for every level and flat block the four
/// vectors T_0 (its u(1) direction) and T_r = I_r T_0, and their sums K_a.
#[derive(Clone, Debug)]
pub struct U2Embedding {
    /// T_a per level block, then per flat block, in m-coordinates.
    pub parts: Vec<[SVec<Surd>; 4]>,
    /// K_a = Σ T_a in m-coordinates.
    pub k: [SVec<Surd>; 4],
    /// Rational vectors of g on the lines of K_a, with K_a = scale_a · generators[a].
    pub generators: [SVec<Q>; 4],
    pub scales: [Surd; 4],
    pub levels_used: usize,
    /// True when the U basis had to be rotated to make K_0 rational.
    pub rotated: bool,
    /// [K_r, K_s] = 0 for all r, s: the sp(1) part acts trivially.
    pub abelian: bool,
}

impl U2Embedding {
    /// The centre generator U = K_0 as a vector of g, when exactly rational.
    pub fn u_exact(&self) -> Option<&SVec<Q>> {
        (self.scales[0] == Surd::one()).then_some(&self.generators[0])
    }
}

/// v = c·r with r rational; c = 1 when v already is.
pub fn rational_direction(v: &SVec<Surd>) -> Option<(Surd, SVec<Q>)> {
    if v.iter().all(|(_, c)| c.is_rational()) {
        return Some((Surd::one(), SVec::from_pairs(v.iter().map(|(i, c)| (*i, c.to_rational().unwrap())))));
    }
    let (_, c) = v.iter().next()?;
    let inv = c.inv()?;
    let mut r = SVec::new();
    for (i, x) in v.iter() {
        r.add_at(*i, (&inv * x).to_rational()?);
    }
    Some((c.clone(), r))
}

fn block_u(hs: &HktSpace, rotation: &Option<Vec<Vec<Surd>>>, k: usize) -> SVec<Surd> {
    let norms = hs.space.m_norms();
    let bk = &hs.blocks[k];
    let mut out = SVec::new();
    for (j, bj) in hs.blocks.iter().enumerate() {
        let o = match rotation {
            Some(m) => m[k][j].clone(),
            None if j == k => Surd::one(),
            None => Surd::zero(),
        };
        if !o.is_zero() {
            out.add_at(bj.u, &o * &Surd::sqrt(norms[bk.h] / norms[bj.u]));
        }
    }
    out
}

fn parts_of(hs: &HktSpace, triple: &HyperComplexTriple) -> Vec<[SVec<Surd>; 4]> {
    let mut t0: Vec<SVec<Surd>> = (0..hs.blocks.len()).map(|k| block_u(hs, &triple.rotation, k)).collect();
    t0.extend(hs.flat.iter().map(|b| SVec::single(b[0], Surd::one())));
    let [i1, i2, i3] = &triple.i;
    t0.into_iter()
        .map(|u| {
            let (t1, t2, t3) = (i1.apply(&u), i2.apply(&u), i3.apply(&u));
            [u, t1, t2, t3]
        })
        .collect()
}

fn sum(parts: &[[SVec<Surd>; 4]], a: usize) -> SVec<Surd> {
    parts.iter().fold(SVec::new(), |acc, p| acc.plus(&p[a]))
}

/// x minus its B-projection onto the orthogonal family `basis`.
fn residual(b: &InvariantMetric, x: &SVec<Q>, basis: &[&SVec<Q>]) -> SVec<Q> {
    let mut r = x.clone();
    for y in basis {
        let n = b.inner(*y, *y);
        if !n.is_zero() {
            r = r.minus(&y.scaled_q(&(b.inner(x, *y) / n)));
        }
    }
    r
}

fn rational_sqrt(q: Q) -> Option<Q> {
    fn isqrt(n: i128) -> Option<i128> {
        if n < 0 {
            return None;
        }
        let r = (n as f64).sqrt().round() as i128;
        (r - 1..=r + 1).find(|s| *s >= 0 && s * s == n)
    }
    Some(Q::new(isqrt(*q.numer())?, isqrt(*q.denom())?))
}

/// Positive rationals x_j = p_j/q with Σ x_j² w_j = total, smallest q first.
fn exact_weights(w: &[Q], total: Q, height: i128) -> Option<Vec<Q>> {
    // p_j for j < last by search, the last one from the remaining budget
    fn go(w: &[Q], j: usize, rem: Q, q: i128, height: i128, acc: &mut Vec<Q>) -> bool {
        if j + 1 == w.len() {
            let Some(p) = rational_sqrt(rem / w[j]) else { return false };
            if p.is_integer() && p > Q::zero() && *p.numer() <= height {
                acc.push(p / Q::from_integer(q));
                return true;
            }
            return false;
        }
        for p in 1..=height {
            let used = Q::from_integer(p * p) * w[j];
            if used >= rem {
                break;
            }
            acc.push(Q::new(p, q));
            if go(w, j + 1, rem - used, q, height, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    if w.is_empty() {
        return None;
    }
    (1..=height).find_map(|q| {
        let mut acc = Vec::new();
        go(w, 0, total * Q::from_integer(q * q), q, height, &mut acc).then_some(acc)
    })
}

/// An orthogonal O on the levels such that U = Σ_k Ũ_k has rational
/// coefficients over the U generators: a Householder reflection taking
/// (√n_H_k) to (x_j √n_U_j).
pub fn rationalize(hs: &HktSpace, height: i128) -> Result<Vec<Vec<Surd>>, QktError> {
    let l = hs.blocks.len();
    let norms = hs.space.m_norms();
    let nh: Vec<Q> = hs.blocks.iter().map(|b| norms[b.h]).collect();
    let nu: Vec<Q> = hs.blocks.iter().map(|b| norms[b.u]).collect();
    let total = nh.iter().fold(Q::zero(), |s, x| s + x);
    let a: Vec<Surd> = nh.iter().map(|n| Surd::sqrt(*n)).collect();
    let v: Vec<Surd> = match exact_weights(&nu, total, height) {
        Some(x) => x.iter().zip(&nu).map(|(x, n)| Surd::sqrt(*n).scale(*x)).collect(),
        None => {
            // equal weights: U is rational up to one overall factor
            let lambda = Surd::sqrt(total / nu.iter().fold(Q::zero(), |s, x| s + x));
            nu.iter().map(|n| &lambda * &Surd::sqrt(*n)).collect()
        }
    };
    let w: Vec<Surd> = a.iter().zip(&v).map(|(x, y)| x - y).collect();
    let ww = w.iter().fold(Surd::zero(), |s, x| &s + &(x * x));
    let mut o = vec![vec![Surd::zero(); l]; l];
    for k in 0..l {
        for j in 0..l {
            let delta = if j == k { Surd::one() } else { Surd::zero() };
            o[k][j] = if ww.is_zero() {
                delta
            } else {
                &delta - &((&w[k] * &w[j]).scale(Q::from_integer(2)) / ww.clone())
            };
        }
    }
    for k in 0..l {
        for j in 0..l {
            let d = (0..l).fold(Surd::zero(), |s, i| &s + &(&o[k][i] * &o[j][i]));
            if d != if j == k { Surd::one() } else { Surd::zero() } {
                return Err(QktError::RationalizationFailed { levels: l, reason: format!("row {k}·row {j} = {d}") });
            }
        }
        let image = (0..l).fold(Surd::zero(), |s, i| &s + &(&o[i][k] * &a[i]));
        if image != v[k] {
            return Err(QktError::RationalizationFailed { levels: l, reason: format!("column {k} maps to {image}") });
        }
    }
    Ok(o)
}

/// K_1, K_2, K_3 must close among themselves and commute with k; K_0 must
/// be rational (rotating the U basis if needed) and central.
pub fn embed_u2(hs: &HktSpace, triple: &HyperComplexTriple, height: i128) -> Result<(HyperComplexTriple, U2Embedding), QktError> {
    let g = hs.g();
    let b = &hs.space.metric;
    let parts = parts_of(hs, triple);
    let mut gens: Vec<(Surd, SVec<Q>)> = Vec::new();
    for a in 1..4 {
        let (c, r) = rational_direction(&sum(&parts, a)).ok_or(QktError::Irrational)?;
        gens.push((c, hs.space.m.embed(&r)));
    }
    let y: Vec<&SVec<Q>> = gens.iter().map(|(_, v)| v).collect();
    let mut abelian = true;
    for r in 0..3 {
        for s in r + 1..3 {
            let br = g.bracket(y[r], y[s]);
            abelian &= br.is_zero();
            if !residual(b, &br, &y).is_zero() {
                return Err(QktError::NotClosed(format!("[K{}, K{}] leaves the span", r + 1, s + 1)));
            }
        }
        for (a, z) in hs.space.k.vectors().iter().enumerate() {
            if !g.bracket(y[r], z).is_zero() {
                return Err(QktError::NotClosed(format!("[K{}, k{a}] != 0", r + 1)));
            }
        }
    }
    let mut triple = triple.clone();
    let mut parts = parts;
    let mut rotated = false;
    let mut u = rational_direction(&sum(&parts, 0));
    if u.is_none() && hs.blocks.len() > 1 {
        triple = hypercomplex_triple(hs, triple.signs, Some(rationalize(hs, height)?))?;
        parts = parts_of(hs, &triple);
        rotated = true;
        u = rational_direction(&sum(&parts, 0));
    }
    let (c0, r0) = u.ok_or(QktError::Irrational)?;
    let u_vec = hs.space.m.embed(&r0);
    for (r, yr) in y.iter().enumerate() {
        if !g.bracket(&u_vec, yr).is_zero() {
            return Err(QktError::NotClosed(format!("[K0, K{}] != 0", r + 1)));
        }
    }
    for (a, z) in hs.space.k.vectors().iter().enumerate() {
        if !g.bracket(&u_vec, z).is_zero() {
            return Err(QktError::NotClosed(format!("[K0, k{a}] != 0")));
        }
    }
    let [(c1, y1), (c2, y2), (c3, y3)]: [(Surd, SVec<Q>); 3] = gens.try_into().unwrap();
    let k = [sum(&parts, 0), sum(&parts, 1), sum(&parts, 2), sum(&parts, 3)];
    let emb = U2Embedding {
        parts,
        k,
        generators: [u_vec, y1, y2, y3],
        scales: [c0, c1, c2, c3],
        levels_used: hs.blocks.len(),
        rotated,
        abelian,
    };
    Ok((triple, emb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn weights_for_a_sum_of_two_squares() {
        // 15 x² + 3 y² = 2 has the small solution x = y = 1/3
        let x = exact_weights(&[Q::from_integer(15), Q::from_integer(3)], Q::from_integer(2), 64).unwrap();
        assert_eq!(x, vec![Q::new(1, 3), Q::new(1, 3)]);
        assert!(exact_weights(&[Q::from_integer(3)], Q::from_integer(1), 64).is_none());
    }

    #[test]
    fn direction_of_a_surd_multiple() {
        let r3 = Surd::sqrt(Q::from_integer(3));
        let v = SVec::from_pairs([(0, r3.clone()), (2, r3.scale(Q::new(-1, 2)))]);
        let (c, r) = rational_direction(&v).unwrap();
        assert_eq!(c, r3);
        assert_eq!(r, SVec::from_pairs([(0, Q::one()), (2, Q::new(-1, 2))]));
        let bad = SVec::from_pairs([(0, r3), (1, Surd::one())]);
        assert!(rational_direction(&bad).is_none());
    }
}
