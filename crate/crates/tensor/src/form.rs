//! Alternating forms on m and their type decomposition under a complex
//! structure.

use std::collections::BTreeMap;

use chevalley::{ComplexSurd, SVec, Scalar, Surd, Q};

use crate::Endomorphism;

/// Sparse alternating k-form, keyed by strictly increasing index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltForm<T> {
    degree: usize,
    comps: BTreeMap<Vec<usize>, T>,
}

/// Sort `idx` in place and return the permutation sign, or 0 on a repeat.
pub fn sort_with_sign(idx: &mut [usize]) -> i32 {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

fn signed<T: Scalar>(v: T, sign: i32) -> T {
    if sign < 0 {
        -v
    } else {
        v
    }
}

impl<T: Scalar> AltForm<T> {
    pub fn new(degree: usize) -> Self {
        AltForm { degree, comps: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Components on increasing tuples.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &T)> {
        self.comps.iter()
    }

    /// Value on an arbitrary ordered tuple.
    pub fn get(&self, idx: &[usize]) -> T {
        let mut s = idx.to_vec();
        let sign = sort_with_sign(&mut s);
        if sign == 0 {
            return T::zero();
        }
        signed(self.comps.get(&s).cloned().unwrap_or_else(T::zero), sign)
    }

    /// Add `v` at an ordered tuple, respecting antisymmetry.
    pub fn add_at(&mut self, idx: &[usize], v: T) {
        if v.is_zero() {
            return;
        }
        let mut s = idx.to_vec();
        let sign = sort_with_sign(&mut s);
        if sign != 0 {
            self.add_sorted(s, signed(v, sign));
        }
    }

    fn add_sorted(&mut self, key: Vec<usize>, v: T) {
        use std::collections::btree_map::Entry;
        match self.comps.entry(key) {
            Entry::Vacant(e) => {
                e.insert(v);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + v;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn plus(&self, other: &AltForm<T>) -> AltForm<T> {
        let mut out = self.clone();
        for (k, v) in &other.comps {
            out.add_sorted(k.clone(), v.clone());
        }
        out
    }

    pub fn minus(&self, other: &AltForm<T>) -> AltForm<T> {
        let mut out = self.clone();
        for (k, v) in &other.comps {
            out.add_sorted(k.clone(), -v.clone());
        }
        out
    }

    pub fn scaled_q(&self, q: &Q) -> AltForm<T> {
        let mut out = AltForm::new(self.degree);
        for (k, v) in &self.comps {
            out.add_sorted(k.clone(), v.mul_q(q));
        }
        out
    }

    /// Some tuple where the two forms differ.
    pub fn first_difference(&self, other: &AltForm<T>) -> Option<Vec<usize>> {
        self.minus(other).comps.into_keys().next()
    }

    /// Restriction to tuples drawn from `keep`.
    pub fn restricted(&self, keep: &[bool]) -> AltForm<T> {
        AltForm {
            degree: self.degree,
            comps: self.comps.iter().filter(|(k, _)| k.iter().all(|&i| keep[i])).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    pub fn entries(&self) -> Vec<(Vec<usize>, T)> {
        self.comps.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }
}

impl AltForm<Q> {
    pub fn to_surd(&self) -> AltForm<Surd> {
        AltForm { degree: self.degree, comps: self.comps.iter().map(|(k, v)| (k.clone(), Surd::from_q(*v))).collect() }
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i32)>) {
        if cur.len() == used.len() {
            let mut c = cur.clone();
            let s = sort_with_sign(&mut c);
            out.push((cur.clone(), s));
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Σ over slot sets T with |T| = j of ω with the complex structure applied
/// in the slots of T: (Ω_j ω)(X_1..X_k) = Σ_T ω(.., I X_t, ..).
pub fn slot_sum(form: &AltForm<Surd>, cx: &Endomorphism, j: usize) -> AltForm<Surd> {
    let k = form.degree;
    let rows = cx.rows();
    let perms = permutations(k);
    let subsets: Vec<u32> = (0u32..(1 << k)).filter(|s| s.count_ones() as usize == j).collect();
    let mut out = AltForm::new(k);
    let mut target = vec![0usize; k];
    for (s, w) in form.iter() {
        for (p, sign) in &perms {
            let y: Vec<usize> = p.iter().map(|&i| s[i]).collect();
            let w = signed(w.clone(), *sign);
            for &t in &subsets {
                expand(&y, t, 0, &rows, &mut target, w.clone(), &mut out);
            }
        }
    }
    out
}

// Recursively choose targets slot by slot, pruning non-increasing prefixes.
fn expand(
    y: &[usize],
    t: u32,
    slot: usize,
    rows: &[Vec<(usize, Surd)>],
    target: &mut Vec<usize>,
    w: Surd,
    out: &mut AltForm<Surd>,
) {
    if slot == y.len() {
        out.add_sorted(target.clone(), w);
        return;
    }
    let ok = |a: usize, target: &[usize]| slot == 0 || target[slot - 1] < a;
    if t & (1 << slot) == 0 {
        if ok(y[slot], target) {
            target[slot] = y[slot];
            expand(y, t, slot + 1, rows, target, w, out);
        }
    } else {
        for (a, c) in &rows[y[slot]] {
            if ok(*a, target) {
                target[slot] = *a;
                expand(y, t, slot + 1, rows, target, &w * c, out);
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i as i128 + 1))
}

/// Components ω^{(p,q)} for p + q = deg ω, using the per-slot projectors
/// (1 ∓ iI)/2 onto the ∓i eigenbundles.
pub fn type_split(form: &AltForm<Surd>, cx: &Endomorphism) -> BTreeMap<(usize, usize), AltForm<ComplexSurd>> {
    let k = form.degree;
    let omegas: Vec<AltForm<Surd>> = (0..=k).map(|j| slot_sum(form, cx, j)).collect();
    let norm = Q::new(1, 1i128 << k);
    let mut out = BTreeMap::new();
    for p in 0..=k {
        let mut part: AltForm<ComplexSurd> = AltForm::new(k);
        for (j, om) in omegas.iter().enumerate() {
            let c: i128 = (0..=j.min(p))
                .map(|i| binomial(j, i) * binomial(k - j, p - i) * if (j - i) % 2 == 0 { 1 } else { -1 })
                .sum();
            if c == 0 {
                continue;
            }
            let q = norm * Q::from_integer(c);
            for (key, v) in om.iter() {
                let v = v.scale(q);
                // multiply by (-i)^j
                let z = match j % 4 {
                    0 => ComplexSurd::new(v, Surd::zero()),
                    1 => ComplexSurd::new(Surd::zero(), -v),
                    2 => ComplexSurd::new(-v, Surd::zero()),
                    _ => ComplexSurd::new(Surd::zero(), v),
                };
                part.add_sorted(key.clone(), z);
            }
        }
        if !part.is_zero() {
            out.insert((p, k - p), part);
        }
    }
    out
}

/// The real form ω^{(p,q)} + ω^{(q,p)} (just ω^{(p,p)} when p = q).
pub fn real_type_part(form: &AltForm<Surd>, cx: &Endomorphism, p: usize) -> AltForm<Surd> {
    let k = form.degree;
    let split = type_split(form, cx);
    let mut sum: AltForm<ComplexSurd> = AltForm::new(k);
    for (pq, part) in &split {
        if pq.0 == p || (pq.1 == p && 2 * p != k) {
            sum = sum.plus(part);
        }
    }
    let mut out = AltForm::new(k);
    for (key, z) in sum.iter() {
        debug_assert!(z.im.is_zero(), "conjugate pair sum must be real");
        out.add_sorted(key.clone(), z.re.clone());
    }
    out
}

/// Σ_(p,q) ω^{(p,q)} − ω; empty when the decomposition is exact.
pub fn reconstruction_error(form: &AltForm<Surd>, split: &BTreeMap<(usize, usize), AltForm<ComplexSurd>>) -> AltForm<ComplexSurd> {
    let mut sum: AltForm<ComplexSurd> = AltForm::new(form.degree);
    for part in split.values() {
        sum = sum.plus(part);
    }
    for (key, v) in form.iter() {
        sum.add_sorted(key.clone(), -ComplexSurd::real(v.clone()));
    }
    sum
}

/// Interior product ι_v ω for v in frame coordinates.
pub fn contract<T: Scalar>(form: &AltForm<T>, v: &SVec<T>) -> AltForm<T> {
    let mut out = AltForm::new(form.degree.saturating_sub(1));
    for (key, w) in form.iter() {
        for (pos, i) in key.iter().enumerate() {
            let c = v.get(*i);
            if c.is_zero() {
                continue;
            }
            let rest: Vec<usize> = key.iter().enumerate().filter(|(p, _)| *p != pos).map(|(_, x)| *x).collect();
            out.add_sorted(rest, signed(c * w.clone(), if pos % 2 == 0 { 1 } else { -1 }));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // standard structure on R^4: e0 -> e1, e2 -> e3
    fn std4() -> Endomorphism {
        let one = Surd::one();
        Endomorphism::from_columns(vec![
            SVec::single(1, one.clone()),
            SVec::single(0, -one.clone()),
            SVec::single(3, one.clone()),
            SVec::single(2, -one),
        ])
    }

    #[test]
    fn sign_of_sort() {
        let mut a = [3, 1, 2];
        assert_eq!(sort_with_sign(&mut a), 1);
        assert_eq!(a, [1, 2, 3]);
        let mut b = [2, 1];
        assert_eq!(sort_with_sign(&mut b), -1);
        assert_eq!(sort_with_sign(&mut [1, 1]), 0);
    }

    #[test]
    fn kahler_form_is_type_one_one() {
        let mut w = AltForm::new(2);
        w.add_at(&[0, 1], Surd::one());
        w.add_at(&[2, 3], Surd::one());
        let split = type_split(&w, &std4());
        assert_eq!(split.keys().collect::<Vec<_>>(), vec![&(1, 1)]);
        assert!(reconstruction_error(&w, &split).is_zero());
    }

    #[test]
    fn holomorphic_volume_real_part() {
        // Re(dz1 ∧ dz2) = e02 − e13
        let mut w = AltForm::new(2);
        w.add_at(&[0, 2], Surd::one());
        w.add_at(&[1, 3], -Surd::one());
        let split = type_split(&w, &std4());
        assert!(!split.contains_key(&(1, 1)));
        assert_eq!(real_type_part(&w, &std4(), 2), w);
        assert!(reconstruction_error(&w, &split).is_zero());
    }

    #[test]
    fn slot_sum_zero_is_identity() {
        let mut w = AltForm::new(3);
        w.add_at(&[2, 0, 1], Surd::from_int(5));
        assert_eq!(slot_sum(&w, &std4(), 0), w);
        assert_eq!(w.get(&[0, 1, 2]), Surd::from_int(5));
    }

    #[test]
    fn contraction_signs() {
        let mut w: AltForm<Q> = AltForm::new(2);
        w.add_at(&[0, 1], Q::from_integer(1));
        let c = contract(&w, &SVec::unit(1));
        assert_eq!(c.get(&[0]), Q::from_integer(-1));
    }
}
