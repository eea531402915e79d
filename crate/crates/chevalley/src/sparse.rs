//! Sparse vectors over an ordered basis.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{ComplexSurd, Surd};
use rootsys::Q;

/// Exact coefficient field: rationals or surds.
pub trait Scalar:
    Clone + PartialEq + Zero + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn mul_q(&self, q: &Q) -> Self;
    fn from_q(q: Q) -> Self;
}

impl Scalar for Q {
    fn mul_q(&self, q: &Q) -> Self {
        self * q
    }
    fn from_q(q: Q) -> Self {
        q
    }
}

impl Scalar for Surd {
    fn mul_q(&self, q: &Q) -> Self {
        self.scale(*q)
    }
    fn from_q(q: Q) -> Self {
        Surd::from_q(q)
    }
}

impl Scalar for ComplexSurd {
    fn mul_q(&self, q: &Q) -> Self {
        self.scale(*q)
    }
    fn from_q(q: Q) -> Self {
        ComplexSurd::real(Surd::from_q(q))
    }
}

/// Sorted list of (index, nonzero coefficient).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SVec<T> {
    entries: Vec<(usize, T)>,
}

impl<T: Scalar> SVec<T> {
    pub fn new() -> Self {
        SVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SVec { entries: vec![(i, T::from_q(Q::from_integer(1)))] }
    }

    pub fn single(i: usize, c: T) -> Self {
        let mut v = SVec::new();
        v.add_at(i, c);
        v
    }

    /// Build from unsorted pairs, merging duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, T)>) -> Self {
        let mut v = SVec::new();
        for (i, c) in pairs {
            v.add_at(i, c);
        }
        v
    }

    pub fn from_dense(d: &[T]) -> Self {
        SVec {
            entries: d.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<T> {
        let mut d = vec![T::zero(); dim];
        for (i, c) in &self.entries {
            d[*i] = c.clone();
        }
        d
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, T)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> T {
        match self.entries.binary_search_by_key(&i, |t| t.0) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn add_at(&mut self, i: usize, c: T) {
        if c.is_zero() {
            return;
        }
        match self.entries.binary_search_by_key(&i, |t| t.0) {
            Ok(p) => {
                let s = self.entries[p].1.clone() + c;
                if s.is_zero() {
                    self.entries.remove(p);
                } else {
                    self.entries[p].1 = s;
                }
            }
            Err(p) => self.entries.insert(p, (i, c)),
        }
    }

    /// self += c · other
    pub fn add_scaled(&mut self, other: &SVec<T>, c: &T) {
        if c.is_zero() {
            return;
        }
        for (i, x) in &other.entries {
            self.add_at(*i, x.clone() * c.clone());
        }
    }

    pub fn add_scaled_q(&mut self, other: &SVec<T>, q: &Q) {
        if q.is_zero() {
            return;
        }
        for (i, x) in &other.entries {
            self.add_at(*i, x.mul_q(q));
        }
    }

    pub fn scaled(&self, c: &T) -> Self {
        let mut v = SVec::new();
        v.add_scaled(self, c);
        v
    }

    pub fn scaled_q(&self, q: &Q) -> Self {
        let mut v = SVec::new();
        v.add_scaled_q(self, q);
        v
    }

    pub fn neg(&self) -> Self {
        SVec { entries: self.entries.iter().map(|(i, c)| (*i, -c.clone())).collect() }
    }

    pub fn plus(&self, other: &SVec<T>) -> Self {
        let mut v = self.clone();
        v.add_scaled_q(other, &Q::from_integer(1));
        v
    }

    pub fn minus(&self, other: &SVec<T>) -> Self {
        let mut v = self.clone();
        v.add_scaled_q(other, &Q::from_integer(-1));
        v
    }

    /// Plain coordinate dot product.
    pub fn dot(&self, other: &SVec<T>) -> T {
        let mut s = T::zero();
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, b) = (self.entries[i].0, other.entries[j].0);
            if a == b {
                s = s + self.entries[i].1.clone() * other.entries[j].1.clone();
                i += 1;
                j += 1;
            } else if a < b {
                i += 1;
            } else {
                j += 1;
            }
        }
        s
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|t| t.0)
    }
}

impl SVec<Q> {
    pub fn to_surd(&self) -> SVec<Surd> {
        SVec { entries: self.entries.iter().map(|(i, c)| (*i, Surd::from_q(*c))).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_and_cancel() {
        let mut v: SVec<Q> = SVec::from_pairs([(3, Q::from_integer(2)), (1, Q::from_integer(1))]);
        v.add_at(3, Q::from_integer(-2));
        assert_eq!(v.len(), 1);
        assert_eq!(v.get(1), Q::from_integer(1));
        assert_eq!(v.get(3), Q::zero());
    }
}
