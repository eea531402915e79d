//! Endomorphisms of m in frame coordinates.

use serde::{Deserialize, Serialize};

use chevalley::{SVec, Surd, Q};

/// Sparse square matrix stored by columns: `col(j)` is the image of the
/// j-th frame vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endomorphism {
    n: usize,
    cols: Vec<SVec<Surd>>,
}

impl Endomorphism {
    pub fn zero(n: usize) -> Self {
        Endomorphism { n, cols: vec![SVec::new(); n] }
    }

    pub fn identity(n: usize) -> Self {
        Endomorphism { n, cols: (0..n).map(SVec::unit).collect() }
    }

    pub fn from_columns(cols: Vec<SVec<Surd>>) -> Self {
        Endomorphism { n: cols.len(), cols }
    }

    pub fn from_rational_columns(cols: &[SVec<Q>]) -> Self {
        Endomorphism::from_columns(cols.iter().map(|c| c.to_surd()).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn col(&self, j: usize) -> &SVec<Surd> {
        &self.cols[j]
    }

    pub fn set_col(&mut self, j: usize, v: SVec<Surd>) {
        self.cols[j] = v;
    }

    pub fn entry(&self, i: usize, j: usize) -> Surd {
        self.cols[j].get(i)
    }

    pub fn apply(&self, x: &SVec<Surd>) -> SVec<Surd> {
        let mut out = SVec::new();
        for (j, c) in x.iter() {
            out.add_scaled(&self.cols[*j], c);
        }
        out
    }

    /// self ∘ other
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism { n: self.n, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn plus(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism { n: self.n, cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.plus(b)).collect() }
    }

    pub fn minus(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism { n: self.n, cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.minus(b)).collect() }
    }

    pub fn scaled(&self, s: &Surd) -> Endomorphism {
        Endomorphism { n: self.n, cols: self.cols.iter().map(|c| c.scaled(s)).collect() }
    }

    pub fn neg(&self) -> Endomorphism {
        Endomorphism { n: self.n, cols: self.cols.iter().map(|c| c.neg()).collect() }
    }

    pub fn commutator(&self, other: &Endomorphism) -> Endomorphism {
        self.compose(other).minus(&other.compose(self))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// First column where self² ≠ −1.
    pub fn square_witness(&self) -> Option<usize> {
        (0..self.n).find(|&j| {
            let mut v = self.apply(&self.cols[j]);
            v.add_at(j, Surd::one());
            !v.is_zero()
        })
    }

    pub fn is_almost_complex(&self) -> bool {
        self.square_witness().is_none()
    }

    /// Row lists: for each i, the (j, entry(i, j)) with nonzero entries.
    pub fn rows(&self) -> Vec<Vec<(usize, Surd)>> {
        let mut r = vec![Vec::new(); self.n];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c.iter() {
                r[*i].push((j, v.clone()));
            }
        }
        r
    }

    pub fn transpose(&self) -> Endomorphism {
        Endomorphism::from_columns(self.rows().into_iter().map(SVec::from_pairs).collect())
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Dense rendering, one string per entry, for reports.
    pub fn to_dense_strings(&self) -> Vec<Vec<String>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j).to_string()).collect()).collect()
    }

    /// True if every entry is rational.
    pub fn is_rational(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|(_, v)| v.is_rational()))
    }

    pub fn trace(&self) -> Surd {
        (0..self.n).fold(Surd::zero(), |acc, j| &acc + &self.entry(j, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot() -> Endomorphism {
        Endomorphism::from_columns(vec![SVec::single(1, Surd::one()), SVec::single(0, -Surd::one())])
    }

    #[test]
    fn rotation_squares_to_minus_one() {
        let j = rot();
        assert!(j.is_almost_complex());
        assert_eq!(j.compose(&j), Endomorphism::identity(2).neg());
        assert!(j.trace().is_zero());
    }

    #[test]
    fn identity_is_not_complex() {
        assert_eq!(Endomorphism::identity(3).square_witness(), Some(0));
    }

    #[test]
    fn transpose_of_rotation_is_inverse() {
        let j = rot();
        assert_eq!(j.compose(&j.transpose()), Endomorphism::identity(2));
    }
}
