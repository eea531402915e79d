use num_traits::Zero;
use rootsys::Q;

/// Solve the square system a·x = b over the rationals; None if singular.
pub fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let p = a[col][col];
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col] / p;
                for c in col..n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
                let v = b[col];
                b[r] -= f * v;
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let q = |n| Q::from_integer(n);
        let x = solve(vec![vec![q(2), q(-1)], vec![q(-1), q(2)]], vec![q(1), q(0)]).unwrap();
        assert_eq!(x, vec![Q::new(2, 3), Q::new(1, 3)]);
        assert!(solve(vec![vec![q(1), q(1)], vec![q(1), q(1)]], vec![q(0), q(1)]).is_none());
    }
}
