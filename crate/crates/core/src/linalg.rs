//! Exact Gaussian elimination over ℚ(√2).

use crate::Scalar;

/// Row-reduces `m` in place; returns the pivot columns.
pub fn row_reduce(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let top = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&top) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    let mut a = m.to_vec();
    row_reduce(&mut a).len()
}

/// Determinant of a square matrix.
pub fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Scalar::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let inv = a[c][c].inv().unwrap();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let (top, bot) = a.split_at_mut(i);
            for (x, y) in bot[0].iter_mut().zip(top[c].iter()) {
                *x -= &(&f * y);
            }
        }
    }
    d
}

/// A solution of `A x = b` (free variables set to 0) and the nullity of `A`,
/// or `None` if the system is inconsistent.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<(Vec<Scalar>, usize)> {
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Scalar>> =
        a.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain([bi.clone()]).collect()).collect();
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][n].clone();
    }
    Some((x, n - pivots.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from(x)).collect()
    }

    #[test]
    fn rank_and_det() {
        let m = vec![q(&[1, 2, 3]), q(&[2, 4, 6]), q(&[0, 1, 1])];
        assert_eq!(rank(&m), 2);
        assert!(det(&m).is_zero());
        let m = vec![q(&[0, 1]), q(&[1, 0])];
        assert_eq!(det(&m), Scalar::from(-1));
        let m = vec![vec![Scalar::sqrt2(), Scalar::one()], vec![Scalar::one(), Scalar::sqrt2()]];
        assert_eq!(det(&m), Scalar::one());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = vec![q(&[1, 1]), q(&[1, -1])];
        let (x, null) = solve(&a, &q(&[3, 1])).unwrap();
        assert_eq!((x, null), (q(&[2, 1]), 0));
        let a = vec![q(&[1, 1]), q(&[2, 2])];
        assert!(solve(&a, &q(&[1, 3])).is_none());
        assert_eq!(solve(&a, &q(&[1, 2])).unwrap().1, 1);
    }
}
