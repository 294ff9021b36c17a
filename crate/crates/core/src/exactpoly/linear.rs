//! Exact dense linear algebra over the rationals.

use super::rational::Rational;
use num_traits::{One, Zero};

/// Outcome of solving `A u = b` exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolution {
    /// A particular solution (free variables set to zero) and the rank of `A`.
    Solved { particular: Vec<Rational>, rank: usize },
    Inconsistent,
}

/// Reduced row echelon form, in place. Returns the pivot columns.
pub fn row_reduce(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rational::one() / &m[row][col];
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (src, dst) = if r < row {
                    let (a, b) = m.split_at_mut(row);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[row], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Solves `a u = b`; `a` is given row by row, each row of equal length.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> LinearSolution {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), ncols, "ragged matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, ncols);
    if aug[pivots.len()..].iter().any(|r| !r[ncols].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    let mut particular = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][ncols].clone();
    }
    LinearSolution::Solved {
        particular,
        rank: pivots.len(),
    }
}

pub fn rank(a: &[Vec<Rational>]) -> usize {
    let ncols = a.first().map_or(0, Vec::len);
    let mut m = a.to_vec();
    row_reduce(&mut m, ncols).len()
}

/// Determinant by Gaussian elimination.
pub fn det(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut m = a.to_vec();
    let mut acc = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            acc = -acc;
        }
        let pivot = m[col][col].clone();
        acc *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn solves_square_system() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![int(3), int(5)];
        match solve(&a, &b) {
            LinearSolution::Solved { particular, rank } => {
                assert_eq!(rank, 2);
                assert_eq!(particular, vec![rat(4, 5), rat(7, 5)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn detects_inconsistency() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&a, &[int(1), int(3)]), LinearSolution::Inconsistent);
        assert!(matches!(
            solve(&a, &[int(1), int(2)]),
            LinearSolution::Solved { rank: 1, .. }
        ));
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&m(&[&[2, 1], &[1, 1]])), int(1));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(det(&m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), int(0));
        assert_eq!(rank(&m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
    }
}
