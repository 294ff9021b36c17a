use crate::exactpoly::linear::det;
use crate::exactpoly::rational::rows_as_strings;
use crate::exactpoly::{int, Rational};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Mul;

use super::CellError;

/// An upper unitriangular `(r+1)×(r+1)` rational matrix, an element of `N`.
///
/// Indices in the public API are 1-based, as in the matrix units `e_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct UniMatrix {
    #[serde(with = "rows_as_strings")]
    rows: Vec<Vec<Rational>>,
}

impl UniMatrix {
    pub fn identity(rank: usize) -> Self {
        let n = rank + 1;
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { int(1) } else { int(0) }).collect())
            .collect();
        UniMatrix { rows }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, CellError> {
        let n = rows.len();
        if n < 2 || rows.iter().any(|r| r.len() != n) {
            return Err(CellError::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let ok = match i.cmp(&j) {
                    std::cmp::Ordering::Equal => v.is_one(),
                    std::cmp::Ordering::Greater => v.is_zero(),
                    std::cmp::Ordering::Less => true,
                };
                if !ok {
                    return Err(CellError::NotUnitriangular { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(UniMatrix { rows })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, CellError> {
        UniMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    pub fn rank(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i - 1][j - 1]
    }

    /// Inverse, computed by back substitution.
    pub fn inverse(&self) -> UniMatrix {
        let n = self.size();
        let mut inv = UniMatrix::identity(self.rank()).rows;
        for j in 0..n {
            for i in (0..j).rev() {
                let mut s = Rational::zero();
                for k in i + 1..=j {
                    s += &self.rows[i][k] * &inv[k][j];
                }
                inv[i][j] = -s;
            }
        }
        UniMatrix { rows: inv }
    }
}

impl Mul for &UniMatrix {
    type Output = UniMatrix;

    fn mul(self, rhs: &UniMatrix) -> UniMatrix {
        assert_eq!(self.size(), rhs.size(), "rank mismatch in product");
        let n = self.size();
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate().skip(i) {
                let mut s = Rational::zero();
                for k in i..=j {
                    if !self.rows[i][k].is_zero() && !rhs.rows[k][j].is_zero() {
                        s += &self.rows[i][k] * &rhs.rows[k][j];
                    }
                }
                *out = s;
            }
        }
        UniMatrix { rows }
    }
}

impl Mul for UniMatrix {
    type Output = UniMatrix;
    fn mul(self, rhs: UniMatrix) -> UniMatrix {
        &self * &rhs
    }
}

impl fmt::Display for UniMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for UniMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = rows_as_strings::deserialize(d)?;
        UniMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// `1 + c·e_{i,i+1}` in `N` of the given rank.
pub fn elementary(i: usize, c: &Rational, rank: usize) -> Result<UniMatrix, CellError> {
    if i == 0 || i > rank {
        return Err(CellError::IndexOutOfRange { index: i, rank });
    }
    let mut g = UniMatrix::identity(rank);
    g.rows[i - 1][i] = c.clone();
    Ok(g)
}

/// `1 + c·e_{ij}` for any `i < j`.
pub fn matrix_unit(i: usize, j: usize, c: &Rational, rank: usize) -> Result<UniMatrix, CellError> {
    if i == 0 || j > rank + 1 || i >= j {
        return Err(CellError::IndexOutOfRange { index: j, rank });
    }
    let mut g = UniMatrix::identity(rank);
    g.rows[i - 1][j - 1] = c.clone();
    Ok(g)
}

/// Determinant of the submatrix on 1-based `rows × cols`.
pub fn minor(g: &UniMatrix, rows: &[usize], cols: &[usize]) -> Result<Rational, CellError> {
    if rows.len() != cols.len() {
        return Err(CellError::ShapeMismatch { rows: rows.len(), cols: cols.len() });
    }
    let n = g.size();
    if let Some(&bad) = rows.iter().chain(cols).find(|&&k| k == 0 || k > n) {
        return Err(CellError::IndexOutOfRange { index: bad, rank: g.rank() });
    }
    let sub: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| g.get(i, j).clone()).collect())
        .collect();
    Ok(det(&sub))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    #[test]
    fn elementary_shape() {
        let a = rat(5, 3);
        let e = elementary(1, &a, 2).unwrap();
        assert_eq!(e.get(1, 2), &a);
        assert_eq!(elementary(2, &int(0), 3).unwrap(), UniMatrix::identity(3));
        assert_eq!(
            elementary(3, &a, 2),
            Err(CellError::IndexOutOfRange { index: 3, rank: 2 })
        );
    }

    #[test]
    fn elementary_product() {
        let (e1, e2) = (elementary(1, &int(1), 2).unwrap(), elementary(2, &int(1), 2).unwrap());
        // e_23 e_12 = 0, so only e_1 e_2 fills the corner
        assert_eq!(&e2 * &e1, UniMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]).unwrap());
        assert_eq!(&e1 * &e2, UniMatrix::from_ints(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]).unwrap());
    }

    #[test]
    fn minors() {
        let g = UniMatrix::from_ints(&[&[1, 2, 1], &[0, 1, 1], &[0, 0, 1]]).unwrap();
        assert_eq!(minor(&g, &[1, 2], &[2, 3]).unwrap(), int(1));
        assert_eq!(minor(&UniMatrix::identity(2), &[1, 2], &[1, 2]).unwrap(), int(1));
        let h = matrix_unit(1, 3, &int(1), 2).unwrap();
        assert_eq!(minor(&h, &[1, 2], &[2, 3]).unwrap(), int(-1));
        assert!(minor(&g, &[1], &[1, 2]).is_err());
    }

    #[test]
    fn inverse_and_validation() {
        let g = UniMatrix::from_ints(&[&[1, 2, 1], &[0, 1, 3], &[0, 0, 1]]).unwrap();
        assert_eq!(&g * &g.inverse(), UniMatrix::identity(2));
        assert!(UniMatrix::from_ints(&[&[1, 0], &[1, 1]]).is_err());
        assert!(UniMatrix::from_ints(&[&[2, 0], &[0, 1]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = UniMatrix::from_rows(vec![
            vec![int(1), rat(-3, 4)],
            vec![int(0), int(1)],
        ])
        .unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"[["1","-3/4"],["0","1"]]"#);
        assert_eq!(serde_json::from_str::<UniMatrix>(&s).unwrap(), g);
    }
}
