use crate::exactpoly::{factorial, Poly};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::{CellError, UniMatrix};

/// A column `(b_1, …, b_{r+1})` of polynomials, an element of `C[x]^{r+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasisColumn {
    entries: Vec<Poly>,
}

impl BasisColumn {
    pub fn new(entries: Vec<Poly>) -> Self {
        BasisColumn { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Poly> {
        self.entries
    }

    /// Entry `i`, 1-based.
    pub fn get(&self, i: usize) -> &Poly {
        &self.entries[i - 1]
    }
}

impl fmt::Display for BasisColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `b⁽⁰⁾ = (1, x, x²/2, …, x^r/r!)`.
pub fn standard_column(rank: usize) -> BasisColumn {
    BasisColumn::new((0..=rank).map(Poly::divided_power).collect())
}

/// The matrix-vector product `g·b`.
pub fn act(g: &UniMatrix, b: &BasisColumn) -> Result<BasisColumn, CellError> {
    if g.size() != b.entries.len() {
        return Err(CellError::RankMismatch { matrix: g.rank(), column: b.rank() });
    }
    let entries = g
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .zip(&b.entries)
                .filter(|(c, _)| !c.is_zero())
                .fold(Poly::zero(), |acc, (c, p)| acc + p.scale(c))
        })
        .collect();
    Ok(BasisColumn::new(entries))
}

/// Whether `b_i = x^{i-1}/(i-1)! + Σ_{j≥i} b_{ij} x^j` with `deg b_i ≤ r`.
pub fn cell_membership(b: &BasisColumn) -> bool {
    let r = b.rank();
    b.entries.iter().enumerate().all(|(k, p)| {
        let lead = p.coeff(k) * factorial(k);
        p.degree().is_some_and(|d| d <= r)
            && lead.is_one()
            && (0..k).all(|j| p.coeff(j).is_zero())
    })
}

/// The matrix `g` with `b = g·b⁽⁰⁾`, when `b` lies in the cell.
pub fn to_unimatrix(b: &BasisColumn) -> Result<UniMatrix, CellError> {
    if !cell_membership(b) {
        return Err(CellError::NotInCell);
    }
    let r = b.rank();
    let rows = b
        .entries
        .iter()
        .map(|p| (0..=r).map(|j| p.divided_coeff(j)).collect())
        .collect();
    UniMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::elementary;
    use crate::exactpoly::{int, rat};

    #[test]
    fn standard_columns() {
        assert_eq!(standard_column(1).entries(), &[Poly::one(), Poly::x()]);
        let b = standard_column(3);
        assert_eq!(b.get(4), &Poly::monomial(rat(1, 6), 3));
        assert!(cell_membership(&b));
    }

    #[test]
    fn elementary_action() {
        let t = rat(-4, 9);
        let b = act(&elementary(1, &t, 2).unwrap(), &standard_column(2)).unwrap();
        assert_eq!(b.get(1), &Poly::from_coeffs(vec![int(1), t]));
        assert_eq!(b.get(2), &Poly::x());
        assert_eq!(act(&UniMatrix::identity(2), &b).unwrap(), b);
        assert!(act(&UniMatrix::identity(3), &b).is_err());
    }

    #[test]
    fn membership() {
        let x2 = Poly::divided_power(2);
        assert!(cell_membership(&BasisColumn::new(vec![Poly::from_ints(&[1, 1]), Poly::x(), x2.clone()])));
        assert!(!cell_membership(&BasisColumn::new(vec![Poly::x(), Poly::one(), x2.clone()])));
        assert!(!cell_membership(&BasisColumn::new(vec![Poly::one(), Poly::from_ints(&[0, 1, 0, 1]), x2])));
    }

    #[test]
    fn matrix_recovered_from_column() {
        let g = UniMatrix::from_ints(&[&[1, 2, -1], &[0, 1, 3], &[0, 0, 1]]).unwrap();
        let b = act(&g, &standard_column(2)).unwrap();
        assert_eq!(to_unimatrix(&b).unwrap(), g);
    }
}
