use crate::cells::{act, cell_membership, chart, standard_column, BasisColumn};
use crate::exactpoly::linear::{solve, LinearSolution};
use crate::exactpoly::rational::rows_as_strings;
use crate::exactpoly::{factorial, wronskian, Poly, PolyTuple, Rational};
use crate::words::Word;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{evolve, BetheTuple, MutationError};

/// `(b_1, Wr(b_1, b_2), …, Wr(b_1, …, b_r))`.
pub fn wronski_map(b: &BasisColumn) -> Result<BetheTuple, MutationError> {
    if !cell_membership(b) {
        return Err(MutationError::NotInCell);
    }
    let r = b.rank();
    let entries = (1..=r).map(|i| wronskian(&b.entries()[..i])).collect();
    BetheTuple::new(PolyTuple::new(entries))
}

/// The triangular array `a_{ij}`, `1 ≤ j ≤ r+1−i`, where
/// `y_i = 1 + Σ a_{ij} x^j/j!`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct TriangularCoords {
    #[serde(with = "rows_as_strings")]
    rows: Vec<Vec<Rational>>,
}

impl TriangularCoords {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self, MutationError> {
        let r = rows.len();
        if r == 0 || rows.iter().enumerate().any(|(k, row)| row.len() != r - k) {
            return Err(MutationError::InvalidCoords);
        }
        Ok(TriangularCoords { rows })
    }

    /// From the `q = r(r+1)/2` values listed row by row.
    pub fn from_flat(rank: usize, values: &[Rational]) -> Result<Self, MutationError> {
        if values.len() != rank * (rank + 1) / 2 {
            return Err(MutationError::InvalidCoords);
        }
        let mut it = values.iter().cloned();
        let rows = (1..=rank).map(|i| it.by_ref().take(rank + 1 - i).collect()).collect();
        TriangularCoords::new(rows)
    }

    pub fn zeros(rank: usize) -> Self {
        TriangularCoords { rows: (1..=rank).map(|i| vec![Rational::zero(); rank + 1 - i]).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// `a_{ij}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i - 1][j - 1]
    }

    pub fn flat(&self) -> Vec<Rational> {
        self.rows.iter().flatten().cloned().collect()
    }
}

impl<'de> Deserialize<'de> for TriangularCoords {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        TriangularCoords::new(rows_as_strings::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

pub fn triangular_coords(y: &BetheTuple) -> TriangularCoords {
    let r = y.rank();
    let rows = (1..=r)
        .map(|i| {
            let yi = y.get(i);
            (1..=r + 1 - i).map(|j| yi.divided_coeff(j)).collect()
        })
        .collect();
    TriangularCoords { rows }
}

/// The column `b ∈ 𝒩` whose Wronski image has triangular coordinates `a`.
///
/// Row `i` carries unknowns `b_{i,i}, …, b_{i,r}` (coefficients of
/// `x^i … x^r` in `b_i`), fixed by matching the coefficients of
/// `x^1 … x^{r+1−i}` of `Wr(b_1, …, b_i)`.
pub fn column_from_coords(a: &TriangularCoords) -> Result<BasisColumn, MutationError> {
    let r = a.rank();
    let mut b: Vec<Poly> = Vec::with_capacity(r + 1);
    for i in 1..=r + 1 {
        let leading = Poly::divided_power(i - 1);
        let unknowns: Vec<usize> = (i..=r).collect();
        let targets: Vec<Rational> = if i <= r {
            (1..=r + 1 - i).map(|j| a.get(i, j) / factorial(j)).collect()
        } else {
            Vec::new()
        };
        if unknowns.is_empty() {
            b.push(leading);
            continue;
        }
        let wr_with = |last: Poly| {
            let mut fs = b.clone();
            fs.push(last);
            wronskian(&fs)
        };
        let base = wr_with(leading.clone());
        let cols: Vec<Poly> = unknowns.iter().map(|&j| wr_with(Poly::monomial(Rational::one(), j))).collect();
        let matrix: Vec<Vec<Rational>> = (1..=targets.len())
            .map(|k| cols.iter().map(|c| c.coeff(k)).collect())
            .collect();
        let rhs: Vec<Rational> = targets.iter().enumerate().map(|(k, t)| t - base.coeff(k + 1)).collect();
        let LinearSolution::Solved { particular, rank } = solve(&matrix, &rhs) else {
            return Err(MutationError::NotInBetheCell);
        };
        if rank != unknowns.len() {
            return Err(MutationError::NotInBetheCell);
        }
        let bi = unknowns
            .iter()
            .zip(&particular)
            .fold(leading, |acc, (&j, u)| acc + Poly::monomial(u.clone(), j));
        b.push(bi);
    }
    Ok(BasisColumn::new(b))
}

/// The unique `b ∈ 𝒩` with `wronski_map(b) = y`; fails when `y` is not in
/// the Bethe cell.
pub fn wronski_inverse(y: &BetheTuple) -> Result<BasisColumn, MutationError> {
    let b = column_from_coords(&triangular_coords(y))?;
    if wronski_map(&b)? != *y {
        return Err(MutationError::NotInBetheCell);
    }
    Ok(b)
}

/// The Bethe tuple with triangular coordinates `a`.
pub fn coords_to_tuple(a: &TriangularCoords) -> Result<BetheTuple, MutationError> {
    wronski_map(&column_from_coords(a)?)
}

/// Whether `wronski_map(chart(h, c)·b⁽⁰⁾) = evolve(h, c)`.
pub fn comparison_check(word: &Word, params: &[Rational]) -> Result<bool, MutationError> {
    let g = chart(word, params)?;
    let b = act(&g, &standard_column(word.rank()))?;
    Ok(wronski_map(&b)? == evolve(word, params)?)
}
