#![allow(dead_code)]

use bethe_cells::cells::{act, standard_column, BasisColumn, UniMatrix};
use bethe_cells::exactpoly::{int, Poly, Rational};
use bethe_cells::generalv::Subspace;
use bethe_cells::sampling::{signed_rational, SampleRng};

/// span(1, x², x³): weight (1, 0) at 0.
pub fn sparse_cubic() -> Subspace {
    Subspace::from_ints(&[&[1], &[0, 0, 1], &[0, 0, 0, 1]]).unwrap()
}

/// span(1, x³, (x − 1)³): weight (0, 1) at 0 and at 1.
pub fn two_point_cubic() -> Subspace {
    Subspace::from_ints(&[&[1], &[0, 0, 0, 1], &[-1, 3, -3, 1]]).unwrap()
}

/// span(1, x, x³, x⁴): weight (0, 1, 0) at 0.
pub fn gapped_quartic() -> Subspace {
    Subspace::from_ints(&[&[1], &[0, 1], &[0, 0, 0, 1], &[0, 0, 0, 0, 1]]).unwrap()
}

pub fn test_subspaces() -> Vec<(&'static str, Subspace)> {
    vec![("span(1,x^2,x^3)", sparse_cubic()), ("span(1,x^3,(x-1)^3)", two_point_cubic()), ("span(1,x,x^3,x^4)", gapped_quartic())]
}

/// Unitriangular matrix with independent signed rational entries.
pub fn random_unipotent(rng: &mut SampleRng, rank: usize) -> UniMatrix {
    let n = rank + 1;
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Less => signed_rational(rng),
                    std::cmp::Ordering::Equal => int(1),
                    std::cmp::Ordering::Greater => int(0),
                })
                .collect()
        })
        .collect();
    UniMatrix::from_rows(rows).unwrap()
}

pub fn random_cell_point(rng: &mut SampleRng, rank: usize) -> BasisColumn {
    act(&random_unipotent(rng, rank), &standard_column(rank)).unwrap()
}

/// A random invertible recombination of `basis`: lower times upper
/// unitriangular, with a nonzero diagonal.
pub fn random_basis(rng: &mut SampleRng, basis: &[Poly]) -> Vec<Poly> {
    let n = basis.len();
    let upper = random_unipotent(rng, n - 1);
    let lower = random_unipotent(rng, n - 1);
    let diag: Vec<Rational> = (0..n).map(|_| signed_rational(rng)).collect();
    let mixed: Vec<Poly> = (0..n)
        .map(|i| (0..n).fold(Poly::zero(), |acc, j| &acc + &basis[j].scale(upper.get(i + 1, j + 1))))
        .collect();
    (0..n)
        .map(|i| (0..n).fold(Poly::zero(), |acc, j| &acc + &mixed[j].scale(&(lower.get(j + 1, i + 1) * &diag[i]))))
        .collect()
}
