//! Normalized and unnormalized Wronskian mutations, evolutions along words,
//! the Wronski map with its triangular inverse, and positivity of Bethe
//! tuples.

mod bethe;
mod mv;
mod positivity;
mod solve;
mod wronski;

pub use bethe::{
    evolve, evolve_traced, normalized_direction, normalized_mutation, BetheTuple, EvolutionStep,
    MutationDirection,
};
pub use mv::{mv_cell_transition, mv_evolve, mv_mutation, sl3_relation, MvFamily};
pub use positivity::{all_positive_coeffs, positivity_check, sl4_inequalities, PositivityReport};
pub use solve::{normalized_solution, wronskian_solve, WronskianSolution};
pub use wronski::{
    column_from_coords, comparison_check, coords_to_tuple, triangular_coords, wronski_inverse,
    wronski_map, TriangularCoords,
};

use crate::cells::CellError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutationError {
    #[error("Wronskian equation has no polynomial solution")]
    NotFertile,
    #[error("no solution satisfies the normalization at the base point")]
    NormalizationImpossible,
    #[error("cannot solve against the zero polynomial")]
    ZeroPolynomial,
    #[error("mutation index {index} out of range for rank {rank}")]
    InvalidIndex { index: usize, rank: usize },
    #[error("word has {word} letters but {params} parameters were given")]
    LengthMismatch { word: usize, params: usize },
    #[error("not a Bethe tuple: {0}")]
    InvalidTuple(String),
    #[error("column is not in the unipotent cell")]
    NotInCell,
    #[error("tuple is not in the Bethe cell")]
    NotInBetheCell,
    #[error("triangular coordinates have the wrong shape")]
    InvalidCoords,
    #[error(transparent)]
    Cell(#[from] CellError),
}
