//! The unipotent group `N`, Whitney-Lusztig charts, the action on the
//! polynomial column and total positivity.

mod chart;
mod column;
mod matrix;
mod positivity;

pub use chart::{chart, lusztig_matrix, totally_positive_sample};
pub use column::{act, cell_membership, standard_column, to_unimatrix, BasisColumn};
pub use matrix::{elementary, matrix_unit, minor, UniMatrix};
pub use positivity::{
    admissible_minors, is_totally_positive, is_totally_positive_by_factorization,
    is_totally_positive_by_minors, non_positive_minor, subsets, whitney_parameters, whitney_word,
    EXHAUSTIVE_RANK_LIMIT,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("word has {word} letters but {params} parameters were given")]
    LengthMismatch { word: usize, params: usize },
    #[error("matrix of rank {matrix} cannot act on a column of rank {column}")]
    RankMismatch { matrix: usize, column: usize },
    #[error("minor needs as many rows as columns, got {rows} and {cols}")]
    ShapeMismatch { rows: usize, cols: usize },
    #[error("matrix is not square of size at least 2")]
    NotSquare,
    #[error("entry ({row}, {col}) breaks unitriangularity")]
    NotUnitriangular { row: usize, col: usize },
    #[error("column is not of the form g·b⁽⁰⁾")]
    NotInCell,
}
