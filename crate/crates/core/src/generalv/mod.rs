//! Populations over an arbitrary polynomial space `V`: exponents and twists
//! at singular points, reduced Wronskians, Bethe cells normalized at a
//! regular point, master functions, numerical Bethe checks and fat cells.

mod fat;
mod master;
mod reduced;
pub mod rootfind;
mod subspace;
mod verify;

pub use fat::{fiber_coordinates, in_fat_cell, plucker_defect, same_fiber, scale_basis, scale_tuple};
pub use master::{log_gradient, master_function, CriticalPoint, MasterFunctionSpec};
pub use reduced::{
    bethe_cell_inverse, fertility_check, generation_curve, genericity_check, normalized_direction_v,
    normalized_mutation_v, reduced_wronski_map, reduced_wronski_map_at, reduced_wronskian,
    twisted_pair_constant, volume, wronskian_chart, GenerationCurve,
};
pub use rootfind::RootOptions;
pub use subspace::{exponents_at, singular_data, unipotent_basis, unipotent_basis_check, Exponents, SingularData, Subspace};
pub use verify::{bethe_verify, BetheReport, BetheStatus};

use crate::exactpoly::Rational;
use crate::mutations::MutationError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneralError {
    #[error("a space of dimension {0} has no flags to speak of")]
    TooSmall(usize),
    #[error("basis polynomials are linearly dependent")]
    Dependent,
    #[error("the space has a base point: common factor {0}")]
    BasePoint(String),
    #[error("Wronskian {0} has a non-rational root; supply singular data explicitly")]
    IrrationalSingularity(String),
    #[error("Wronskian does not match the twists derived from the exponents")]
    Inconsistent,
    #[error("points and weights have inconsistent shapes")]
    Shape,
    #[error("{0} is a singular point")]
    SingularPoint(Rational),
    #[error("reduced Wronskian of the first {index} polynomials is not a polynomial")]
    NotExact { index: usize },
    #[error("expected {expected} entries, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("input is not a basis of the space")]
    NotBasis,
    #[error("index {index} out of range for rank {rank}")]
    InvalidIndex { index: usize, rank: usize },
    #[error("twisted pair identity fails at index {index}")]
    TwistIdentity { index: usize },
    #[error("tuple is not in the Bethe cell")]
    NotInBetheCell,
    #[error("scaling factors must be nonzero")]
    ZeroScaling,
    #[error("coincident points make the master function singular")]
    Coincident,
    #[error(transparent)]
    Mutation(#[from] MutationError),
}
