//! Words in the generators, reduced words, braid moves, Lusztig transition
//! maps and the S₄ permutohedron.

mod moves;
mod perm;
mod permutohedron;
mod word;

pub use moves::{
    apply_moves, available_moves, braid_move_r, chart_transition, commute_move_l, transition_map,
    transition_path, Move, ParamPoint,
};
pub use perm::{
    degree_trajectory, is_reduced, reduced_words_of_longest, shifted_degree_action, word_to_perm,
    DegreeVector, Permutation, MAX_ENUMERATION_RANK,
};
pub use permutohedron::{
    commutation_class, lower_route, permutohedron_s4, route_consistent, same_permutation,
    step_consistent, tetrahedron, tetrahedron_check, tetrahedron_sides, upper_route, DiagramStep,
    Permutohedron,
};
pub use word::{Word, WordError};
