//! Exact Wronskian calculus, Bruhat cells of unipotent matrices and Bethe populations.

pub mod cells;
pub mod cli;
pub mod exactpoly;
pub mod generalv;
pub mod mutations;
pub mod sampling;
pub mod words;
