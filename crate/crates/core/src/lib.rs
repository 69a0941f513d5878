//! Arithmetic, solvers and exhaustive analysis for the spin puzzle on an
//! `m x n` board of reversible tiles.
//!
//! A board is an element of the hyperoctahedral group `Z/2 wr S_N` with
//! `N = mn`; a move (a *spin*) rotates a rectangle of tiles by 180 degrees
//! and turns each of them over.

pub mod board;
pub mod census;
pub mod element;
pub mod error;
pub mod isometry;
pub mod properties;
pub mod rewrite;
pub mod solver;
pub mod spin;
pub mod subgroups;
pub mod text;

pub use board::{
    rho, weight, BoardDims, GeneratorSet, HalfDistance, Position, Rectangle, SpinType,
};
pub use element::{permute_vector, GroupElement};
pub use error::{Result, SpinError};
pub use isometry::Isometry;
pub use rewrite::{shift_to_end, unique_solution_conditions, UniqueConditions};
pub use spin::{
    enumerate_spins, evaluate_word, is_spin, spin_about, spin_counts, Spin, SpinCounts,
};
pub use text::{format_board, format_word, parse_board, parse_board_with_dims, parse_word};
