//! Solvers: words of spins that return a board to the identity.
//!
//! A solution of a board `b` is a word `s_1 ... s_k` with
//! `b s_1 ... s_k = 1`, so the word evaluates to `b^-1`.

mod bounds;
mod greedy;
mod optimal;
mod pdb;
mod restricted;

use serde::{Deserialize, Serialize};

use crate::board::{BoardDims, Rectangle};
use crate::element::GroupElement;
use crate::spin::spin_element;

pub use bounds::{
    greedy_upper_bound, info_lower_bound, restricted_upper_bound, upper_bound_formulas,
    weight_lower_bound, BoundReport,
};
pub use greedy::greedy_solve;
pub use optimal::{optimal_solve, optimal_solve_with_table, OptimalSolver};
pub use restricted::restricted_solve_one_two;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Greedy,
    Restricted,
    Optimal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub word: Vec<Rectangle>,
    pub length: usize,
    pub method: Method,
}

impl SolveResult {
    fn new(word: Vec<Rectangle>, method: Method) -> Self {
        Self {
            length: word.len(),
            word,
            method,
        }
    }
}

/// A board being driven to the identity, with the spins applied so far.
struct Tracker {
    dims: BoardDims,
    state: GroupElement,
    word: Vec<Rectangle>,
}

impl Tracker {
    fn new(dims: BoardDims, board: &GroupElement) -> Self {
        Self {
            dims,
            state: board.clone(),
            word: Vec::new(),
        }
    }

    fn apply(&mut self, rect: Rectangle) {
        self.state = self.state.then(&spin_element(self.dims, rect));
        self.word.push(rect);
    }

    /// Position currently holding tile `tile`.
    fn where_is(&self, tile: usize) -> (usize, usize) {
        self.dims
            .coords(crate::board::Position(self.state.image(tile)))
    }

    fn fix_orientations(&mut self) {
        for p in self.dims.positions() {
            if self.state.is_reversed(p.0) {
                self.apply(Rectangle::cell(self.dims, p));
            }
        }
    }

    fn finish(self, method: Method) -> SolveResult {
        debug_assert!(self.state.is_identity());
        SolveResult::new(self.word, method)
    }
}

fn span(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}
