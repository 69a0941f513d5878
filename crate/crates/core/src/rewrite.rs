//! Rewriting products of spins: moving a `1 x 1` or whole-board spin to the
//! right end of a word, and the shape conditions a unique solution obeys.

use serde::Serialize;

use crate::board::{BoardDims, Rectangle};
use crate::error::{Result, SpinError};
use crate::spin::{is_spin, spin_about};

fn conjugate(dims: BoardDims, by: Rectangle, r: Rectangle) -> Result<Rectangle> {
    let s = spin_about(dims, by)?.element;
    let t = spin_about(dims, r)?.element;
    is_spin(dims, &s.then(&t).then(&s)).ok_or_else(|| {
        SpinError::Unsupported(format!(
            "{} does not conjugate {}",
            by.label(dims),
            r.label(dims)
        ))
    })
}

fn is_whole_board(dims: BoardDims, r: Rectangle) -> bool {
    r == dims.full_rect()
}

/// Rewrites `word` into an equal product whose last spin has the type of
/// `word[i]`.
///
/// A `1 x 1` spin is pushed right one step at a time: past a disjoint spin
/// unchanged, and past a spin `s` whose rectangle contains it by replacing
/// it with `s t s`. A whole-board spin `w` is moved to the end by replacing
/// each later spin `s` with `w s w`. Any other spin type is rejected.
pub fn shift_to_end(dims: BoardDims, word: &[Rectangle], i: usize) -> Result<Vec<Rectangle>> {
    let Some(&moving) = word.get(i) else {
        return Err(SpinError::Parse(format!("no spin at index {i}")));
    };
    for r in word {
        if !r.fits(dims) {
            let (p1, p2) = r.corners(dims);
            return Err(SpinError::InvalidRectangle(p1, p2));
        }
    }
    let mut out = word[..i].to_vec();
    if moving.area() == 1 {
        let mut t = moving;
        for &s in &word[i + 1..] {
            if s.contains(t) {
                t = conjugate(dims, s, t)?;
            }
            out.push(s);
        }
        out.push(t);
    } else if is_whole_board(dims, moving) {
        for &s in &word[i + 1..] {
            out.push(conjugate(dims, moving, s)?);
        }
        out.push(moving);
    } else {
        return Err(SpinError::Unsupported(format!(
            "only 1x1 and whole-board spins can be shifted, not {}",
            moving.spin_type()
        )));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UniqueConditions {
    /// No spin is `1 x 1` or covers the whole board.
    pub no_trivial_spins: bool,
    /// Consecutive rectangles overlap, have different centers and neither
    /// contains the other.
    pub consecutive_pairs_tangled: bool,
}

impl UniqueConditions {
    pub fn hold(self) -> bool {
        self.no_trivial_spins && self.consecutive_pairs_tangled
    }
}

/// Necessary conditions for `word` (of length at least 2) to be the unique
/// solution of a board.
pub fn unique_solution_conditions(dims: BoardDims, word: &[Rectangle]) -> UniqueConditions {
    UniqueConditions {
        no_trivial_spins: word
            .iter()
            .all(|&r| r.area() > 1 && !is_whole_board(dims, r)),
        consecutive_pairs_tangled: word.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            a.intersects(b) && !a.same_center(b) && !a.contains(b) && !b.contains(a)
        }),
    }
}
