use std::cmp::Reverse;
use std::collections::VecDeque;

use super::{Method, SolveResult, Tracker};
use crate::board::{rho, BoardDims, Position, Rectangle};
use crate::element::GroupElement;

/// Constructive solver using only single-cell and domino spins.
///
/// Positions are filled from the outside in (by distance to the board
/// center, ties by position). Each tile walks a shortest path of domino
/// swaps through the unfilled cells, so a filled cell is never disturbed.
/// Orientations are fixed last, for at most `w(m,n) + mn` spins.
pub fn restricted_solve_one_two(dims: BoardDims, board: &GroupElement) -> SolveResult {
    let mut t = Tracker::new(dims, board);
    let center = dims.full_rect();
    let mut order: Vec<Position> = dims.positions().collect();
    order.sort_by_key(|&p| (Reverse(rho(dims, &p, &center)), p));
    let mut filled = vec![false; dims.cells()];
    for p in order {
        let from = t.state.image(p.0);
        if from != p.0 {
            for (a, b) in path(dims, &filled, from, p.0)
                .windows(2)
                .map(|w| (w[0], w[1]))
            {
                let (lo, hi) = (a.min(b), a.max(b));
                let (r0, c0) = dims.coords(Position(lo));
                let (r1, c1) = dims.coords(Position(hi));
                t.apply(Rectangle {
                    top: r0,
                    left: c0,
                    bottom: r1,
                    right: c1,
                });
            }
        }
        filled[p.0] = true;
    }
    t.fix_orientations();
    t.finish(Method::Restricted)
}

/// Shortest path of orthogonal steps through unfilled cells.
fn path(dims: BoardDims, filled: &[bool], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; dims.cells()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        let (r, c) = dims.coords(Position(x));
        let steps = [
            (r > 0).then(|| (r - 1, c)),
            (c > 0).then(|| (r, c - 1)),
            (c + 1 < dims.cols()).then_some((r, c + 1)),
            (r + 1 < dims.rows()).then_some((r + 1, c)),
        ];
        for (rr, cc) in steps.into_iter().flatten() {
            let y = dims.position(rr, cc).0;
            if !filled[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut out = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        out.push(x);
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::restricted_upper_bound;
    use crate::spin::evaluate_word;
    use rand::SeedableRng;

    #[test]
    fn identity() {
        let dims = BoardDims::new(3, 3).unwrap();
        assert!(restricted_solve_one_two(dims, &GroupElement::identity(9))
            .word
            .is_empty());
    }

    #[test]
    fn random_boards_within_bound() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for m in 1..=5 {
            for n in 1..=5 {
                let dims = BoardDims::new(m, n).unwrap();
                for _ in 0..200 {
                    let b = GroupElement::random(dims.cells(), &mut rng);
                    let r = restricted_solve_one_two(dims, &b);
                    assert!(r.length as u64 <= restricted_upper_bound(dims), "{dims}");
                    assert!(r.word.iter().all(|s| s.area() <= 2));
                    assert!(b.then(&evaluate_word(dims, &r.word).unwrap()).is_identity());
                }
            }
        }
    }
}
