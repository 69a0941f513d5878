use super::{span, Method, SolveResult, Tracker};
use crate::board::{BoardDims, Rectangle};
use crate::element::GroupElement;

/// Constructive solver using every spin type.
///
/// Positions are filled one line at a time along the shorter side of the
/// unsolved region: the first tile of a line with one spin, each further
/// tile with at most two. The orientations are fixed last with single-cell
/// spins, for at most `3mn - (m+n)` spins in total.
pub fn greedy_solve(dims: BoardDims, board: &GroupElement) -> SolveResult {
    let mut t = Tracker::new(dims, board);
    let (m, n) = (dims.rows(), dims.cols());
    let (mut r0, mut c0) = (0, 0);
    while r0 < m && c0 < n {
        let by_column = m - r0 <= n - c0;
        let line: Vec<(usize, usize)> = if by_column {
            (r0..m).map(|r| (r, c0)).collect()
        } else {
            (c0..n).map(|c| (r0, c)).collect()
        };
        for (k, &(r, c)) in line.iter().enumerate() {
            let tile = dims.position(r, c).0;
            let (pr, pc) = t.where_is(tile);
            if (pr, pc) == (r, c) {
                continue;
            }
            if k == 0 {
                t.apply(Rectangle {
                    top: r,
                    left: c,
                    bottom: pr,
                    right: pc,
                });
            } else if by_column {
                if pr != r {
                    let (top, bottom) = span(pr, r);
                    t.apply(Rectangle {
                        top,
                        left: pc,
                        bottom,
                        right: pc,
                    });
                }
                if pc != c {
                    t.apply(Rectangle {
                        top: r,
                        left: c,
                        bottom: r,
                        right: pc,
                    });
                }
            } else {
                if pc != c {
                    let (left, right) = span(pc, c);
                    t.apply(Rectangle {
                        top: pr,
                        left,
                        bottom: pr,
                        right,
                    });
                }
                if pr != r {
                    t.apply(Rectangle {
                        top: r,
                        left: c,
                        bottom: pr,
                        right: c,
                    });
                }
            }
        }
        if by_column {
            c0 += 1;
        } else {
            r0 += 1;
        }
    }
    t.fix_orientations();
    t.finish(Method::Greedy)
}
