//! Spins: 180 degree rotations of a rectangle that also reverse every tile
//! inside it.

use serde::Serialize;

use crate::board::{rho, BoardDims, GeneratorSet, Position, Rectangle, SpinType};
use crate::element::GroupElement;
use crate::error::{Result, SpinError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spin {
    pub rect: Rectangle,
    pub element: GroupElement,
}

/// The spin about `rect`: cells are paired by the 180 degree rotation of the
/// rectangle and every covered position has its orientation flipped.
pub fn spin_about(dims: BoardDims, rect: Rectangle) -> Result<Spin> {
    if !rect.fits(dims) {
        let (p1, p2) = (
            rect.top * dims.cols() + rect.left + 1,
            rect.bottom * dims.cols() + rect.right + 1,
        );
        return Err(SpinError::InvalidRectangle(p1, p2));
    }
    Ok(Spin {
        rect,
        element: spin_element(dims, rect),
    })
}

pub(crate) fn spin_element(dims: BoardDims, rect: Rectangle) -> GroupElement {
    let mut perm: Vec<u8> = (0..dims.cells() as u8).collect();
    for p in rect.cells(dims) {
        let (r, c) = dims.coords(p);
        let (rr, cc) = rect.rotate(r, c);
        perm[p.0] = dims.position(rr, cc).0 as u8;
    }
    GroupElement::from_parts_unchecked(perm, rect.mask(dims))
}

/// The pairing rule stated with distances: two cells of `rect` are swapped
/// when `rho(p1,p2) = 2 rho(p1,R) = 2 rho(p2,R)`.
///
/// Under the l1 norm this rule is satisfied by every rotation pair, but once
/// both sides are at least 3 it also admits extra pairs, so [`spin_about`]
/// uses the rotation itself.
pub fn transposition_criterion(
    dims: BoardDims,
    rect: Rectangle,
    p1: Position,
    p2: Position,
) -> bool {
    let d12 = rho(dims, &p1, &p2).halves();
    let d1 = rho(dims, &p1, &rect).halves();
    let d2 = rho(dims, &p2, &rect).halves();
    d12 == 2 * d1 && d12 == 2 * d2
}

/// Recovers the rectangle of a spin, or `None` if `e` is not a spin. The
/// identity is not a spin.
pub fn is_spin(dims: BoardDims, e: &GroupElement) -> Option<Rectangle> {
    if e.cells() != dims.cells() || e.signs() == 0 {
        return None;
    }
    let mut rect = Rectangle {
        top: usize::MAX,
        left: usize::MAX,
        bottom: 0,
        right: 0,
    };
    for p in 0..dims.cells() {
        if e.is_reversed(p) {
            let (r, c) = dims.coords(Position(p));
            rect.top = rect.top.min(r);
            rect.left = rect.left.min(c);
            rect.bottom = rect.bottom.max(r);
            rect.right = rect.right.max(c);
        }
    }
    if rect.mask(dims) != e.signs() {
        return None;
    }
    (spin_element(dims, rect) == *e).then_some(rect)
}

/// Every rectangle on the board, in `(p1, p2)` order.
pub fn all_rectangles(dims: BoardDims) -> Vec<Rectangle> {
    let mut rects = Vec::new();
    for top in 0..dims.rows() {
        for left in 0..dims.cols() {
            for bottom in top..dims.rows() {
                for right in left..dims.cols() {
                    rects.push(Rectangle {
                        top,
                        left,
                        bottom,
                        right,
                    });
                }
            }
        }
    }
    rects.sort();
    rects
}

/// All spins whose type belongs to `gens`, ordered by `(p1, p2)`.
pub fn enumerate_spins(dims: BoardDims, gens: &GeneratorSet) -> Vec<Spin> {
    all_rectangles(dims)
        .into_iter()
        .filter(|r| gens.admits(*r))
        .map(|rect| Spin {
            rect,
            element: spin_element(dims, rect),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCount {
    pub spin_type: SpinType,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinCounts {
    pub per_type: Vec<TypeCount>,
    pub total: u64,
    pub type_count: u64,
}

/// Number of `i x j` rectangles (`R_{i x j}`, not symmetrized).
pub fn oriented_rect_count(dims: BoardDims, i: usize, j: usize) -> u64 {
    let (m, n) = (dims.rows(), dims.cols());
    if i > m || j > n {
        return 0;
    }
    ((m + 1 - i) * (n + 1 - j)) as u64
}

fn choose2(k: usize) -> u64 {
    (k * (k - 1) / 2) as u64
}

/// Closed-form spin counts for a board.
pub fn spin_counts(dims: BoardDims) -> SpinCounts {
    let per_type = dims
        .spin_types()
        .into_iter()
        .map(|t| {
            let (i, j) = t.sides();
            let count = if i == j {
                oriented_rect_count(dims, i, i)
            } else {
                oriented_rect_count(dims, i, j) + oriented_rect_count(dims, j, i)
            };
            TypeCount {
                spin_type: t,
                count,
            }
        })
        .collect();
    let (m, n) = (dims.rows().min(dims.cols()), dims.rows().max(dims.cols()));
    SpinCounts {
        per_type,
        total: choose2(m + 1) * choose2(n + 1),
        type_count: (m * (2 * n - m + 1) / 2) as u64,
    }
}

/// Left-to-right product of the spins in `word`.
pub fn evaluate_word(dims: BoardDims, word: &[Rectangle]) -> Result<GroupElement> {
    let mut acc = GroupElement::identity(dims.cells());
    for &rect in word {
        let s = spin_about(dims, rect)?;
        acc = acc.then(&s.element);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: usize, n: usize) -> BoardDims {
        BoardDims::new(m, n).unwrap()
    }

    fn rect(dims: BoardDims, p1: usize, p2: usize) -> Rectangle {
        Rectangle::from_corners(dims, p1, p2).unwrap()
    }

    fn el(n: usize, s: &str) -> GroupElement {
        GroupElement::from_cycle_notation(n, s).unwrap()
    }

    #[test]
    fn spin_about_examples() {
        let dims = d(3, 3);
        assert_eq!(
            spin_about(dims, rect(dims, 2, 6)).unwrap().element,
            el(9, "((2 6)(3 5), 011011000)")
        );
        assert_eq!(
            spin_about(dims, rect(dims, 1, 1)).unwrap().element,
            el(9, "(ι, 100000000)")
        );
        assert_eq!(
            spin_about(dims, rect(dims, 1, 6)).unwrap().element,
            el(9, "((1 6)(2 5)(3 4), 111111000)")
        );
    }

    #[test]
    fn product_of_two_spins() {
        let dims = d(3, 3);
        let a = spin_about(dims, rect(dims, 1, 5)).unwrap().element;
        let b = spin_about(dims, rect(dims, 3, 9)).unwrap().element;
        assert_eq!(a.mul(&b).unwrap(), el(9, "((1 5)(2 4)(3 9), 111111001)"));
    }

    #[test]
    fn is_spin_roundtrip_and_rejections() {
        let dims = d(3, 3);
        assert_eq!(is_spin(dims, &GroupElement::identity(9)), None);
        let r = rect(dims, 2, 6);
        assert_eq!(is_spin(dims, &spin_element(dims, r)), Some(r));
        // Right mask, wrong permutation.
        assert_eq!(is_spin(dims, &el(9, "(ι, 011011000)")), None);
    }

    #[test]
    fn products_of_distinct_spins_on_2x2_are_not_spins() {
        let dims = d(2, 2);
        let spins = enumerate_spins(dims, &GeneratorSet::all(dims));
        assert_eq!(spins.len(), 9);
        for a in &spins {
            for b in &spins {
                let p = a.element.mul(&b.element).unwrap();
                assert_eq!(is_spin(dims, &p), None, "{:?} {:?}", a.rect, b.rect);
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let dims = d(3, 3);
        assert_eq!(enumerate_spins(dims, &GeneratorSet::all(dims)).len(), 36);
        let one = d(1, 1);
        let only = enumerate_spins(one, &GeneratorSet::all(one));
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].rect.label(one), "[1,1]");
        let twos = GeneratorSet::new([SpinType::new(2, 2)]);
        assert_eq!(enumerate_spins(dims, &twos).len(), 4);
    }

    #[test]
    fn enumeration_is_ordered_by_corners() {
        let dims = d(3, 4);
        let spins = enumerate_spins(dims, &GeneratorSet::all(dims));
        let corners: Vec<_> = spins.iter().map(|s| s.rect.corners(dims)).collect();
        let mut sorted = corners.clone();
        sorted.sort();
        assert_eq!(corners, sorted);
    }

    #[test]
    fn count_examples() {
        let c = spin_counts(d(3, 3));
        assert_eq!((c.total, c.type_count), (36, 6));
        let c = spin_counts(d(1, 1));
        assert_eq!((c.total, c.type_count), (1, 1));
        let c = spin_counts(d(2, 3));
        assert_eq!((c.total, c.type_count), (18, 5));
    }

    #[test]
    fn counts_match_enumeration() {
        for m in 1..=5 {
            for n in 1..=5 {
                let dims = d(m, n);
                let counts = spin_counts(dims);
                let all = enumerate_spins(dims, &GeneratorSet::all(dims));
                assert_eq!(counts.total as usize, all.len(), "{m}x{n}");
                assert_eq!(
                    counts.type_count as usize,
                    dims.spin_types().len(),
                    "{m}x{n}"
                );
                for tc in &counts.per_type {
                    let n_type = all
                        .iter()
                        .filter(|s| s.rect.spin_type() == tc.spin_type)
                        .count();
                    assert_eq!(tc.count as usize, n_type, "{m}x{n} {}", tc.spin_type);
                }
            }
        }
    }

    #[test]
    fn rotation_pairs_satisfy_the_distance_rule() {
        for i in 1..=4 {
            for j in 1..=4 {
                let dims = d(i, j);
                let r = dims.full_rect();
                for p in r.cells(dims) {
                    let (row, col) = dims.coords(p);
                    let (rr, cc) = r.rotate(row, col);
                    assert!(transposition_criterion(dims, r, p, dims.position(rr, cc)));
                }
            }
        }
    }

    #[test]
    fn distance_rule_pairs_coincide_with_rotation_on_thin_rectangles() {
        for i in 1..=4 {
            for j in 1..=4 {
                let dims = d(i, j);
                let r = dims.full_rect();
                let extra = r.cells(dims).any(|p| {
                    let (row, col) = dims.coords(p);
                    let partner = dims.position(r.rotate(row, col).0, r.rotate(row, col).1);
                    r.cells(dims)
                        .any(|q| q != partner && transposition_criterion(dims, r, p, q))
                });
                let ambiguous = i >= 3 && j >= 3;
                assert_eq!(extra, ambiguous, "{i}x{j}");
            }
        }
        // The smallest witness: the top edge cell and the left edge cell of a
        // 3x3 rectangle sit at distance 2 = 2 * 1 from each other.
        let dims = d(3, 3);
        assert!(transposition_criterion(
            dims,
            dims.full_rect(),
            Position(1),
            Position(3)
        ));
    }

    #[test]
    fn word_evaluation_examples() {
        let dims = d(3, 3);
        assert!(evaluate_word(dims, &[]).unwrap().is_identity());
        let swap_adjacent: Vec<_> = [(2, 3), (1, 4), (1, 5), (2, 3), (1, 5), (1, 4), (2, 3)]
            .iter()
            .map(|&(a, b)| rect(dims, a, b))
            .collect();
        assert_eq!(evaluate_word(dims, &swap_adjacent).unwrap(), el(9, "((1 2), 0)"));
        let swap_diagonal: Vec<_> = [(2, 6), (1, 3), (2, 6), (6, 6)]
            .iter()
            .map(|&(a, b)| rect(dims, a, b))
            .collect();
        assert_eq!(evaluate_word(dims, &swap_diagonal).unwrap(), el(9, "((1 5), 0)"));
    }
}
