//! Square-preserving isometries of the integer grid (the group generated by
//! unit translations and the reflections in `y = 0` and `y = x`), applied to
//! rectangles, words and elements.

use rand::Rng;

use crate::board::{BoardDims, Position, Rectangle};
use crate::element::GroupElement;
use crate::error::{Result, SpinError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Isometry {
    /// Reflect in the diagonal first (swap row and column).
    pub transpose: bool,
    pub flip_rows: bool,
    pub flip_cols: bool,
    pub shift: (i64, i64),
}

impl Isometry {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn translation(rows: i64, cols: i64) -> Self {
        Self {
            shift: (rows, cols),
            ..Self::default()
        }
    }

    pub fn diagonal_reflection() -> Self {
        Self {
            transpose: true,
            ..Self::default()
        }
    }

    /// One of the eight point symmetries of the square, by index `0..8`,
    /// without translation.
    pub fn orientation(k: u8) -> Self {
        assert!(k < 8);
        Self {
            transpose: k & 1 == 1,
            flip_rows: k & 2 == 2,
            flip_cols: k & 4 == 4,
            shift: (0, 0),
        }
    }

    pub fn with_shift(self, rows: i64, cols: i64) -> Self {
        Self {
            shift: (rows, cols),
            ..self
        }
    }

    pub fn map_point(&self, row: i64, col: i64) -> (i64, i64) {
        let (mut a, mut b) = if self.transpose {
            (col, row)
        } else {
            (row, col)
        };
        if self.flip_rows {
            a = -a;
        }
        if self.flip_cols {
            b = -b;
        }
        (a + self.shift.0, b + self.shift.1)
    }

    fn map_cell(&self, from: BoardDims, to: BoardDims, pos: Position) -> Result<Position> {
        let (r, c) = from.coords(pos);
        let (a, b) = self.map_point(r as i64, c as i64);
        if a < 0 || b < 0 || a >= to.rows() as i64 || b >= to.cols() as i64 {
            return Err(SpinError::OffBoard);
        }
        Ok(to.position(a as usize, b as usize))
    }

    /// Image of a rectangle, as a rectangle on `to`.
    pub fn apply_rect(
        &self,
        _from: BoardDims,
        to: BoardDims,
        rect: Rectangle,
    ) -> Result<Rectangle> {
        let (a0, b0) = self.map_point(rect.top as i64, rect.left as i64);
        let (a1, b1) = self.map_point(rect.bottom as i64, rect.right as i64);
        let (top, bottom) = (a0.min(a1), a0.max(a1));
        let (left, right) = (b0.min(b1), b0.max(b1));
        if top < 0 || left < 0 || bottom >= to.rows() as i64 || right >= to.cols() as i64 {
            return Err(SpinError::OffBoard);
        }
        Ok(Rectangle {
            top: top as usize,
            left: left as usize,
            bottom: bottom as usize,
            right: right as usize,
        })
    }

    pub fn apply_word(
        &self,
        from: BoardDims,
        to: BoardDims,
        word: &[Rectangle],
    ) -> Result<Vec<Rectangle>> {
        word.iter().map(|r| self.apply_rect(from, to, *r)).collect()
    }

    /// Transports an element along the isometry: the image acts on mapped
    /// cells the way `e` acts on the originals and fixes every other cell.
    /// Every cell that `e` moves or reverses must land on `to`.
    pub fn apply_element(
        &self,
        from: BoardDims,
        to: BoardDims,
        e: &GroupElement,
    ) -> Result<GroupElement> {
        let mut perm: Vec<u8> = (0..to.cells() as u8).collect();
        let mut signs = 0u64;
        for p in 0..from.cells() {
            let moved = e.image(p) != p;
            let flipped = e.is_reversed(p);
            if !moved && !flipped {
                continue;
            }
            let src = self.map_cell(from, to, Position(p))?;
            if moved {
                let dst = self.map_cell(from, to, Position(e.image(p)))?;
                perm[src.0] = dst.0 as u8;
            }
            if flipped {
                signs |= 1 << src.0;
            }
        }
        GroupElement::new(perm, signs)
    }

    /// Picks a translation uniformly among those that carry every rectangle
    /// of `word` (after the point symmetry) onto `to`.
    pub fn fit_randomly<R: Rng + ?Sized>(
        self,
        to: BoardDims,
        word: &[Rectangle],
        rng: &mut R,
    ) -> Option<Self> {
        let base = self.with_shift(0, 0);
        let (mut top, mut left, mut bottom, mut right) = (i64::MAX, i64::MAX, i64::MIN, i64::MIN);
        for r in word {
            for (row, col) in [(r.top, r.left), (r.bottom, r.right)] {
                let (a, b) = base.map_point(row as i64, col as i64);
                top = top.min(a);
                bottom = bottom.max(a);
                left = left.min(b);
                right = right.max(b);
            }
        }
        if word.is_empty() {
            return Some(base);
        }
        let row_lo = -top;
        let row_hi = to.rows() as i64 - 1 - bottom;
        let col_lo = -left;
        let col_hi = to.cols() as i64 - 1 - right;
        if row_lo > row_hi || col_lo > col_hi {
            return None;
        }
        Some(base.with_shift(
            rng.random_range(row_lo..=row_hi),
            rng.random_range(col_lo..=col_hi),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::GeneratorSet;
    use crate::spin::{enumerate_spins, evaluate_word};

    fn d(m: usize, n: usize) -> BoardDims {
        BoardDims::new(m, n).unwrap()
    }

    #[test]
    fn reflect_and_translate_examples() {
        let dims = d(3, 3);
        let r12 = Rectangle::from_corners(dims, 1, 2).unwrap();
        let img = Isometry::diagonal_reflection()
            .apply_rect(dims, dims, r12)
            .unwrap();
        assert_eq!(img.label(dims), "[1,4]");
        let r15 = Rectangle::from_corners(dims, 1, 5).unwrap();
        let img = Isometry::translation(0, 1)
            .apply_rect(dims, dims, r15)
            .unwrap();
        assert_eq!(img.label(dims), "[2,6]");
        assert!(matches!(
            Isometry::translation(0, 2).apply_rect(dims, dims, r15),
            Err(SpinError::OffBoard)
        ));
    }

    #[test]
    fn spin_types_are_preserved() {
        let dims = d(4, 4);
        for k in 0..8 {
            let iso = Isometry::orientation(k).with_shift(
                if k & 2 == 2 { 3 } else { 0 },
                if k & 4 == 4 { 3 } else { 0 },
            );
            for s in enumerate_spins(dims, &GeneratorSet::all(dims)) {
                let img = iso.apply_rect(dims, dims, s.rect).unwrap();
                assert_eq!(img.spin_type(), s.rect.spin_type());
            }
        }
    }

    #[test]
    fn element_transport_commutes_with_evaluation() {
        use rand::SeedableRng;
        let dims = d(4, 4);
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let word: Vec<Rectangle> = [(2, 3), (1, 5), (1, 6), (2, 3), (1, 6), (1, 5), (2, 3)]
            .iter()
            .map(|&(a, b)| Rectangle::from_corners(dims, a, b).unwrap())
            .collect();
        let target = evaluate_word(dims, &word).unwrap();
        assert_eq!(target.signs(), 0);
        for k in 0..8 {
            let iso = Isometry::orientation(k)
                .fit_randomly(dims, &word, &mut rng)
                .unwrap();
            let image = iso.apply_word(dims, dims, &word).unwrap();
            let e = evaluate_word(dims, &image).unwrap();
            assert_eq!(e, iso.apply_element(dims, dims, &target).unwrap());
            assert_eq!(e.signs(), 0);
            assert_eq!(e.cycles().iter().filter(|c| c.len() == 2).count(), 1);
        }
    }
}
