//! Board geometry: dimensions, positions, rectangles, distances and spin types.
//!
//! Positions are numbered from 1 in text and from 0 in memory, left to right
//! and top to bottom. Distances between cell and rectangle centers are kept
//! in half-units so that every quantity stays an exact integer.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpinError};

/// Largest number of cells an element can carry (orientation is a `u64` mask).
pub const MAX_CELLS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoardDims {
    rows: usize,
    cols: usize,
}

impl BoardDims {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(SpinError::InvalidDims {
                rows,
                cols,
                reason: "both sides must be positive",
            });
        }
        if rows * cols > MAX_CELLS {
            return Err(SpinError::InvalidDims {
                rows,
                cols,
                reason: "at most 64 cells are supported",
            });
        }
        Ok(Self { rows, cols })
    }

    pub fn rows(self) -> usize {
        self.rows
    }

    pub fn cols(self) -> usize {
        self.cols
    }

    /// Number of cells `N = mn`.
    pub fn cells(self) -> usize {
        self.rows * self.cols
    }

    pub fn transposed(self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
        }
    }

    pub fn position(self, row: usize, col: usize) -> Position {
        debug_assert!(row < self.rows && col < self.cols);
        Position(row * self.cols + col)
    }

    pub fn coords(self, pos: Position) -> (usize, usize) {
        (pos.0 / self.cols, pos.0 % self.cols)
    }

    pub fn positions(self) -> impl Iterator<Item = Position> {
        (0..self.cells()).map(Position)
    }

    /// Parses a 1-based position index.
    pub fn parse_position(self, one_based: usize) -> Result<Position> {
        if one_based == 0 || one_based > self.cells() {
            return Err(SpinError::InvalidPosition(one_based));
        }
        Ok(Position(one_based - 1))
    }

    /// The rectangle covering the whole board.
    pub fn full_rect(self) -> Rectangle {
        Rectangle {
            top: 0,
            left: 0,
            bottom: self.rows - 1,
            right: self.cols - 1,
        }
    }

    /// All spin types with at least one rectangle on this board, ordered by
    /// `(short side, long side)`.
    pub fn spin_types(self) -> Vec<SpinType> {
        let (short, long) = (self.rows.min(self.cols), self.rows.max(self.cols));
        let mut types = Vec::new();
        for i in 1..=long {
            for j in i..=long {
                let t = SpinType { short: i, long: j };
                if i <= short && t.fits(self) {
                    types.push(t);
                }
            }
        }
        types
    }
}

impl fmt::Display for BoardDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// A board position, stored 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position(pub usize);

impl Position {
    pub fn index(self) -> usize {
        self.0
    }

    pub fn one_based(self) -> usize {
        self.0 + 1
    }
}

/// An axis-aligned rectangle of cells, inclusive on both corners.
///
/// The derived ordering compares the upper-left corner first and then the
/// lower-right one, which is the `[p1,p2]` order on any fixed board.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rectangle {
    pub top: usize,
    pub left: usize,
    pub bottom: usize,
    pub right: usize,
}

impl Rectangle {
    /// Builds `[p1,p2]` from 1-based corner indices. The corners must be
    /// ordered by row and by column; `p1 <= p2` alone is not enough.
    pub fn from_corners(dims: BoardDims, p1: usize, p2: usize) -> Result<Self> {
        let a = dims
            .parse_position(p1)
            .map_err(|_| SpinError::InvalidRectangle(p1, p2))?;
        let b = dims
            .parse_position(p2)
            .map_err(|_| SpinError::InvalidRectangle(p1, p2))?;
        let (top, left) = dims.coords(a);
        let (bottom, right) = dims.coords(b);
        if top > bottom || left > right {
            return Err(SpinError::InvalidRectangle(p1, p2));
        }
        Ok(Self {
            top,
            left,
            bottom,
            right,
        })
    }

    pub fn cell(dims: BoardDims, pos: Position) -> Self {
        let (r, c) = dims.coords(pos);
        Self {
            top: r,
            left: c,
            bottom: r,
            right: c,
        }
    }

    pub fn height(self) -> usize {
        self.bottom - self.top + 1
    }

    pub fn width(self) -> usize {
        self.right - self.left + 1
    }

    pub fn area(self) -> usize {
        self.height() * self.width()
    }

    pub fn spin_type(self) -> SpinType {
        SpinType::new(self.height(), self.width())
    }

    pub fn fits(self, dims: BoardDims) -> bool {
        self.top <= self.bottom
            && self.left <= self.right
            && self.bottom < dims.rows()
            && self.right < dims.cols()
    }

    /// 1-based corner indices `(p1, p2)`.
    pub fn corners(self, dims: BoardDims) -> (usize, usize) {
        (
            dims.position(self.top, self.left).one_based(),
            dims.position(self.bottom, self.right).one_based(),
        )
    }

    pub fn label(self, dims: BoardDims) -> String {
        let (p1, p2) = self.corners(dims);
        format!("[{p1},{p2}]")
    }

    pub fn contains_cell(self, row: usize, col: usize) -> bool {
        (self.top..=self.bottom).contains(&row) && (self.left..=self.right).contains(&col)
    }

    pub fn contains(self, other: Rectangle) -> bool {
        self.top <= other.top
            && self.left <= other.left
            && self.bottom >= other.bottom
            && self.right >= other.right
    }

    pub fn intersects(self, other: Rectangle) -> bool {
        self.top <= other.bottom
            && other.top <= self.bottom
            && self.left <= other.right
            && other.left <= self.right
    }

    /// Doubled center coordinates.
    pub fn center2(self) -> (i64, i64) {
        (
            (self.top + self.bottom + 1) as i64,
            (self.left + self.right + 1) as i64,
        )
    }

    pub fn same_center(self, other: Rectangle) -> bool {
        self.center2() == other.center2()
    }

    pub fn cells(self, dims: BoardDims) -> impl Iterator<Item = Position> {
        (self.top..=self.bottom)
            .flat_map(move |r| (self.left..=self.right).map(move |c| dims.position(r, c)))
    }

    /// Bit mask of the positions covered by the rectangle.
    pub fn mask(self, dims: BoardDims) -> u64 {
        self.cells(dims).fold(0, |m, p| m | 1 << p.0)
    }

    /// Image of `(row, col)` under the 180 degree rotation about the center.
    pub fn rotate(self, row: usize, col: usize) -> (usize, usize) {
        (self.top + self.bottom - row, self.left + self.right - col)
    }
}

/// A distance measured in half-units of the l1 norm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfDistance(pub u32);

impl HalfDistance {
    pub fn halves(self) -> u32 {
        self.0
    }

    /// The distance in whole units, if it is an integer.
    pub fn whole(self) -> Option<u32> {
        self.0.is_multiple_of(2).then_some(self.0 / 2)
    }
}

/// Something with a center on the half-integer lattice.
pub trait Site {
    fn center2(&self, dims: BoardDims) -> (i64, i64);
}

impl Site for Position {
    fn center2(&self, dims: BoardDims) -> (i64, i64) {
        let (r, c) = dims.coords(*self);
        (2 * r as i64 + 1, 2 * c as i64 + 1)
    }
}

impl Site for Rectangle {
    fn center2(&self, _dims: BoardDims) -> (i64, i64) {
        Rectangle::center2(*self)
    }
}

/// l1 distance between the centers of two sites.
pub fn rho(dims: BoardDims, a: &impl Site, b: &impl Site) -> HalfDistance {
    let (ar, ac) = a.center2(dims);
    let (br, bc) = b.center2(dims);
    HalfDistance(((ar - br).abs() + (ac - bc).abs()) as u32)
}

fn parity(x: usize) -> usize {
    x % 2
}

/// Closed form for the weight `w(i,j)` of an `i x j` rectangle: twice the
/// summed distance from its cells to its center.
pub fn weight(i: usize, j: usize) -> u64 {
    let (i, j) = (i as u64, j as u64);
    let twice =
        i * j * j + j * i * i - parity(i as usize) as u64 * j - parity(j as usize) as u64 * i;
    twice / 2
}

/// Weight of a rectangle by direct summation, `2 * sum rho(p, R)`.
pub fn rect_weight(dims: BoardDims, rect: Rectangle) -> u64 {
    rect.cells(dims)
        .map(|p| rho(dims, &p, &rect).halves() as u64)
        .sum()
}

/// An unordered pair of side lengths naming `S_{i x j} = R_{i x j} u R_{j x i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpinType {
    short: usize,
    long: usize,
}

impl SpinType {
    pub fn new(a: usize, b: usize) -> Self {
        Self {
            short: a.min(b),
            long: a.max(b),
        }
    }

    pub fn sides(self) -> (usize, usize) {
        (self.short, self.long)
    }

    pub fn area(self) -> usize {
        self.short * self.long
    }

    pub fn weight(self) -> u64 {
        weight(self.short, self.long)
    }

    /// Whether at least one rectangle of this type lies on the board.
    pub fn fits(self, dims: BoardDims) -> bool {
        let (m, n) = (dims.rows(), dims.cols());
        (self.short <= m && self.long <= n) || (self.long <= m && self.short <= n)
    }
}

impl fmt::Display for SpinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.short, self.long)
    }
}

impl FromStr for SpinType {
    type Err = SpinError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || SpinError::UnknownSpinType(s.to_string());
        let (a, b) = s.trim().split_once(['x', 'X', '×']).ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a == 0 || b == 0 {
            return Err(bad());
        }
        Ok(SpinType::new(a, b))
    }
}

/// A union of spin types used as a generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSet {
    types: BTreeSet<SpinType>,
}

impl GeneratorSet {
    pub fn new(types: impl IntoIterator<Item = SpinType>) -> Self {
        Self {
            types: types.into_iter().collect(),
        }
    }

    pub fn all(dims: BoardDims) -> Self {
        Self::new(dims.spin_types())
    }

    /// Parses the command-line grammar: comma separated `ixj` tokens, or one
    /// of the aliases `all` and `no-singles-doubles`.
    pub fn parse(s: &str, dims: BoardDims) -> Result<Self> {
        match s.trim() {
            "all" | "ALL" => Ok(Self::all(dims)),
            "no-singles-doubles" => Ok(Self::new(
                dims.spin_types()
                    .into_iter()
                    .filter(|t| t.sides() != (1, 1) && t.sides() != (1, 2)),
            )),
            list => {
                let types = list
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(SpinType::from_str)
                    .collect::<Result<Vec<_>>>()?;
                for t in &types {
                    if !t.fits(dims) {
                        return Err(SpinError::EmptySpinType(t.to_string()));
                    }
                }
                Ok(Self::new(types))
            }
        }
    }

    pub fn types(&self) -> impl Iterator<Item = SpinType> + '_ {
        self.types.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn contains(&self, t: SpinType) -> bool {
        self.types.contains(&t)
    }

    pub fn admits(&self, rect: Rectangle) -> bool {
        self.contains(rect.spin_type())
    }

    pub fn is_full(&self, dims: BoardDims) -> bool {
        dims.spin_types().iter().all(|t| self.types.contains(t))
    }

    /// Bit `k` is set when the `k`-th entry of `dims.spin_types()` is present.
    pub fn mask(&self, dims: BoardDims) -> u16 {
        dims.spin_types()
            .iter()
            .enumerate()
            .filter(|(_, t)| self.types.contains(t))
            .fold(0, |m, (k, _)| m | 1 << k)
    }

    pub fn from_mask(dims: BoardDims, mask: u16) -> Self {
        Self::new(
            dims.spin_types()
                .into_iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, t)| t),
        )
    }

    /// Largest weight over the member types that fit on the board.
    pub fn max_weight(&self, dims: BoardDims) -> Option<u64> {
        self.types
            .iter()
            .filter(|t| t.fits(dims))
            .map(|t| t.weight())
            .max()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.types.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}
