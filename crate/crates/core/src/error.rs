use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpinError {
    #[error("invalid board dimensions {rows}x{cols}: {reason}")]
    InvalidDims {
        rows: usize,
        cols: usize,
        reason: &'static str,
    },
    #[error("elements belong to different boards ({left} cells vs {right} cells)")]
    DimsMismatch { left: usize, right: usize },
    #[error("position {0} is not on the board")]
    InvalidPosition(usize),
    #[error("[{0},{1}] is not a rectangle on this board")]
    InvalidRectangle(usize, usize),
    #[error("isometry maps the rectangle off the board")]
    OffBoard,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown spin type {0:?}")]
    UnknownSpinType(String),
    #[error("spin type {0} does not fit on this board")]
    EmptySpinType(String),
    #[error("board is not reachable with the given generators")]
    Unsolvable,
    #[error("state is not reachable in this distance table")]
    Unreachable,
    #[error("distance table was built without geodesic tracking")]
    UniquenessNotTracked,
    #[error("lower bound is unbounded: every generator has weight zero")]
    UnboundedBound,
    #[error("census of {states} states needs {needed} bytes, over the {budget} byte budget")]
    MemoryBudget {
        states: u64,
        needed: u64,
        budget: u64,
    },
    #[error("unsupported board size: {0}")]
    Unsupported(String),
    #[error("bad distance table file: {0}")]
    TableFormat(String),
    #[error("distance table was built for a different board or generator set")]
    TableMismatch,
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = SpinError> = std::result::Result<T, E>;
