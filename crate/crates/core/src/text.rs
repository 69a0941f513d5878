//! Text formats for boards and spin words.
//!
//! A board lists the signed tile number found in each position, row by row.
//! Rows are separated by `/` or by newlines; a negative entry is a reversed
//! tile. Words are comma-separated `[p1,p2]` tokens.

use crate::board::{BoardDims, Rectangle};
use crate::element::GroupElement;
use crate::error::{Result, SpinError};

/// Parses a board; the dimensions are read off the row structure.
pub fn parse_board(text: &str) -> Result<(BoardDims, GroupElement)> {
    let rows: Vec<Vec<&str>> = text
        .split(['/', '\n', ';'])
        .map(|row| row.split_whitespace().collect::<Vec<_>>())
        .filter(|row| !row.is_empty())
        .collect();
    if rows.is_empty() {
        return Err(SpinError::Parse("empty board".into()));
    }
    let cols = rows[0].len();
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(SpinError::Parse(format!(
            "row has {} cells, expected {cols}",
            bad.len()
        )));
    }
    let dims = BoardDims::new(rows.len(), cols)?;
    let tokens: Vec<&str> = rows.into_iter().flatten().collect();
    let element = board_from_tokens(dims, &tokens)?;
    Ok((dims, element))
}

/// Parses a board that must have the given dimensions. A single row holding
/// exactly `mn` entries is also accepted and reshaped.
pub fn parse_board_with_dims(text: &str, dims: BoardDims) -> Result<GroupElement> {
    let (parsed, e) = parse_board(text)?;
    if parsed == dims {
        return Ok(e);
    }
    if parsed.rows() == 1 && parsed.cols() == dims.cells() {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        return board_from_tokens(dims, &tokens);
    }
    Err(SpinError::Parse(format!(
        "board is {parsed}, expected {dims}"
    )))
}

fn board_from_tokens(dims: BoardDims, tokens: &[&str]) -> Result<GroupElement> {
    let n = dims.cells();
    if tokens.len() != n {
        return Err(SpinError::Parse(format!(
            "board has {} cells, expected {n}",
            tokens.len()
        )));
    }
    let mut perm = vec![u8::MAX; n];
    let mut signs = 0u64;
    for (pos, tok) in tokens.iter().enumerate() {
        let value: i64 = tok
            .parse()
            .map_err(|_| SpinError::Parse(format!("bad tile {tok:?}")))?;
        let tile = value.unsigned_abs() as usize;
        if tile == 0 || tile > n {
            return Err(SpinError::Parse(format!(
                "tile {value} out of range 1..={n}"
            )));
        }
        if perm[tile - 1] != u8::MAX {
            return Err(SpinError::Parse(format!("tile {tile} appears twice")));
        }
        perm[tile - 1] = pos as u8;
        if value < 0 {
            signs |= 1 << pos;
        }
    }
    GroupElement::new(perm, signs)
}

pub fn format_board(dims: BoardDims, e: &GroupElement) -> String {
    let mut tile_at = vec![0usize; dims.cells()];
    for tile in 0..dims.cells() {
        tile_at[e.image(tile)] = tile + 1;
    }
    (0..dims.rows())
        .map(|r| {
            (0..dims.cols())
                .map(|c| {
                    let pos = r * dims.cols() + c;
                    if e.is_reversed(pos) {
                        format!("-{}", tile_at[pos])
                    } else {
                        tile_at[pos].to_string()
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

pub fn parse_word(text: &str, dims: BoardDims) -> Result<Vec<Rectangle>> {
    let mut rest = text.trim();
    let mut word = Vec::new();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('[')
            .ok_or_else(|| SpinError::Parse(format!("expected '[' at {rest:?}")))?;
        let (inner, tail) = body
            .split_once(']')
            .ok_or_else(|| SpinError::Parse("unterminated '['".into()))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| SpinError::Parse(format!("bad spin [{inner}]")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| SpinError::Parse(format!("bad position {s:?}")))
        };
        word.push(Rectangle::from_corners(dims, parse(a)?, parse(b)?)?);
        rest = tail.trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Ok(word)
}

pub fn format_word(dims: BoardDims, word: &[Rectangle]) -> String {
    word.iter()
        .map(|r| r.label(dims))
        .collect::<Vec<_>>()
        .join(",")
}
