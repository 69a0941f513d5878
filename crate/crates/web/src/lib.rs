//! WebAssembly bindings for the browser demo. Every function takes and
//! returns plain strings (board text or JSON) so the page needs no glue
//! beyond what `wasm-bindgen` generates.

use rand::SeedableRng;
use serde_json::json;
use spinlab::census::bfs_census;
use spinlab::solver::{greedy_solve, optimal_solve, restricted_solve_one_two};
use spinlab::subgroups::{chain_for, full_order, generates};
use spinlab::{
    format_board, format_word, parse_board, spin_about, BoardDims, GeneratorSet, GroupElement,
    Rectangle, SpinError,
};
use wasm_bindgen::prelude::*;

const MAX_OPTIMAL_CELLS: usize = 8;
const MAX_CENSUS_CELLS: usize = 6;

fn err(e: SpinError) -> String {
    e.to_string()
}

fn dims(m: usize, n: usize) -> Result<BoardDims, String> {
    BoardDims::new(m, n).map_err(err)
}

/// A uniformly random board as text.
#[wasm_bindgen]
pub fn random_board(m: usize, n: usize, seed: u32) -> Result<String, String> {
    let d = dims(m, n)?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed as u64);
    Ok(format_board(d, &GroupElement::random(d.cells(), &mut rng)))
}

/// Applies the spin `[p1,p2]` to a board.
#[wasm_bindgen]
pub fn apply_spin(board: &str, p1: usize, p2: usize) -> Result<String, String> {
    let (d, b) = parse_board(board).map_err(err)?;
    let rect = Rectangle::from_corners(d, p1, p2).map_err(err)?;
    let s = spin_about(d, rect).map_err(err)?;
    Ok(format_board(d, &b.mul(&s.element).map_err(err)?))
}

/// Solves a board with `"greedy"`, `"restricted"` or `"optimal"` and returns
/// `{word, length, method, frames}`, where `frames` lists the board after
/// each spin, starting with the input.
#[wasm_bindgen]
pub fn solve(board: &str, method: &str) -> Result<String, String> {
    let (d, b) = parse_board(board).map_err(err)?;
    let result = match method {
        "greedy" => greedy_solve(d, &b),
        "restricted" => restricted_solve_one_two(d, &b),
        "optimal" if d.cells() <= MAX_OPTIMAL_CELLS => {
            optimal_solve(d, &b, &GeneratorSet::all(d)).map_err(err)?
        }
        "optimal" => {
            return Err(format!(
                "optimal search is limited to {MAX_OPTIMAL_CELLS} cells here"
            ))
        }
        other => return Err(format!("unknown method {other:?}")),
    };
    let mut frames = vec![format_board(d, &b)];
    let mut state = b;
    for &r in &result.word {
        state = state
            .mul(&spin_about(d, r).map_err(err)?.element)
            .map_err(err)?;
        frames.push(format_board(d, &state));
    }
    Ok(json!({
        "word": format_word(d, &result.word),
        "length": result.length,
        "method": result.method,
        "frames": frames,
    })
    .to_string())
}

/// Order and index of the subgroup generated by a list of spin types such
/// as `"1x2,2x2"`.
#[wasm_bindgen]
pub fn generation_report(m: usize, n: usize, gens: &str) -> Result<String, String> {
    let d = dims(m, n)?;
    let g = GeneratorSet::parse(gens, d).map_err(err)?;
    let order = chain_for(d, &g).order();
    Ok(json!({
        "gens": g.to_string(),
        "order": order.to_string(),
        "index": (full_order(d.cells()) / &order).to_string(),
        "generates": generates(d, &g),
    })
    .to_string())
}

/// Distance census of a small board.
#[wasm_bindgen]
pub fn census(m: usize, n: usize, gens: &str) -> Result<String, String> {
    let d = dims(m, n)?;
    if d.cells() > MAX_CENSUS_CELLS {
        return Err(format!(
            "the demo census is limited to {MAX_CENSUS_CELLS} cells"
        ));
    }
    let g = GeneratorSet::parse(gens, d).map_err(err)?;
    let (_, report) = bfs_census(d, &g, true).map_err(err)?;
    Ok(report.to_json())
}
