//! Census of the permutation parts alone (orientations ignored).

use std::collections::VecDeque;

use super::rank::{factorial, perm_rank, perm_unrank};
use super::CensusReport;
use crate::board::{BoardDims, GeneratorSet};
use crate::error::{Result, SpinError};
use crate::spin::enumerate_spins;

const MAX_PROJECTED_CELLS: usize = 10;

/// Distance from each permutation (by Lehmer rank) to the identity in the
/// Cayley graph of the projected spins; `u8::MAX` if unreachable.
pub fn projected_distances(dims: BoardDims, gens: &GeneratorSet) -> Result<Vec<u8>> {
    let n = dims.cells();
    if n > MAX_PROJECTED_CELLS {
        return Err(SpinError::Unsupported(format!(
            "projected census of a {dims} board"
        )));
    }
    let mut gen_perms: Vec<Vec<u8>> = enumerate_spins(dims, gens)
        .into_iter()
        .map(|s| s.element.perm().to_vec())
        .collect();
    gen_perms.sort();
    gen_perms.dedup();
    let mut dist = vec![u8::MAX; factorial(n) as usize];
    dist[0] = 0;
    let mut queue = VecDeque::from([0u64]);
    let mut perm = vec![0u8; n];
    let mut next = vec![0u8; n];
    while let Some(r) = queue.pop_front() {
        perm_unrank(r, n, &mut perm);
        let d = dist[r as usize];
        for g in &gen_perms {
            for (x, &p) in next.iter_mut().zip(&perm) {
                *x = g[p as usize];
            }
            let t = perm_rank(&next) as usize;
            if dist[t] == u8::MAX {
                dist[t] = d + 1;
                queue.push_back(t as u64);
            }
        }
    }
    Ok(dist)
}

pub fn projected_census(dims: BoardDims, gens: &GeneratorSet) -> Result<CensusReport> {
    let dist = projected_distances(dims, gens)?;
    let mut hist = Vec::new();
    for &d in dist.iter().filter(|&&d| d != u8::MAX) {
        if hist.len() <= d as usize {
            hist.resize(d as usize + 1, 0);
        }
        hist[d as usize] += 1;
    }
    Ok(CensusReport::from_histogram(hist, None))
}
