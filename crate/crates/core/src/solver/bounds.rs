//! Closed-form bounds on solution lengths.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::board::{weight, BoardDims, GeneratorSet};
use crate::error::{Result, SpinError};
use crate::spin::spin_counts;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    /// Counting bound; absent on a single cell.
    pub info_lower: Option<u32>,
    /// Weight bound for the full spin set.
    pub weight_lower: u64,
    /// `3mn - (m+n)`.
    pub greedy_upper: u64,
    /// `w(m,n) + mn`, for words in single and domino spins.
    pub restricted_upper: u64,
}

/// Smallest `k` with `c^k >= 2^N N!`, where `c` is the number of spins
/// plus one.
pub fn info_lower_bound(dims: BoardDims) -> Result<u32> {
    let n = dims.cells();
    if n <= 1 {
        return Err(SpinError::Unsupported(
            "the counting bound needs at least two cells".into(),
        ));
    }
    let order = (1..=n as u64).fold(BigUint::one() << n, |acc, k| acc * k);
    let c = BigUint::from(spin_counts(dims).total + 1);
    let mut power = BigUint::one();
    let mut k = 0;
    while power < order {
        power *= &c;
        k += 1;
    }
    Ok(k)
}

/// `ceil(w(m,n) / max weight)` over the spins of `gens`.
pub fn weight_lower_bound(dims: BoardDims, gens: &GeneratorSet) -> Result<u64> {
    let max = gens
        .max_weight(dims)
        .ok_or_else(|| SpinError::Unsupported("empty generator set".into()))?;
    let w = weight(dims.rows(), dims.cols());
    match (w, max) {
        (0, _) => Ok(0),
        (_, 0) => Err(SpinError::UnboundedBound),
        _ => Ok(w.div_ceil(max)),
    }
}

pub fn greedy_upper_bound(dims: BoardDims) -> u64 {
    let (m, n) = (dims.rows() as u64, dims.cols() as u64);
    3 * m * n - (m + n)
}

pub fn restricted_upper_bound(dims: BoardDims) -> u64 {
    weight(dims.rows(), dims.cols()) + dims.cells() as u64
}

pub fn upper_bound_formulas(dims: BoardDims) -> BoundReport {
    BoundReport {
        info_lower: info_lower_bound(dims).ok(),
        weight_lower: weight_lower_bound(dims, &GeneratorSet::all(dims))
            .expect("full set has a spin"),
        greedy_upper: greedy_upper_bound(dims),
        restricted_upper: restricted_upper_bound(dims),
    }
}
