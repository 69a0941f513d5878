use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{full_order, parity_class, spin_elements, StabilizerChain};
use crate::board::{BoardDims, GeneratorSet, SpinType};
use crate::error::{Result, SpinError};

/// Minimal generating unions of spin types with both sides at most 3.
pub const SUFFICIENT_SETS: [&[(usize, usize)]; 6] = [
    &[(1, 2), (1, 1)],
    &[(1, 2), (1, 3)],
    &[(1, 2), (2, 2), (3, 3)],
    &[(2, 3), (1, 1)],
    &[(2, 3), (1, 3)],
    &[(2, 3), (2, 2), (3, 3)],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetReport {
    pub types: Vec<String>,
    pub order: u64,
    pub index: u64,
    pub generates: bool,
    /// Every member lies in the even-area set or every member lies in the
    /// even-distance set.
    pub parity_blocked: bool,
    pub contains_sufficient_set: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub dims: String,
    pub subsets: Vec<SubsetReport>,
    pub parity_blocked: usize,
    /// Not blocked and containing a sufficient set.
    pub sufficient: usize,
    /// Neither blocked nor containing a sufficient set.
    pub residual: usize,
    pub generating: usize,
    /// `generates` agrees with `contains_sufficient_set` on every subset.
    pub criterion_holds: bool,
}

impl Classification {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("classification serializes")
    }
}

/// Classifies all 64 unions of the spin types with sides at most 3.
pub fn classify_type_subsets(dims: BoardDims) -> Result<Classification> {
    if dims.rows() < 3 || dims.cols() < 3 || dims.cells() > 16 {
        return Err(SpinError::Unsupported(format!(
            "classification needs both sides at least 3 and at most 16 cells, got {dims}"
        )));
    }
    let universe: Vec<SpinType> = (1..=3)
        .flat_map(|i| (i..=3).map(move |j| SpinType::new(i, j)))
        .collect();
    let sufficient: Vec<u32> = SUFFICIENT_SETS
        .iter()
        .map(|set| {
            set.iter()
                .map(|&(i, j)| {
                    universe
                        .iter()
                        .position(|&t| t == SpinType::new(i, j))
                        .unwrap()
                })
                .fold(0, |m, k| m | 1 << k)
        })
        .collect();
    let full = full_order(dims.cells()).to_u64().expect("at most 16 cells");
    let mut chains: Vec<StabilizerChain> = Vec::with_capacity(64);
    let mut subsets = Vec::with_capacity(64);
    for mask in 0u32..64 {
        let chain = if mask == 0 {
            StabilizerChain::trivial(2 * dims.cells())
        } else {
            let top = 31 - mask.leading_zeros();
            let mut chain = chains[(mask ^ 1 << top) as usize].clone();
            let added = GeneratorSet::new([universe[top as usize]]);
            let perms: Vec<_> = spin_elements(dims, &added)
                .iter()
                .map(super::embed)
                .collect();
            chain.extend(&perms);
            chain
        };
        let members: Vec<SpinType> = (0..6)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| universe[k])
            .collect();
        let order = chain.order().to_u64().expect("at most 16 cells");
        let blocked = members.iter().all(|&t| parity_class(t).in_sa)
            || members.iter().all(|&t| parity_class(t).in_sd);
        subsets.push(SubsetReport {
            types: members.iter().map(ToString::to_string).collect(),
            order,
            index: full / order,
            generates: order == full,
            parity_blocked: blocked,
            contains_sufficient_set: sufficient.iter().any(|&s| s & !mask == 0),
        });
        chains.push(chain);
    }
    let parity_blocked = subsets.iter().filter(|s| s.parity_blocked).count();
    let sufficient = subsets
        .iter()
        .filter(|s| !s.parity_blocked && s.contains_sufficient_set)
        .count();
    Ok(Classification {
        dims: dims.to_string(),
        parity_blocked,
        sufficient,
        residual: subsets.len() - parity_blocked - sufficient,
        generating: subsets.iter().filter(|s| s.generates).count(),
        criterion_holds: subsets
            .iter()
            .all(|s| s.generates == s.contains_sufficient_set),
        subsets,
    })
}

/// One reading of which spin types make up the even-permutation spin set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReading {
    pub reading: String,
    pub types: Vec<String>,
    pub within_even_area: bool,
    pub within_even_distance: bool,
}

/// Compares the printed list `{2x2, 3x3}` with the congruence
/// `ij = 0, 1 (mod 4)` over the types with sides at most 3.
pub fn parity_list_readings() -> Vec<ParityReading> {
    let universe: Vec<SpinType> = (1..=3)
        .flat_map(|i| (i..=3).map(move |j| SpinType::new(i, j)))
        .collect();
    let printed = vec![SpinType::new(2, 2), SpinType::new(3, 3)];
    let congruence: Vec<SpinType> = universe
        .iter()
        .copied()
        .filter(|&t| parity_class(t).in_sp)
        .collect();
    [("printed", printed), ("congruence", congruence)]
        .into_iter()
        .map(|(name, types)| ParityReading {
            reading: name.to_string(),
            within_even_area: types.iter().all(|&t| parity_class(t).in_sa),
            within_even_distance: types.iter().all(|&t| parity_class(t).in_sd),
            types: types.iter().map(ToString::to_string).collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_by_three_totals() {
        let c = classify_type_subsets(BoardDims::new(3, 3).unwrap()).unwrap();
        assert_eq!((c.parity_blocked, c.sufficient, c.residual), (22, 39, 3));
        assert!(c.criterion_holds);
        assert!(!c.subsets[0].generates);
        assert_eq!(c.subsets[0].order, 1);
    }

    #[test]
    fn readings() {
        let r = parity_list_readings();
        assert_eq!(r[0].types, ["2x2", "3x3"]);
        assert_eq!(r[1].types, ["1x1", "2x2", "3x3"]);
        assert!(r
            .iter()
            .all(|x| !x.within_even_area && x.within_even_distance));
    }

    #[test]
    fn small_boards_are_rejected() {
        assert!(classify_type_subsets(BoardDims::new(2, 3).unwrap()).is_err());
    }
}
