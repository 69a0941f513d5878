//! Generated subgroups, parity subgroups and the spin-type classification.

mod chain;
mod classify;
mod identities;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::board::{rho, BoardDims, GeneratorSet, Position, SpinType};
use crate::element::GroupElement;
use crate::error::{Result, SpinError};
use crate::spin::enumerate_spins;

pub use chain::{embed, unembed, Perm, StabilizerChain};
pub use classify::{
    classify_type_subsets, parity_list_readings, Classification, ParityReading, SubsetReport,
    SUFFICIENT_SETS,
};
pub use identities::{verify_identities, IdentityCheck};

/// The three parity subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// Even number of reversed tiles.
    A,
    /// Even permutation.
    P,
    /// Every tile displaced by an even distance.
    D,
}

pub fn element_in_subgroup(dims: BoardDims, e: &GroupElement, which: Parity) -> bool {
    match which {
        Parity::A => e.signs().count_ones().is_multiple_of(2),
        Parity::P => e.perm_is_even(),
        Parity::D => dims.positions().all(|p| {
            let to = Position(e.image(p.0));
            rho(dims, &p, &to).halves() % 4 == 0
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityClass {
    pub in_sa: bool,
    pub in_sp: bool,
    pub in_sd: bool,
}

/// Parity flags from the congruences on the side lengths.
pub fn parity_class(t: SpinType) -> ParityClass {
    let (i, j) = t.sides();
    ParityClass {
        in_sa: (i * j) % 2 == 0,
        in_sp: matches!((i * j) % 4, 0 | 1),
        in_sd: (i + j) % 2 == 0,
    }
}

impl ParityClass {
    pub fn contains(self, which: Parity) -> bool {
        match which {
            Parity::A => self.in_sa,
            Parity::P => self.in_sp,
            Parity::D => self.in_sd,
        }
    }
}

/// Order of a parity subgroup of the whole board group.
pub fn parity_subgroup_order(dims: BoardDims, which: Parity) -> BigUint {
    let n = dims.cells();
    match which {
        Parity::A | Parity::P => full_order(n) / 2u32,
        Parity::D => {
            let dark = dims
                .positions()
                .filter(|&p| {
                    let (r, c) = dims.coords(p);
                    (r + c) % 2 == 0
                })
                .count() as u64;
            let fact = |k: u64| (1..=k).fold(BigUint::one(), |acc, x| acc * x);
            (BigUint::one() << n) * fact(dark) * fact(n as u64 - dark)
        }
    }
}

/// The spin types on the board whose spins lie in the given parity subgroup.
pub fn parity_spin_types(dims: BoardDims, which: Parity) -> GeneratorSet {
    GeneratorSet::new(
        dims.spin_types()
            .into_iter()
            .filter(|&t| parity_class(t).contains(which)),
    )
}

/// Whether the spins inside a parity subgroup generate all of it.
pub fn parity_spins_generate(dims: BoardDims, which: Parity) -> bool {
    chain_for(dims, &parity_spin_types(dims, which)).order() == parity_subgroup_order(dims, which)
}

/// `2^N N!`.
pub fn full_order(cells: usize) -> BigUint {
    (1..=cells as u64).fold(BigUint::one() << cells, |acc, k| acc * k)
}

pub fn group_order(dims: BoardDims, gens: &[GroupElement]) -> BigUint {
    StabilizerChain::from_elements(dims.cells(), gens).order()
}

pub fn spin_elements(dims: BoardDims, gens: &GeneratorSet) -> Vec<GroupElement> {
    enumerate_spins(dims, gens)
        .into_iter()
        .map(|s| s.element)
        .collect()
}

/// Chain of the subgroup generated by the spins of the given types.
pub fn chain_for(dims: BoardDims, gens: &GeneratorSet) -> StabilizerChain {
    StabilizerChain::from_elements(dims.cells(), &spin_elements(dims, gens))
}

/// Whether the spins of the given types generate the whole group.
pub fn generates(dims: BoardDims, gens: &GeneratorSet) -> bool {
    let spins = spin_elements(dims, gens);
    let mut edges = Vec::new();
    for s in &spins {
        for p in 0..dims.cells() {
            if s.image(p) > p {
                edges.push((p, s.image(p)));
            }
        }
    }
    if !edge_graph_connected(dims.cells(), &edges) {
        return false;
    }
    group_order(dims, &spins) == full_order(dims.cells())
}

pub fn subgroup_index(dims: BoardDims, gens: &GeneratorSet) -> BigUint {
    full_order(dims.cells()) / chain_for(dims, gens).order()
}

fn check_fits(dims: BoardDims, t: SpinType) -> Result<()> {
    if t.fits(dims) {
        Ok(())
    } else {
        Err(SpinError::EmptySpinType(t.to_string()))
    }
}

/// Whether two spin types generate the same subgroup.
pub fn types_equivalent(dims: BoardDims, t1: SpinType, t2: SpinType) -> Result<bool> {
    check_fits(dims, t1)?;
    check_fits(dims, t2)?;
    let g1 = GeneratorSet::new([t1]);
    let g2 = GeneratorSet::new([t2]);
    let c1 = chain_for(dims, &g1);
    let c2 = chain_for(dims, &g2);
    Ok(spin_elements(dims, &g1).iter().all(|s| c2.contains(s))
        && spin_elements(dims, &g2).iter().all(|s| c1.contains(s)))
}

/// Connectivity of the graph on `0..n` with the given edges.
pub fn edge_graph_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut components = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components <= 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_spin_sets_and_their_exceptions() {
        let b = |m, n| BoardDims::new(m, n).unwrap();
        assert_eq!(
            parity_subgroup_order(b(3, 3), Parity::D),
            BigUint::from(512u64 * 120 * 24)
        );
        for dims in [b(2, 3), b(3, 3), b(3, 4)] {
            assert!(parity_spins_generate(dims, Parity::A), "{dims}");
        }
        for dims in [b(1, 3), b(1, 4), b(1, 5), b(3, 3), b(2, 3)] {
            assert!(parity_spins_generate(dims, Parity::D), "{dims}");
        }
        assert!(!parity_spins_generate(b(2, 2), Parity::D));
        assert!(!parity_spins_generate(b(2, 2), Parity::A));
        for n in 2..=6 {
            assert!(!parity_spins_generate(b(1, n), Parity::A), "1x{n}");
        }
        for dims in [b(2, 3), b(3, 3)] {
            for s in spin_elements(dims, &parity_spin_types(dims, Parity::D)) {
                assert!(element_in_subgroup(dims, &s, Parity::D));
            }
        }
    }
    use crate::board::Rectangle;
    use crate::spin::spin_about;
    use rand::SeedableRng;

    fn d(m: usize, n: usize) -> BoardDims {
        BoardDims::new(m, n).unwrap()
    }

    fn t(i: usize, j: usize) -> SpinType {
        SpinType::new(i, j)
    }

    fn set(types: &[(usize, usize)]) -> GeneratorSet {
        GeneratorSet::new(types.iter().map(|&(i, j)| t(i, j)))
    }

    #[test]
    fn membership_examples() {
        let dims = d(3, 3);
        let id = GroupElement::identity(9);
        for w in [Parity::A, Parity::P, Parity::D] {
            assert!(element_in_subgroup(dims, &id, w));
        }
        let s26 = spin_about(dims, Rectangle::from_corners(dims, 2, 6).unwrap())
            .unwrap()
            .element;
        assert!(element_in_subgroup(dims, &s26, Parity::A));
        assert!(element_in_subgroup(dims, &s26, Parity::P));
        assert!(element_in_subgroup(dims, &s26, Parity::D));
        let s12 = spin_about(dims, Rectangle::from_corners(dims, 1, 2).unwrap())
            .unwrap()
            .element;
        assert!(element_in_subgroup(dims, &s12, Parity::A));
        assert!(!element_in_subgroup(dims, &s12, Parity::P));
        assert!(!element_in_subgroup(dims, &s12, Parity::D));
    }

    #[test]
    fn parity_class_examples() {
        assert_eq!(
            parity_class(t(2, 2)),
            ParityClass {
                in_sa: true,
                in_sp: true,
                in_sd: true
            }
        );
        assert_eq!(
            parity_class(t(1, 3)),
            ParityClass {
                in_sa: false,
                in_sp: false,
                in_sd: true
            }
        );
        assert_eq!(
            parity_class(t(1, 1)),
            ParityClass {
                in_sa: false,
                in_sp: true,
                in_sd: true
            }
        );
    }

    #[test]
    fn congruences_agree_with_membership() {
        for m in 1..=4 {
            for n in 1..=4 {
                let dims = d(m, n);
                for s in enumerate_spins(dims, &GeneratorSet::all(dims)) {
                    let class = parity_class(s.rect.spin_type());
                    for w in [Parity::A, Parity::P, Parity::D] {
                        assert_eq!(class.contains(w), element_in_subgroup(dims, &s.element, w));
                    }
                }
            }
        }
    }

    #[test]
    fn orders() {
        let dims = d(3, 3);
        let one = spin_elements(dims, &set(&[(1, 2)]))[..1].to_vec();
        assert_eq!(group_order(dims, &one), BigUint::from(2u32));
        assert_eq!(
            chain_for(dims, &set(&[(1, 2)])).order(),
            BigUint::from(362_880u32)
        );
        assert_eq!(
            chain_for(dims, &set(&[(1, 2), (3, 3)])).order(),
            BigUint::from(725_760u32)
        );
        for m in 1..=3 {
            for n in 1..=3 {
                let dims = d(m, n);
                assert_eq!(
                    chain_for(dims, &GeneratorSet::all(dims)).order(),
                    full_order(dims.cells())
                );
            }
        }
    }

    #[test]
    fn generation_examples() {
        let dims = d(3, 3);
        assert!(generates(dims, &set(&[(1, 1), (1, 2)])));
        assert!(generates(dims, &set(&[(1, 2), (2, 2), (3, 3)])));
        assert!(!generates(dims, &set(&[(1, 2), (2, 3), (3, 3)])));
        assert_eq!(subgroup_index(dims, &set(&[(1, 2)])), BigUint::from(512u32));
        assert_eq!(
            subgroup_index(dims, &GeneratorSet::all(dims)),
            BigUint::one()
        );
        assert_eq!(
            subgroup_index(dims, &set(&[(1, 1), (2, 2), (1, 3)])),
            BigUint::from(126u32)
        );
    }

    #[test]
    fn equivalences() {
        let dims = d(3, 3);
        assert!(types_equivalent(dims, t(1, 2), t(2, 3)).unwrap());
        assert!(types_equivalent(dims, t(2, 2), t(2, 2)).unwrap());
        assert!(!types_equivalent(dims, t(1, 1), t(3, 3)).unwrap());
        assert!(types_equivalent(dims, t(1, 4), t(1, 4)).is_err());
    }

    #[test]
    fn chain_membership_agrees_with_words() {
        let dims = d(2, 3);
        let gens = set(&[(1, 2), (2, 2)]);
        let chain = chain_for(dims, &gens);
        let spins = spin_elements(dims, &gens);
        let mut rng = rand::rngs::StdRng::seed_from_u64(9);
        let mut x = GroupElement::identity(6);
        for _ in 0..200 {
            use rand::Rng;
            x = x.mul(&spins[rng.random_range(0..spins.len())]).unwrap();
            assert!(chain.contains(&x));
            assert!(element_in_subgroup(dims, &x, Parity::A));
        }
        let odd = GroupElement::from_cycle_notation(6, "(ι, 100000)").unwrap();
        assert!(!chain.contains(&odd));
    }

    #[test]
    fn connectivity() {
        assert!(!edge_graph_connected(3, &[(0, 1)]));
        assert!(edge_graph_connected(3, &[(0, 1), (2, 1)]));
        assert!(edge_graph_connected(1, &[]));
        let dims = d(3, 3);
        let edges: Vec<_> = enumerate_spins(dims, &set(&[(1, 2)]))
            .iter()
            .map(|s| {
                let (a, b) = s.rect.corners(dims);
                (a - 1, b - 1)
            })
            .collect();
        assert!(edge_graph_connected(9, &edges));
    }
}
