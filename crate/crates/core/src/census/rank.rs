//! Perfect ranking of group elements: `lehmer(alpha) * 2^N + u`.

use crate::element::GroupElement;
use crate::error::{Result, SpinError};

/// Largest board the ranking supports; `2^N N!` must fit in a `u64`.
pub const MAX_RANK_CELLS: usize = 16;

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Number of states of the group on `cells` positions.
pub fn state_count(cells: usize) -> Result<u64> {
    if cells > MAX_RANK_CELLS {
        return Err(SpinError::Unsupported(format!(
            "{cells} cells is too many to rank"
        )));
    }
    Ok(factorial(cells) << cells)
}

/// Lehmer rank of an image array; lexicographic order of the arrays.
pub fn perm_rank(perm: &[u8]) -> u64 {
    let n = perm.len();
    let mut used = 0u32;
    let mut rank = 0u64;
    for (i, &p) in perm.iter().enumerate() {
        let smaller_used = (used & ((1u32 << p) - 1)).count_ones() as u64;
        rank = rank * (n - i) as u64 + (p as u64 - smaller_used);
        used |= 1 << p;
    }
    rank
}

pub fn perm_unrank(mut rank: u64, n: usize, out: &mut [u8]) {
    let mut digits = [0u8; MAX_RANK_CELLS];
    for i in (0..n).rev() {
        let base = (n - i) as u64;
        digits[i] = (rank % base) as u8;
        rank /= base;
    }
    let mut free: u32 = (1 << n) - 1;
    for i in 0..n {
        let mut k = digits[i];
        let mut bits = free;
        loop {
            let v = bits.trailing_zeros();
            if k == 0 {
                out[i] = v as u8;
                free &= !(1 << v);
                break;
            }
            k -= 1;
            bits &= bits - 1;
        }
    }
}

/// Steps an image array to its lexicographic successor; `false` after the
/// last permutation.
pub fn next_perm(perm: &mut [u8]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

pub fn rank(e: &GroupElement) -> u64 {
    (perm_rank(e.perm()) << e.cells()) | e.signs()
}

pub fn unrank(r: u64, cells: usize) -> Result<GroupElement> {
    let total = state_count(cells)?;
    if r >= total {
        return Err(SpinError::Unsupported(format!(
            "rank {r} is out of range 0..{total}"
        )));
    }
    let mut perm = vec![0u8; cells];
    perm_unrank(r >> cells, cells, &mut perm);
    GroupElement::new(perm, r & ((1u64 << cells) - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    /// Independent Lehmer code: counts inversions to the right of each entry.
    fn lehmer_oracle(perm: &[u8]) -> u64 {
        let n = perm.len();
        (0..n)
            .map(|i| {
                let smaller = perm[i + 1..].iter().filter(|&&q| q < perm[i]).count() as u64;
                smaller * factorial(n - 1 - i)
            })
            .sum()
    }

    #[test]
    fn identity_ranks_to_zero() {
        assert_eq!(rank(&GroupElement::identity(9)), 0);
        assert!(unrank(0, 9).unwrap().is_identity());
    }

    #[test]
    fn transposition_rank() {
        let e = GroupElement::from_cycle_notation(9, "((1 2), 0)").unwrap();
        assert_eq!(rank(&e), 512 * lehmer_oracle(e.perm()));
        assert_eq!(rank(&e), 512 * factorial(8));
    }

    #[test]
    fn lexicographic_walk_matches_ranks() {
        for n in 1..=6 {
            let mut perm: Vec<u8> = (0..n as u8).collect();
            let mut r = 0;
            loop {
                assert_eq!(perm_rank(&perm), r);
                assert_eq!(lehmer_oracle(&perm), r);
                let mut back = vec![0; n];
                perm_unrank(r, n, &mut back);
                assert_eq!(back, perm);
                r += 1;
                if !next_perm(&mut perm) {
                    break;
                }
            }
            assert_eq!(r, factorial(n));
        }
    }

    #[test]
    fn random_roundtrip() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..20_000 {
            let e = GroupElement::random(9, &mut rng);
            assert_eq!(unrank(rank(&e), 9).unwrap(), e);
        }
        assert!(unrank(state_count(9).unwrap(), 9).is_err());
    }
}
