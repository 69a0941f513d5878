//! Elements of the wreath product `Z/2 wr S_N`.
//!
//! An element is a pair `(alpha, u)`: the tile in position `i` moves to
//! position `alpha(i)`, then every tile in a position `j` with `u_j = 1` is
//! reversed. Products act on the right, so `a * b` applies `a` and then `b`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::board::MAX_CELLS;
use crate::error::{Result, SpinError};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    perm: Vec<u8>,
    signs: u64,
}

/// Applies `perm` to a bit vector: bit `perm(i)` of the result is bit `i`
/// of `v`, i.e. `v^alpha` with `(v^alpha)_i = v_{alpha^-1(i)}`.
pub fn permute_vector(v: u64, perm: &[u8]) -> u64 {
    let mut out = 0;
    let mut rest = v;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << perm[i];
    }
    out
}

fn low_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

impl GroupElement {
    pub fn identity(cells: usize) -> Self {
        assert!(cells <= MAX_CELLS);
        Self {
            perm: (0..cells as u8).collect(),
            signs: 0,
        }
    }

    /// Builds an element from an image array (`perm[i] = alpha(i)`, 0-based)
    /// and an orientation mask.
    pub fn new(perm: Vec<u8>, signs: u64) -> Result<Self> {
        let n = perm.len();
        if n == 0 || n > MAX_CELLS {
            return Err(SpinError::Parse(format!("{n} cells is out of range")));
        }
        let mut seen = 0u64;
        for &p in &perm {
            if p as usize >= n || seen >> p & 1 == 1 {
                return Err(SpinError::Parse("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        if signs & !low_mask(n) != 0 {
            return Err(SpinError::Parse("orientation vector is too long".into()));
        }
        Ok(Self { perm, signs })
    }

    pub(crate) fn from_parts_unchecked(perm: Vec<u8>, signs: u64) -> Self {
        debug_assert!(Self::new(perm.clone(), signs).is_ok());
        Self { perm, signs }
    }

    pub fn random<R: Rng + ?Sized>(cells: usize, rng: &mut R) -> Self {
        let mut perm: Vec<u8> = (0..cells as u8).collect();
        perm.shuffle(rng);
        let signs = rng.random::<u64>() & low_mask(cells);
        Self { perm, signs }
    }

    pub fn cells(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn signs(&self) -> u64 {
        self.signs
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn is_reversed(&self, pos: usize) -> bool {
        self.signs >> pos & 1 == 1
    }

    pub fn is_identity(&self) -> bool {
        self.signs == 0 && self.perm_is_identity()
    }

    pub fn perm_is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// `(alpha beta, u^beta + v)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cells() != other.cells() {
            return Err(SpinError::DimsMismatch {
                left: self.cells(),
                right: other.cells(),
            });
        }
        Ok(self.then(other))
    }

    /// Product without the size check.
    pub(crate) fn then(&self, other: &Self) -> Self {
        let perm = self.perm.iter().map(|&p| other.perm[p as usize]).collect();
        let signs = permute_vector(self.signs, &other.perm) ^ other.signs;
        Self { perm, signs }
    }

    /// `(alpha^-1, u^{alpha^-1})`.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.cells()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        let signs = permute_vector(self.signs, &inv);
        Self { perm: inv, signs }
    }

    /// `alpha^-1(pos)`: the position whose tile ends up in `pos`.
    pub fn preimage(&self, pos: usize) -> usize {
        self.perm.iter().position(|&p| p as usize == pos).unwrap()
    }

    /// Whether the permutation part is even.
    pub fn perm_is_even(&self) -> bool {
        (self.cells() - self.cycles().len()).is_multiple_of(2)
    }

    /// Disjoint cycles of the permutation part, including fixed points, each
    /// starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.cells();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.perm[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Parses cycle notation with 1-based points, e.g.
    /// `((1 5)(2 4)(3 9), 111111001)`, `((1 2), 0)` or `(ι, 100)`. A lone `0`
    /// stands for the zero vector.
    pub fn from_cycle_notation(cells: usize, text: &str) -> Result<Self> {
        let bad = |msg: &str| SpinError::Parse(format!("{msg} in {text:?}"));
        let body = text
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| bad("expected an outer pair of parentheses"))?;
        let (cycles, bits) = body.rsplit_once(',').ok_or_else(|| bad("missing ','"))?;
        let mut perm: Vec<u8> = (0..cells as u8).collect();
        let cycles = cycles.trim();
        if cycles != "ι" && cycles != "id" && cycles != "()" {
            for chunk in cycles.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let inner = chunk.strip_prefix('(').ok_or_else(|| bad("bad cycle"))?;
                let points = inner
                    .split_whitespace()
                    .map(|t| match t.parse::<usize>() {
                        Ok(p) if (1..=cells).contains(&p) => Ok(p - 1),
                        _ => Err(bad("bad point")),
                    })
                    .collect::<Result<Vec<_>>>()?;
                for (k, &p) in points.iter().enumerate() {
                    perm[p] = points[(k + 1) % points.len()] as u8;
                }
            }
        }
        let bits = bits.trim();
        let signs = if bits == "0" {
            0
        } else {
            if bits.len() != cells {
                return Err(bad("orientation vector has the wrong length"));
            }
            bits.chars()
                .enumerate()
                .try_fold(0u64, |acc, (i, ch)| match ch {
                    '0' => Ok(acc),
                    '1' => Ok(acc | 1 << i),
                    _ => Err(bad("bad orientation bit")),
                })?
        };
        Self::new(perm, signs)
    }

    pub fn sign_string(&self) -> String {
        (0..self.cells())
            .map(|i| if self.is_reversed(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect();
        let perm = if cycles.is_empty() {
            "ι".to_string()
        } else {
            cycles.concat()
        };
        write!(f, "({perm}, {})", self.sign_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: usize, s: &str) -> GroupElement {
        GroupElement::from_cycle_notation(n, s).unwrap()
    }

    #[test]
    fn cycle_notation_roundtrip() {
        let e = el(9, "((1 5)(2 4)(3 9), 111111001)");
        assert_eq!(e.to_string(), "((1 5)(2 4)(3 9), 111111001)");
        assert_eq!(el(9, "((1 2), 0)").signs(), 0);
        assert_eq!(el(3, "(ι, 100)").to_string(), "(ι, 100)");
        assert!(GroupElement::from_cycle_notation(3, "((1 4), 0)").is_err());
    }

    #[test]
    fn permute_vector_examples() {
        let ident: Vec<u8> = (0..9).collect();
        assert_eq!(permute_vector(0b1011, &ident), 0b1011);
        let swap12 = [1u8, 0, 2];
        assert_eq!(permute_vector(0b001, &swap12), 0b010);
        // 110110000 under (3 9): bits 3 and 9 are both clear.
        let v = el(9, "(ι, 110110000)").signs();
        let t = el(9, "((3 9), 0)");
        assert_eq!(permute_vector(v, t.perm()), v);
    }

    #[test]
    fn inverse_example() {
        let a = el(9, "((1 2 3), 100000000)");
        let inv = a.inverse();
        assert_eq!(inv, el(9, "((1 3 2), 001000000)"));
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let a = GroupElement::identity(4);
        let b = GroupElement::identity(6);
        assert!(matches!(a.mul(&b), Err(SpinError::DimsMismatch { .. })));
    }

    #[test]
    fn new_rejects_non_permutations() {
        assert!(GroupElement::new(vec![0, 0, 1], 0).is_err());
        assert!(GroupElement::new(vec![0, 1], 0b100).is_err());
        assert!(GroupElement::new(vec![1, 0], 0b11).is_ok());
    }
}
