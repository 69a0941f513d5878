//! Deterministic Schreier-Sims over the signed-permutation embedding.
//!
//! `(alpha, u)` acts on `2N` points: point `i` is "the tile in position `i`,
//! upright" and `i + N` the same tile reversed, so
//! `i -> alpha(i) + N u_alpha(i)` and `i + N -> alpha(i) + N (1 - u_alpha(i))`.
//! The base is `0, 1, ..., 2N - 1` in order.

use num_bigint::BigUint;
use num_traits::One;

use crate::element::GroupElement;

pub type Perm = Vec<u8>;

pub fn embed(e: &GroupElement) -> Perm {
    let n = e.cells();
    let mut p = vec![0u8; 2 * n];
    for i in 0..n {
        let a = e.image(i);
        let flip = e.is_reversed(a) as usize;
        p[i] = (a + n * flip) as u8;
        p[i + n] = (a + n * (1 - flip)) as u8;
    }
    p
}

/// Inverse of [`embed`] on its image.
pub fn unembed(p: &[u8]) -> GroupElement {
    let n = p.len() / 2;
    let mut perm = vec![0u8; n];
    let mut signs = 0u64;
    for i in 0..n {
        let img = p[i] as usize;
        perm[i] = (img % n) as u8;
        if img >= n {
            signs |= 1 << (img - n);
        }
    }
    GroupElement::new(perm, signs).expect("image of the embedding")
}

fn then(a: &[u8], b: &[u8]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn invert(a: &[u8]) -> Perm {
    let mut inv = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

fn first_moved(a: &[u8]) -> Option<usize> {
    a.iter().enumerate().position(|(i, &x)| i != x as usize)
}

#[derive(Clone, Debug)]
struct Level {
    /// `transversal[x]` maps the base point to `x`, for `x` in the orbit.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<u8>,
}

#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        let mut chain = Self {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        };
        chain.levels = (0..degree).map(|i| chain.orbit_of(i)).collect();
        chain
    }

    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = Self::trivial(degree);
        chain.extend(gens);
        chain
    }

    pub fn from_elements(cells: usize, gens: &[GroupElement]) -> Self {
        let perms: Vec<Perm> = gens.iter().map(embed).collect();
        Self::new(2 * cells, &perms)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Orbit of base point `level` under the strong generators fixing every
    /// earlier base point.
    fn orbit_of(&self, level: usize) -> Level {
        let gens: Vec<&Perm> = self
            .strong
            .iter()
            .filter(|g| first_moved(g).is_some_and(|f| f >= level))
            .collect();
        let mut transversal = vec![None; self.degree];
        transversal[level] = Some((0..self.degree as u8).collect::<Perm>());
        let mut orbit = vec![level as u8];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k] as usize;
            let ux = transversal[x].clone().unwrap();
            for g in &gens {
                let y = g[x] as usize;
                if transversal[y].is_none() {
                    transversal[y] = Some(then(&ux, g));
                    orbit.push(y as u8);
                }
            }
            k += 1;
        }
        Level { transversal, orbit }
    }

    /// Strips `g` through the levels from `from` on. Returns the residue
    /// and the level where it dropped out (`degree` if it is the identity).
    fn sift_from(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let x = g[i] as usize;
            match &level.transversal[x] {
                None => return (g, i),
                Some(u) => {
                    if x != i {
                        g = then(&g, &invert(u));
                    }
                }
            }
        }
        (g, self.degree)
    }

    /// Adds generators, keeping the chain complete.
    pub fn extend(&mut self, gens: &[Perm]) {
        for g in gens {
            assert_eq!(g.len(), self.degree);
            let (h, j) = self.sift_from(g.clone(), 0);
            if j < self.degree {
                self.insert(h, j);
                self.complete_from(j);
            }
        }
    }

    fn insert(&mut self, h: Perm, upto: usize) {
        self.strong.push(h);
        for l in 0..=upto {
            self.levels[l] = self.orbit_of(l);
        }
    }

    /// Schreier-Sims main loop, assuming every level deeper than `start`
    /// is already complete.
    fn complete_from(&mut self, start: usize) {
        let mut i = start as isize;
        'outer: while i >= 0 {
            let level = i as usize;
            let gens: Vec<Perm> = self
                .strong
                .iter()
                .filter(|g| first_moved(g).is_some_and(|f| f >= level))
                .cloned()
                .collect();
            let orbit = self.levels[level].orbit.clone();
            for &x in &orbit {
                let ux = self.levels[level].transversal[x as usize].clone().unwrap();
                for s in &gens {
                    let y = s[x as usize] as usize;
                    let uy = self.levels[level].transversal[y].as_ref().unwrap();
                    let schreier = then(&then(&ux, s), &invert(uy));
                    let (h, j) = self.sift_from(schreier, level + 1);
                    if j < self.degree {
                        self.insert(h, j);
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains_perm(&self, g: &[u8]) -> bool {
        g.len() == self.degree && self.sift_from(g.to_vec(), 0).1 == self.degree
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.contains_perm(&embed(e))
    }
}
