//! Pattern databases: exact distances in the quotient that only tracks the
//! positions and orientations of a few tiles.

use std::collections::VecDeque;

pub(crate) const UNREACHED: u8 = u8::MAX;

/// A spin as the solvers see it: position pairs swapped by the rotation
/// (a centre cell pairs with itself) and the covered-position mask.
#[derive(Clone, Debug)]
pub(crate) struct Move {
    pub pairs: Vec<(u8, u8)>,
    pub mask: u64,
    pub image: Vec<u8>,
}

pub(crate) struct PatternDb {
    tiles: Vec<u8>,
    cells: usize,
    dist: Vec<u8>,
}

fn partial_count(cells: usize, k: usize) -> usize {
    (0..k).map(|i| cells - i).product()
}

/// Entries needed for a database over `k` of `cells` tiles.
pub(crate) fn pdb_size(cells: usize, k: usize) -> usize {
    partial_count(cells, k) << k
}

impl PatternDb {
    pub fn build(cells: usize, tiles: Vec<u8>, moves: &[Move]) -> Self {
        let k = tiles.len();
        let mut db = Self {
            dist: vec![UNREACHED; pdb_size(cells, k)],
            tiles,
            cells,
        };
        let goal: Vec<u8> = db.tiles.clone();
        let start = db.index(&goal, 0);
        db.dist[start] = 0;
        let mut queue = VecDeque::from([(pack(&goal), 0u32)]);
        let mut pos = vec![0u8; k];
        let mut next = vec![0u8; k];
        while let Some((packed, ori)) = queue.pop_front() {
            unpack(packed, &mut pos);
            let d = db.dist[db.index(&pos, ori)];
            for mv in moves {
                let mut o = ori;
                for (t, (&p, q)) in pos.iter().zip(next.iter_mut()).enumerate() {
                    *q = mv.image[p as usize];
                    if mv.mask >> p & 1 == 1 {
                        o ^= 1 << t;
                    }
                }
                let idx = db.index(&next, o);
                if db.dist[idx] == UNREACHED {
                    db.dist[idx] = d + 1;
                    queue.push_back((pack(&next), o));
                }
            }
        }
        db
    }

    fn index(&self, pos: &[u8], ori: u32) -> usize {
        let mut used = 0u32;
        let mut r = 0usize;
        for (i, &p) in pos.iter().enumerate() {
            let digit = p as usize - (used & ((1 << p) - 1)).count_ones() as usize;
            r = r * (self.cells - i) + digit;
            used |= 1 << p;
        }
        (r << pos.len()) | ori as usize
    }

    /// Lower bound for a board given tile positions and the per-tile
    /// orientation mask.
    pub fn lookup(&self, pos: &[u8], tile_flips: u64) -> u8 {
        let mut sub = [0u8; 16];
        let mut ori = 0u32;
        for (i, &t) in self.tiles.iter().enumerate() {
            sub[i] = pos[t as usize];
            ori |= ((tile_flips >> t & 1) as u32) << i;
        }
        self.dist[self.index(&sub[..self.tiles.len()], ori)]
    }
}

fn pack(pos: &[u8]) -> u64 {
    pos.iter().rev().fold(0u64, |acc, &p| acc << 4 | p as u64)
}

fn unpack(mut packed: u64, out: &mut [u8]) {
    for p in out.iter_mut() {
        *p = (packed & 15) as u8;
        packed >>= 4;
    }
}
