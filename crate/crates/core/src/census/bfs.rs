use std::sync::atomic::{AtomicU64, AtomicU8, Ordering::Relaxed};

use rayon::prelude::*;

use super::rank::{self, perm_rank, perm_unrank, state_count};
use super::CensusReport;
use crate::board::{BoardDims, GeneratorSet};
use crate::element::{permute_vector, GroupElement};
use crate::error::{Result, SpinError};
use crate::spin::enumerate_spins;

/// In-memory state code: distance in the low six bits, saturating geodesic
/// count (0, 1, 2 = many) in the high two.
pub(crate) const UNSEEN: u8 = 63;
const DIST_MASK: u8 = 63;

/// Boards larger than this are refused outright; the memory budget usually
/// bites first.
const MAX_CENSUS_CELLS: usize = 12;
const CHUNK: u64 = 2048;

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub track_uniqueness: bool,
    pub threads: usize,
    /// Upper limit on the bytes the search may allocate.
    pub memory_budget: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            track_uniqueness: true,
            threads: 1,
            memory_budget: 3 << 29,
        }
    }
}

/// Distance and geodesic-count codes for every state of the group, indexed
/// by [`rank`](super::rank::rank).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    pub(crate) dims: BoardDims,
    pub(crate) gens: GeneratorSet,
    pub(crate) dist_bits: u8,
    pub(crate) tracks_uniqueness: bool,
    pub(crate) codes: Vec<u8>,
}

struct Generator {
    perm: Vec<u8>,
    signs: Vec<u32>,
}

fn generators(dims: BoardDims, gens: &GeneratorSet) -> Vec<Generator> {
    let n = dims.cells();
    enumerate_spins(dims, gens)
        .into_iter()
        .map(|s| {
            let perm = s.element.perm().to_vec();
            let mask = s.element.signs();
            let signs = (0..1u64 << n)
                .map(|u| (permute_vector(u, &perm) ^ mask) as u32)
                .collect();
            Generator { perm, signs }
        })
        .collect()
}

struct Level<'a> {
    cells: usize,
    codes: &'a [AtomicU8],
    frontier: &'a [AtomicU64],
    next: &'a [AtomicU64],
    gens: &'a [Generator],
    track: bool,
    depth: u8,
}

impl Level<'_> {
    fn push(&self, target: usize, count: u8) {
        let nd = self.depth + 1;
        let cell = &self.codes[target];
        let mut cur = cell.load(Relaxed);
        loop {
            let d = cur & DIST_MASK;
            let new = if d == UNSEEN {
                nd | if self.track { count << 6 } else { 0 }
            } else if d == nd && self.track && cur >> 6 < 2 {
                nd | ((cur >> 6) + count).min(2) << 6
            } else {
                return;
            };
            match cell.compare_exchange_weak(cur, new, Relaxed, Relaxed) {
                Ok(_) => {
                    if d == UNSEEN {
                        let block = (target >> self.cells) as u64;
                        let word = &self.next[(block / 64) as usize];
                        let bit = 1u64 << (block % 64);
                        if word.load(Relaxed) & bit == 0 {
                            word.fetch_or(bit, Relaxed);
                        }
                    }
                    return;
                }
                Err(actual) => cur = actual,
            }
        }
    }

    fn expand_range(&self, lo: u64, hi: u64) {
        let n = self.cells;
        let mut perm = vec![0u8; n];
        perm_unrank(lo, n, &mut perm);
        let mut composed = vec![0u8; n];
        let mut targets = vec![0usize; self.gens.len()];
        for block in lo..hi {
            if self.frontier[(block / 64) as usize].load(Relaxed) >> (block % 64) & 1 == 1 {
                let base = (block as usize) << n;
                let cells = &self.codes[base..base + (1 << n)];
                let mut resolved = false;
                for (u, cell) in cells.iter().enumerate() {
                    let code = cell.load(Relaxed);
                    if code & DIST_MASK != self.depth {
                        continue;
                    }
                    if !resolved {
                        for (g, t) in self.gens.iter().zip(targets.iter_mut()) {
                            for (c, &p) in composed.iter_mut().zip(&perm) {
                                *c = g.perm[p as usize];
                            }
                            *t = (perm_rank(&composed) as usize) << n;
                        }
                        resolved = true;
                    }
                    let count = code >> 6;
                    for (g, &t) in self.gens.iter().zip(&targets) {
                        self.push(t | g.signs[u] as usize, count);
                    }
                }
            }
            rank::next_perm(&mut perm);
        }
    }
}

/// Level-synchronous search from the identity under right multiplication by
/// the spins of `gens`.
pub fn bfs_census_with(
    dims: BoardDims,
    gens: &GeneratorSet,
    opts: &CensusOptions,
) -> Result<(DistanceTable, CensusReport)> {
    let n = dims.cells();
    if n > MAX_CENSUS_CELLS {
        return Err(SpinError::Unsupported(format!("census of a {dims} board")));
    }
    let states = state_count(n)?;
    let blocks = states >> n;
    let words = blocks.div_ceil(64);
    let needed = states + 16 * words + (enumerate_spins(dims, gens).len() as u64) * (4 << n);
    if needed > opts.memory_budget {
        return Err(SpinError::MemoryBudget {
            states,
            needed,
            budget: opts.memory_budget,
        });
    }

    let gen_list = generators(dims, gens);
    let mut codes = vec![UNSEEN; states as usize];
    codes[0] = if opts.track_uniqueness { 1 << 6 } else { 0 };
    {
        // SAFETY: AtomicU8 has the layout of u8 and `codes` is exclusively
        // borrowed for the lifetime of this view.
        let atomic: &[AtomicU8] =
            unsafe { &*(codes.as_mut_slice() as *mut [u8] as *const [AtomicU8]) };
        let mut frontier: Vec<AtomicU64> = (0..words).map(|_| AtomicU64::new(0)).collect();
        let mut next: Vec<AtomicU64> = (0..words).map(|_| AtomicU64::new(0)).collect();
        *frontier[0].get_mut() = 1;

        let pool = if opts.threads > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(opts.threads)
                    .build()
                    .map_err(|e| SpinError::Unsupported(e.to_string()))?,
            )
        } else {
            None
        };

        let mut depth = 0u8;
        loop {
            if depth + 1 >= UNSEEN {
                return Err(SpinError::Unsupported(
                    "census deeper than 62 levels".into(),
                ));
            }
            let level = Level {
                cells: n,
                codes: atomic,
                frontier: &frontier,
                next: &next,
                gens: &gen_list,
                track: opts.track_uniqueness,
                depth,
            };
            match &pool {
                None => level.expand_range(0, blocks),
                Some(pool) => pool.install(|| {
                    (0..blocks.div_ceil(CHUNK)).into_par_iter().for_each(|c| {
                        level.expand_range(c * CHUNK, ((c + 1) * CHUNK).min(blocks));
                    })
                }),
            }
            if next.iter().all(|w| w.load(Relaxed) == 0) {
                break;
            }
            std::mem::swap(&mut frontier, &mut next);
            for w in next.iter_mut() {
                *w.get_mut() = 0;
            }
            depth += 1;
        }
    }

    let mut table = DistanceTable {
        dims,
        gens: gens.clone(),
        dist_bits: 0,
        tracks_uniqueness: opts.track_uniqueness,
        codes,
    };
    let report = table.report();
    table.dist_bits = default_dist_bits(dims, gens, report.diameter);
    Ok((table, report))
}

/// Narrowest distance field that keeps one code free as the unreached
/// marker: 4 bits for the full generator set, 5 otherwise, more if needed.
pub(crate) fn default_dist_bits(dims: BoardDims, gens: &GeneratorSet, diameter: u32) -> u8 {
    let mut bits = if gens.is_full(dims) { 4 } else { 5 };
    while (1u32 << bits) - 1 <= diameter {
        bits += 1;
    }
    bits
}

/// Census with default options.
pub fn bfs_census(
    dims: BoardDims,
    gens: &GeneratorSet,
    track_uniqueness: bool,
) -> Result<(DistanceTable, CensusReport)> {
    bfs_census_with(
        dims,
        gens,
        &CensusOptions {
            track_uniqueness,
            ..CensusOptions::default()
        },
    )
}

impl DistanceTable {
    pub fn dims(&self) -> BoardDims {
        self.dims
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn dist_bits(&self) -> u8 {
        self.dist_bits
    }

    pub fn tracks_uniqueness(&self) -> bool {
        self.tracks_uniqueness
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Distance of the state with the given rank, `None` if unreached.
    pub fn distance_at(&self, rank: u64) -> Option<u32> {
        let d = self.codes[rank as usize] & DIST_MASK;
        (d != UNSEEN).then_some(d as u32)
    }

    /// Saturated number of geodesics (0, 1 or 2 meaning "two or more").
    pub fn geodesic_code(&self, rank: u64) -> Option<u8> {
        (self.tracks_uniqueness && self.distance_at(rank).is_some())
            .then(|| self.codes[rank as usize] >> 6)
    }

    pub fn distance_of(&self, e: &GroupElement) -> Result<u32> {
        if e.cells() != self.dims.cells() {
            return Err(SpinError::DimsMismatch {
                left: e.cells(),
                right: self.dims.cells(),
            });
        }
        self.distance_at(rank::rank(e))
            .ok_or(SpinError::Unreachable)
    }

    pub fn histogram(&self) -> Vec<u64> {
        let mut hist = vec![0u64; 64];
        for &c in &self.codes {
            hist[(c & DIST_MASK) as usize] += 1;
        }
        hist.truncate(UNSEEN as usize);
        while hist.last() == Some(&0) {
            hist.pop();
        }
        hist
    }

    pub fn unique_solution_count(&self) -> Result<u64> {
        if !self.tracks_uniqueness {
            return Err(SpinError::UniquenessNotTracked);
        }
        Ok(self.codes[1..]
            .iter()
            .filter(|&&c| c >> 6 == 1 && c & DIST_MASK != UNSEEN)
            .count() as u64)
    }

    pub fn report(&self) -> CensusReport {
        let unique = self.unique_solution_count().ok();
        CensusReport::from_histogram(self.histogram(), unique)
    }
}

pub fn unique_solution_count(table: &DistanceTable) -> Result<u64> {
    table.unique_solution_count()
}

pub fn distance_of(table: &DistanceTable, b: &GroupElement) -> Result<u32> {
    table.distance_of(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::SpinType;
    use std::collections::{HashMap, VecDeque};

    fn d(m: usize, n: usize) -> BoardDims {
        BoardDims::new(m, n).unwrap()
    }

    /// Plain hash-map search with full path counts.
    fn oracle(dims: BoardDims, gens: &GeneratorSet) -> HashMap<GroupElement, (u32, u64)> {
        let spins: Vec<_> = enumerate_spins(dims, gens)
            .into_iter()
            .map(|s| s.element)
            .collect();
        let mut seen = HashMap::new();
        let id = GroupElement::identity(dims.cells());
        seen.insert(id.clone(), (0u32, 1u64));
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            let (dx, cx) = seen[&x];
            for s in &spins {
                let y = x.mul(s).unwrap();
                match seen.get_mut(&y) {
                    None => {
                        seen.insert(y.clone(), (dx + 1, cx));
                        queue.push_back(y);
                    }
                    Some((dy, cy)) if *dy == dx + 1 => *cy += cx,
                    _ => {}
                }
            }
        }
        seen
    }

    #[test]
    fn one_by_two_histogram() {
        let dims = d(1, 2);
        let (table, report) = bfs_census(dims, &GeneratorSet::all(dims), true).unwrap();
        assert_eq!(report.histogram, vec![1, 3, 3, 1]);
        assert_eq!(report.diameter, 3);
        assert_eq!(report.total, 8);
        assert_eq!(table.unique_solution_count().unwrap(), 3);
    }

    #[test]
    fn one_by_one() {
        let dims = d(1, 1);
        let (table, report) = bfs_census(dims, &GeneratorSet::all(dims), true).unwrap();
        assert_eq!(report.histogram, vec![1, 1]);
        assert_eq!(table.unique_solution_count().unwrap(), 1);
    }

    #[test]
    fn matches_hash_map_oracle() {
        let all = |dims| GeneratorSet::all(dims);
        let cases = [
            (d(1, 3), all(d(1, 3))),
            (d(2, 2), all(d(2, 2))),
            (d(2, 2), GeneratorSet::new([SpinType::new(1, 2)])),
            (
                d(1, 4),
                GeneratorSet::new([SpinType::new(1, 1), SpinType::new(1, 2)]),
            ),
        ];
        for (dims, gens) in cases {
            let expected = oracle(dims, &gens);
            for threads in [1, 3] {
                let opts = CensusOptions {
                    threads,
                    ..CensusOptions::default()
                };
                let (table, report) = bfs_census_with(dims, &gens, &opts).unwrap();
                assert_eq!(report.total, expected.len() as u64);
                for r in 0..table.len() as u64 {
                    let e = rank::unrank(r, dims.cells()).unwrap();
                    match expected.get(&e) {
                        None => assert_eq!(table.distance_at(r), None),
                        Some(&(dist, count)) => {
                            assert_eq!(table.distance_at(r), Some(dist));
                            assert_eq!(table.geodesic_code(r), Some(count.min(2) as u8));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn distances_of_known_states() {
        let dims = d(2, 3);
        let (table, _) = bfs_census(dims, &GeneratorSet::all(dims), false).unwrap();
        assert_eq!(table.distance_of(&GroupElement::identity(6)).unwrap(), 0);
        for s in enumerate_spins(dims, &GeneratorSet::all(dims)) {
            assert_eq!(table.distance_of(&s.element).unwrap(), 1);
        }
        assert!(matches!(
            table.unique_solution_count(),
            Err(SpinError::UniquenessNotTracked)
        ));
    }

    #[test]
    fn proper_subgroup_leaves_unreached_states() {
        let dims = d(2, 2);
        let gens = GeneratorSet::new([SpinType::new(1, 2)]);
        let (table, report) = bfs_census(dims, &gens, true).unwrap();
        assert_eq!(report.total, 24);
        let flip = GroupElement::from_cycle_notation(4, "(ι, 1000)").unwrap();
        assert!(matches!(
            table.distance_of(&flip),
            Err(SpinError::Unreachable)
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let dims = d(3, 3);
        let opts = CensusOptions {
            memory_budget: 1 << 20,
            ..CensusOptions::default()
        };
        assert!(matches!(
            bfs_census_with(dims, &GeneratorSet::all(dims), &opts),
            Err(SpinError::MemoryBudget { .. })
        ));
    }
}
