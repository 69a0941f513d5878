use super::pdb::{pdb_size, Move, PatternDb, UNREACHED};
use super::{Method, SolveResult};
use crate::board::{rho, BoardDims, GeneratorSet, Position, Rectangle};
use crate::census::rank::perm_rank;
use crate::census::{projected_distances, DistanceTable};
use crate::element::GroupElement;
use crate::error::{Result, SpinError};
use crate::spin::enumerate_spins;
use crate::subgroups::{chain_for, StabilizerChain};

const MAX_OPTIMAL_CELLS: usize = 16;
const PDB_ENTRIES: usize = 1 << 22;
const MAX_PROJECTED_CELLS: usize = 10;

/// Iterative-deepening search for shortest words, with its lookup tables.
///
/// Spins are tried in `(p1, p2)` order. A spin is never repeated and two
/// commuting spins only appear in increasing order, so the first word found
/// at the optimal depth is the lexicographically least shortest solution.
pub struct OptimalSolver {
    dims: BoardDims,
    gens: GeneratorSet,
    rects: Vec<Rectangle>,
    moves: Vec<Move>,
    commute: Vec<Vec<bool>>,
    /// `tile_dist[t][p]`: whole-unit distance from position `t` to `p`.
    tile_dist: Vec<Vec<u32>>,
    max_weight: u32,
    projected: Option<Vec<u8>>,
    pdbs: Vec<PatternDb>,
    membership: Option<StabilizerChain>,
}

/// Board in tile form: `pos[t]` is where tile `t` sits, bit `t` of `flips`
/// says it is reversed.
#[derive(Clone)]
struct Node {
    pos: [u8; MAX_OPTIMAL_CELLS],
    board: [u8; MAX_OPTIMAL_CELLS],
    flips: u64,
}

impl Node {
    fn new(e: &GroupElement) -> Self {
        let mut pos = [0u8; MAX_OPTIMAL_CELLS];
        let mut board = [0u8; MAX_OPTIMAL_CELLS];
        let mut flips = 0;
        for (t, &p) in e.perm().iter().enumerate() {
            let p = p as usize;
            pos[t] = p as u8;
            board[p] = t as u8;
            if e.is_reversed(p) {
                flips |= 1 << t;
            }
        }
        Self { pos, board, flips }
    }

    fn apply(&mut self, mv: &Move) {
        for &(a, b) in &mv.pairs {
            let (ta, tb) = (self.board[a as usize], self.board[b as usize]);
            self.board[a as usize] = tb;
            self.board[b as usize] = ta;
            self.pos[ta as usize] = b;
            self.pos[tb as usize] = a;
            self.flips ^= 1 << ta;
            if a != b {
                self.flips ^= 1 << tb;
            }
        }
    }

    fn is_solved(&self, cells: usize) -> bool {
        self.flips == 0 && (0..cells).all(|t| self.pos[t] as usize == t)
    }
}

enum Outcome {
    Found,
    Exceeded(u32),
}

impl OptimalSolver {
    pub fn new(dims: BoardDims, gens: &GeneratorSet) -> Result<Self> {
        let n = dims.cells();
        if n > MAX_OPTIMAL_CELLS {
            return Err(SpinError::Unsupported(format!(
                "optimal search on a {dims} board"
            )));
        }
        let spins = enumerate_spins(dims, gens);
        if spins.is_empty() {
            return Err(SpinError::Unsupported("empty generator set".into()));
        }
        let moves: Vec<Move> = spins
            .iter()
            .map(|s| Move {
                pairs: (0..n)
                    .filter(|&p| s.element.is_reversed(p) && s.element.image(p) >= p)
                    .map(|p| (p as u8, s.element.image(p) as u8))
                    .collect(),
                mask: s.element.signs(),
                image: s.element.perm().to_vec(),
            })
            .collect();
        let commute = spins
            .iter()
            .map(|a| {
                spins
                    .iter()
                    .map(|b| !a.rect.intersects(b.rect) || a.rect.same_center(b.rect))
                    .collect()
            })
            .collect();
        let tile_dist = (0..n)
            .map(|t| {
                (0..n)
                    .map(|p| rho(dims, &Position(t), &Position(p)).halves() / 2)
                    .collect()
            })
            .collect();
        let max_weight = gens.max_weight(dims).unwrap_or(0) as u32;

        let projected = (n <= MAX_PROJECTED_CELLS)
            .then(|| projected_distances(dims, gens))
            .transpose()?;
        let mut k = n;
        while pdb_size(n, k) > PDB_ENTRIES {
            k -= 1;
        }
        let groups: Vec<Vec<u8>> = if k == n {
            vec![(0..n as u8).collect()]
        } else {
            let low: Vec<u8> = (0..k as u8).collect();
            let high: Vec<u8> = ((n - k) as u8..n as u8).collect();
            let half = k / 2;
            let ends: Vec<u8> = (0..half as u8)
                .chain((n - (k - half)) as u8..n as u8)
                .collect();
            vec![low, high, ends]
        };
        let pdbs = groups
            .into_iter()
            .map(|tiles| PatternDb::build(n, tiles, &moves))
            .collect();
        let membership = (!gens.is_full(dims)).then(|| chain_for(dims, gens));

        Ok(Self {
            dims,
            gens: gens.clone(),
            rects: spins.iter().map(|s| s.rect).collect(),
            moves,
            commute,
            tile_dist,
            max_weight,
            projected,
            pdbs,
            membership,
        })
    }

    pub fn dims(&self) -> BoardDims {
        self.dims
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    fn h(&self, node: &Node) -> u32 {
        let n = self.dims.cells();
        let pos = &node.pos[..n];
        let displaced: u32 = pos
            .iter()
            .enumerate()
            .map(|(t, &p)| self.tile_dist[t][p as usize])
            .sum();
        let mut h = if self.max_weight > 0 {
            displaced.div_ceil(self.max_weight)
        } else {
            0
        };
        if node.flips != 0 || displaced != 0 {
            h = h.max(1);
        }
        if let Some(proj) = &self.projected {
            h = h.max(proj[perm_rank(pos) as usize] as u32);
        }
        for db in &self.pdbs {
            let d = db.lookup(pos, node.flips);
            if d != UNREACHED {
                h = h.max(d as u32);
            }
        }
        h
    }

    /// Admissible lower bound on the distance of `b` from the identity.
    pub fn heuristic(&self, b: &GroupElement) -> u32 {
        self.h(&Node::new(b))
    }

    fn dfs(
        &self,
        node: &mut Node,
        g: u32,
        bound: u32,
        prev: Option<usize>,
        path: &mut Vec<usize>,
    ) -> Outcome {
        let f = g + self.h(node);
        if f > bound {
            return Outcome::Exceeded(f);
        }
        if node.is_solved(self.dims.cells()) {
            return Outcome::Found;
        }
        let mut next = u32::MAX;
        for (i, mv) in self.moves.iter().enumerate() {
            if let Some(j) = prev {
                if i == j || (i < j && self.commute[i][j]) {
                    continue;
                }
            }
            node.apply(mv);
            path.push(i);
            match self.dfs(node, g + 1, bound, Some(i), path) {
                Outcome::Found => return Outcome::Found,
                Outcome::Exceeded(t) => next = next.min(t),
            }
            path.pop();
            node.apply(mv);
        }
        Outcome::Exceeded(next)
    }

    pub fn solve(&self, b: &GroupElement) -> Result<SolveResult> {
        if b.cells() != self.dims.cells() {
            return Err(SpinError::DimsMismatch {
                left: b.cells(),
                right: self.dims.cells(),
            });
        }
        if let Some(chain) = &self.membership {
            if !chain.contains(b) {
                return Err(SpinError::Unsolvable);
            }
        }
        let mut node = Node::new(b);
        let mut bound = self.h(&node);
        let mut path = Vec::new();
        loop {
            match self.dfs(&mut node, 0, bound, None, &mut path) {
                Outcome::Found => break,
                Outcome::Exceeded(u32::MAX) => return Err(SpinError::Unsolvable),
                Outcome::Exceeded(t) => bound = t,
            }
        }
        let word = path.into_iter().map(|i| self.rects[i]).collect();
        Ok(SolveResult::new(word, Method::Optimal))
    }
}

/// Shortest solution by iterative deepening.
pub fn optimal_solve(
    dims: BoardDims,
    b: &GroupElement,
    gens: &GeneratorSet,
) -> Result<SolveResult> {
    OptimalSolver::new(dims, gens)?.solve(b)
}

/// Shortest solution read off a distance table: from each state step to the
/// first spin, in `(p1, p2)` order, that lowers the distance.
pub fn optimal_solve_with_table(table: &DistanceTable, b: &GroupElement) -> Result<SolveResult> {
    let dims = table.dims();
    let mut d = table.distance_of(b).map_err(|e| match e {
        SpinError::Unreachable => SpinError::Unsolvable,
        other => other,
    })?;
    let spins = enumerate_spins(dims, table.gens());
    let mut x = b.clone();
    let mut word = Vec::with_capacity(d as usize);
    while d > 0 {
        let (rect, y) = spins
            .iter()
            .map(|s| (s.rect, x.then(&s.element)))
            .find(|(_, y)| table.distance_of(y).ok() == Some(d - 1))
            .ok_or_else(|| SpinError::TableFormat("no neighbour one step closer".into()))?;
        word.push(rect);
        x = y;
        d -= 1;
    }
    Ok(SolveResult::new(word, Method::Optimal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::SpinType;
    use crate::census::{bfs_census, rank};
    use crate::solver::greedy_solve;
    use crate::spin::{evaluate_word, spin_about};
    use crate::text::parse_board;
    use rand::SeedableRng;

    fn d(m: usize, n: usize) -> BoardDims {
        BoardDims::new(m, n).unwrap()
    }

    #[test]
    fn exhaustive_on_small_boards() {
        for dims in [d(1, 2), d(1, 3), d(2, 2)] {
            let gens = GeneratorSet::all(dims);
            let (table, _) = bfs_census(dims, &gens, false).unwrap();
            let solver = OptimalSolver::new(dims, &gens).unwrap();
            for r in 0..table.len() as u64 {
                let b = rank::unrank(r, dims.cells()).unwrap();
                let s = solver.solve(&b).unwrap();
                assert_eq!(s.length as u32, table.distance_at(r).unwrap());
                assert!(s.length <= greedy_solve(dims, &b).length);
                assert_eq!(evaluate_word(dims, &s.word).unwrap(), b.inverse());
                assert_eq!(optimal_solve_with_table(&table, &b).unwrap(), s);
            }
        }
    }

    #[test]
    fn restricted_generators_and_unsolvable_boards() {
        let dims = d(2, 2);
        let gens = GeneratorSet::new([SpinType::new(1, 2)]);
        let (table, _) = bfs_census(dims, &gens, false).unwrap();
        let solver = OptimalSolver::new(dims, &gens).unwrap();
        for r in 0..table.len() as u64 {
            let b = rank::unrank(r, 4).unwrap();
            match table.distance_at(r) {
                Some(dist) => assert_eq!(solver.solve(&b).unwrap().length as u32, dist),
                None => assert!(matches!(solver.solve(&b), Err(SpinError::Unsolvable))),
            }
        }
    }

    #[test]
    fn three_by_three_examples() {
        let dims = d(3, 3);
        let solver = OptimalSolver::new(dims, &GeneratorSet::all(dims)).unwrap();
        let (_, b) = parse_board("-5 -4 -9 / -2 -1 -6 / 7 8 -3").unwrap();
        let s = solver.solve(&b).unwrap();
        assert_eq!(s.length, 2);
        assert_eq!(crate::text::format_word(dims, &s.word), "[1,5],[3,9]");
        let spin = spin_about(dims, Rectangle::from_corners(dims, 2, 6).unwrap()).unwrap();
        assert_eq!(solver.solve(&spin.element).unwrap().length, 1);
        assert!(solver
            .solve(&GroupElement::identity(9))
            .unwrap()
            .word
            .is_empty());
    }

    #[test]
    fn heuristic_is_admissible_on_two_by_three() {
        let dims = d(2, 3);
        let gens = GeneratorSet::all(dims);
        let (table, _) = bfs_census(dims, &gens, false).unwrap();
        let solver = OptimalSolver::new(dims, &gens).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(4);
        for _ in 0..2000 {
            let b = GroupElement::random(6, &mut rng);
            assert!(solver.heuristic(&b) <= table.distance_of(&b).unwrap());
        }
    }
}
