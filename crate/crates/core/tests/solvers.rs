use rand::SeedableRng;
use spinlab::solver::{
    greedy_solve, optimal_solve, restricted_solve_one_two, upper_bound_formulas, OptimalSolver,
};
use spinlab::*;

fn solves(dims: BoardDims, b: &GroupElement, word: &[Rectangle]) -> bool {
    b.mul(&evaluate_word(dims, word).unwrap())
        .unwrap()
        .is_identity()
}

#[test]
fn starting_board_takes_two_spins() {
    let (dims, b) = parse_board("-5 -4 -9 / -2 -1 -6 / 7 8 -3").unwrap();
    let s = optimal_solve(dims, &b, &GeneratorSet::all(dims)).unwrap();
    assert_eq!(format_word(dims, &s.word), "[1,5],[3,9]");
    assert!(solves(dims, &b, &s.word));
}

#[test]
fn optimal_never_beats_the_constructive_solvers_on_three_by_three() {
    let dims = BoardDims::new(3, 3).unwrap();
    let solver = OptimalSolver::new(dims, &GeneratorSet::all(dims)).unwrap();
    let bounds = upper_bound_formulas(dims);
    let mut rng = rand::rngs::StdRng::seed_from_u64(99);
    for _ in 0..200 {
        let b = GroupElement::random(9, &mut rng);
        let opt = solver.solve(&b).unwrap();
        let greedy = greedy_solve(dims, &b);
        let restricted = restricted_solve_one_two(dims, &b);
        assert!(solves(dims, &b, &opt.word));
        assert!(opt.length <= 9);
        assert!(opt.length <= greedy.length && greedy.length as u64 <= bounds.greedy_upper);
        assert!(restricted.length as u64 <= bounds.restricted_upper);
    }
}

#[test]
fn restricted_generators_on_two_by_three() {
    let dims = BoardDims::new(2, 3).unwrap();
    let gens = GeneratorSet::parse("1x1,1x2", dims).unwrap();
    let solver = OptimalSolver::new(dims, &gens).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    for _ in 0..50 {
        let b = GroupElement::random(6, &mut rng);
        let opt = solver.solve(&b).unwrap();
        assert!(opt.word.iter().all(|r| gens.admits(*r)));
        assert!(opt.length <= restricted_solve_one_two(dims, &b).length);
        assert!(solves(dims, &b, &opt.word));
    }
}

#[test]
fn unsolvable_under_a_proper_subgroup() {
    let dims = BoardDims::new(3, 3).unwrap();
    let gens = GeneratorSet::parse("1x2", dims).unwrap();
    let b = GroupElement::from_cycle_notation(9, "(ι, 100000000)").unwrap();
    assert!(matches!(
        optimal_solve(dims, &b, &gens),
        Err(SpinError::Unsolvable)
    ));
}
