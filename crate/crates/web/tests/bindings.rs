use serde_json::Value;
use spinlab_web::{apply_spin, census, generation_report, random_board, solve};

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn spins_and_solutions_round_trip() {
    let start = "-5 -4 -9 / -2 -1 -6 / 7 8 -3";
    let v = parse(&solve(start, "greedy").unwrap());
    let frames = v["frames"].as_array().unwrap();
    assert_eq!(frames.len(), v["length"].as_u64().unwrap() as usize + 1);
    assert_eq!(frames.last().unwrap(), "1 2 3 / 4 5 6 / 7 8 9");
    let after = apply_spin(start, 1, 5).unwrap();
    assert_eq!(apply_spin(&after, 3, 9).unwrap(), "1 2 3 / 4 5 6 / 7 8 9");
    assert_eq!(
        apply_spin(&apply_spin(start, 2, 6).unwrap(), 2, 6).unwrap(),
        start
    );
}

#[test]
fn optimal_and_restricted_methods() {
    let board = random_board(2, 3, 7).unwrap();
    let opt = parse(&solve(&board, "optimal").unwrap());
    let res = parse(&solve(&board, "restricted").unwrap());
    assert!(opt["length"].as_u64() <= res["length"].as_u64());
    assert_eq!(
        opt["frames"].as_array().unwrap().last().unwrap(),
        "1 2 3 / 4 5 6"
    );
    assert!(solve(&random_board(3, 3, 1).unwrap(), "optimal").is_err());
    assert!(solve(&board, "bogus").is_err());
}

#[test]
fn reports() {
    let g = parse(&generation_report(3, 3, "1x2").unwrap());
    assert_eq!(g["order"], "362880");
    assert_eq!(g["index"], "512");
    assert_eq!(g["generates"], false);
    let c = parse(&census(1, 2, "all").unwrap());
    assert_eq!(c["histogram"], serde_json::json!([1, 3, 3, 1]));
    assert!(census(3, 3, "all").is_err());
    assert!(apply_spin("1 2 / 3 4", 1, 9).is_err());
    assert!(random_board(0, 3, 1).is_err());
}
