//! Explicit spin identities, written in `3 x 3` coordinates.
//!
//! On an `m x n` board positions 4 to 9 stand for `n+1, n+2, n+3, 2n+1,
//! 2n+2, 2n+3`.

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::board::{BoardDims, Position, Rectangle};
use crate::element::GroupElement;
use crate::isometry::Isometry;
use crate::spin::{evaluate_word, spin_about};
use crate::text::format_word;

#[derive(Clone, Copy)]
enum Target {
    Spin(usize, usize),
    Swap(usize, usize),
}

struct Identity {
    name: &'static str,
    word: &'static [(usize, usize)],
    target: Target,
}

const IDENTITIES: [Identity; 8] = [
    Identity {
        name: "adjacent transposition from 1x2 and 2x2 spins",
        word: &[(2, 3), (1, 4), (1, 5), (2, 3), (1, 5), (1, 4), (2, 3)],
        target: Target::Swap(1, 2),
    },
    Identity {
        name: "diagonal transposition from 1x1, 1x3 and 2x2 spins",
        word: &[(2, 6), (1, 3), (2, 6), (6, 6)],
        target: Target::Swap(1, 5),
    },
    Identity {
        name: "distance-two transposition in a single row",
        word: &[(1, 1), (1, 3), (2, 2), (1, 1)],
        target: Target::Swap(1, 3),
    },
    Identity {
        name: "2x3 spin from 1x2 spins",
        word: &[
            (2, 5),
            (2, 3),
            (4, 5),
            (5, 6),
            (1, 2),
            (4, 5),
            (2, 3),
            (3, 6),
            (1, 4),
        ],
        target: Target::Spin(1, 6),
    },
    Identity {
        name: "horizontal 1x2 spin from 2x3 spins",
        word: &[
            (1, 6),
            (4, 9),
            (1, 8),
            (4, 9),
            (1, 8),
            (1, 6),
            (1, 8),
            (4, 9),
            (1, 8),
            (1, 6),
            (1, 8),
            (4, 9),
            (1, 8),
            (1, 6),
            (1, 8),
        ],
        target: Target::Spin(1, 2),
    },
    Identity {
        name: "second-row 1x2 spin from 2x3 spins",
        word: &[
            (1, 6),
            (2, 9),
            (1, 6),
            (2, 9),
            (4, 9),
            (2, 9),
            (1, 6),
            (2, 9),
            (4, 9),
            (2, 9),
            (1, 6),
            (2, 9),
            (4, 9),
            (2, 9),
            (4, 9),
        ],
        target: Target::Spin(4, 5),
    },
    Identity {
        name: "single flip from 1x2 and 1x3 spins",
        word: &[
            (1, 2),
            (1, 4),
            (1, 3),
            (1, 4),
            (1, 2),
            (4, 6),
            (3, 6),
            (4, 6),
        ],
        target: Target::Spin(1, 1),
    },
    Identity {
        name: "single flip from 1x2, 2x2 and 3x3 spins",
        word: &[
            (2, 3),
            (1, 5),
            (1, 2),
            (3, 6),
            (4, 7),
            (1, 5),
            (2, 3),
            (5, 8),
            (1, 9),
            (5, 9),
            (1, 5),
            (5, 8),
            (8, 9),
        ],
        target: Target::Spin(1, 1),
    },
];

/// Outcome of checking one identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub dims: String,
    pub word: String,
    pub target: String,
    /// The identity holds as written.
    pub holds: bool,
    /// Board used for the transformed copies.
    pub isometry_host: String,
    pub isometry_checks: usize,
    pub isometry_failures: usize,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.holds && self.isometry_failures == 0 && self.isometry_checks > 0
    }
}

fn substitute(dims: BoardDims, p: usize) -> usize {
    let n = dims.cols();
    match p {
        1..=3 => p,
        4..=6 => n + p - 3,
        _ => 2 * n + p - 6,
    }
}

fn footprint(id: &Identity) -> (usize, usize) {
    let cells = id
        .word
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .chain(match id.target {
            Target::Spin(a, b) | Target::Swap(a, b) => [a, b],
        });
    cells.fold((0, 0), |(r, c), p| {
        (r.max((p - 1) / 3 + 1), c.max((p - 1) % 3 + 1))
    })
}

fn fits(dims: BoardDims, id: &Identity) -> bool {
    let (r, c) = footprint(id);
    dims.rows() >= r && dims.cols() >= c
}

fn instantiate(dims: BoardDims, id: &Identity) -> (Vec<Rectangle>, GroupElement, Vec<Rectangle>) {
    let rect =
        |a, b| Rectangle::from_corners(dims, substitute(dims, a), substitute(dims, b)).unwrap();
    let word: Vec<Rectangle> = id.word.iter().map(|&(a, b)| rect(a, b)).collect();
    let (target, support) = match id.target {
        Target::Spin(a, b) => {
            let r = rect(a, b);
            (spin_about(dims, r).unwrap().element, vec![r])
        }
        Target::Swap(a, b) => {
            let (a, b) = (substitute(dims, a) - 1, substitute(dims, b) - 1);
            let mut perm: Vec<u8> = (0..dims.cells() as u8).collect();
            perm.swap(a, b);
            let cells = vec![
                Rectangle::cell(dims, Position(a)),
                Rectangle::cell(dims, Position(b)),
            ];
            (GroupElement::new(perm, 0).unwrap(), cells)
        }
    };
    (word, target, support)
}

/// Checks every identity that fits on `dims`, as written and under each of
/// the eight point symmetries of the square combined with a random fitting
/// translation.
pub fn verify_identities(dims: BoardDims) -> Vec<IdentityCheck> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    IDENTITIES
        .iter()
        .filter(|id| fits(dims, id))
        .map(|id| {
            let (word, target, _) = instantiate(dims, id);
            let holds = evaluate_word(dims, &word).unwrap() == target;

            let side = dims.rows().max(dims.cols());
            let host = if dims.rows() == dims.cols() || !fits(dims.transposed(), id) {
                BoardDims::new(side, side).unwrap()
            } else {
                dims
            };
            let (host_word, host_target, support) = instantiate(host, id);
            let mut span = host_word.clone();
            span.extend(support);
            let mut checks = 0;
            let mut failures = 0;
            for k in 0..8 {
                let Some(iso) = Isometry::orientation(k).fit_randomly(host, &span, &mut rng) else {
                    continue;
                };
                checks += 1;
                let image = iso.apply_word(host, host, &host_word).unwrap();
                let expected = iso.apply_element(host, host, &host_target).unwrap();
                if evaluate_word(host, &image).unwrap() != expected {
                    failures += 1;
                }
            }
            IdentityCheck {
                name: id.name.to_string(),
                dims: dims.to_string(),
                word: format_word(dims, &word),
                target: target.to_string(),
                holds,
                isometry_host: host.to_string(),
                isometry_checks: checks,
                isometry_failures: failures,
            }
        })
        .collect()
}
