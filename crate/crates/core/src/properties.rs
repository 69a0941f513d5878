//! Exhaustive checks of the basic spin algebra over every spin or spin pair
//! of a board, plus the closed-form counts and weights.

use serde::Serialize;

use crate::board::{rect_weight, weight, BoardDims, GeneratorSet, Rectangle};
use crate::spin::{enumerate_spins, is_spin, spin_counts, Spin};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub dims: Option<String>,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl PropertyReport {
    fn new(name: &str, dims: Option<BoardDims>) -> Self {
        Self {
            name: name.into(),
            dims: dims.map(|d| d.to_string()),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn spins(dims: BoardDims) -> Vec<Spin> {
    enumerate_spins(dims, &GeneratorSet::all(dims))
}

fn pair_label(dims: BoardDims, a: Rectangle, b: Rectangle) -> String {
    format!("{} {}", a.label(dims), b.label(dims))
}

fn disjoint(a: Rectangle, b: Rectangle) -> bool {
    a.bottom < b.top || b.bottom < a.top || a.right < b.left || b.right < a.left
}

fn concentric(a: Rectangle, b: Rectangle) -> bool {
    a.top + a.bottom == b.top + b.bottom && a.left + a.right == b.left + b.right
}

/// Every spin squares to the identity.
pub fn involutions(dims: BoardDims) -> PropertyReport {
    let mut report = PropertyReport::new("spins are involutions", Some(dims));
    for s in spins(dims) {
        report.check(s.element.then(&s.element).is_identity(), || {
            s.rect.label(dims)
        });
    }
    report
}

/// The product of two distinct spins is never a spin.
pub fn products_are_not_spins(dims: BoardDims) -> PropertyReport {
    let mut report = PropertyReport::new("products of distinct spins are not spins", Some(dims));
    let all = spins(dims);
    for a in &all {
        for b in all.iter().filter(|b| b.rect != a.rect) {
            let p = a.element.then(&b.element);
            report.check(is_spin(dims, &p).is_none(), || {
                pair_label(dims, a.rect, b.rect)
            });
        }
    }
    report
}

/// Two spins commute exactly when their rectangles are disjoint or share a
/// center.
pub fn commutation(dims: BoardDims) -> PropertyReport {
    let mut report = PropertyReport::new("commutation", Some(dims));
    let all = spins(dims);
    for a in &all {
        for b in &all {
            let commute = a.element.then(&b.element) == b.element.then(&a.element);
            let predicted = disjoint(a.rect, b.rect) || concentric(a.rect, b.rect);
            report.check(commute == predicted, || pair_label(dims, a.rect, b.rect));
        }
    }
    report
}

/// `s1 s2 s1` is a spin exactly when the spins commute or `R1` contains
/// `R2`, and in the second case its rectangle has the shape of `R2`.
pub fn conjugation(dims: BoardDims) -> PropertyReport {
    let mut report = PropertyReport::new("conjugation", Some(dims));
    let all = spins(dims);
    for a in &all {
        for b in &all {
            let conj = a.element.then(&b.element).then(&a.element);
            let image = is_spin(dims, &conj);
            let commute = a.element.then(&b.element) == b.element.then(&a.element);
            let contains = a.rect.contains(b.rect);
            let shape_ok = !contains
                || image
                    .is_some_and(|r| r.height() == b.rect.height() && r.width() == b.rect.width());
            report.check(image.is_some() == (commute || contains) && shape_ok, || {
                pair_label(dims, a.rect, b.rect)
            });
        }
    }
    report
}

/// All four spin-algebra checks on one board.
pub fn spin_algebra(dims: BoardDims) -> Vec<PropertyReport> {
    vec![
        involutions(dims),
        products_are_not_spins(dims),
        commutation(dims),
        conjugation(dims),
    ]
}

/// Closed-form spin counts against enumeration for every board up to
/// `max x max`.
pub fn count_formulas(max: usize) -> PropertyReport {
    let mut report = PropertyReport::new("spin count formulas", None);
    for m in 1..=max {
        for n in 1..=max {
            let dims = BoardDims::new(m, n).expect("small board");
            let counts = spin_counts(dims);
            let all = spins(dims);
            report.check(counts.total as usize == all.len(), || {
                format!("{dims} total")
            });
            let mut types: Vec<_> = all.iter().map(|s| s.rect.spin_type()).collect();
            types.sort();
            types.dedup();
            report.check(counts.type_count as usize == types.len(), || {
                format!("{dims} types")
            });
            for tc in &counts.per_type {
                let k = all
                    .iter()
                    .filter(|s| s.rect.spin_type() == tc.spin_type)
                    .count();
                report.check(tc.count as usize == k, || {
                    format!("{dims} {}", tc.spin_type)
                });
            }
        }
    }
    report
}

/// The weight formula against direct summation for every `i x j` up to
/// `max x max`.
pub fn weight_formula(max: usize) -> PropertyReport {
    let mut report = PropertyReport::new("weight formula", None);
    for i in 1..=max {
        for j in 1..=max {
            let dims = BoardDims::new(i, j).expect("small board");
            let direct = rect_weight(dims, dims.full_rect());
            report.check(weight(i, j) == direct, || {
                format!("{i}x{j}: {} vs {direct}", weight(i, j))
            });
        }
    }
    report
}
