//! Finite verification of the identifying property for periodic codes.
//!
//! Let `D` be one fundamental domain `[ax..ax+px-1] × [ay..ay+py-1]`. Translations
//! by `(px, 0)` and `(0, py)` are graph automorphisms (both periods are even)
//! that map the code onto itself, so every uncovered vertex and every
//! confused pair has a translate with its first vertex in `D`. If `u` and `v`
//! have the same nonempty identifying set they share a codeword `c`, and then
//! `d(u, v) <= d(u, c) + d(c, v) <= 2r`. Coverage is checked for every vertex
//! of `D`, so checking, for each `u` in `D`, every `v != u` within distance
//! `2r` decides the property for the whole infinite grid.
//!
//! Identifying sets are computed once per vertex of `D`; the set of any other
//! vertex is obtained by translating the set of its representative in `D`.
//! Each unordered pair is examined once per translation class, as `(u, v)`
//! with `u` in `D` and `u < v` in row-major order, so counts do not depend on
//! where `D` is anchored.

use rayon::prelude::*;

use crate::code::{Code, CodeParams};
use crate::lattice::{distance, line_distance, Line, Vertex};

/// Counterexample lists are truncated to this many entries; counts stay exact.
pub const MAX_COUNTEREXAMPLES: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub r: u64,
    pub valid: bool,
    /// Vertices with an empty identifying set (first [`MAX_COUNTEREXAMPLES`]).
    pub coverage_failures: Vec<Vertex>,
    /// Distinct vertices with equal identifying sets (first [`MAX_COUNTEREXAMPLES`]).
    pub confusion_pairs: Vec<(Vertex, Vertex)>,
    pub coverage_failure_count: u64,
    pub confusion_count: u64,
    pub vertices_checked: u64,
    pub pairs_checked: u64,
}

/// `B_r(v) ∩ C` in row-major order.
pub fn identifying_set<C: Code + ?Sized>(code: &C, v: Vertex) -> Vec<Vertex> {
    let r = code.radius();
    let ri = r as i64;
    let mut out = Vec::new();
    for y in v.y - ri..=v.y + ri {
        if !code.row_may_contain(y) || line_distance(v, Line::new(y)) > r {
            continue;
        }
        let reach = ri - (y - v.y).abs();
        for x in v.x - reach..=v.x + reach {
            let w = Vertex::new(x, y);
            if distance(v, w) <= r && code.contains(w) {
                out.push(w);
            }
        }
    }
    out
}

/// Verify `code` over the fundamental domain anchored at the origin.
pub fn verify<C: Code + ?Sized>(code: &C) -> VerificationReport {
    verify_anchored(code, Vertex::new(0, 0))
}

/// Verify `code` over the fundamental domain whose lower-left corner is `anchor`.
pub fn verify_anchored<C: Code + ?Sized>(code: &C, anchor: Vertex) -> VerificationReport {
    let r = code.radius();
    let (px, py) = code.periods();
    assert!(px > 0 && py > 0 && px % 2 == 0 && py % 2 == 0, "periods must be positive and even");

    let width = px as usize;
    let sets: Vec<Vec<Vertex>> = (0..py)
        .into_par_iter()
        .flat_map_iter(|j| (0..px).map(move |i| identifying_set(code, anchor.offset(i, j))))
        .collect();

    // representative in the domain plus the translation taking it to `v`
    let locate = |v: Vertex| -> (usize, i64, i64) {
        let i = (v.x - anchor.x).rem_euclid(px);
        let j = (v.y - anchor.y).rem_euclid(py);
        let slot = j as usize * width + i as usize;
        (slot, v.x - anchor.x - i, v.y - anchor.y - j)
    };

    let span = 2 * r as i64;
    let rows: Vec<RowOutcome> = (0..py)
        .into_par_iter()
        .map(|j| {
            let mut out = RowOutcome::default();
            for i in 0..px {
                let u = anchor.offset(i, j);
                let su = &sets[j as usize * width + i as usize];
                out.vertices += 1;
                if su.is_empty() {
                    out.uncovered_count += 1;
                    if out.uncovered.len() < MAX_COUNTEREXAMPLES {
                        out.uncovered.push(u);
                    }
                }
                for dy in -span..=span {
                    let reach = span - dy.abs();
                    for dx in -reach..=reach {
                        let v = u.offset(dx, dy);
                        if v == u || distance(u, v) > 2 * r {
                            continue;
                        }
                        // the reversed pair is reached from the translate of v
                        // lying in the domain, so keep one orientation
                        if v < u {
                            continue;
                        }
                        let (slot, tx, ty) = locate(v);
                        out.pairs += 1;
                        if same_after_shift(su, &sets[slot], tx, ty) {
                            out.confused_count += 1;
                            if out.confused.len() < MAX_COUNTEREXAMPLES {
                                out.confused.push((u, v));
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();

    let mut report = VerificationReport {
        r,
        valid: false,
        coverage_failures: Vec::new(),
        confusion_pairs: Vec::new(),
        coverage_failure_count: 0,
        confusion_count: 0,
        vertices_checked: 0,
        pairs_checked: 0,
    };
    for row in rows {
        report.vertices_checked += row.vertices;
        report.pairs_checked += row.pairs;
        report.coverage_failure_count += row.uncovered_count;
        report.confusion_count += row.confused_count;
        report.coverage_failures.extend(row.uncovered);
        report.confusion_pairs.extend(row.confused);
    }
    report.coverage_failures.sort();
    report.coverage_failures.truncate(MAX_COUNTEREXAMPLES);
    report.confusion_pairs.sort();
    report.confusion_pairs.truncate(MAX_COUNTEREXAMPLES);
    report.valid = report.coverage_failure_count == 0 && report.confusion_count == 0;
    report
}

#[derive(Default)]
struct RowOutcome {
    vertices: u64,
    pairs: u64,
    uncovered: Vec<Vertex>,
    uncovered_count: u64,
    confused: Vec<(Vertex, Vertex)>,
    confused_count: u64,
}

/// `a == b + (tx, ty)`, elementwise. Translation preserves row-major order.
fn same_after_shift(a: &[Vertex], b: &[Vertex], tx: i64, ty: i64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(p, q)| p.x == q.x + tx && p.y == q.y + ty)
}

/// Number of cases examined and number that failed.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub cases: u64,
    pub failures: u64,
}

impl Tally {
    pub fn record(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn merge(self, other: Tally) -> Tally {
        Tally { cases: self.cases + other.cases, failures: self.failures + other.failures }
    }
}

/// Spacing facts about non-codewords on line rows, checked over one column
/// period of rows `0` and `r + 1`:
///
/// 1. of two adjacent vertices on a line row, at least one is in the line part;
/// 2. of two vertices on a line row at distance in `[r, 2r + 1]`, at least one is;
/// 3. every run `(x + 2k, row)` for `k = 0..=⌈(r+1)/2⌉` contains a codeword.
pub fn claim9_tally(p: &CodeParams) -> Tally {
    let r = p.r;
    let mut tally = Tally::default();
    for row in [0, p.line_spacing] {
        for x in 0..p.line_modulus {
            let u = Vertex::new(x, row);
            let adjacent = u.offset(1, 0);
            tally.record(p.in_line_part(u) || p.in_line_part(adjacent));
            for dx in r as i64..=2 * r as i64 + 1 {
                let v = u.offset(dx, 0);
                let d = distance(u, v);
                if (r..=2 * r + 1).contains(&d) {
                    tally.record(p.in_line_part(u) || p.in_line_part(v));
                }
            }
            let steps = (r as i64 + 2) / 2;
            tally.record((0..=steps).any(|k| p.is_codeword(u.offset(2 * k, 0))));
        }
    }
    tally
}

pub fn check_claim9(p: &CodeParams) -> bool {
    claim9_tally(p).passed()
}

/// The line rows `n` (as multiples of `r + 1`) whose line-part codewords
/// appear in the identifying set of `v`, ascending.
pub fn nearby_lines(p: &CodeParams, v: Vertex) -> Vec<i64> {
    let mut lines: Vec<i64> = identifying_set(p, v)
        .into_iter()
        .filter(|&w| p.in_line_part(w))
        .map(|w| w.y.div_euclid(p.line_spacing))
        .collect();
    lines.dedup();
    lines
}

/// Every vertex of the fundamental domain sees line-part codewords from
/// exactly one line row.
pub fn nearby_uniqueness_tally(p: &CodeParams) -> Tally {
    let mut tally = Tally::default();
    for v in p.fundamental_domain().vertices() {
        tally.record(nearby_lines(p, v).len() == 1);
    }
    tally
}

pub fn check_nearby_uniqueness(p: &CodeParams) -> bool {
    nearby_uniqueness_tally(p).passed()
}
