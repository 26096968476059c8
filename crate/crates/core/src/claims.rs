//! Executable checks of the distance lemmas and codeword-spacing facts the
//! construction relies on.
//!
//! Each check is parameterised by the distance function under test so that a
//! deliberately broken formula can be fed in as a mutation control.

use crate::code::CodeParams;
use crate::lattice::{ball_row_segment, even_row_targets, l1_distance, line_distance, odd_row_targets, Line, Vertex};
use crate::verifier::{claim9_tally, Tally};

pub type DistanceFn = dyn Fn(Vertex, Vertex) -> u64 + Sync;

/// One representative of each parity class of `x` and `y`.
pub const BASE_VERTICES: [Vertex; 4] = [Vertex::new(0, 0), Vertex::new(1, 0), Vertex::new(0, 1), Vertex::new(1, 1)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: u8,
    pub tally: Tally,
}

impl ClaimResult {
    pub fn line(&self) -> String {
        let status = if self.tally.passed() { "pass" } else { "FAIL" };
        format!("claim{} {} cases={}", self.claim, status, self.tally.cases)
    }
}

fn offsets(bound: i64) -> impl Iterator<Item = (Vertex, Vertex)> {
    BASE_VERTICES
        .into_iter()
        .flat_map(move |u| (-bound..=bound).flat_map(move |dy| (-bound..=bound).map(move |dx| (u, u.offset(dx, dy)))))
}

/// Hex distance never undercuts the taxicab distance.
pub fn claim1(dist: &DistanceFn, bound: i64) -> Tally {
    let mut t = Tally::default();
    for (u, v) in offsets(bound) {
        t.record(dist(u, v) >= l1_distance(u, v));
    }
    t
}

/// Hex distance equals taxicab distance when `|dx| >= |dy|`.
pub fn claim2(dist: &DistanceFn, bound: i64) -> Tally {
    let mut t = Tally::default();
    for (u, v) in offsets(bound) {
        if (u.x - v.x).abs() >= (u.y - v.y).abs() {
            t.record(dist(u, v) == l1_distance(u, v));
        }
    }
    t
}

/// Minimum of `dist` from `v` over the vertices of `line` that can matter.
///
/// The line is at most `2t` away (`t` rows), so only the `4t + 3` columns
/// within `2t + 1` of `v` are candidates.
pub fn min_over_line(dist: &DistanceFn, v: Vertex, line: Line) -> u64 {
    let t = (v.y - line.k).abs();
    (-(2 * t + 1)..=2 * t + 1).map(|dx| dist(v, Vertex::new(v.x + dx, line.k))).min().unwrap()
}

fn line_claim(dist: &DistanceFn, bound: i64, below: bool) -> Tally {
    let mut t = Tally::default();
    for k in -bound..=bound {
        for a in -bound..=bound {
            for b in -bound..=bound {
                if (below && a < b) || (!below && a > b) {
                    let v = Vertex::new(k, a);
                    let line = Line::new(b);
                    t.record(line_distance(v, line) == min_over_line(dist, v, line));
                }
            }
        }
    }
    t
}

/// Vertex-to-line distance for lines above the vertex.
pub fn claim3(dist: &DistanceFn, bound: i64) -> Tally {
    line_claim(dist, bound, true)
}

/// Vertex-to-line distance for lines below the vertex.
pub fn claim4(dist: &DistanceFn, bound: i64) -> Tally {
    line_claim(dist, bound, false)
}

pub fn claim5(dist: &DistanceFn, max_k: u64) -> Tally {
    let mut t = Tally::default();
    for u in BASE_VERTICES {
        for k in 1..=max_k {
            let (up, down) = even_row_targets(u, k);
            for w in up.into_iter().chain(down) {
                t.record(dist(u, w) <= 2 * k);
            }
        }
    }
    t
}

fn odd_claim(dist: &DistanceFn, max_k: u64, up: bool) -> Tally {
    let mut t = Tally::default();
    for u in BASE_VERTICES.into_iter().filter(|u| u.points_up() == up) {
        for k in 1..=max_k {
            let (near, far) = odd_row_targets(u, k);
            for w in near.into_iter().chain(far) {
                t.record(dist(u, w) <= 2 * k + 1);
            }
        }
    }
    t
}

/// Odd-length targets from vertices whose vertical edge points up.
pub fn claim6(dist: &DistanceFn, max_k: u64) -> Tally {
    odd_claim(dist, max_k, true)
}

/// Odd-length targets from vertices whose vertical edge points down.
pub fn claim7(dist: &DistanceFn, max_k: u64) -> Tally {
    odd_claim(dist, max_k, false)
}

/// Row segments under a vertex lie inside its ball.
pub fn claim8(dist: &DistanceFn, bound: i64, max_r: u64) -> Tally {
    let mut t = Tally::default();
    for y in -bound..=bound {
        for x in -bound..=bound {
            let v = Vertex::new(x, y);
            for r in 1..=max_r {
                let ri = r as i64;
                for k in y - ri..=y + ri {
                    let line = Line::new(k);
                    if line_distance(v, line) >= r {
                        continue;
                    }
                    let segment = ball_row_segment(v, line, r).expect("eligible line");
                    for w in segment {
                        t.record(dist(v, w) <= r);
                    }
                }
            }
        }
    }
    t
}

/// Codeword spacing on line rows, for every radius up to `max_r`.
pub fn claim9(max_r: u64) -> Tally {
    (1..=max_r as i64)
        .map(|r| claim9_tally(&CodeParams::new(r).expect("positive radius")))
        .fold(Tally::default(), Tally::merge)
}

/// All nine suites. Vertex ranges scale with `max_k`, radii with `max_r`.
pub fn run_claims(max_k: u64, max_r: u64, dist: &DistanceFn) -> Vec<ClaimResult> {
    let bound = max_k as i64;
    let tallies = [
        claim1(dist, 2 * bound),
        claim2(dist, 2 * bound),
        claim3(dist, bound),
        claim4(dist, bound),
        claim5(dist, max_k),
        claim6(dist, max_k),
        claim7(dist, max_k),
        claim8(dist, bound, max_r),
        claim9(max_r),
    ];
    tallies.into_iter().enumerate().map(|(i, tally)| ClaimResult { claim: i as u8 + 1, tally }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::distance;

    #[test]
    fn all_pass_small() {
        let results = run_claims(2, 3, &distance);
        assert_eq!(results.len(), 9);
        for res in &results {
            assert!(res.tally.passed(), "{}", res.line());
            assert!(res.tally.cases > 0, "{}", res.line());
        }
    }

    #[test]
    fn sabotaged_taxicab_fails_claim2_only_among_first_two() {
        let broken = |u: Vertex, v: Vertex| {
            let d = distance(u, v);
            if u != v && (u.x - v.x).abs() >= (u.y - v.y).abs() {
                d + 1
            } else {
                d
            }
        };
        let results = run_claims(2, 2, &broken);
        assert!(results[0].tally.passed());
        assert!(!results[1].tally.passed());
        assert!(results[1].line().starts_with("claim2 FAIL"));
    }
}
