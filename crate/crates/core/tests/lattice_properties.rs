mod common;

use hexid_core::claims::min_over_line;
use hexid_core::{
    ball, ball_row_segment, bfs_distance, distance, even_row_targets, l1_distance, line_distance, odd_row_targets,
    Line, Vertex,
};
use proptest::prelude::*;

use common::bfs_ball;

fn vertex(bound: i64) -> impl Strategy<Value = Vertex> {
    (-bound..=bound, -bound..=bound).prop_map(|(x, y)| Vertex::new(x, y))
}

proptest! {
    #[test]
    fn never_shorter_than_taxicab(u in vertex(20), v in vertex(20)) {
        prop_assert!(distance(u, v) >= l1_distance(u, v));
    }

    #[test]
    fn taxicab_when_wide(u in vertex(20), v in vertex(20)) {
        prop_assume!((u.x - v.x).abs() >= (u.y - v.y).abs());
        prop_assert_eq!(distance(u, v), l1_distance(u, v));
    }

    #[test]
    fn closed_form_matches_bfs(u in vertex(40), dx in -20i64..=20, dy in -20i64..=20) {
        let v = u.offset(dx, dy);
        prop_assert_eq!(distance(u, v), bfs_distance(u, v));
    }

    #[test]
    fn symmetric_and_zero_iff_equal(u in vertex(30), v in vertex(30)) {
        prop_assert_eq!(distance(u, v), distance(v, u));
        prop_assert_eq!(distance(u, v) == 0, u == v);
    }

    #[test]
    fn triangle_inequality(u in vertex(15), v in vertex(15), w in vertex(15)) {
        prop_assert!(distance(u, w) <= distance(u, v) + distance(v, w));
    }

    #[test]
    fn parity_of_distance(u in vertex(30), v in vertex(30)) {
        prop_assert_eq!(distance(u, v) % 2, l1_distance(u, v) % 2);
    }

    #[test]
    fn translation_by_even_vector(u in vertex(20), v in vertex(20), a in -5i64..=5, b in -5i64..=5) {
        // (2a, 0), (0, 2b) and (1, 1) preserve x + y parity, hence adjacency
        let shift = |w: Vertex| w.offset(2 * a + 1, 2 * b + 1);
        prop_assert_eq!(distance(u, v), distance(shift(u), shift(v)));
    }
}

#[test]
fn closed_form_matches_bfs_ball_exhaustively() {
    for base in [Vertex::new(0, 0), Vertex::new(1, 0), Vertex::new(0, 1), Vertex::new(1, 1), Vertex::new(-3, -8)] {
        let reach = bfs_ball(base, 14);
        for dy in -12..=12 {
            for dx in -12..=12 {
                let w = base.offset(dx, dy);
                let d = distance(base, w);
                match reach.get(&w) {
                    Some(&b) => assert_eq!(d, b, "{base} -> {w}"),
                    None => assert!(d > 14, "{base} -> {w}: closed form {d}, bfs > 14"),
                }
            }
        }
    }
}

#[test]
fn line_distance_is_min_over_line() {
    for x in -12..=12 {
        for y in -12..=12 {
            let v = Vertex::new(x, y);
            for k in -12..=12 {
                let line = Line::new(k);
                assert_eq!(line_distance(v, line), min_over_line(&distance, v, line), "{v} L_{k}");
            }
        }
    }
}

#[test]
fn line_separation() {
    // consecutive line rows are 2r + 1 apart
    for r in 1..=12i64 {
        for n in -2..=2i64 {
            let lo = n * (r + 1);
            let hi = lo + r + 1;
            let gap = (-1..=1).map(|x| line_distance(Vertex::new(x, lo), Line::new(hi))).min().unwrap();
            assert_eq!(gap, 2 * r as u64 + 1);
        }
    }
}

#[test]
fn ball_matches_bfs() {
    for base in [Vertex::new(0, 0), Vertex::new(1, 0), Vertex::new(5, -2)] {
        for r in 1..=8 {
            let mut want: Vec<_> = bfs_ball(base, r).into_keys().collect();
            want.sort();
            let got: Vec<_> = ball(base, r).into_iter().collect();
            assert_eq!(got, want, "{base} r={r}");
        }
    }
}

#[test]
fn ball_never_reaches_row_r_plus_one() {
    for r in 1..=15u64 {
        assert!(ball(Vertex::new(0, 0), r).iter().all(|w| w.y.unsigned_abs() <= r.div_ceil(2)));
    }
}

#[test]
fn even_targets_inside_ball() {
    for base in [Vertex::new(0, 0), Vertex::new(1, 0), Vertex::new(0, 1), Vertex::new(1, 1)] {
        for k in 1..=10 {
            let b = ball(base, 2 * k);
            let (up, down) = even_row_targets(base, k);
            assert_eq!(up.len() as u64, k + 1);
            assert!(up.iter().chain(&down).all(|w| b.contains(w)), "{base} k={k}");
        }
    }
}

#[test]
fn odd_targets_inside_ball() {
    for base in [Vertex::new(0, 0), Vertex::new(1, 0), Vertex::new(0, 1), Vertex::new(1, 1)] {
        for k in 1..=10 {
            let b = ball(base, 2 * k + 1);
            let (near, far) = odd_row_targets(base, k);
            assert_eq!((near.len() as u64, far.len() as u64), (k + 1, k + 2));
            assert!(near.iter().chain(&far).all(|w| b.contains(w)), "{base} k={k}");
        }
    }
}

#[test]
fn odd_targets_reached_by_bfs() {
    let b = bfs_ball(Vertex::new(0, 0), 9);
    let (near, far) = odd_row_targets(Vertex::new(0, 0), 4);
    assert!(near.iter().chain(&far).all(|w| b.get(w).is_some_and(|&d| d <= 9)));
    let b = bfs_ball(Vertex::new(0, 0), 6);
    let (up, down) = even_row_targets(Vertex::new(0, 0), 3);
    assert!(up.iter().chain(&down).all(|w| b.get(w).is_some_and(|&d| d <= 6)));
}

#[test]
fn segments_inside_ball() {
    for x in -10..=10 {
        for y in -10..=10 {
            let v = Vertex::new(x, y);
            for r in 1..=10u64 {
                let b = ball(v, r);
                for k in y - r as i64..=y + r as i64 {
                    let line = Line::new(k);
                    match ball_row_segment(v, line, r) {
                        Ok(seg) => {
                            assert_eq!(seg.len() as i64, 2 * (r as i64 - (y - k).abs()) + 1);
                            assert!(seg.iter().all(|w| b.contains(w)), "{v} L_{k} r={r}");
                        }
                        Err(_) => assert!(line_distance(v, line) >= r),
                    }
                }
            }
        }
    }
}
