use hexid_core::{distance, CodeParams, Vertex, Window};
use proptest::prelude::*;

fn params(r: i64) -> CodeParams {
    CodeParams::new(r).unwrap()
}

#[test]
fn periodic_over_one_domain() {
    for r in 1..=12 {
        let p = params(r);
        assert_eq!(p.period_x % 2, 0, "r={r}");
        assert_eq!(p.period_y % 2, 0, "r={r}");
        for v in p.fundamental_domain().vertices() {
            let c = p.is_codeword(v);
            assert_eq!(c, p.is_codeword(v.offset(p.period_x, 0)), "r={r} {v}");
            assert_eq!(c, p.is_codeword(v.offset(0, p.period_y)), "r={r} {v}");
            assert_eq!(c, p.is_codeword(v.offset(-p.period_x, -p.period_y)), "r={r} {v}");
        }
    }
}

#[test]
fn parts_are_disjoint() {
    for r in 1..=20 {
        let p = params(r);
        for v in p.fundamental_domain().vertices() {
            assert!(!(p.in_line_part(v) && p.in_separator_part(v)), "r={r} {v}");
        }
    }
}

#[test]
fn line_row_counts_per_period() {
    for r in 1..=30 {
        let p = params(r);
        let row = Window::new(0, p.line_modulus - 1, 0, 0).unwrap();
        let count = p.codewords_in_window(&row).unwrap().len() as i64;
        let want = if r % 2 == 0 { 2 * r + r / 2 } else { 2 * r + (r - 1) / 2 };
        assert_eq!(count, want, "r={r}");
    }
}

#[test]
fn one_separator_codeword_per_tile() {
    for r in 1..=30 {
        let p = params(r);
        let tile = Window::new(0, p.separator_modulus - 1, 0, 2 * r + 1).unwrap();
        let n = tile.vertices().filter(|&v| p.in_separator_part(v)).count();
        assert_eq!(n, 1, "r={r}");
    }
}

#[test]
fn spacing_on_line_rows() {
    for r in 2..=12i64 {
        let p = params(r);
        let ru = r as u64;
        for n in -1..=1 {
            let y = n * (r + 1);
            for x in 0..p.line_modulus {
                let u = Vertex::new(x, y);
                assert!(p.in_line_part(u) || p.in_line_part(u.offset(1, 0)), "adjacent r={r} {u}");
                for dx in 1..=2 * r + 1 {
                    let v = u.offset(dx, 0);
                    if (ru..=2 * ru + 1).contains(&distance(u, v)) {
                        assert!(p.in_line_part(u) || p.in_line_part(v), "spaced r={r} {u} {v}");
                    }
                }
                let steps = (r + 2) / 2;
                assert!((0..=steps).any(|k| p.is_codeword(u.offset(2 * k, 0))), "run r={r} {u}");
            }
        }
    }
}

proptest! {
    #[test]
    fn membership_invariant_under_periods(r in 1i64..=20, x in -500i64..500, y in -500i64..500, a in -3i64..=3, b in -3i64..=3) {
        let p = params(r);
        let v = Vertex::new(x, y);
        prop_assert_eq!(p.is_codeword(v), p.is_codeword(v.offset(a * p.period_x, b * p.period_y)));
    }

    #[test]
    fn window_listing_matches_predicate(r in 1i64..=10, x0 in -30i64..30, y0 in -30i64..30, w in 0i64..25, h in 0i64..25) {
        let p = params(r);
        let win = Window::new(x0, x0 + w, y0, y0 + h).unwrap();
        let brute: Vec<_> = win.vertices().filter(|&v| p.is_codeword(v)).collect();
        prop_assert_eq!(p.codewords_in_window(&win).unwrap(), brute);
    }
}
