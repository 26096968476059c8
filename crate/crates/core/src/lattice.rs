//! Geometry of the hexagonal grid in brick-wall coordinates.
//!
//! Every integer pair is a vertex. Each vertex has its two horizontal
//! neighbours plus exactly one vertical neighbour: up when `x + y` is even,
//! down when it is odd. The grid is therefore a spanning subgraph of the
//! square grid, and every edge flips the parity of `x + y`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A vertex of the hex grid.
///
/// Ordering is row-major: by `y`, then by `x`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
}

impl Vertex {
    pub const fn new(x: i64, y: i64) -> Self {
        Vertex { x, y }
    }

    /// `true` when the vertical edge at this vertex points up.
    #[inline]
    pub fn points_up(self) -> bool {
        (self.x + self.y).rem_euclid(2) == 0
    }

    #[inline]
    pub fn offset(self, dx: i64, dy: i64) -> Self {
        Vertex::new(self.x + dx, self.y + dy)
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Vertex {
    fn from((x, y): (i64, i64)) -> Self {
        Vertex::new(x, y)
    }
}

/// The horizontal line `{(x, k) : x ∈ Z}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    pub k: i64,
}

impl Line {
    pub const fn new(k: i64) -> Self {
        Line { k }
    }
}

/// The three neighbours of `v`, ordered `[left, right, vertical]`.
pub fn neighbors(v: Vertex) -> [Vertex; 3] {
    let vertical = if v.points_up() { v.offset(0, 1) } else { v.offset(0, -1) };
    [v.offset(-1, 0), v.offset(1, 0), vertical]
}

/// Taxicab distance in the underlying square grid. A lower bound for [`distance`].
pub fn l1_distance(u: Vertex, v: Vertex) -> u64 {
    (u.x - v.x).unsigned_abs() + (u.y - v.y).unsigned_abs()
}

/// Graph distance by breadth-first search.
///
/// The search is confined to the square box centred between `u` and `v` with
/// half-width `|dx| + 2|dy| + 2`, which always contains a shortest path.
/// Used as the reference oracle for [`distance`].
pub fn bfs_distance(u: Vertex, v: Vertex) -> u64 {
    if u == v {
        return 0;
    }
    let dx = (v.x - u.x).abs();
    let dy = (v.y - u.y).abs();
    let half = dx + 2 * dy + 2;
    // centre rounded towards u; the box is widened by one to absorb the rounding
    let cx = u.x + (v.x - u.x).div_euclid(2);
    let cy = u.y + (v.y - u.y).div_euclid(2);
    let (x0, y0) = (cx - half - 1, cy - half - 1);
    let side = (2 * half + 3) as usize;
    let index = |w: Vertex| -> Option<usize> {
        let (ix, iy) = (w.x - x0, w.y - y0);
        if ix < 0 || iy < 0 || ix as usize >= side || iy as usize >= side {
            None
        } else {
            Some(iy as usize * side + ix as usize)
        }
    };

    let mut dist = vec![u64::MAX; side * side];
    let mut queue = VecDeque::new();
    dist[index(u).expect("start inside search box")] = 0;
    queue.push_back(u);
    while let Some(w) = queue.pop_front() {
        let dw = dist[index(w).unwrap()];
        for n in neighbors(w) {
            let Some(i) = index(n) else { continue };
            if dist[i] == u64::MAX {
                dist[i] = dw + 1;
                if n == v {
                    return dw + 1;
                }
                queue.push_back(n);
            }
        }
    }
    panic!("bfs_distance: {v} not reachable from {u} inside the search box");
}

/// Closed-form graph distance.
///
/// When `|dx| >= |dy|` the taxicab distance is attained. Otherwise the path is
/// forced to climb `|dy|` vertical edges; consecutive vertical edges in the
/// same direction need at least one horizontal step between them, and one
/// more step is needed first if the starting vertex's vertical edge points the
/// wrong way. That gives `2|dy| - 1 + pre`, rounded up to the bipartite parity
/// of `|dx| + |dy|`. Since `|dx| <= |dy| - 1`, the mandatory horizontal steps
/// already cover the horizontal offset.
pub fn distance(u: Vertex, v: Vertex) -> u64 {
    let dx = (v.x - u.x).unsigned_abs();
    let dy = v.y - u.y;
    let ady = dy.unsigned_abs();
    if dx >= ady {
        return dx + ady;
    }
    let wrong_way = if dy > 0 { !u.points_up() } else { u.points_up() };
    let base = 2 * ady - 1 + u64::from(wrong_way);
    if (base + dx + ady).is_multiple_of(2) {
        base
    } else {
        base + 1
    }
}

/// Distance from `v` to the horizontal line `line`.
pub fn line_distance(v: Vertex, line: Line) -> u64 {
    let (a, b) = (v.y, line.k);
    let even = (v.x + a).rem_euclid(2) == 0;
    let gap = (a - b).unsigned_abs();
    match a.cmp(&b) {
        Ordering::Equal => 0,
        Ordering::Less if even => 2 * gap - 1,
        Ordering::Less => 2 * gap,
        Ordering::Greater if even => 2 * gap,
        Ordering::Greater => 2 * gap - 1,
    }
}

/// Closed ball of radius `r` around `v`.
///
/// Only the box `|dx|, |dy| <= r` is scanned: outside it the taxicab bound
/// already exceeds `r`.
pub fn ball(v: Vertex, r: u64) -> BTreeSet<Vertex> {
    let ri = r as i64;
    let mut out = BTreeSet::new();
    for dy in -ri..=ri {
        for dx in -ri..=ri {
            let w = v.offset(dx, dy);
            if distance(v, w) <= r {
                out.insert(w);
            }
        }
    }
    out
}

/// Vertices on rows `y + k` and `y - k` reachable from `v` by walks of length `2k`.
///
/// Returns `(upper, lower)`, each `{(x - k + 2j, y ± k) : j = 0..=k}`.
pub fn even_row_targets(v: Vertex, k: u64) -> (Vec<Vertex>, Vec<Vertex>) {
    let k = k as i64;
    let row = |dy: i64| (0..=k).map(|j| v.offset(-k + 2 * j, dy)).collect();
    (row(k), row(-k))
}

/// Vertices reachable from `v` by walks of length `2k + 1`, two rows' worth.
///
/// The first set is on the side the vertical edge of `v` points to (one row
/// further, `k + 1` targets), the second on the opposite side (`k + 2` targets).
pub fn odd_row_targets(v: Vertex, k: u64) -> (Vec<Vertex>, Vec<Vertex>) {
    let k = k as i64;
    let (near, far) = if v.points_up() { (k + 1, -k) } else { (-k - 1, k) };
    let first = (0..=k).map(|j| v.offset(-k + 2 * j, near)).collect();
    let second = (0..=k + 1).map(|j| v.offset(-k - 1 + 2 * j, far)).collect();
    (first, second)
}

/// The contiguous run of `2(r - |y - k|) + 1` vertices on `line` centred under `v`,
/// all of which lie in the ball of radius `r` around `v`.
pub fn ball_row_segment(v: Vertex, line: Line, r: u64) -> Result<Vec<Vertex>> {
    let reach = line_distance(v, line);
    if reach >= r {
        return Err(Error::LineOutOfReach { vertex: v, line: line.k, r, reach });
    }
    let half = r as i64 - (v.y - line.k).abs();
    Ok((-half..=half).map(|j| Vertex::new(v.x + j, line.k)).collect())
}
