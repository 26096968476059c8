//! Oracles shared by the integration suites. Deliberately independent of the
//! closed forms in the library: plain breadth-first search on the adjacency rule.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use hexid_core::{neighbors, Vertex};

/// Every vertex within `r` steps of `v`, with its distance.
pub fn bfs_ball(v: Vertex, r: u64) -> HashMap<Vertex, u64> {
    let mut seen = HashMap::from([(v, 0)]);
    let mut queue = VecDeque::from([v]);
    while let Some(w) = queue.pop_front() {
        let d = seen[&w];
        if d == r {
            continue;
        }
        for n in neighbors(w) {
            seen.entry(n).or_insert_with(|| {
                queue.push_back(n);
                d + 1
            });
        }
    }
    seen
}
