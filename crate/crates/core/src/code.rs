//! The periodic r-identifying code on the hex grid.
//!
//! The code is the union of two disjoint parts:
//!
//! * the **line part**: every row `y ≡ 0 (mod r + 1)` filled with codewords,
//!   except for columns whose residue modulo `3r` (even `r`) or `3r - 1`
//!   (odd `r`) is one of the odd numbers below `r`;
//! * the **separator part**: one sparse row in every other gap between line
//!   rows, at `y ≡ ⌊(r + 1)/2⌋ (mod 2(r + 1))`, with a codeword every `r`
//!   columns (even `r`, phase given by the row parity) or every `r + 1`
//!   columns (odd `r`).
//!
//! Membership is a pure function of the vertex, periodic under translation by
//! `(period_x, 0)` and `(0, period_y)`. Both periods are even, so these
//! translations preserve the brick-wall adjacency rule.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::Vertex;
use crate::window::Window;

/// Anything the verifier can check: a periodic vertex set with a radius.
pub trait Code: Sync {
    fn radius(&self) -> u64;

    fn contains(&self, v: Vertex) -> bool;

    /// Translation periods `(px, py)`. Both must be even.
    fn periods(&self) -> (i64, i64);

    /// `false` only if row `y` certainly holds no codeword.
    fn row_may_contain(&self, _y: i64) -> bool {
        true
    }
}

/// Radius plus every constant derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub r: u64,
    /// Column modulus of the line part: `3r` or `3r - 1`.
    pub line_modulus: i64,
    /// Residues modulo `line_modulus` left out of the line part.
    pub excluded: BTreeSet<i64>,
    /// Column modulus of the separator part: `r` or `r + 1`.
    pub separator_modulus: i64,
    /// Vertical distance between consecutive line rows, `r + 1`.
    pub line_spacing: i64,
    pub separator_offset: i64,
    pub separator_row_period: i64,
    pub period_x: i64,
    pub period_y: i64,
}

impl CodeParams {
    pub fn new(r: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidRadius(r));
        }
        let even = r % 2 == 0;
        let line_modulus = if even { 3 * r } else { 3 * r - 1 };
        let separator_modulus = if even { r } else { r + 1 };
        // odd residues 1, 3, 5, ... strictly below r
        let excluded = (1..r).step_by(2).collect();
        let period_x = line_modulus.lcm(&separator_modulus);
        debug_assert!(period_x % 2 == 0);
        Ok(CodeParams {
            r: r as u64,
            line_modulus,
            excluded,
            separator_modulus,
            line_spacing: r + 1,
            separator_offset: (r + 1) / 2,
            separator_row_period: 2 * (r + 1),
            period_x,
            period_y: 2 * (r + 1),
        })
    }

    /// Replace the excluded residue set. Used to build broken variants for
    /// negative controls.
    pub fn with_excluded(mut self, excluded: impl IntoIterator<Item = i64>) -> Self {
        self.excluded = excluded.into_iter().collect();
        self
    }

    pub fn is_even(&self) -> bool {
        self.r.is_multiple_of(2)
    }

    pub fn is_line_row(&self, y: i64) -> bool {
        y.rem_euclid(self.line_spacing) == 0
    }

    pub fn is_separator_row(&self, y: i64) -> bool {
        y.rem_euclid(self.separator_row_period) == self.separator_offset
    }

    pub fn in_line_part(&self, v: Vertex) -> bool {
        self.is_line_row(v.y) && !self.excluded.contains(&v.x.rem_euclid(self.line_modulus))
    }

    pub fn in_separator_part(&self, v: Vertex) -> bool {
        if !self.is_separator_row(v.y) {
            return false;
        }
        let phase = if self.is_even() { v.y.rem_euclid(2) } else { 0 };
        v.x.rem_euclid(self.separator_modulus) == phase
    }

    pub fn is_codeword(&self, v: Vertex) -> bool {
        self.in_line_part(v) || self.in_separator_part(v)
    }

    /// The fundamental domain `[0..px-1] × [0..py-1]`.
    pub fn fundamental_domain(&self) -> Window {
        Window { x0: 0, x1: self.period_x - 1, y0: 0, y1: self.period_y - 1 }
    }

    /// All codewords in `w`, row-major.
    pub fn codewords_in_window(&self, w: &Window) -> Result<Vec<Vertex>> {
        codewords_in_window(self, w)
    }
}

impl Code for CodeParams {
    fn radius(&self) -> u64 {
        self.r
    }

    fn contains(&self, v: Vertex) -> bool {
        self.is_codeword(v)
    }

    fn periods(&self) -> (i64, i64) {
        (self.period_x, self.period_y)
    }

    fn row_may_contain(&self, y: i64) -> bool {
        self.is_line_row(y) || self.is_separator_row(y)
    }
}

/// The code with its separator part removed. Not an identifying code; used
/// as a negative control for the verifier.
#[derive(Clone, Copy, Debug)]
pub struct WithoutSeparator<'a>(pub &'a CodeParams);

impl Code for WithoutSeparator<'_> {
    fn radius(&self) -> u64 {
        self.0.r
    }

    fn contains(&self, v: Vertex) -> bool {
        self.0.in_line_part(v)
    }

    fn periods(&self) -> (i64, i64) {
        self.0.periods()
    }

    fn row_may_contain(&self, y: i64) -> bool {
        self.0.is_line_row(y)
    }
}

/// All codewords of `code` inside `w`, in row-major order.
pub fn codewords_in_window<C: Code + ?Sized>(code: &C, w: &Window) -> Result<Vec<Vertex>> {
    let w = Window::new(w.x0, w.x1, w.y0, w.y1)?;
    Ok((w.y0..=w.y1)
        .filter(|&y| code.row_may_contain(y))
        .flat_map(|y| (w.x0..=w.x1).map(move |x| Vertex::new(x, y)))
        .filter(|&v| code.contains(v))
        .collect())
}
