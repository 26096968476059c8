use crate::error::{Error, Result};
use crate::lattice::Vertex;

/// Inclusive integer rectangle `[x0..=x1] × [y0..=y1]`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub x0: i64,
    pub x1: i64,
    pub y0: i64,
    pub y1: i64,
}

impl Window {
    pub fn new(x0: i64, x1: i64, y0: i64, y1: i64) -> Result<Self> {
        if x0 > x1 || y0 > y1 {
            return Err(Error::MalformedWindow { x0, x1, y0, y1 });
        }
        Ok(Window { x0, x1, y0, y1 })
    }

    /// The square `[-m..=m]²`.
    pub fn centered_square(m: u64) -> Self {
        let m = m as i64;
        Window { x0: -m, x1: m, y0: -m, y1: m }
    }

    pub fn width(&self) -> u64 {
        (self.x1 - self.x0) as u64 + 1
    }

    pub fn height(&self) -> u64 {
        (self.y1 - self.y0) as u64 + 1
    }

    pub fn area(&self) -> u128 {
        u128::from(self.width()) * u128::from(self.height())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (self.x0..=self.x1).contains(&v.x) && (self.y0..=self.y1).contains(&v.y)
    }

    /// Row-major iteration, bottom row first.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (self.y0..=self.y1).flat_map(move |y| (self.x0..=self.x1).map(move |x| Vertex::new(x, y)))
    }
}
