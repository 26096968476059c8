use thiserror::Error;

use crate::lattice::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("radius must be a positive integer, got {0}")]
    InvalidRadius(i64),

    #[error("malformed window [{x0}..{x1}]x[{y0}..{y1}]")]
    MalformedWindow { x0: i64, x1: i64, y0: i64, y1: i64 },

    #[error("window has {area} vertices, limit is {limit}")]
    WindowTooLarge { area: u128, limit: u128 },

    #[error("line L_{line} is at distance {reach} from {vertex}, not below r={r}")]
    LineOutOfReach { vertex: Vertex, line: i64, r: u64, reach: u64 },

    #[error("invalid radius range {min}..={max}")]
    InvalidRange { min: i64, max: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
