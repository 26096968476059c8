//! Identifying codes on the infinite hexagonal grid.
//!
//! The grid is drawn in brick-wall coordinates on `Z × Z` ([`lattice`]). A
//! periodic code for every radius `r` is built in [`code`], checked
//! exhaustively over one period in [`verifier`], and measured exactly in
//! [`density`]. [`claims`] turns the supporting distance lemmas into
//! executable checks, and [`cli`] wires everything to the `hexid` binary.

pub mod claims;
pub mod cli;
pub mod code;
pub mod density;
pub mod error;
pub mod lattice;
pub mod render;
pub mod verifier;
pub mod window;

pub use code::{codewords_in_window, Code, CodeParams, WithoutSeparator};
pub use density::{
    audit, density_components, density_empirical, density_exact, density_theorem, DensityAudit, Rational,
};
pub use error::{Error, Result};
pub use lattice::{
    ball, ball_row_segment, bfs_distance, distance, even_row_targets, l1_distance, line_distance, neighbors,
    odd_row_targets, Line, Vertex,
};
pub use verifier::{
    check_claim9, check_nearby_uniqueness, identifying_set, verify, verify_anchored, VerificationReport,
};
pub use window::Window;
