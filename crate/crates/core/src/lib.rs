//! Exact computation of `f(n, m)`, the largest possible sum of squared
//! degrees over simple graphs with `n` vertices and `m` edges.
//!
//! The crate is split by concern:
//!
//! * [`exact`] holds the integer closed forms (`C`, `S`, `f`) and the
//!   triangular decompositions they are built from.
//! * [`bounds`] represents the irrational upper/lower bounds exactly as
//!   [`Surd`]s and rationals and checks every inequality between them.
//! * [`graph`] builds quasi-complete and quasi-star graphs that attain the
//!   closed forms, and reads/writes the edge-list format.
//! * [`oracle`] is exhaustive enumeration for small `n`.
//! * [`verify`] sweeps parameter grids and renders CSV/JSON reports.
//!
//! No floating point is used on any certification path. Decimal strings
//! produced by [`display`] are for humans only.

pub mod bounds;
pub mod display;
mod error;
pub mod exact;
pub mod graph;
pub mod oracle;
pub mod surd;
pub mod verify;

pub use bounds::{BoundReport, ExactRational, Verdict};
pub use error::{Error, Result};
pub use exact::{CoDecomp, TriDecomp};
pub use graph::Graph;
pub use surd::Surd;
