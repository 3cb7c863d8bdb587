//! Maximal-independent-set enumeration and extremal bound verification for
//! small graphs.
//!
//! The crate provides:
//!
//! - [`graph`]: immutable bitset-adjacency simple graphs with the surgeries
//!   the enumeration recursions need, plus [`graph6`] interchange;
//! - [`mis`]: pivoting enumeration and exact counting of maximal independent
//!   sets, a subset-scan oracle, a recursive counting upper bound, and the
//!   cycle recurrence;
//! - [`metrics`]: triangle-freeness, induced triangle matching and induced
//!   matching numbers, solved exactly per component;
//! - [`bounds`]: the closed-form extremal counts, the certified enclosure of
//!   the growth constant `c` (largest real root of `x^6 - 2x^2 - 2x - 1`),
//!   and exact checks of the supporting inequalities;
//! - [`families`]: generators for the extremal witness constructions;
//! - [`sweep`]: exhaustive labeled sweeps and corpus sweeps verifying each
//!   bound, with JSON/CSV reports.

pub mod bitset;
pub mod bounds;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod interval;
pub mod metrics;
pub mod mis;
pub mod report;
pub mod sweep;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use graph::{Graph, GraphError, Subgraph};
pub use interval::RealInterval;
pub use report::{Report, Verdict};
pub use sweep::{SweepReport, Theorem};

/// Exact unbounded counts are plain `BigUint`s.
pub use num_bigint::BigUint;
/// Exact rational values (interval endpoints, precisions).
pub use num_rational::BigRational;
