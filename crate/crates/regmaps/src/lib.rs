//! Exact enumeration of d-regular maps on closed orientable surfaces.
//!
//! A map is a graph embedded in a surface so that its complement is a disjoint
//! union of open discs (the faces).  This crate counts d-regular maps of a
//! given genus, both rooted (a marked half-edge, which kills all symmetry) and
//! unrooted (maps up to orientation-preserving homeomorphism), with exact
//! arbitrary-precision arithmetic throughout:
//!
//! * [`oneface`] — rooted maps with a single face, including the variant with
//!   degree-1 leaves that the symmetry quotients need;
//! * [`oneface_unrooted`] — unrooted one-face counts for prime d (assembled
//!   from period-2, period-d and period-2d symmetry classes) and closed forms
//!   for d = 3 and d = 4;
//! * [`multiface`] — rooted counts for any number of faces via a root-edge
//!   contraction recurrence over almost-regular maps;
//! * [`multiface_unrooted`] — unrooted multi-face counts by summing quotient
//!   maps on cyclic orbifolds;
//! * [`orbifolds`] — cyclic-orbifold signatures and epimorphism counts that
//!   weight those quotients;
//! * [`oracle`] — an independent brute-force census of small maps used to
//!   cross-check every other module;
//! * [`tables`] — deterministic table generation (CSV/JSON/Markdown) plus the
//!   embedded expected-value fixtures.
//!
//! Counts are exchanged as [`ExactInt`]; intermediate weighted sums are
//! [`ExactRat`] and every final division is checked to land on an integer.

pub mod exactnum;
pub mod exec;
pub mod multiface;
pub mod multiface_unrooted;
pub mod oneface;
pub mod oneface_unrooted;
pub mod oracle;
pub mod orbifolds;
pub mod params;
pub mod tables;

pub use exactnum::{ExactInt, ExactRat};
pub use exec::{parallel_enabled, set_parallel};

/// Errors surfaced by the counting pipelines.
///
/// The formulas guarantee that every fully assembled count is a nonnegative
/// integer, so `NonIntegral` indicates an implementation bug rather than bad
/// input; it is reported instead of silently truncating.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A count that must be an integer came out fractional.
    #[error("non-integral count in {context}: {value}")]
    NonIntegral { context: String, value: ExactRat },
    /// The brute-force census was asked for an instance beyond its size limit.
    #[error("census instance too large: {0}")]
    TooLarge(String),
    /// Unrooted one-face counts exist only for prime d and d = 4.
    #[error("no unrooted one-face formula for composite degree {0}")]
    UnsupportedDegree(u32),
    /// A request was internally inconsistent (e.g. a missing range bound).
    #[error("invalid request: {0}")]
    InvalidInput(String),
    /// A memo cache file could not be read or written.
    #[error("cache file {path}: {reason}")]
    Cache { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
