//! Radii of starlikeness for two function classes built from subordinate ratios.
//!
//! The classes `T1` and `T2` collect normalized analytic functions on the unit
//! disc of the form `f(z) = z p(z) p1(z) p2(z)`, where the three factors are
//! subordinate to `sqrt(1+z)` (for `T1`) or `e^z` (for `T2`). For each class
//! the crate provides
//!
//! * construction and evaluation of class members from explicit Schwarz
//!   functions ([`analytic`]),
//! * the sharp radial bounds on `|z f'(z)/f(z) - 1|` and `|f(z)|` together
//!   with the inverse of the aggregate bound ([`bounds`]),
//! * a catalog of target regions (half-planes, Janowski discs, parabola,
//!   cardioid, nephroid, lune, and friends) with membership predicates,
//!   boundary parametrizations and inradii about the point 1 ([`regions`]),
//! * closed-form radii for every catalog query, an independent numeric
//!   solver, and sharpness witnesses ([`radii`]),
//! * a reproducible verification harness plus JSON/CSV/text table emission
//!   ([`harness`]).
//!
//! The `starlike-radii` binary exposes all of this on the command line; see
//! the repository README for usage.

pub mod analytic;
pub mod bounds;
pub mod cli;
pub mod harness;
pub mod radii;
pub mod regions;

pub(crate) mod solve;

pub use num_complex::Complex64;

/// Errors reported by the library.
///
/// Every operation with a restricted domain returns one of these instead of
/// silently producing garbage; the CLI maps them to exit code 2.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A point that must lie in the open unit disc does not.
    #[error("point must lie in the open unit disc, got |z| = {0}")]
    PointOutsideDisc(f64),
    /// A Blaschke parameter with modulus >= 1.
    #[error("Blaschke parameter must have modulus < 1, got |a| = {0}")]
    BlaschkeParamOutsideDisc(f64),
    /// A radius argument outside `[0, 1)`.
    #[error("radius must lie in [0,1), got {0}")]
    RadiusOutOfRange(f64),
    /// A non-positive bound level passed to the inverse bound.
    #[error("delta must be positive, got {0}")]
    NonPositiveDelta(f64),
    /// An order parameter outside `[0, 1)`.
    #[error("alpha must lie in [0,1), got {0}")]
    AlphaOutOfRange(f64),
    /// Janowski parameters violating `-1 <= B < A <= 1`.
    #[error("Janowski parameters must satisfy -1 <= B < A <= 1, got A = {a}, B = {b}")]
    JanowskiOutOfRange { a: f64, b: f64 },
    /// Boundary parametrization requested for a region whose boundary is not
    /// a closed curve.
    #[error("region has an unbounded boundary; no circle parametrization exists")]
    UnboundedBoundary,
    /// Disc-inclusion query whose center is not interior to the region.
    #[error("disc center lies outside the region")]
    CenterOutsideRegion,
    /// A negative disc radius in an inclusion query.
    #[error("disc radius must be nonnegative, got {0}")]
    NegativeDiscRadius(f64),
    /// Sharpness witnesses exist only for queries with an exact radius.
    #[error("sharpness witness requires an exact closed-form radius")]
    WitnessUnsupported,
    /// An unrecognized family token.
    #[error("unknown family name: {0} (expected t1 or t2)")]
    UnknownFamily(String),
    /// An unrecognized region token.
    #[error("unknown region name: {0}")]
    UnknownRegion(String),
}

pub type Result<T> = std::result::Result<T, Error>;
