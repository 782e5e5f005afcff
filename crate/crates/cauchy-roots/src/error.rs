use std::fmt;

use crate::exactnum::GaussianRational;

/// Where a border violation was detected by a counting routine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BorderLocation {
    /// A closed segment of a rectangle border.
    Edge {
        start: GaussianRational,
        end: GaussianRational,
    },
    /// The real axis (border of the upper half-plane).
    RealAxis,
    /// The oriented line through `a` and `b` (border of a half-plane).
    Line {
        a: GaussianRational,
        b: GaussianRational,
    },
}

impl fmt::Display for BorderLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BorderLocation::Edge { start, end } => write!(f, "edge [{start}, {end}]"),
            BorderLocation::RealAxis => write!(f, "real axis"),
            BorderLocation::Line { a, b } => write!(f, "line through {a} and {b}"),
        }
    }
}

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational function was built with denominator zero.
    ZeroDenominator,
    /// Exact polynomial division had a nonzero remainder.
    NotDivisible,
    /// The zero polynomial was passed where it has no meaning.
    ZeroPolynomial,
    /// A constant polynomial was passed where degree >= 1 is required.
    ConstantPolynomial,
    /// Both polynomials of a remainder chain are zero.
    BothZero,
    /// An interval [a, b] with a >= b.
    BadInterval,
    /// An interval endpoint is a root of the tested polynomial.
    EndpointIsRoot,
    /// The query point sits exactly on the path segment.
    PointOnPath,
    /// Consecutive loop segments do not share endpoints exactly.
    NotClosed,
    /// A loop was created with no segments.
    EmptyLoop,
    /// An arc segment violates the quarter-angle constraints.
    InvalidArc(&'static str),
    /// A Cauchy-index sum that must be an even half-integer was not.
    /// Always a bug: loop validation should have rejected the input.
    NonIntegerResult,
    /// A root lies exactly on the counting region's border.
    RootOnBorder(Box<BorderLocation>),
    /// A rectangle whose corners are not strictly ordered.
    DegenerateRectangle,
    /// A half-plane direction with a = b.
    DegenerateDirection,
    /// The numeric root finder failed to converge.
    NoConvergence,
    /// The point is too close to the discretized path for the numeric
    /// winding estimate to be trusted.
    TooCloseToPath,
    /// A coefficient does not fit in binary64.
    NumericOverflow,
    /// An internal invariant was violated. Always a bug.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator polynomial is zero"),
            Error::NotDivisible => write!(f, "exact division left a nonzero remainder"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::ConstantPolynomial => write!(f, "constant polynomial"),
            Error::BothZero => write!(f, "both polynomials are zero"),
            Error::BadInterval => write!(f, "interval endpoints must satisfy a < b"),
            Error::EndpointIsRoot => write!(f, "interval endpoint is a root"),
            Error::PointOnPath => write!(f, "point lies on the path"),
            Error::NotClosed => write!(f, "path is not a closed loop"),
            Error::EmptyLoop => write!(f, "loop has no segments"),
            Error::InvalidArc(why) => write!(f, "invalid arc: {why}"),
            Error::NonIntegerResult => write!(f, "winding number is not an integer"),
            Error::RootOnBorder(w) => write!(f, "root on border: {w}"),
            Error::DegenerateRectangle => write!(f, "rectangle corners are not strictly ordered"),
            Error::DegenerateDirection => write!(f, "half-plane direction endpoints coincide"),
            Error::NoConvergence => write!(f, "numeric root finding did not converge"),
            Error::TooCloseToPath => write!(f, "point too close to the discretized path"),
            Error::NumericOverflow => write!(f, "coefficient does not fit in binary64"),
            Error::Internal(what) => write!(f, "internal invariant breach: {what}"),
        }
    }
}

impl std::error::Error for Error {}
