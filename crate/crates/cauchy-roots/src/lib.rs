//! Exact evaluation of winding numbers through Cauchy indices, and exact
//! counting/isolation of complex polynomial roots in rectangles and
//! half-planes.
//!
//! Everything on the main computation paths is carried out over the Gaussian
//! rationals: no floating point, no epsilons. The only floating-point code
//! lives in the [`oracle`] module, which exists to cross-check the exact
//! kernel in tests and is feature-gated so release consumers can drop it.
//!
//! The library is organized bottom-up:
//!
//! * [`exactnum`]: arbitrary-precision rationals, Gaussian rationals,
//!   half-integers, and exact signs;
//! * [`poly`]: dense univariate polynomials over those scalars;
//! * [`sturm`]: signed remainder sequences and sign-variation counts;
//! * [`cindex`]: Cauchy indices of rational functions;
//! * [`path`]: piecewise line/arc loops and winding numbers;
//! * [`counting`]: root counts in rectangles and half-planes, plus the
//!   Routh-Hurwitz stability test;
//! * [`isolate`]: root isolation by rectangle bisection.

pub mod cindex;
pub mod counting;
mod error;
pub mod exactnum;
pub mod isolate;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod path;
pub mod poly;
pub mod sturm;

pub use error::{BorderLocation, Error};

#[cfg(doctest)]
mod book;
