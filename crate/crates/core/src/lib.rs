//! Exact-arithmetic cohomology and deformation theory for finite-dimensional
//! Hom-Leibniz algebras given by structure constants and a twisting map.
//!
//! The crate is organized bottom-up:
//!
//! - [`exactla`]: dense rational linear algebra (RREF, kernels, quotients),
//!   generic over a field scalar with a concrete [`Rational`] alias;
//! - [`algebra`]: Hom-Leibniz algebras, representations, the Yau twist;
//! - [`cohomology`]: the twisted cochain complex, differentials, and
//!   Z/B/H reports under two coboundary conventions;
//! - [`base`]: augmented local base algebras and their Harrison cohomology;
//! - [`deformation`]: deformations over a local base, the universal
//!   infinitesimal deformation, push-outs, and infinitesimal classification;
//! - [`obstruction`]: quadratic terms, residuals, order-by-order extension,
//!   obstruction classes, and one versal-extension step;
//! - [`io`]: JSON file formats with "p/q" rational syntax.
//!
//! All arithmetic is exact; floating point is intentionally unsupported.

pub mod algebra;
pub mod base;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod exactla;
pub mod io;
pub mod obstruction;

pub use error::Error;
pub use exactla::{Matrix, Rational, Subspace};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Convenience constructor for a rational from an integer pair.
///
/// Panics if `den` is zero; use [`io::parse_rational`] for untrusted input.
pub fn rat(num: i64, den: i64) -> Rational {
    use num_bigint::BigInt;
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for an integer rational.
pub fn rint(num: i64) -> Rational {
    rat(num, 1)
}
